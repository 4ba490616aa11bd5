#pragma once

#include <cmath>
#include <cstddef>

#include "epimfg/errors.hpp"

namespace epimfg {

// Uniform time grid with nodes t_k = k*dt, k = 0..n_steps.
struct TimeGrid {
    double dt = 0.0;
    std::size_t n_steps = 0;

    std::size_t n_nodes() const { return n_steps + 1; }
    double horizon() const { return dt * static_cast<double>(n_steps); }
    double t(std::size_t k) const { return dt * static_cast<double>(k); }

    // Largest grid with dt <= dt_max whose nodes cover [0, horizon] exactly.
    static TimeGrid from_horizon(double horizon, double dt_max) {
        if (!(horizon > 0.0) || !(dt_max > 0.0))
            throw GridMismatch("TimeGrid: horizon and dt must be positive");
        const auto n = static_cast<std::size_t>(std::ceil(horizon / dt_max - 1e-12));
        return TimeGrid{horizon / static_cast<double>(n == 0 ? 1 : n), n == 0 ? 1 : n};
    }
};

// Uniform belief grid on [0,1], nodes a_j = j/(n_a-1) including both endpoints.
// For finite-volume updates the node j owns a cell of width da (half width at
// the two edge nodes), so the cell widths sum exactly to 1.
struct BeliefGrid {
    std::size_t n_a = 0;
    double da = 0.0;

    static BeliefGrid uniform(std::size_t n_a) {
        if (n_a < 2) throw GridMismatch("BeliefGrid: need at least the two endpoint nodes");
        return BeliefGrid{n_a, 1.0 / static_cast<double>(n_a - 1)};
    }

    double node(std::size_t j) const {
        return static_cast<double>(j) / static_cast<double>(n_a - 1);
    }

    double cell_width(std::size_t j) const {
        return (j == 0 || j + 1 == n_a) ? 0.5 * da : da;
    }

    std::size_t nearest_node(double a) const {
        if (a <= 0.0) return 0;
        if (a >= 1.0) return n_a - 1;
        return static_cast<std::size_t>(std::lround(a / da));
    }
};

}  // namespace epimfg
