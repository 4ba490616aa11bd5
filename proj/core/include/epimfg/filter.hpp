#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "epimfg/grids.hpp"
#include "epimfg/model.hpp"

namespace epimfg {

// Drift of the scalar conditional-probability process A_t between jumps:
// (1 - a) * (lambda_sa * beta * u - a * lambda_ai). Vanishes identically at
// a = 1, which is therefore an equilibrium of the filter.
double filter_drift(double a, double beta, double u, const Rates& rates);

// Exact solution of da/dt = -lambda * a * (1 - a): the odds of a decay
// exponentially at rate lambda. Serves as the analytic oracle for the
// zero-activity filter.
double logistic_closed_form(double a0, double lambda_ai, double t);

// Deterministic belief trajectory between jumps; stopping (symptom onset) is
// not simulated here.
struct BeliefPath {
    TimeGrid grid;
    std::vector<double> a;
    std::optional<std::size_t> stopped_at;
};

// Activity choice as a function of (time node, belief).
using ControlLaw = std::function<double(std::size_t k, double a)>;

// Closed-loop RK4 integration of the filter with per-step halving until the
// updated value stays inside [0,1]. beta must have one value per grid node
// and is interpolated linearly inside a step.
BeliefPath integrate_filter(double a0, std::span<const double> beta,
                            const ControlLaw& control, const TimeGrid& grid,
                            const Rates& rates);

}  // namespace epimfg
