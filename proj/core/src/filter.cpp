#include "epimfg/filter.hpp"

#include <cmath>

namespace epimfg {

double filter_drift(double a, double beta, double u, const Rates& rates) {
    return (1.0 - a) * (rates.lambda_sa * beta * u - a * rates.lambda_ai);
}

double logistic_closed_form(double a0, double lambda_ai, double t) {
    if (a0 <= 0.0) return 0.0;
    const double e = std::exp(-lambda_ai * t);
    return a0 * e / (1.0 - a0 + a0 * e);
}

namespace {

// One RK4 step of the closed-loop filter over [t, t+h] within grid step k.
// beta is linear on the step; the control law is re-evaluated at each stage.
double rk4_stage_step(double a, double h, double beta_lo, double beta_hi, double w0,
                      double w_span, std::size_t k, const ControlLaw& control,
                      const Rates& rates) {
    auto beta_at = [&](double w) { return beta_lo + (beta_hi - beta_lo) * w; };
    auto f = [&](double ai, double w) {
        return filter_drift(ai, beta_at(w), control(k, ai), rates);
    };
    const double k1 = f(a, w0);
    const double k2 = f(a + 0.5 * h * k1, w0 + 0.5 * w_span);
    const double k3 = f(a + 0.5 * h * k2, w0 + 0.5 * w_span);
    const double k4 = f(a + h * k3, w0 + w_span);
    return a + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

}  // namespace

BeliefPath integrate_filter(double a0, std::span<const double> beta,
                            const ControlLaw& control, const TimeGrid& grid,
                            const Rates& rates) {
    if (beta.size() != grid.n_nodes())
        throw GridMismatch("beta path must have one value per time node");
    if (a0 < 0.0 || a0 > 1.0)
        throw DomainError("initial belief must lie in [0,1]");

    BeliefPath path;
    path.grid = grid;
    path.a.resize(grid.n_nodes());
    path.a[0] = a0;

    double a = a0;
    for (std::size_t k = 0; k < grid.n_steps; ++k) {
        // Split the grid step into 2^m substeps until every substep lands in
        // [0,1]; the vector field is polynomial so this terminates fast.
        bool ok = false;
        for (int halvings = 0; halvings <= 40 && !ok; ++halvings) {
            const std::size_t m = std::size_t{1} << halvings;
            const double h = grid.dt / static_cast<double>(m);
            double trial = a;
            ok = true;
            for (std::size_t s = 0; s < m && ok; ++s) {
                const double w0 = static_cast<double>(s) / static_cast<double>(m);
                trial = rk4_stage_step(trial, h, beta[k], beta[k + 1], w0,
                                       1.0 / static_cast<double>(m), k, control, rates);
                if (!(trial >= 0.0 && trial <= 1.0) || !std::isfinite(trial)) ok = false;
            }
            if (ok) a = trial;
        }
        if (!ok) throw StepUnstable("filter step failed to stay in [0,1]");
        path.a[k + 1] = a;
    }
    return path;
}

}  // namespace epimfg
