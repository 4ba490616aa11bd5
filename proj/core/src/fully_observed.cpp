#include "epimfg/fully_observed.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/numeric/odeint.hpp>

namespace epimfg {

double phi_bar_i(const ModelParams& params, std::size_t theta) {
    const Rates r = params.rates(theta);
    const double denom = params.gamma + r.lambda_ir + r.lambda_id;
    const double value =
        (params.c_h_i + r.lambda_ir * params.phi_r + r.lambda_id * params.phi_d) / denom;
    if (!(value > 0.0))
        throw NonpositivePhiI("stationary symptomatic value is not positive");
    return value;
}

double phi_bar_a(const ModelParams& params, std::size_t theta) {
    const Rates r = params.rates(theta);
    return r.lambda_ai / (params.gamma + r.lambda_ai) * phi_bar_i(params, theta);
}

double beta_crit(const ModelParams& params, std::size_t theta, double alpha_bar) {
    return alpha_bar / (params.rates(theta).lambda_sa * phi_bar_a(params, theta));
}

StationaryDecision stationary_susceptible(const ModelParams& params, std::size_t theta,
                                          double beta_bar, double alpha_bar) {
    const Rates r = params.rates(theta);
    const double pa = phi_bar_a(params, theta);
    if (beta_bar < alpha_bar / (r.lambda_sa * pa)) {
        const double v =
            (r.lambda_sa * beta_bar * pa - alpha_bar) / (r.lambda_sa * beta_bar + params.gamma);
        return {v, 1.0};
    }
    return {0.0, 0.0};  // at the tie the agent isolates
}

std::array<double, 5> PopulationPath::aggregate(const ModelParams& params,
                                                std::size_t k) const {
    std::array<double, 5> out{};
    for (std::size_t theta = 0; theta < n_theta; ++theta) {
        const double w = params.weight(theta);
        for (std::size_t x = 0; x < 5; ++x) out[x] += w * rho[theta][k][x];
    }
    return out;
}

namespace {

using State5 = std::array<double, 5>;

struct RhoRhs {
    Rates rates;
    double beta0, beta1, t0, dt;  // linear-in-time beta over the segment
    StatePolicy psi;

    void operator()(const State5& rho, State5& drho, double t) const {
        const double w = dt > 0.0 ? (t - t0) / dt : 0.0;
        const double beta = beta0 + (beta1 - beta0) * w;
        const double outflow_s = rates.lambda_sa * beta * psi.s * rho[0];
        const auto lin = generator_adjoint_apply({rho[1], rho[2], rho[3], rho[4]}, rates);
        drho[0] = -outflow_s;
        drho[1] = lin[0] + outflow_s;
        drho[2] = lin[1];
        drho[3] = lin[2];
        drho[4] = lin[3];
    }
};

}  // namespace

std::vector<std::array<double, 5>> integrate_rho_theta(
    const ModelParams& params, std::size_t theta, std::span<const StatePolicy> psi,
    std::span<const double> beta, const TimeGrid& grid,
    const std::array<double, 5>& rho0) {
    if (beta.size() != grid.n_nodes())
        throw GridMismatch("beta path must have one value per time node");
    if (psi.size() != 1 && psi.size() != grid.n_nodes())
        throw GridMismatch("state policy must be constant or one entry per node");

    namespace ode = boost::numeric::odeint;
    auto stepper = ode::make_controlled<ode::runge_kutta_cash_karp54<State5>>(1e-10, 1e-8);

    std::vector<State5> path(grid.n_nodes());
    path[0] = rho0;
    State5 y = rho0;
    const Rates rates = params.rates(theta);

    for (std::size_t k = 0; k < grid.n_steps; ++k) {
        const StatePolicy pk = psi.size() == 1 ? psi[0] : psi[k];
        RhoRhs rhs{rates, beta[k], beta[k + 1], grid.t(k), grid.dt, pk};
        try {
            ode::integrate_adaptive(stepper, rhs, y, grid.t(k), grid.t(k + 1),
                                    grid.dt / 4.0);
        } catch (const std::overflow_error&) {
            throw StepUnstable("population ODE step size underflow");
        }
        path[k + 1] = y;
    }
    return path;
}

PopulationPath integrate_rho(const ModelParams& params, std::span<const StatePolicy> psi,
                             std::span<const double> beta, const TimeGrid& grid,
                             const std::vector<std::array<double, 5>>& rho0) {
    PopulationPath out;
    out.grid = grid;
    out.n_theta = params.n_theta();
    if (rho0.size() != out.n_theta)
        throw GridMismatch("need one initial pmf per attribute");
    out.rho.resize(out.n_theta);
    for (std::size_t theta = 0; theta < out.n_theta; ++theta)
        out.rho[theta] = integrate_rho_theta(params, theta, psi, beta, grid, rho0[theta]);
    return out;
}

FoMfeResult fo_mfe(const ModelParams& params,
                   const std::vector<std::array<double, 5>>& rho0, const TimeGrid& grid) {
    FoMfeResult res;
    const StatePolicy equilibrium_policy{1.0, 0.0, 0.0};
    std::vector<double> beta_zero(grid.n_nodes(), 0.0);

    res.population = integrate_rho(params, std::span{&equilibrium_policy, 1}, beta_zero,
                                   grid, rho0);

    res.mean_field.grid = grid;
    res.mean_field.beta = beta_zero;
    res.mean_field.alpha.assign(grid.n_nodes(), 0.0);
    for (std::size_t k = 0; k < grid.n_nodes(); ++k) {
        double alpha = 0.0;
        for (std::size_t theta = 0; theta < params.n_theta(); ++theta)
            alpha += params.weight(theta) *
                     (rho0[theta][0] + res.population.rho[theta][k][3]);
        res.mean_field.alpha[k] = alpha;
        if (alpha <= kAlphaMin || alpha >= kAlphaMax) res.degenerate_alpha = true;
    }

    const double alpha_ref =
        std::clamp(res.mean_field.alpha.back(), kAlphaMin, kAlphaMax);
    for (std::size_t theta = 0; theta < params.n_theta(); ++theta) {
        ThetaStationarySolution sol;
        sol.phi_i = phi_bar_i(params, theta);
        sol.phi_a = phi_bar_a(params, theta);
        const auto dec = stationary_susceptible(params, theta, 0.0, alpha_ref);
        sol.v_s = dec.value;
        sol.policy_s = dec.control;
        sol.regime = dec.control > 0.5 ? SusceptibleRegime::ActiveSusceptible
                                       : SusceptibleRegime::IsolatedSusceptible;
        res.solution.per_theta.push_back(sol);
    }

    // Fixed-point recheck: best respond to the returned path, propagate, and
    // measure how far the mean field moves.
    std::vector<StatePolicy> br(grid.n_nodes());
    for (std::size_t k = 0; k < grid.n_nodes(); ++k) {
        // With beta == 0 the switching value is -alpha_t: active while any
        // reward exists, indifferent (isolate) only at alpha_t == 0.
        br[k] = StatePolicy{res.mean_field.alpha[k] > 0.0 ? 1.0 : 0.0, 0.0, 0.0};
    }
    PopulationPath again = integrate_rho(params, br, beta_zero, grid, rho0);
    double resid = 0.0;
    for (std::size_t k = 0; k < grid.n_nodes(); ++k) {
        double alpha = 0.0;
        for (std::size_t theta = 0; theta < params.n_theta(); ++theta)
            alpha += params.weight(theta) *
                     (br[k].s * again.rho[theta][k][0] + again.rho[theta][k][3]);
        resid = std::max(resid, std::abs(alpha - res.mean_field.alpha[k]));
    }
    res.fixed_point_residual = resid;
    return res;
}

}  // namespace epimfg
