#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "epimfg/grids.hpp"
#include "epimfg/model.hpp"

namespace epimfg {

// Stationary symptomatic value: the i-state dynamic program decouples from
// the control (isolation is always optimal there) and its solution is the
// time-independent constant returned here. Throws NonpositivePhiI if the
// constant fails to be positive.
double phi_bar_i(const ModelParams& params, std::size_t theta);

// Stationary presymptomatic value, lambda_ai/(gamma+lambda_ai) * phi_bar_i.
double phi_bar_a(const ModelParams& params, std::size_t theta);

// Indifference level of the infected-activity process for a susceptible
// agent: activity and isolation have equal value exactly at this beta.
double beta_crit(const ModelParams& params, std::size_t theta, double alpha_bar);

struct StationaryDecision {
    double value = 0.0;
    double control = 0.0;  // 0 or 1
};

// Stationary value and bang-bang control of a susceptible agent facing
// constant (beta_bar, alpha_bar). Boundary tie beta_bar == beta_crit
// resolves to isolation.
StationaryDecision stationary_susceptible(const ModelParams& params, std::size_t theta,
                                          double beta_bar, double alpha_bar);

enum class SusceptibleRegime { ActiveSusceptible, IsolatedSusceptible };

struct ThetaStationarySolution {
    double phi_i = 0.0;
    double phi_a = 0.0;
    double v_s = 0.0;
    SusceptibleRegime regime = SusceptibleRegime::ActiveSusceptible;
    // Bang-bang state feedback; infectious states always isolate.
    double policy_s = 1.0, policy_a = 0.0, policy_i = 0.0;
};

struct FullyObservedSolution {
    std::vector<ThetaStationarySolution> per_theta;
};

// Time-constant activity per state (r, d need none). The equilibrium policy
// is stationary, so a schedule is only needed for best-response iterations.
struct StatePolicy {
    double s = 1.0;
    double a = 0.0;
    double i = 0.0;
};

// Per-attribute population trajectories rho_t(x; theta) on a time grid.
struct PopulationPath {
    TimeGrid grid;
    std::size_t n_theta = 1;
    // rho[theta][k] = pmf over (s, a, i, r, d) at node k.
    std::vector<std::vector<std::array<double, 5>>> rho;

    std::array<double, 5> aggregate(const ModelParams& params, std::size_t k) const;
};

// Forward population ODE for one attribute under a per-node state policy and
// a given beta path. psi may be a single entry (held constant) or one entry
// per time node. The pmf property is preserved to integrator tolerance.
std::vector<std::array<double, 5>> integrate_rho_theta(
    const ModelParams& params, std::size_t theta, std::span<const StatePolicy> psi,
    std::span<const double> beta, const TimeGrid& grid,
    const std::array<double, 5>& rho0);

// All attributes, merged in attribute order.
PopulationPath integrate_rho(const ModelParams& params, std::span<const StatePolicy> psi,
                             std::span<const double> beta, const TimeGrid& grid,
                             const std::vector<std::array<double, 5>>& rho0);

struct FoMfeResult {
    FullyObservedSolution solution;
    PopulationPath population;
    MeanFieldPath mean_field;
    // Set when the consistent alpha path touches a bound of (0,1); the
    // equilibrium formula can reach the bounds for degenerate rho0.
    bool degenerate_alpha = false;
    // Sup-norm change of the mean-field path under one extra best-response /
    // propagation round; the equilibrium property makes this ~0.
    double fixed_point_residual = 0.0;
};

// Closed-form fully observed equilibrium: everyone infectious isolates, the
// infected-activity process vanishes, susceptibles stay active and frozen.
FoMfeResult fo_mfe(const ModelParams& params,
                   const std::vector<std::array<double, 5>>& rho0, const TimeGrid& grid);

}  // namespace epimfg
