#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "epimfg/errors.hpp"
#include "epimfg/grids.hpp"

namespace epimfg {

// Epidemiological states of a single agent. r and d are absorbing; the
// controlled dynamics stop on first entry into {r, d}.
enum class EpiState : int { S = 0, A = 1, I = 2, R = 3, D = 4 };

const char* to_string(EpiState x);

// Transition rates of the agent chain. lambda_sa scales the controlled
// s->a intensity (the actual rate is lambda_sa * beta_t * u); the other
// three are uncontrolled.
struct Rates {
    double lambda_sa = 1.0;
    double lambda_ai = 2.0;
    double lambda_ir = 0.4;
    double lambda_id = 0.1;
};

// Optional per-attribute overrides of the base rates.
struct RateOverrides {
    std::optional<double> lambda_sa;
    std::optional<double> lambda_ai;
    std::optional<double> lambda_ir;
    std::optional<double> lambda_id;
};

// One point of the (finite, discrete) attribute distribution. The weights
// across all attributes must form a pmf.
struct Attribute {
    std::string id = "base";
    double weight = 1.0;
    RateOverrides overrides;
};

// All model constants: rates, discount, running-cost table, terminal costs,
// and the attribute mixture. Immutable after validation; every solver takes
// it by const reference.
struct ModelParams {
    Rates base;
    double gamma = 0.1;   // discount rate, must be > 0
    double c_h_i = 1.0;   // health cost while symptomatic
    double c_a = 1.0;     // altruistic cost of activity while infectious
    double phi_r = 0.0;   // terminal cost on recovery
    double phi_d = 10.0;  // terminal cost on death
    std::vector<Attribute> attributes;  // empty means a single base attribute

    std::size_t n_theta() const { return attributes.empty() ? 1 : attributes.size(); }
    double weight(std::size_t theta) const;
    Rates rates(std::size_t theta) const;
};

// Checks rates, discount, cost signs, attribute pmf normalization, and that
// the stationary symptomatic value is positive for every attribute. Returns
// the params unchanged (with an explicit base attribute filled in) on success.
ModelParams validate_params(ModelParams raw);

// Running cost c(x, u; alpha) for the transient states {s, a, i}.
// Throws InvalidState for r and d, whose cost is terminal.
double running_cost(EpiState x, double u, double alpha, const ModelParams& params);

// Applies the adjoint of the uncontrolled generator on {a, i, r, d} to a mass
// vector (order a, i, r, d). The controlled s->a inflow is the caller's
// business; with zero inflow the output components sum to zero.
std::array<double, 4> generator_adjoint_apply(const std::array<double, 4>& rho,
                                              const Rates& rates);

// Basic reproduction number at full activity and constant infected-activity
// level beta_bar: removal time over time between infectious contacts.
// Heterogeneous attributes are averaged under the attribute pmf.
double compute_r0(const ModelParams& params, double beta_bar);

// Numerical reading of the open-interval bounds on the mean-field processes:
// beta in [0, 1), alpha in (0, 1), with a one-ulp-ish guard band so that
// fixed-point intermediates can be clamped onto the closed box.
inline constexpr double kBetaMax = 1.0 - 1e-9;
inline constexpr double kAlphaMin = 1e-9;
inline constexpr double kAlphaMax = 1.0 - 1e-9;

// Time-gridded pair (beta_t, alpha_t) — the object the equilibrium fixed
// point acts on. Arrays hold one value per grid node.
struct MeanFieldPath {
    TimeGrid grid;
    std::vector<double> beta;
    std::vector<double> alpha;

    static MeanFieldPath constant(const TimeGrid& grid, double beta_bar, double alpha_bar);

    // Throws AssumptionViolated if sizes disagree with the grid or any node
    // leaves the admissible box.
    void validate() const;

    // Pulls every node into the admissible box; returns how many were moved.
    std::size_t clamp_to_bounds();
};

}  // namespace epimfg
