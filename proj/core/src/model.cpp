#include "epimfg/model.hpp"

#include <cmath>
#include <set>

#include "epimfg/fully_observed.hpp"

namespace epimfg {

const char* to_string(EpiState x) {
    switch (x) {
        case EpiState::S: return "s";
        case EpiState::A: return "a";
        case EpiState::I: return "i";
        case EpiState::R: return "r";
        case EpiState::D: return "d";
    }
    return "?";
}

double ModelParams::weight(std::size_t theta) const {
    if (attributes.empty()) {
        if (theta != 0) throw GridMismatch("attribute index out of range");
        return 1.0;
    }
    return attributes.at(theta).weight;
}

Rates ModelParams::rates(std::size_t theta) const {
    Rates r = base;
    if (attributes.empty()) {
        if (theta != 0) throw GridMismatch("attribute index out of range");
        return r;
    }
    const RateOverrides& o = attributes.at(theta).overrides;
    if (o.lambda_sa) r.lambda_sa = *o.lambda_sa;
    if (o.lambda_ai) r.lambda_ai = *o.lambda_ai;
    if (o.lambda_ir) r.lambda_ir = *o.lambda_ir;
    if (o.lambda_id) r.lambda_id = *o.lambda_id;
    return r;
}

ModelParams validate_params(ModelParams raw) {
    if (raw.attributes.empty()) raw.attributes.push_back(Attribute{});

    if (!(raw.gamma > 0.0))
        throw ZeroDiscount("gamma must be > 0: the undiscounted problem is ill-posed "
                           "(the discount is the regularizer)");
    if (raw.c_h_i < 0.0 || raw.phi_r < 0.0 || raw.phi_d < 0.0)
        throw InvalidCostTable("cost table entries must be nonnegative");
    if (raw.c_a < 1.0)
        throw InvalidCostTable("altruistic cost must be >= 1 so that infectious agents "
                               "prefer isolation for every admissible alpha");

    double total = 0.0;
    std::set<std::string> ids;
    for (const auto& attr : raw.attributes) {
        if (!ids.insert(attr.id).second)
            throw PmfNotNormalized("duplicate attribute id '" + attr.id + "'");
        if (attr.weight < 0.0)
            throw PmfNotNormalized("attribute weight must be nonnegative");
        total += attr.weight;
    }
    if (std::abs(total - 1.0) > 1e-12)
        throw PmfNotNormalized("attribute weights must sum to 1 (got " +
                               std::to_string(total) + ")");

    for (std::size_t theta = 0; theta < raw.n_theta(); ++theta) {
        const Rates r = raw.rates(theta);
        if (r.lambda_sa < 0.0 || r.lambda_ai < 0.0 || r.lambda_ir < 0.0 || r.lambda_id < 0.0)
            throw NegativeRate("transition rates must be nonnegative (attribute '" +
                               raw.attributes[theta].id + "')");
        // Positivity of the stationary symptomatic value: without it an agent
        // could profit from getting infected.
        if (!(phi_bar_i(raw, theta) > 0.0))
            throw NonpositivePhiI("stationary symptomatic value must be positive "
                                  "(attribute '" + raw.attributes[theta].id + "')");
    }
    return raw;
}

double running_cost(EpiState x, double u, double alpha, const ModelParams& params) {
    switch (x) {
        case EpiState::S: return -alpha * u;
        case EpiState::A: return (params.c_a - alpha) * u;
        case EpiState::I: return params.c_h_i + (params.c_a - alpha) * u;
        case EpiState::R:
        case EpiState::D:
            throw InvalidState("running cost is undefined in absorbing states; "
                               "use the terminal cost");
    }
    throw InvalidState("unknown state");
}

std::array<double, 4> generator_adjoint_apply(const std::array<double, 4>& rho,
                                              const Rates& rates) {
    const double a = rho[0], i = rho[1];
    return {
        -rates.lambda_ai * a,
        rates.lambda_ai * a - (rates.lambda_ir + rates.lambda_id) * i,
        rates.lambda_ir * i,
        rates.lambda_id * i,
    };
}

double compute_r0(const ModelParams& params, double beta_bar) {
    double r0 = 0.0;
    for (std::size_t theta = 0; theta < params.n_theta(); ++theta) {
        const Rates r = params.rates(theta);
        const double removal = r.lambda_ir + r.lambda_id;
        if (!(removal > 0.0))
            throw DegenerateRemoval("lambda_ir + lambda_id must be positive");
        const double contact_rate = r.lambda_ai * removal / (r.lambda_ai + removal);
        r0 += params.weight(theta) * r.lambda_sa * beta_bar / contact_rate;
    }
    return r0;
}

MeanFieldPath MeanFieldPath::constant(const TimeGrid& grid, double beta_bar,
                                      double alpha_bar) {
    MeanFieldPath mf;
    mf.grid = grid;
    mf.beta.assign(grid.n_nodes(), beta_bar);
    mf.alpha.assign(grid.n_nodes(), alpha_bar);
    return mf;
}

void MeanFieldPath::validate() const {
    if (beta.size() != grid.n_nodes() || alpha.size() != grid.n_nodes())
        throw GridMismatch("mean-field path arrays must have one value per time node");
    for (std::size_t k = 0; k < beta.size(); ++k) {
        if (!(beta[k] >= 0.0) || beta[k] > kBetaMax)
            throw AssumptionViolated("beta_t must lie in [0, 1) (node " +
                                     std::to_string(k) + ")");
        if (!(alpha[k] >= kAlphaMin) || alpha[k] > kAlphaMax)
            throw AssumptionViolated("alpha_t must lie in (0, 1) (node " +
                                     std::to_string(k) + ")");
    }
}

std::size_t MeanFieldPath::clamp_to_bounds() {
    std::size_t moved = 0;
    auto clamp = [&moved](double& v, double lo, double hi) {
        if (v < lo) { v = lo; ++moved; }
        else if (v > hi) { v = hi; ++moved; }
    };
    for (auto& b : beta) clamp(b, 0.0, kBetaMax);
    for (auto& a : alpha) clamp(a, kAlphaMin, kAlphaMax);
    return moved;
}

}  // namespace epimfg
