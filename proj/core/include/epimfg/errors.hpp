#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace epimfg {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define EPIMFG_DEFINE_ERROR(Name)            \
    class Name : public Error {              \
    public:                                  \
        using Error::Error;                  \
    }

// Parameter / model validation
EPIMFG_DEFINE_ERROR(NegativeRate);
EPIMFG_DEFINE_ERROR(ZeroDiscount);
EPIMFG_DEFINE_ERROR(PmfNotNormalized);
EPIMFG_DEFINE_ERROR(NonpositivePhiI);
EPIMFG_DEFINE_ERROR(InvalidCostTable);
EPIMFG_DEFINE_ERROR(InvalidState);
EPIMFG_DEFINE_ERROR(DegenerateRemoval);
EPIMFG_DEFINE_ERROR(AssumptionViolated);

// Numerics
EPIMFG_DEFINE_ERROR(StepUnstable);
EPIMFG_DEFINE_ERROR(CflViolation);
EPIMFG_DEFINE_ERROR(MassDriftExceeded);
EPIMFG_DEFINE_ERROR(GridMismatch);
EPIMFG_DEFINE_ERROR(DomainError);
EPIMFG_DEFINE_ERROR(HypothesisViolated);

// Monte Carlo
EPIMFG_DEFINE_ERROR(StepTooCoarse);
EPIMFG_DEFINE_ERROR(EmptySample);

// CLI / orchestration
EPIMFG_DEFINE_ERROR(ConfigError);
EPIMFG_DEFINE_ERROR(SolverError);

#undef EPIMFG_DEFINE_ERROR

// Fixed-point failure carries the residual history so callers can report it.
class NotConverged : public Error {
public:
    NotConverged(const std::string& what, std::vector<double> residual_history)
        : Error(what), residuals_(std::move(residual_history)) {}

    const std::vector<double>& residual_history() const { return residuals_; }

private:
    std::vector<double> residuals_;
};

}  // namespace epimfg
