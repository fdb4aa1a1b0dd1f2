#ifndef MGH_ESTIMATOR_HPP
#define MGH_ESTIMATOR_HPP

#include <optional>

#include "mgh/lower_bound.hpp"
#include "mgh/metric.hpp"
#include "mgh/random.hpp"
#include "mgh/upper_bound.hpp"

namespace mgh {

struct BoundsReport {
    double lower = 0.0;           // b_L, never below the baseline
    double upper = 0.0;           // b_U
    double estimate = 0.0;        // (b_L + b_U) / 2
    double relative_error = 0.0;  // eta
    double utility = 0.0;         // upsilon
    double baseline = 0.0;        // half the diameter difference
    bool exact = false;
    double elapsed_lower = 0.0;   // seconds
    double elapsed_upper = 0.0;
};

struct EstimateOptions {
    std::optional<SampleBudgets> budgets;
    LowerBoundOptions lower;
};

double baseline_lower(const DistanceMatrix& dx, const DistanceMatrix& dy) noexcept;

// Fills the derived fields (estimate, eta, upsilon, exact) from the bounds.
BoundsReport make_report(double lower, double upper, double baseline);

BoundsReport estimate_mgh(const DistanceMatrix& dx, const DistanceMatrix& dy, RandomSeed seed,
                          const EstimateOptions& options = {});

}  // namespace mgh

#endif  // MGH_ESTIMATOR_HPP
