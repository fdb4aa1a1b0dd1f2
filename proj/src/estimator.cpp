#include "mgh/estimator.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

namespace mgh {

double baseline_lower(const DistanceMatrix& dx, const DistanceMatrix& dy) noexcept {
    return 0.5 * std::abs(dx.diam() - dy.diam());
}

BoundsReport make_report(double lower, double upper, double baseline) {
    BoundsReport r;
    r.baseline = baseline;
    r.lower = std::max(lower, baseline);
    r.upper = upper;
    r.estimate = 0.5 * (r.lower + r.upper);
    r.exact = r.lower == r.upper;
    if (r.upper > 0.0) {
        r.relative_error = (r.upper - r.lower) / (r.lower + r.upper);
        r.utility = (r.lower - r.baseline) / (r.lower + r.upper);
    }
    return r;
}

BoundsReport estimate_mgh(const DistanceMatrix& dx, const DistanceMatrix& dy, RandomSeed seed,
                          const EstimateOptions& options) {
    using clock = std::chrono::steady_clock;
    const auto t0 = clock::now();
    const double lower = find_lower_bound(dx, dy, options.lower);
    const auto t1 = clock::now();
    const double upper = find_upper_bound(dx, dy, seed, options.budgets);
    const auto t2 = clock::now();

    BoundsReport r = make_report(lower, upper, baseline_lower(dx, dy));
    r.elapsed_lower = std::chrono::duration<double>(t1 - t0).count();
    r.elapsed_upper = std::chrono::duration<double>(t2 - t1).count();
    return r;
}

}  // namespace mgh
