#ifndef MGH_LOWER_BOUND_HPP
#define MGH_LOWER_BOUND_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "mgh/metric.hpp"

namespace mgh {

// One matrix row with its entries sorted ascending.
class SortedRow {
public:
    SortedRow() = default;
    explicit SortedRow(std::vector<double> values);
    explicit SortedRow(std::span<const double> values)
        : SortedRow(std::vector<double>(values.begin(), values.end())) {}

    std::span<const double> values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }

private:
    std::vector<double> values_;
};

// Frequency counts of the integer values 0..max_value in one row.
class DistanceHistogram {
public:
    // Throws std::invalid_argument if an entry falls outside [0, max_value].
    DistanceHistogram(std::span<const int> row, int max_value);
    DistanceHistogram(std::vector<std::size_t> counts);

    int max_value() const noexcept { return static_cast<int>(counts_.size()) - 1; }
    std::span<const std::size_t> counts() const noexcept { return counts_; }
    std::size_t total() const noexcept { return total_; }

private:
    std::vector<std::size_t> counts_;
    std::size_t total_ = 0;
};

// Sorted candidate thresholds; contains 0 and d_max.
struct DeltaSet {
    std::vector<double> values;
};

// Index of the first "smallest least d-bounded" row of a, i.e. the first row
// maximizing the number of off-diagonal entries < d and, among those,
// minimizing the sum of its off-diagonal entries >= d. nullopt when a is
// d-bounded. Throws std::invalid_argument for d <= 0.
std::optional<std::size_t> find_least_bounded_row(const SquareMatrix& a, double d);

// Greedily removes least bounded rows until the remainder is d-bounded.
// Equivalent to repeated find_least_bounded_row, computed incrementally.
Curvature find_large_k(const DistanceMatrix& dx, double d);

// Whether an injection f from v into u with |v[k] - u[f(k)]| < d exists.
// Linear greedy sweep over both sorted rows.
bool solve_feasible_assignment(const SortedRow& v, const SortedRow& u, double d);
bool solve_feasible_assignment(std::span<const double> v, std::span<const double> u, double d);

// Same decision on integer rows given as histograms over one value range;
// assigns equal entries in bulk. Throws std::invalid_argument when the ranges
// differ or d < 1.
bool solve_feasible_assignment_hist(const DistanceHistogram& v, const DistanceHistogram& u, int d);

// True iff some row i of the d-bounded curvature k admits no feasible
// assignment into any row of dy, which certifies mGH >= d/2.
// Throws std::invalid_argument when k is larger than dy.
bool check_theorem_b(const Curvature& k, const DistanceMatrix& dy, double d);

// Sound (not complete) test of mGH(X, Y) >= d/2. Throws for d <= 0.
bool verify_lower_bound(const DistanceMatrix& dx, const DistanceMatrix& dy, double d);

DeltaSet build_delta_set(const DistanceMatrix& dx, const DistanceMatrix& dy);

struct LowerBoundOptions {
    // Bisect over the thresholds instead of scanning them from the top. Fewer
    // verifications, but verification is not monotone in d, so the result can
    // be looser than the default scan.
    bool binary_search = false;
};

double find_lower_bound(const DistanceMatrix& dx, const DistanceMatrix& dy,
                        const LowerBoundOptions& options = {});

}  // namespace mgh

#endif  // MGH_LOWER_BOUND_HPP
