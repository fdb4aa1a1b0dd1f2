#include "mgh/lower_bound.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace mgh {

SortedRow::SortedRow(std::vector<double> values) : values_(std::move(values)) {
    std::sort(values_.begin(), values_.end());
}

DistanceHistogram::DistanceHistogram(std::span<const int> row, int max_value)
    : counts_(static_cast<std::size_t>(max_value) + 1, 0), total_(row.size()) {
    if (max_value < 0) throw std::invalid_argument("DistanceHistogram: negative max_value");
    for (int v : row) {
        if (v < 0 || v > max_value) {
            throw std::invalid_argument("DistanceHistogram: entry " + std::to_string(v) +
                                        " outside [0, " + std::to_string(max_value) + "]");
        }
        ++counts_[static_cast<std::size_t>(v)];
    }
}

DistanceHistogram::DistanceHistogram(std::vector<std::size_t> counts) : counts_(std::move(counts)) {
    if (counts_.empty()) throw std::invalid_argument("DistanceHistogram: empty value range");
    for (auto c : counts_) total_ += c;
}

namespace {

void require_positive(double d, const char* where) {
    if (!(d > 0.0)) throw std::invalid_argument(std::string(where) + ": d must be positive");
}

[[maybe_unused]] bool is_sorted_span(std::span<const double> r) { return std::is_sorted(r.begin(), r.end()); }

// Bulk greedy over two histograms of the same width. |v - u| < d for integers
// means u in [v - d + 1, v + d - 1].
template <class Count>
bool feasible_counts(const Count* v, const Count* u, int width, long long d) {
    int h = 0;
    std::uint64_t avail = u[0];
    for (int val = 0; val < width; ++val) {
        std::uint64_t need = v[val];
        while (need > 0) {
            while (h < width && (avail == 0 || h <= val - d)) {
                ++h;
                if (h < width) avail = u[h];
            }
            if (h >= width || h >= val + d) return false;
            const auto take = std::min(need, avail);
            need -= take;
            avail -= take;
        }
    }
    return true;
}

// Integer thresholds: for integer entries, x < d  <=>  x < ceil(d).
long long integer_threshold(double d) {
    const double c = std::ceil(d);
    return c > 1e15 ? static_cast<long long>(1e15) : static_cast<long long>(c);
}

bool has_integer_entries(const SquareMatrix& m) {
    const auto data = m.data();
    return std::all_of(data.begin(), data.end(), [](double v) { return v == std::floor(v); });
}

// Removal order of the greedy curvature search over the principal submatrix
// of a on `alive`. Returns the surviving indices.
std::vector<std::size_t> greedy_bounded_subset(const SquareMatrix& a, double d,
                                               std::vector<std::size_t> alive) {
    const std::size_t n = a.size();
    // Sums of integer-valued doubles below 2^53 are exact, so they can be
    // maintained incrementally without changing tie-breaks.
    const bool exact_sums = has_integer_entries(a);

    std::vector<std::size_t> below(n, 0);
    std::vector<double> sum(n, 0.0);
    for (auto i : alive) {
        for (auto j : alive) {
            if (i == j) continue;
            if (a(i, j) < d) {
                ++below[i];
            } else {
                sum[i] += a(i, j);
            }
        }
    }

    for (;;) {
        std::size_t most = 0;
        for (auto i : alive) most = std::max(most, below[i]);
        if (most == 0) break;

        std::size_t victim = n;
        double victim_sum = 0.0;
        for (auto i : alive) {
            if (below[i] != most) continue;
            double s = sum[i];
            if (!exact_sums) {
                s = 0.0;
                for (auto j : alive)
                    if (j != i && a(i, j) >= d) s += a(i, j);
            }
            if (victim == n || s < victim_sum) {
                victim = i;
                victim_sum = s;
            }
        }

        alive.erase(std::find(alive.begin(), alive.end(), victim));
        for (auto j : alive) {
            if (a(j, victim) < d) {
                --below[j];
            } else if (exact_sums) {
                sum[j] -= a(j, victim);
            }
        }
    }
    return alive;
}

// Rows of one distance matrix prepared once for many feasibility checks:
// either ascending rows or per-row histograms over 0..width-1.
struct TargetRows {
    std::size_t n = 0;
    int width = 0;  // 0 for the sorted-row representation
    std::vector<double> sorted;
    std::vector<std::uint32_t> counts;

    std::span<const double> sorted_row(std::size_t j) const { return {sorted.data() + j * n, n}; }
    const std::uint32_t* count_row(std::size_t j) const {
        return counts.data() + j * static_cast<std::size_t>(width);
    }
};

TargetRows prepare_sorted(const SquareMatrix& m) {
    TargetRows t;
    t.n = m.size();
    t.sorted.assign(m.data().begin(), m.data().end());
    for (std::size_t j = 0; j < t.n; ++j) {
        auto first = t.sorted.begin() + static_cast<std::ptrdiff_t>(j * t.n);
        std::sort(first, first + static_cast<std::ptrdiff_t>(t.n));
    }
    return t;
}

TargetRows prepare_histograms(const SquareMatrix& m, int width) {
    TargetRows t;
    t.n = m.size();
    t.width = width;
    t.counts.assign(t.n * static_cast<std::size_t>(width), 0);
    for (std::size_t j = 0; j < t.n; ++j) {
        auto* row = t.counts.data() + j * static_cast<std::size_t>(width);
        for (double v : m.row(j)) ++row[static_cast<std::size_t>(v)];
    }
    return t;
}

// Row-feasibility search for a curvature whose rows are already in the same
// representation as `targets`.
bool some_row_infeasible(const TargetRows& rows, const TargetRows& targets, double d) {
    const long long dint = integer_threshold(d);
    for (std::size_t i = 0; i < rows.n; ++i) {
        bool infeasible_everywhere = true;
        for (std::size_t j = 0; j < targets.n && infeasible_everywhere; ++j) {
            const bool feasible =
                targets.width > 0
                    ? feasible_counts(rows.count_row(i), targets.count_row(j), targets.width, dint)
                    : solve_feasible_assignment(rows.sorted_row(i), targets.sorted_row(j), d);
            if (feasible) infeasible_everywhere = false;
        }
        if (infeasible_everywhere) return true;
    }
    return false;
}

TargetRows prepare_like(const SquareMatrix& m, const TargetRows& targets) {
    return targets.width > 0 ? prepare_histograms(m, targets.width) : prepare_sorted(m);
}

int histogram_width(const DistanceMatrix& a, const DistanceMatrix& b) {
    return static_cast<int>(std::max(a.diam(), b.diam())) + 1;
}

// Per-pair state reused across every threshold tried by find_lower_bound.
class LowerBoundEngine {
public:
    LowerBoundEngine(const DistanceMatrix& dx, const DistanceMatrix& dy)
        : dx_(dx), dy_(dy) {
        if (dx.is_integer() && dy.is_integer()) {
            const int width = histogram_width(dx, dy);
            tx_ = prepare_histograms(dx.matrix(), width);
            ty_ = prepare_histograms(dy.matrix(), width);
        } else {
            tx_ = prepare_sorted(dx.matrix());
            ty_ = prepare_sorted(dy.matrix());
        }
    }

    bool verify(double d) const {
        const Curvature k = find_large_k(dx_, d);
        const Curvature l = find_large_k(dy_, d);
        if (k.size() > dy_.size() || l.size() > dx_.size()) return true;
        return some_row_infeasible(prepare_like(k.k, ty_), ty_, d) ||
               some_row_infeasible(prepare_like(l.k, tx_), tx_, d);
    }

private:
    const DistanceMatrix& dx_;
    const DistanceMatrix& dy_;
    TargetRows tx_;
    TargetRows ty_;
};

}  // namespace

std::optional<std::size_t> find_least_bounded_row(const SquareMatrix& a, double d) {
    require_positive(d, "find_least_bounded_row");
    const std::size_t m = a.size();
    std::optional<std::size_t> best;
    std::size_t best_n = 0;
    double best_s = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        std::size_t n_i = 0;
        double s_i = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            if (i == j) continue;
            if (a(i, j) < d) {
                ++n_i;
            } else {
                s_i += a(i, j);
            }
        }
        if (n_i > best_n || (n_i == best_n && s_i < best_s)) {
            best = i;
            best_n = n_i;
            best_s = s_i;
        }
    }
    return best;
}

Curvature find_large_k(const DistanceMatrix& dx, double d) {
    require_positive(d, "find_large_k");
    std::vector<std::size_t> all(dx.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    auto kept = greedy_bounded_subset(dx.matrix(), d, std::move(all));
    Curvature k{dx.matrix().principal_submatrix(kept), std::move(kept)};
    return k;
}

bool solve_feasible_assignment(std::span<const double> v, std::span<const double> u, double d) {
    assert(is_sorted_span(v) && is_sorted_span(u));
    std::size_t h = 0;
    for (double vk : v) {
        // Entries of u too small for vk are too small for every later v.
        while (h < u.size() && u[h] <= vk - d) ++h;
        if (h == u.size()) return false;
        // vk too small for the smallest remaining u: too small for all of them.
        if (vk <= u[h] - d) return false;
        ++h;
    }
    return true;
}

bool solve_feasible_assignment(const SortedRow& v, const SortedRow& u, double d) {
    return solve_feasible_assignment(v.values(), u.values(), d);
}

bool solve_feasible_assignment_hist(const DistanceHistogram& v, const DistanceHistogram& u, int d) {
    if (v.max_value() != u.max_value()) {
        throw std::invalid_argument("solve_feasible_assignment_hist: histogram ranges differ");
    }
    if (d < 1) throw std::invalid_argument("solve_feasible_assignment_hist: d must be >= 1");
    return feasible_counts(v.counts().data(), u.counts().data(), v.max_value() + 1, d);
}

bool check_theorem_b(const Curvature& k, const DistanceMatrix& dy, double d) {
    require_positive(d, "check_theorem_b");
    if (k.size() > dy.size()) {
        throw std::invalid_argument("check_theorem_b: curvature larger than target space");
    }
    if (dy.is_integer() && has_integer_entries(k.k)) {
        const auto kd = k.k.data();
        const double kmax = kd.empty() ? 0.0 : *std::max_element(kd.begin(), kd.end());
        const int width = static_cast<int>(std::max(kmax, dy.diam())) + 1;
        return some_row_infeasible(prepare_histograms(k.k, width),
                                   prepare_histograms(dy.matrix(), width), d);
    }
    return some_row_infeasible(prepare_sorted(k.k), prepare_sorted(dy.matrix()), d);
}

bool verify_lower_bound(const DistanceMatrix& dx, const DistanceMatrix& dy, double d) {
    require_positive(d, "verify_lower_bound");
    return LowerBoundEngine(dx, dy).verify(d);
}

DeltaSet build_delta_set(const DistanceMatrix& dx, const DistanceMatrix& dy) {
    DeltaSet delta;
    if (dx.is_integer() && dy.is_integer()) {
        const int d_max = static_cast<int>(std::max(dx.diam(), dy.diam()));
        delta.values.reserve(static_cast<std::size_t>(d_max) + 1);
        for (int v = 0; v <= d_max; ++v) delta.values.push_back(v);
        return delta;
    }
    auto distinct = [](const DistanceMatrix& m) {
        std::vector<double> v(m.matrix().data().begin(), m.matrix().data().end());
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        return v;
    };
    const auto xs = distinct(dx);
    const auto ys = distinct(dy);
    delta.values.reserve(xs.size() * ys.size());
    for (double a : xs)
        for (double b : ys) delta.values.push_back(std::abs(a - b));
    std::sort(delta.values.begin(), delta.values.end());
    delta.values.erase(std::unique(delta.values.begin(), delta.values.end()), delta.values.end());
    return delta;
}

double find_lower_bound(const DistanceMatrix& dx, const DistanceMatrix& dy,
                        const LowerBoundOptions& options) {
    const DeltaSet delta = build_delta_set(dx, dy);
    std::vector<double> positive;
    for (double v : delta.values)
        if (v > 0.0) positive.push_back(v);

    const LowerBoundEngine engine(dx, dy);
    if (!options.binary_search) {
        for (auto it = positive.rbegin(); it != positive.rend(); ++it) {
            if (engine.verify(*it)) return *it / 2.0;
        }
        return 0.0;
    }

    std::size_t lo = 0, hi = positive.size();
    std::optional<double> found;
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (engine.verify(positive[mid])) {
            found = positive[mid];
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    return found ? *found / 2.0 : 0.0;
}

}  // namespace mgh
