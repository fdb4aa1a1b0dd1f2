#include "mgh/upper_bound.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mgh {

SampleBudget::SampleBudget(std::size_t count) : count_(count) {
    if (count == 0) throw std::invalid_argument("SampleBudget: count must be >= 1");
}

namespace {

template <class T>
T absdiff(T a, T b) noexcept {
    return a < b ? b - a : a - b;
}

// Construction method over row-major matrices of one element type. The
// candidate scan stops early once a candidate cannot beat the incumbent, and
// the outer scan stops once a candidate keeps the running distortion, since
// no later index can do strictly better. Neither shortcut changes the result.
template <class T>
GreedyMapping construct(const T* dx, std::size_t nx, const T* dy, std::size_t ny,
                        std::span<const std::size_t> order) {
    GreedyMapping out;
    out.target.assign(nx, 0);
    std::vector<std::size_t> image(nx);  // image[k] = target of order[k]
    std::vector<T> xrow(nx);
    T running{};
    for (std::size_t i = 0; i < nx; ++i) {
        const std::size_t x = order[i];
        for (std::size_t k = 0; k < i; ++k) xrow[k] = dx[x * nx + order[k]];

        bool have = false;
        T best{};
        std::size_t best_j = 0;
        for (std::size_t j = 0; j < ny; ++j) {
            const T* yrow = dy + j * ny;
            T delta = running;
            bool beaten = false;
            for (std::size_t k = 0; k < i; ++k) {
                const T diff = absdiff(xrow[k], yrow[image[k]]);
                if (diff > delta) {
                    delta = diff;
                    if (have && delta >= best) {
                        beaten = true;
                        break;
                    }
                }
            }
            if (beaten) continue;
            if (!have || delta < best) {
                have = true;
                best = delta;
                best_j = j;
                if (best == running) break;
            }
        }
        image[i] = best_j;
        out.target[x] = best_j;
        running = best;
    }
    out.distortion = static_cast<double>(running);
    return out;
}

}  // namespace

GreedyMapping construct_mapping(const DistanceMatrix& dx, const DistanceMatrix& dy,
                                std::span<const std::size_t> order) {
    if (order.size() != dx.size()) {
        throw std::invalid_argument("construct_mapping: order is not a permutation of X");
    }
    std::vector<bool> seen(dx.size(), false);
    for (auto x : order) {
        if (x >= dx.size() || seen[x]) {
            throw std::invalid_argument("construct_mapping: order is not a permutation of X");
        }
        seen[x] = true;
    }
    if (dx.is_integer() && dy.is_integer()) {
        return construct(dx.int_data().data(), dx.size(), dy.int_data().data(), dy.size(), order);
    }
    return construct(dx.matrix().data().data(), dx.size(), dy.matrix().data().data(), dy.size(),
                     order);
}

double sample_small_distortion(const DistanceMatrix& dx, const DistanceMatrix& dy,
                               RandomSeed seed) {
    SplitMix64 rng(seed.value);
    const auto order = rng.permutation(dx.size());
    return construct_mapping(dx, dy, order).distortion;
}

SampleBudget decide_sample_size(std::size_t n, std::size_t /*m*/) {
    if (n == 0) throw std::invalid_argument("decide_sample_size: n must be >= 1");
    const double x = static_cast<double>(n);
    const auto s = static_cast<std::size_t>(std::ceil(std::sqrt(x) * std::log(x + 1.0)));
    return SampleBudget(std::max<std::size_t>(s, 1));
}

RandomSeed sample_seed(RandomSeed seed, int direction, std::size_t index) {
    return {derive_seed(seed.value, static_cast<std::uint64_t>(direction), index)};
}

namespace {

double best_sampled(const DistanceMatrix& from, const DistanceMatrix& to, RandomSeed seed,
                    int direction, std::size_t count) {
    double best = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
        const double dis = sample_small_distortion(from, to, sample_seed(seed, direction, i));
        if (i == 0 || dis < best) best = dis;
        if (best == 0.0) break;
    }
    return best;
}

}  // namespace

double find_upper_bound(const DistanceMatrix& dx, const DistanceMatrix& dy, RandomSeed seed,
                        const std::optional<SampleBudgets>& budget_override) {
    const SampleBudgets budgets = budget_override.value_or(
        SampleBudgets{decide_sample_size(dx.size(), dy.size()), decide_sample_size(dy.size(), dx.size())});
    const double phi = best_sampled(dx, dy, seed, 0, budgets.x_to_y.count());
    const double psi = best_sampled(dy, dx, seed, 1, budgets.y_to_x.count());
    return 0.5 * std::max(phi, psi);
}

double mapping_distortion(const DistanceMatrix& dx, const DistanceMatrix& dy,
                          std::span<const std::size_t> target) {
    if (target.size() != dx.size()) {
        throw std::invalid_argument("mapping_distortion: mapping does not cover X");
    }
    double dis = 0.0;
    for (std::size_t a = 0; a < dx.size(); ++a)
        for (std::size_t b = 0; b < dx.size(); ++b)
            dis = std::max(dis, std::abs(dx(a, b) - dy(target[a], target[b])));
    return dis;
}

}  // namespace mgh
