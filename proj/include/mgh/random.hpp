#ifndef MGH_RANDOM_HPP
#define MGH_RANDOM_HPP

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <vector>

namespace mgh {

struct RandomSeed {
    std::uint64_t value = 0;
};

// splitmix64 finalizer; used both as a stream generator and to derive sub-seeds.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Derives an independent seed from a parent seed and a list of counters.
// Stable across platforms; the stream for (seed, a) is a prefix-free function
// of its arguments.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a,
                                    std::uint64_t b = 0,
                                    std::uint64_t c = 0) noexcept {
    std::uint64_t h = mix64(seed ^ 0x9e3779b97f4a7c15ULL);
    h = mix64(h ^ (a + 0x632be59bd9b4e019ULL));
    h = mix64(h ^ (b + 0x8cb92ba72f3d8dd7ULL));
    h = mix64(h ^ (c + 0xd1b54a32d192ed03ULL));
    return h;
}

// Counter-based generator (splitmix64). All bounded draws are implemented
// here rather than through <random> distributions, whose output is
// implementation-defined, so results are identical on every platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix64(state_);
    }

    // Uniform on [0, bound), bound > 0. Rejection sampling, no modulo bias.
    std::uint64_t below(std::uint64_t bound) noexcept {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    // Uniform on the closed integer interval [lo, hi].
    std::int64_t between(std::int64_t lo, std::int64_t hi) noexcept {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(below(span));
    }

    // Uniform on [0, 1) with 53 random bits.
    double unit() noexcept {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) noexcept {
        return lo + (hi - lo) * unit();
    }

    bool bernoulli(double p) noexcept { return unit() < p; }

    // Fisher-Yates permutation of 0..n-1.
    std::vector<std::size_t> permutation(std::size_t n) {
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), std::size_t{0});
        for (std::size_t i = n; i > 1; --i) {
            const auto j = static_cast<std::size_t>(below(i));
            std::swap(order[i - 1], order[j]);
        }
        return order;
    }

private:
    std::uint64_t state_;
};

}  // namespace mgh

#endif  // MGH_RANDOM_HPP
