#ifndef MGH_UPPER_BOUND_HPP
#define MGH_UPPER_BOUND_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mgh/metric.hpp"
#include "mgh/random.hpp"

namespace mgh {

// Number of mappings to sample in one direction; always >= 1.
class SampleBudget {
public:
    explicit SampleBudget(std::size_t count);
    std::size_t count() const noexcept { return count_; }

private:
    std::size_t count_;
};

struct SampleBudgets {
    SampleBudget x_to_y;
    SampleBudget y_to_x;
};

// A mapping X -> Y built by the construction method.
struct GreedyMapping {
    std::vector<std::size_t> target;  // target[x] = image of point x
    double distortion = 0.0;
};

// Maps the points of X in the given order, each to the point of Y that
// minimizes the distortion of the partial relation (smallest index on ties).
GreedyMapping construct_mapping(const DistanceMatrix& dx, const DistanceMatrix& dy,
                                std::span<const std::size_t> order);

// Distortion of the construction-method mapping for a seeded random order.
double sample_small_distortion(const DistanceMatrix& dx, const DistanceMatrix& dy,
                               RandomSeed seed);

// ceil(sqrt(n) * ln(n + 1)); m is unused by this policy.
SampleBudget decide_sample_size(std::size_t n, std::size_t m);

// Seed of the i-th sample in a direction (0: X -> Y, 1: Y -> X).
RandomSeed sample_seed(RandomSeed seed, int direction, std::size_t index);

// Half the larger of the best sampled distortions in both directions.
double find_upper_bound(const DistanceMatrix& dx, const DistanceMatrix& dy, RandomSeed seed,
                        const std::optional<SampleBudgets>& budget_override = std::nullopt);

// Distortion of an arbitrary mapping, computed directly from the definition.
double mapping_distortion(const DistanceMatrix& dx, const DistanceMatrix& dy,
                          std::span<const std::size_t> target);

}  // namespace mgh

#endif  // MGH_UPPER_BOUND_HPP
