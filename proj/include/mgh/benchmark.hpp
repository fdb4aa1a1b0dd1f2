#ifndef MGH_BENCHMARK_HPP
#define MGH_BENCHMARK_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "mgh/estimator.hpp"
#include "mgh/graph_io.hpp"

namespace mgh {

inline constexpr const char* kVersion = "1.0.0";

struct PairRow {
    std::size_t i = 0;
    std::size_t j = 0;
    std::size_t order_i = 0;
    std::size_t order_j = 0;
    std::uint64_t seed = 0;
    BoundsReport report;
};

struct Summary {
    double mean = 0.0;
    double stddev = 0.0;  // population
};

struct Aggregates {
    std::size_t pairs = 0;
    Summary order;  // (|X| + |Y|) / 2 per pair
    Summary time;   // seconds, both bounds
    Summary relative_error;
    Summary utility;
    double percent_exact = 0.0;
};

Aggregates compute_aggregates(const std::vector<PairRow>& rows);

struct GraphRecord {
    GeneratorSpec spec;
    std::size_t component_order = 0;  // vertices kept after component reduction
};

// Record of one benchmark run. The JSON form is the source of truth; loading
// it re-derives the aggregates from the rows and rejects a mismatch.
struct RunManifest {
    std::string command_line;
    std::uint64_t seed = 0;
    std::string version = kVersion;
    std::map<std::string, std::string> decisions;
    std::string model;
    std::size_t count = 0;
    std::vector<GraphRecord> graphs;
    std::vector<PairRow> rows;
    Aggregates aggregates;

    nlohmann::json to_json() const;
    static RunManifest from_json(const nlohmann::json& j);
};

// Fixed implementation choices recorded in every manifest.
std::map<std::string, std::string> run_decisions();

// Seed of the estimate for graphs (i, j), i < j.
RandomSeed pair_seed(RandomSeed run_seed, std::size_t i, std::size_t j);

// Runs task(index) for every index in [0, count) on up to `jobs` threads.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& task);

struct BenchmarkConfig {
    GraphModel model = GraphModel::erdos_renyi;
    std::size_t count = 100;
    RandomSeed seed;
    unsigned jobs = 1;
    OrderRange order;
    EstimateOptions estimate;
};

// Generates `count` graphs, reduces each to its largest component and
// estimates every unordered pair. Rows are ordered by (i, j).
RunManifest run_benchmark(const BenchmarkConfig& config, const std::string& command_line = {});

void write_tsv(std::ostream& out, const RunManifest& manifest);

struct PairwiseResult {
    std::vector<std::vector<double>> estimate;
    std::vector<std::vector<double>> lower;
    std::vector<std::vector<double>> upper;
};

PairwiseResult pairwise_estimates(const std::vector<DistanceMatrix>& spaces, RandomSeed seed,
                                  unsigned jobs, const EstimateOptions& options = {});

}  // namespace mgh

#endif  // MGH_BENCHMARK_HPP
