#ifndef MGH_GRAPH_IO_HPP
#define MGH_GRAPH_IO_HPP

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mgh/metric.hpp"
#include "mgh/random.hpp"

namespace mgh {

// edge_list:  "n <count>" header, then "u v" per line, '#' comments.
// dense_csv:  symmetric 0/1 adjacency matrix, comma separated, no header.
// sparse_coo: "n <count>" header, then "i j" with i < j per nonzero entry.
enum class GraphFormat { edge_list, dense_csv, sparse_coo };

std::optional<GraphFormat> parse_format(std::string_view name);
const char* to_string(GraphFormat format) noexcept;

class GraphIoError : public std::runtime_error {
public:
    // line is 1-based; 0 when the error is not tied to a line.
    GraphIoError(const std::string& what, std::size_t line);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

struct GraphReadResult {
    GraphInput graph;
    std::size_t dropped_self_loops = 0;
    std::size_t dropped_duplicates = 0;

    std::size_t warnings() const noexcept { return dropped_self_loops + dropped_duplicates; }
};

GraphReadResult read_graph(std::istream& in, GraphFormat format);
// Error messages are prefixed with the path.
GraphReadResult read_graph(const std::filesystem::path& path, GraphFormat format);

void write_graph(std::ostream& out, const GraphInput& g, GraphFormat format);

enum class GraphModel { erdos_renyi, watts_strogatz, barabasi_albert };

std::optional<GraphModel> parse_model(std::string_view name);
const char* to_string(GraphModel model) noexcept;

struct GeneratorSpec {
    GraphModel model = GraphModel::erdos_renyi;
    std::size_t n = 0;
    double p = 0.0;     // edge probability (ER) or rewiring probability (WS)
    std::size_t k = 0;  // WS: half the lattice degree
    std::size_t m = 0;  // BA: edges attached per new node
    RandomSeed seed;
};

// Nearest integer, ties to even.
long long round_half_even(double x) noexcept;

struct ProtocolRanges {
    double p_min = 0.0, p_max = 0.0;
    std::size_t k_max = 0;
    std::size_t m_max = 0;
};

// Parameter ranges of the synthetic benchmark protocol for graphs of order n
// (natural logarithm).
ProtocolRanges protocol_ranges(std::size_t n);

// Throws std::invalid_argument when n or the model parameters fall outside
// the protocol ranges.
void check_protocol_ranges(const GeneratorSpec& spec);

// Deterministic graph for the spec. Only checks that the parameters define a
// graph (p in [0, 1], 2k < n, 1 <= m < n); see check_protocol_ranges for the
// benchmark ranges.
GraphInput generate(const GeneratorSpec& spec);

struct OrderRange {
    std::size_t min = 10;
    std::size_t max = 200;
};

// Draws n uniformly from the range and the model parameters uniformly from
// the protocol ranges for that n.
GeneratorSpec sample_spec(GraphModel model, RandomSeed seed, OrderRange order = {});

}  // namespace mgh

#endif  // MGH_GRAPH_IO_HPP
