#include "mgh/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace mgh {

GraphIoError::GraphIoError(const std::string& what, std::size_t line)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
      line_(line) {}

std::optional<GraphFormat> parse_format(std::string_view name) {
    if (name == "edge_list") return GraphFormat::edge_list;
    if (name == "dense_csv") return GraphFormat::dense_csv;
    if (name == "sparse_coo") return GraphFormat::sparse_coo;
    return std::nullopt;
}

const char* to_string(GraphFormat format) noexcept {
    switch (format) {
        case GraphFormat::edge_list: return "edge_list";
        case GraphFormat::dense_csv: return "dense_csv";
        case GraphFormat::sparse_coo: return "sparse_coo";
    }
    return "unknown";
}

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        const std::size_t start = i;
        while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
        if (i > start) out.push_back(s.substr(start, i - start));
    }
    return out;
}

std::size_t parse_index(std::string_view token, std::size_t line) {
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw GraphIoError("expected a non-negative integer, got '" + std::string(token) + "'", line);
    }
    return value;
}

// Shared reader for the two header-plus-pairs formats.
GraphReadResult read_pairs(std::istream& in, bool upper_triangle_only) {
    std::string raw;
    std::size_t line = 0;
    std::optional<std::size_t> n;
    std::vector<GraphInput::Edge> edges;
    while (std::getline(in, raw)) {
        ++line;
        std::string_view text = raw;
        if (const auto hash = text.find('#'); hash != std::string_view::npos) text = text.substr(0, hash);
        text = trim(text);
        if (text.empty()) continue;
        const auto tokens = split_ws(text);
        if (!n) {
            if (tokens.size() != 2 || tokens[0] != "n") {
                throw GraphIoError("expected header 'n <num_vertices>'", line);
            }
            n = parse_index(tokens[1], line);
            if (*n == 0) throw GraphIoError("graph must have at least one vertex", line);
            continue;
        }
        if (tokens.size() != 2) throw GraphIoError("expected 'u v'", line);
        const auto u = parse_index(tokens[0], line);
        const auto v = parse_index(tokens[1], line);
        if (u >= *n || v >= *n) {
            throw GraphIoError("vertex index out of range [0, " + std::to_string(*n) + ")", line);
        }
        if (upper_triangle_only && u > v) {
            throw GraphIoError("entry below the diagonal in upper-triangle format", line);
        }
        edges.emplace_back(u, v);
    }
    if (!n) throw GraphIoError("empty input", 0);
    auto s = sanitize_graph(*n, edges);
    return {std::move(s.graph), s.dropped_self_loops, s.dropped_duplicates};
}

GraphReadResult read_dense(std::istream& in) {
    std::string raw;
    std::size_t line = 0;
    std::vector<std::vector<char>> rows;
    std::vector<std::size_t> row_lines;
    while (std::getline(in, raw)) {
        ++line;
        const auto text = trim(raw);
        if (text.empty()) continue;
        std::vector<char> row;
        std::size_t start = 0;
        for (;;) {
            const auto comma = text.find(',', start);
            const auto cell = trim(text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                                        : comma - start));
            if (cell == "0" || cell == "1") {
                row.push_back(cell == "1");
            } else {
                throw GraphIoError("expected 0 or 1, got '" + std::string(cell) + "'", line);
            }
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        rows.push_back(std::move(row));
        row_lines.push_back(line);
    }
    if (rows.empty()) throw GraphIoError("empty input", 0);

    const std::size_t n = rows.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) {
            throw GraphIoError("row has " + std::to_string(rows[i].size()) + " entries, expected " +
                                   std::to_string(n),
                               row_lines[i]);
        }
    }
    std::vector<GraphInput::Edge> edges;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            if (rows[i][j] != rows[j][i]) {
                throw GraphIoError("adjacency matrix is not symmetric at column " + std::to_string(j),
                                   row_lines[i]);
            }
            if (rows[i][j]) edges.emplace_back(i, j);
        }
    }
    auto s = sanitize_graph(n, edges);
    return {std::move(s.graph), s.dropped_self_loops, s.dropped_duplicates};
}

}  // namespace

GraphReadResult read_graph(std::istream& in, GraphFormat format) {
    switch (format) {
        case GraphFormat::edge_list: return read_pairs(in, false);
        case GraphFormat::sparse_coo: return read_pairs(in, true);
        case GraphFormat::dense_csv: return read_dense(in);
    }
    throw std::invalid_argument("read_graph: unknown format");
}

GraphReadResult read_graph(const std::filesystem::path& path, GraphFormat format) {
    std::ifstream in(path);
    if (!in) throw GraphIoError(path.string() + ": cannot open file", 0);
    try {
        return read_graph(in, format);
    } catch (const GraphIoError& e) {
        throw GraphIoError(path.string() + ": " + e.what(), e.line());
    }
}

void write_graph(std::ostream& out, const GraphInput& g, GraphFormat format) {
    if (format == GraphFormat::dense_csv) {
        const std::size_t n = g.num_vertices();
        std::vector<char> adj(n * n, 0);
        for (auto [u, v] : g.edges()) adj[u * n + v] = adj[v * n + u] = 1;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (j > 0) out << ',';
                out << (adj[i * n + j] ? '1' : '0');
            }
            out << '\n';
        }
        return;
    }
    out << "n " << g.num_vertices() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::optional<GraphModel> parse_model(std::string_view name) {
    if (name == "erdos_renyi") return GraphModel::erdos_renyi;
    if (name == "watts_strogatz") return GraphModel::watts_strogatz;
    if (name == "barabasi_albert") return GraphModel::barabasi_albert;
    return std::nullopt;
}

const char* to_string(GraphModel model) noexcept {
    switch (model) {
        case GraphModel::erdos_renyi: return "erdos_renyi";
        case GraphModel::watts_strogatz: return "watts_strogatz";
        case GraphModel::barabasi_albert: return "barabasi_albert";
    }
    return "unknown";
}

long long round_half_even(double x) noexcept {
    return static_cast<long long>(std::nearbyint(x));  // default rounding mode is to-nearest-even
}

ProtocolRanges protocol_ranges(std::size_t n) {
    const double x = static_cast<double>(n);
    const double ln = std::log(x);
    ProtocolRanges r;
    r.p_min = 0.5 * ln / x;
    r.p_max = 1.5 * ln / x;
    r.k_max = static_cast<std::size_t>(std::max<long long>(1, round_half_even(0.5 * ln * ln)));
    r.m_max = static_cast<std::size_t>(std::max<long long>(1, round_half_even(ln * ln)));
    return r;
}

void check_protocol_ranges(const GeneratorSpec& spec) {
    if (spec.n < 10 || spec.n > 200) {
        throw std::invalid_argument("graph order " + std::to_string(spec.n) + " outside [10, 200]");
    }
    const auto r = protocol_ranges(spec.n);
    const auto check_p = [&] {
        if (spec.p < r.p_min || spec.p > r.p_max) {
            std::ostringstream msg;
            msg << "probability " << spec.p << " outside [" << r.p_min << ", " << r.p_max << "]";
            throw std::invalid_argument(msg.str());
        }
    };
    switch (spec.model) {
        case GraphModel::erdos_renyi:
            check_p();
            break;
        case GraphModel::watts_strogatz:
            if (spec.k < 1 || spec.k > r.k_max) {
                throw std::invalid_argument("k " + std::to_string(spec.k) + " outside [1, " +
                                            std::to_string(r.k_max) + "]");
            }
            check_p();
            break;
        case GraphModel::barabasi_albert:
            if (spec.m < 1 || spec.m > r.m_max) {
                throw std::invalid_argument("m " + std::to_string(spec.m) + " outside [1, " +
                                            std::to_string(r.m_max) + "]");
            }
            break;
    }
}

namespace {

class AdjacencyMatrix {
public:
    explicit AdjacencyMatrix(std::size_t n) : n_(n), bits_(n * n, 0) {}
    bool has(std::size_t u, std::size_t v) const { return bits_[u * n_ + v] != 0; }
    void set(std::size_t u, std::size_t v, bool on) {
        bits_[u * n_ + v] = bits_[v * n_ + u] = on ? 1 : 0;
    }
    std::size_t degree(std::size_t u) const {
        return static_cast<std::size_t>(
            std::count(bits_.begin() + static_cast<std::ptrdiff_t>(u * n_),
                       bits_.begin() + static_cast<std::ptrdiff_t>((u + 1) * n_), 1));
    }
    std::vector<GraphInput::Edge> edges() const {
        std::vector<GraphInput::Edge> out;
        for (std::size_t u = 0; u < n_; ++u)
            for (std::size_t v = u + 1; v < n_; ++v)
                if (has(u, v)) out.emplace_back(u, v);
        return out;
    }

private:
    std::size_t n_;
    std::vector<char> bits_;
};

GraphInput erdos_renyi(std::size_t n, double p, SplitMix64& rng) {
    std::vector<GraphInput::Edge> edges;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (rng.bernoulli(p)) edges.emplace_back(u, v);
    return GraphInput(n, std::move(edges));
}

// Ring lattice with k neighbours on each side, then each lattice edge
// (u, u + j) is rewired with probability p to a uniformly chosen new endpoint
// that is neither u nor already adjacent to u.
GraphInput watts_strogatz(std::size_t n, std::size_t k, double p, SplitMix64& rng) {
    AdjacencyMatrix adj(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t j = 1; j <= k; ++j) adj.set(u, (u + j) % n, true);

    for (std::size_t j = 1; j <= k; ++j) {
        for (std::size_t u = 0; u < n; ++u) {
            const std::size_t v = (u + j) % n;
            if (!rng.bernoulli(p)) continue;
            if (!adj.has(u, v) || adj.degree(u) >= n - 1) continue;
            std::size_t w;
            do {
                w = static_cast<std::size_t>(rng.below(n));
            } while (w == u || adj.has(u, w));
            adj.set(u, v, false);
            adj.set(u, w, true);
        }
    }
    return GraphInput(n, adj.edges());
}

// Starts from m isolated nodes; every new node attaches to m distinct earlier
// nodes drawn without replacement with weight degree + 1.
GraphInput barabasi_albert(std::size_t n, std::size_t m, SplitMix64& rng) {
    std::vector<std::uint64_t> degree(n, 0);
    std::vector<GraphInput::Edge> edges;
    std::vector<char> taken(n, 0);
    std::vector<std::size_t> targets;
    for (std::size_t v = m; v < n; ++v) {
        targets.clear();
        std::uint64_t total = 0;
        for (std::size_t u = 0; u < v; ++u) total += degree[u] + 1;
        for (std::size_t t = 0; t < m; ++t) {
            std::uint64_t r = rng.below(total);
            std::size_t u = 0;
            for (;; ++u) {
                if (taken[u]) continue;
                const auto w = degree[u] + 1;
                if (r < w) break;
                r -= w;
            }
            taken[u] = 1;
            total -= degree[u] + 1;
            targets.push_back(u);
        }
        for (auto u : targets) {
            taken[u] = 0;
            edges.emplace_back(u, v);
            ++degree[u];
            ++degree[v];
        }
    }
    return GraphInput(n, std::move(edges));
}

}  // namespace

GraphInput generate(const GeneratorSpec& spec) {
    if (spec.n == 0) throw std::invalid_argument("generate: n must be >= 1");
    SplitMix64 rng(spec.seed.value);
    switch (spec.model) {
        case GraphModel::erdos_renyi:
            if (!(spec.p >= 0.0 && spec.p <= 1.0)) throw std::invalid_argument("generate: p outside [0, 1]");
            return erdos_renyi(spec.n, spec.p, rng);
        case GraphModel::watts_strogatz:
            if (!(spec.p >= 0.0 && spec.p <= 1.0)) throw std::invalid_argument("generate: p outside [0, 1]");
            if (spec.k < 1 || 2 * spec.k >= spec.n) throw std::invalid_argument("generate: need 1 <= k and 2k < n");
            return watts_strogatz(spec.n, spec.k, spec.p, rng);
        case GraphModel::barabasi_albert:
            if (spec.m < 1 || spec.m >= spec.n) throw std::invalid_argument("generate: need 1 <= m < n");
            return barabasi_albert(spec.n, spec.m, rng);
    }
    throw std::invalid_argument("generate: unknown model");
}

GeneratorSpec sample_spec(GraphModel model, RandomSeed seed, OrderRange order) {
    SplitMix64 rng(derive_seed(seed.value, 0x5eed));
    GeneratorSpec spec;
    spec.model = model;
    spec.n = static_cast<std::size_t>(
        rng.between(static_cast<std::int64_t>(order.min), static_cast<std::int64_t>(order.max)));
    const auto r = protocol_ranges(spec.n);
    switch (model) {
        case GraphModel::erdos_renyi:
            spec.p = std::min(rng.uniform(r.p_min, r.p_max), r.p_max);
            break;
        case GraphModel::watts_strogatz:
            spec.k = static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(r.k_max)));
            spec.p = std::min(rng.uniform(r.p_min, r.p_max), r.p_max);
            break;
        case GraphModel::barabasi_albert:
            spec.m = static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(r.m_max)));
            break;
    }
    spec.seed = {derive_seed(seed.value, 0x6e4)};
    return spec;
}

}  // namespace mgh
