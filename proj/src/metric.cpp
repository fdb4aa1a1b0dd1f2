#include "mgh/metric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <string>

namespace mgh {

SquareMatrix::SquareMatrix(std::size_t n, std::vector<double> data)
    : n_(n), data_(std::move(data)) {
    if (data_.size() != n * n) {
        throw std::invalid_argument("SquareMatrix: data size is not n*n");
    }
}

SquareMatrix SquareMatrix::principal_submatrix(std::span<const std::size_t> indices) const {
    SquareMatrix out(indices.size());
    for (std::size_t a = 0; a < indices.size(); ++a) {
        for (std::size_t b = 0; b < indices.size(); ++b) {
            out(a, b) = (*this)(indices[a], indices[b]);
        }
    }
    return out;
}

const char* to_string(MetricErrc code) noexcept {
    switch (code) {
        case MetricErrc::empty: return "empty";
        case MetricErrc::not_square: return "not_square";
        case MetricErrc::asymmetric: return "asymmetric";
        case MetricErrc::negative_entry: return "negative_entry";
        case MetricErrc::nonzero_diagonal: return "nonzero_diagonal";
        case MetricErrc::zero_off_diagonal: return "zero_off_diagonal";
        case MetricErrc::non_finite: return "non_finite";
    }
    return "unknown";
}

MetricError::MetricError(MetricErrc code, std::size_t row, std::size_t col)
    : std::invalid_argument(std::string("invalid distance matrix: ") + to_string(code) +
                            " at (" + std::to_string(row) + ", " + std::to_string(col) + ")"),
      code_(code),
      row_(row),
      col_(col) {}

DistanceMatrix::DistanceMatrix(SquareMatrix m) : m_(std::move(m)) {
    const std::size_t n = m_.size();
    if (n == 0) throw MetricError(MetricErrc::empty, 0, 0);

    // Check order matters only for which code a multiply-broken matrix
    // reports; non-finite first so later comparisons are meaningful.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!std::isfinite(m_(i, j))) throw MetricError(MetricErrc::non_finite, i, j);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (m_(i, j) < 0.0) throw MetricError(MetricErrc::negative_entry, i, j);
    for (std::size_t i = 0; i < n; ++i)
        if (m_(i, i) != 0.0) throw MetricError(MetricErrc::nonzero_diagonal, i, i);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (m_(i, j) != m_(j, i)) throw MetricError(MetricErrc::asymmetric, i, j);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (m_(i, j) == 0.0) throw MetricError(MetricErrc::zero_off_diagonal, i, j);

    const auto data = m_.data();
    diam_ = *std::max_element(data.begin(), data.end());
    is_integer_ = std::all_of(data.begin(), data.end(), [](double v) {
        return v == std::floor(v) && v <= static_cast<double>(std::numeric_limits<int>::max());
    });
    if (is_integer_) {
        ints_.reserve(data.size());
        for (double v : data) ints_.push_back(static_cast<int>(v));
    }
}

DistanceMatrix validate(const std::vector<std::vector<double>>& rows) {
    const std::size_t n = rows.size();
    if (n == 0) throw MetricError(MetricErrc::empty, 0, 0);
    std::vector<double> data;
    data.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) throw MetricError(MetricErrc::not_square, i, rows[i].size());
        data.insert(data.end(), rows[i].begin(), rows[i].end());
    }
    return DistanceMatrix(SquareMatrix(n, std::move(data)));
}

double diameter(const DistanceMatrix& m) noexcept { return m.diam(); }

Curvature full_curvature(const DistanceMatrix& m) {
    Curvature c{m.matrix(), std::vector<std::size_t>(m.size())};
    for (std::size_t i = 0; i < m.size(); ++i) c.source_indices[i] = i;
    return c;
}

GraphInput::GraphInput(std::size_t num_vertices, std::vector<Edge> edges)
    : n_(num_vertices), edges_(std::move(edges)) {
    for (auto& [u, v] : edges_) {
        if (u >= n_ || v >= n_) {
            throw std::invalid_argument("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                        ") has an endpoint outside [0, " + std::to_string(n_) + ")");
        }
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    const auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end()) {
        throw std::invalid_argument("duplicate edge (" + std::to_string(dup->first) + ", " +
                                    std::to_string(dup->second) + ")");
    }
}

SanitizedGraph sanitize_graph(std::size_t num_vertices,
                              const std::vector<GraphInput::Edge>& raw_edges) {
    std::vector<GraphInput::Edge> edges;
    edges.reserve(raw_edges.size());
    std::size_t loops = 0;
    for (auto [u, v] : raw_edges) {
        if (u == v) {
            ++loops;
            continue;
        }
        edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(edges.begin(), edges.end());
    const auto last = std::unique(edges.begin(), edges.end());
    const auto dups = static_cast<std::size_t>(edges.end() - last);
    edges.erase(last, edges.end());
    return {GraphInput(num_vertices, std::move(edges)), loops, dups};
}

GraphMetric metric_from_graph(const GraphInput& g) {
    const std::size_t n = g.num_vertices();
    if (n == 0) throw std::invalid_argument("metric_from_graph: graph has no vertices");

    std::vector<std::vector<std::size_t>> adj(n);
    for (auto [u, v] : g.edges()) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }

    // Label components in order of their smallest vertex; a strictly larger
    // component is needed to displace an earlier one.
    constexpr auto unseen = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> component(n, unseen);
    std::size_t best_label = 0, best_size = 0, label = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (component[s] != unseen) continue;
        std::size_t count = 0;
        std::vector<std::size_t> stack{s};
        component[s] = label;
        while (!stack.empty()) {
            const auto u = stack.back();
            stack.pop_back();
            ++count;
            for (auto v : adj[u]) {
                if (component[v] == unseen) {
                    component[v] = label;
                    stack.push_back(v);
                }
            }
        }
        if (count > best_size) {
            best_size = count;
            best_label = label;
        }
        ++label;
    }

    std::vector<std::size_t> vertices;
    for (std::size_t v = 0; v < n; ++v)
        if (component[v] == best_label) vertices.push_back(v);

    const std::size_t m = vertices.size();
    SquareMatrix d(m);
    std::vector<std::size_t> dist(n);
    std::queue<std::size_t> queue;
    for (std::size_t a = 0; a < m; ++a) {
        std::fill(dist.begin(), dist.end(), unseen);
        dist[vertices[a]] = 0;
        queue.push(vertices[a]);
        while (!queue.empty()) {
            const auto u = queue.front();
            queue.pop();
            for (auto v : adj[u]) {
                if (dist[v] == unseen) {
                    dist[v] = dist[u] + 1;
                    queue.push(v);
                }
            }
        }
        for (std::size_t b = 0; b < m; ++b) d(a, b) = static_cast<double>(dist[vertices[b]]);
    }

    return {DistanceMatrix(std::move(d)), std::move(vertices), n - m};
}

}  // namespace mgh
