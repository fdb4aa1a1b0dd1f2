#ifndef MGH_METRIC_HPP
#define MGH_METRIC_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mgh {

// Dense row-major n x n matrix of non-negative reals. No metric invariants are
// enforced here; it is the working representation for curvatures and raw
// input.
class SquareMatrix {
public:
    SquareMatrix() = default;
    explicit SquareMatrix(std::size_t n, double fill = 0.0)
        : n_(n), data_(n * n, fill) {}
    SquareMatrix(std::size_t n, std::vector<double> data);

    std::size_t size() const noexcept { return n_; }
    double operator()(std::size_t i, std::size_t j) const noexcept {
        return data_[i * n_ + j];
    }
    double& operator()(std::size_t i, std::size_t j) noexcept {
        return data_[i * n_ + j];
    }
    std::span<const double> row(std::size_t i) const noexcept {
        return {data_.data() + i * n_, n_};
    }
    std::span<const double> data() const noexcept { return data_; }

    // Principal submatrix on the given indices, in the given order.
    SquareMatrix principal_submatrix(std::span<const std::size_t> indices) const;

    friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<double> data_;
};

enum class MetricErrc {
    empty,
    not_square,
    asymmetric,
    negative_entry,
    nonzero_diagonal,
    zero_off_diagonal,
    non_finite,
};

const char* to_string(MetricErrc code) noexcept;

class MetricError : public std::invalid_argument {
public:
    MetricError(MetricErrc code, std::size_t row, std::size_t col);
    MetricErrc code() const noexcept { return code_; }
    std::size_t row() const noexcept { return row_; }
    std::size_t col() const noexcept { return col_; }

private:
    MetricErrc code_;
    std::size_t row_;
    std::size_t col_;
};

// Distance matrix of a finite metric space (points distinct, symmetric,
// zero diagonal, finite). Immutable after construction.
//
// When every entry is an integer the matrix additionally keeps a compact
// integer copy, which is what the histogram-based lower bound and the
// integer distortion kernel read.
class DistanceMatrix {
public:
    // Throws MetricError naming the first violated invariant.
    explicit DistanceMatrix(SquareMatrix m);

    std::size_t size() const noexcept { return m_.size(); }
    double operator()(std::size_t i, std::size_t j) const noexcept { return m_(i, j); }
    std::span<const double> row(std::size_t i) const noexcept { return m_.row(i); }
    const SquareMatrix& matrix() const noexcept { return m_; }

    double diam() const noexcept { return diam_; }
    bool is_integer() const noexcept { return is_integer_; }

    // Row-major integer entries; empty unless is_integer().
    std::span<const int> int_data() const noexcept { return ints_; }
    std::span<const int> int_row(std::size_t i) const noexcept {
        return {ints_.data() + i * size(), size()};
    }

    friend bool operator==(const DistanceMatrix& a, const DistanceMatrix& b) {
        return a.m_ == b.m_;
    }

private:
    SquareMatrix m_;
    double diam_ = 0.0;
    bool is_integer_ = false;
    std::vector<int> ints_;
};

// Checks every invariant of a raw (possibly ragged) array.
DistanceMatrix validate(const std::vector<std::vector<double>>& rows);

double diameter(const DistanceMatrix& m) noexcept;

// d-bounded square matrix of pairwise distances of a tuple of points of a
// parent space; source_indices[i] is the parent index of row i.
struct Curvature {
    SquareMatrix k;
    std::vector<std::size_t> source_indices;

    std::size_t size() const noexcept { return k.size(); }
};

Curvature full_curvature(const DistanceMatrix& m);

// Unweighted undirected simple graph. Edges are stored as (u, v) with u < v,
// sorted and unique.
class GraphInput {
public:
    using Edge = std::pair<std::size_t, std::size_t>;

    // Throws std::invalid_argument on out-of-range endpoints, self-loops or
    // duplicate edges (in either orientation).
    GraphInput(std::size_t num_vertices, std::vector<Edge> edges);

    std::size_t num_vertices() const noexcept { return n_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    friend bool operator==(const GraphInput&, const GraphInput&) = default;

private:
    std::size_t n_;
    std::vector<Edge> edges_;
};

// Drops self-loops and duplicates instead of rejecting them.
struct SanitizedGraph {
    GraphInput graph;
    std::size_t dropped_self_loops = 0;
    std::size_t dropped_duplicates = 0;
};
SanitizedGraph sanitize_graph(std::size_t num_vertices,
                              const std::vector<GraphInput::Edge>& raw_edges);

struct GraphMetric {
    DistanceMatrix metric;
    // Original vertex index of each row of metric, ascending.
    std::vector<std::size_t> vertices;
    std::size_t dropped_vertices = 0;

    bool truncated() const noexcept { return dropped_vertices > 0; }
};

// Shortest-path metric of the largest connected component (ties broken by
// the smallest minimum vertex index). Requires num_vertices >= 1.
GraphMetric metric_from_graph(const GraphInput& g);

}  // namespace mgh

#endif  // MGH_METRIC_HPP
