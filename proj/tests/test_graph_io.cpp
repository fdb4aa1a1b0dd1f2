#include <doctest.h>

#include <cmath>
#include <set>
#include <sstream>

#include "mgh/graph_io.hpp"
#include "oracle.hpp"

using mgh::GraphFormat;
using mgh::GraphInput;
using mgh::GraphModel;

namespace {

mgh::GraphReadResult read(const std::string& text, GraphFormat format) {
    std::istringstream in(text);
    return mgh::read_graph(in, format);
}

std::size_t error_line(const std::string& text, GraphFormat format) {
    try {
        read(text, format);
    } catch (const mgh::GraphIoError& e) {
        return e.line();
    }
    FAIL("expected a GraphIoError");
    return 0;
}

bool is_connected_tree(const GraphInput& g) {
    return g.edges().size() + 1 == g.num_vertices() && oracle::connected(g);
}

}  // namespace

TEST_CASE("edge_list") {
    const auto r = read("n 3\n0 1\n1 2\n", GraphFormat::edge_list);
    CHECK(r.graph == GraphInput(3, {{0, 1}, {1, 2}}));
    CHECK(r.warnings() == 0);

    const auto c = read("# comment\n\nn 4   # four vertices\n0 1\n# more\n2 3\n", GraphFormat::edge_list);
    CHECK(c.graph == GraphInput(4, {{0, 1}, {2, 3}}));

    const auto loop = read("n 3\n0 1\n2 2\n", GraphFormat::edge_list);
    CHECK(loop.dropped_self_loops == 1);
    CHECK(loop.warnings() == 1);
    CHECK(loop.graph == GraphInput(3, {{0, 1}}));

    const auto dup = read("n 3\n0 1\n1 0\n", GraphFormat::edge_list);
    CHECK(dup.dropped_duplicates == 1);

    const auto isolated = read("n 5\n", GraphFormat::edge_list);
    CHECK(isolated.graph.num_vertices() == 5);
    CHECK(isolated.graph.edges().empty());
}

TEST_CASE("edge_list errors carry line numbers") {
    CHECK(error_line("n 3\n0 1\n1 x\n", GraphFormat::edge_list) == 3);
    CHECK(error_line("n 3\n0 1\n1 3\n", GraphFormat::edge_list) == 3);
    CHECK(error_line("n 3\n0 1 2\n", GraphFormat::edge_list) == 2);
    CHECK(error_line("0 1\n", GraphFormat::edge_list) == 1);
    CHECK(error_line("n 0\n", GraphFormat::edge_list) == 1);
    CHECK(error_line("n 3\n-1 2\n", GraphFormat::edge_list) == 2);
    CHECK_THROWS_AS(read("", GraphFormat::edge_list), mgh::GraphIoError);
    CHECK_THROWS_AS(read("# only a comment\n", GraphFormat::edge_list), mgh::GraphIoError);
}

TEST_CASE("dense_csv") {
    const auto r = read("0,1,1\n1,0,1\n1,1,0", GraphFormat::dense_csv);
    CHECK(r.graph == GraphInput(3, {{0, 1}, {0, 2}, {1, 2}}));

    const auto loop = read("1,1\n1,0\n", GraphFormat::dense_csv);
    CHECK(loop.dropped_self_loops == 1);

    CHECK(error_line("0,1\n1,0,0\n", GraphFormat::dense_csv) == 2);
    CHECK(error_line("0,1\n0,0\n", GraphFormat::dense_csv) == 1);
    CHECK(error_line("0,2\n2,0\n", GraphFormat::dense_csv) == 1);
    CHECK_THROWS_AS(read("", GraphFormat::dense_csv), mgh::GraphIoError);
}

TEST_CASE("sparse_coo") {
    const auto r = read("n 3\n0 1\n1 2\n", GraphFormat::sparse_coo);
    CHECK(r.graph == GraphInput(3, {{0, 1}, {1, 2}}));
    CHECK(error_line("n 3\n2 1\n", GraphFormat::sparse_coo) == 2);
}

TEST_CASE("read_graph from a missing file") {
    CHECK_THROWS_AS(mgh::read_graph(std::filesystem::path("/nonexistent/graph.el"), GraphFormat::edge_list),
                    mgh::GraphIoError);
}

TEST_CASE("write then read round-trips in every format") {
    mgh::SplitMix64 rng(21);
    for (int trial = 0; trial < 60; ++trial) {
        const auto n = static_cast<std::size_t>(rng.between(1, 40));
        const auto g = oracle::random_graph(n, rng.uniform(0.0, 0.5), rng);
        for (auto format : {GraphFormat::edge_list, GraphFormat::dense_csv, GraphFormat::sparse_coo}) {
            std::ostringstream out;
            mgh::write_graph(out, g, format);
            const auto back = read(out.str(), format);
            REQUIRE(back.graph == g);
            REQUIRE(back.warnings() == 0);
        }
    }
}

TEST_CASE("format and model names") {
    CHECK(mgh::parse_format("dense_csv") == GraphFormat::dense_csv);
    CHECK_FALSE(mgh::parse_format("graphml").has_value());
    CHECK(mgh::parse_model("watts_strogatz") == GraphModel::watts_strogatz);
    CHECK_FALSE(mgh::parse_model("random").has_value());
    CHECK(std::string(mgh::to_string(GraphModel::barabasi_albert)) == "barabasi_albert");
}

TEST_CASE("round_half_even") {
    CHECK(mgh::round_half_even(2.5) == 2);
    CHECK(mgh::round_half_even(3.5) == 4);
    CHECK(mgh::round_half_even(2.65) == 3);
    CHECK(mgh::round_half_even(5.30) == 5);
}

TEST_CASE("protocol ranges for n = 10") {
    const auto r = mgh::protocol_ranges(10);
    CHECK(r.k_max == 3);  // 0.5 ln^2 10 = 2.65
    CHECK(r.m_max == 5);  // ln^2 10 = 5.30
    CHECK(r.p_min == doctest::Approx(0.5 * std::log(10.0) / 10));
    CHECK(r.p_max == doctest::Approx(1.5 * std::log(10.0) / 10));
}

TEST_CASE("generators") {
    SUBCASE("ER with p = 0 is edgeless") {
        const auto g = mgh::generate({GraphModel::erdos_renyi, 10, 0.0, 0, 0, {1}});
        CHECK(g.num_vertices() == 10);
        CHECK(g.edges().empty());
    }
    SUBCASE("ER with p = 1 is complete") {
        const auto g = mgh::generate({GraphModel::erdos_renyi, 12, 1.0, 0, 0, {1}});
        CHECK(g.edges().size() == 66);
    }
    SUBCASE("WS without rewiring is the ring lattice") {
        const auto g = mgh::generate({GraphModel::watts_strogatz, 10, 0.0, 2, 0, {1}});
        std::vector<int> degree(10, 0);
        for (auto [u, v] : g.edges()) {
            ++degree[u];
            ++degree[v];
            const auto gap = v - u;
            CHECK((gap <= 2 || gap >= 8));
        }
        for (int d : degree) CHECK(d == 4);
    }
    SUBCASE("WS rewiring keeps the edge count and a simple graph") {
        mgh::SplitMix64 rng(4);
        for (int t = 0; t < 20; ++t) {
            const auto g = mgh::generate({GraphModel::watts_strogatz, 50, 0.3, 3, 0, {rng.next()}});
            CHECK(g.edges().size() == 150);
        }
    }
    SUBCASE("BA with m = 1 is a tree") {
        for (std::uint64_t s = 0; s < 20; ++s) {
            const auto g = mgh::generate({GraphModel::barabasi_albert, 5, 0.0, 0, 1, {s}});
            CHECK(g.edges().size() == 4);
            CHECK(is_connected_tree(g));
        }
    }
    SUBCASE("BA edge count") {
        const auto g = mgh::generate({GraphModel::barabasi_albert, 60, 0.0, 0, 3, {9}});
        CHECK(g.edges().size() == 3 * 57);
        CHECK(oracle::connected(g));
    }
    SUBCASE("invalid parameters") {
        CHECK_THROWS_AS(mgh::generate({GraphModel::erdos_renyi, 10, 1.5, 0, 0, {1}}), std::invalid_argument);
        CHECK_THROWS_AS(mgh::generate({GraphModel::watts_strogatz, 10, 0.1, 5, 0, {1}}), std::invalid_argument);
        CHECK_THROWS_AS(mgh::generate({GraphModel::barabasi_albert, 5, 0.0, 0, 5, {1}}), std::invalid_argument);
        CHECK_THROWS_AS(mgh::check_protocol_ranges({GraphModel::erdos_renyi, 10, 0.0, 0, 0, {1}}),
                        std::invalid_argument);
        CHECK_THROWS_AS(mgh::check_protocol_ranges({GraphModel::barabasi_albert, 10, 0.0, 0, 6, {1}}),
                        std::invalid_argument);
        CHECK_THROWS_AS(mgh::check_protocol_ranges({GraphModel::watts_strogatz, 300, 0.02, 1, 0, {1}}),
                        std::invalid_argument);
    }
    SUBCASE("deterministic per spec") {
        const mgh::GeneratorSpec spec{GraphModel::erdos_renyi, 80, 0.08, 0, 0, {123}};
        CHECK(mgh::generate(spec) == mgh::generate(spec));
        auto other = spec;
        other.seed = {124};
        CHECK_FALSE(mgh::generate(spec) == mgh::generate(other));
    }
}

TEST_CASE("sampled specs land inside the protocol ranges") {
    for (auto model : {GraphModel::erdos_renyi, GraphModel::watts_strogatz, GraphModel::barabasi_albert}) {
        std::size_t min_n = 1000, max_n = 0;
        for (std::uint64_t s = 0; s < 10000; ++s) {
            const auto spec = mgh::sample_spec(model, {s});
            REQUIRE_NOTHROW(mgh::check_protocol_ranges(spec));
            min_n = std::min(min_n, spec.n);
            max_n = std::max(max_n, spec.n);
        }
        CHECK(min_n == 10);
        CHECK(max_n == 200);
    }
}

TEST_CASE("sampled WS and BA parameters at n = 10 cover their integer ranges") {
    std::set<std::size_t> ks, ms;
    for (std::uint64_t s = 0; s < 500; ++s) {
        ks.insert(mgh::sample_spec(GraphModel::watts_strogatz, {s}, {10, 10}).k);
        ms.insert(mgh::sample_spec(GraphModel::barabasi_albert, {s}, {10, 10}).m);
    }
    CHECK(ks == std::set<std::size_t>{1, 2, 3});
    CHECK(ms == std::set<std::size_t>{1, 2, 3, 4, 5});
}
