#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "mgh/benchmark.hpp"

namespace {

mgh::BenchmarkConfig small_config(mgh::GraphModel model, std::size_t count, std::uint64_t seed) {
    mgh::BenchmarkConfig c;
    c.model = model;
    c.count = count;
    c.seed = {seed};
    c.order = {10, 30};
    return c;
}

}  // namespace

TEST_CASE("pair rows cover every unordered pair in order") {
    const auto m = mgh::run_benchmark(small_config(mgh::GraphModel::barabasi_albert, 6, 1));
    REQUIRE(m.rows.size() == 15);
    std::size_t index = 0;
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = i + 1; j < 6; ++j) {
            CHECK(m.rows[index].i == i);
            CHECK(m.rows[index].j == j);
            CHECK(m.rows[index].order_i == m.graphs[i].component_order);
            ++index;
        }
    CHECK(m.graphs.size() == 6);
    CHECK(m.aggregates.pairs == 15);
}

TEST_CASE("two graphs give one pair") {
    const auto m = mgh::run_benchmark(small_config(mgh::GraphModel::erdos_renyi, 2, 5));
    CHECK(m.rows.size() == 1);
    CHECK_THROWS_AS(mgh::run_benchmark(small_config(mgh::GraphModel::erdos_renyi, 1, 5)), std::invalid_argument);
}

TEST_CASE("rows are independent of thread count") {
    auto config = small_config(mgh::GraphModel::watts_strogatz, 7, 3);
    const auto serial = mgh::run_benchmark(config);
    config.jobs = 4;
    const auto parallel = mgh::run_benchmark(config);
    REQUIRE(serial.rows.size() == parallel.rows.size());
    for (std::size_t r = 0; r < serial.rows.size(); ++r) {
        CHECK(serial.rows[r].seed == parallel.rows[r].seed);
        CHECK(serial.rows[r].report.lower == parallel.rows[r].report.lower);
        CHECK(serial.rows[r].report.upper == parallel.rows[r].report.upper);
    }
}

TEST_CASE("manifest JSON round-trips and aggregates are checked on load") {
    const auto m = mgh::run_benchmark(small_config(mgh::GraphModel::erdos_renyi, 5, 9), "mgh benchmark ...");
    const auto j = m.to_json();
    const auto back = mgh::RunManifest::from_json(j);
    CHECK(back.to_json() == j);
    CHECK(back.decisions.at("sample_size_log") == "natural");

    const auto again = mgh::compute_aggregates(back.rows);
    CHECK(again.percent_exact == m.aggregates.percent_exact);
    CHECK(again.relative_error.mean == m.aggregates.relative_error.mean);

    auto tampered = j;
    tampered["aggregates"]["percent_exact"] = 101.0;
    CHECK_THROWS(mgh::RunManifest::from_json(tampered));
    tampered = j;
    tampered["rows"][0]["utility"] = 0.75;
    CHECK_THROWS(mgh::RunManifest::from_json(tampered));
}

TEST_CASE("aggregates") {
    std::vector<mgh::PairRow> rows(2);
    rows[0].order_i = 10;
    rows[0].order_j = 20;
    rows[0].report = mgh::make_report(1, 1, 0);
    rows[1].order_i = 30;
    rows[1].order_j = 30;
    rows[1].report = mgh::make_report(1, 2, 0.5);
    const auto a = mgh::compute_aggregates(rows);
    CHECK(a.order.mean == 22.5);
    CHECK(a.order.stddev == 7.5);
    CHECK(a.percent_exact == 50.0);
    CHECK(a.relative_error.mean == doctest::Approx(1.0 / 6.0));
}

TEST_CASE("TSV has one line per pair plus header") {
    const auto m = mgh::run_benchmark(small_config(mgh::GraphModel::barabasi_albert, 4, 2));
    std::ostringstream out;
    mgh::write_tsv(out, m);
    const auto text = out.str();
    CHECK(std::count(text.begin(), text.end(), '\n') == 7);
}

TEST_CASE("pairwise matrices") {
    const auto a = mgh::validate({{0, 1, 2}, {1, 0, 1}, {2, 1, 0}});
    const auto b = mgh::validate({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
    const auto r = mgh::pairwise_estimates({a, b, a}, {4}, 2);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(r.estimate[i][i] == 0.0);
        for (std::size_t j = 0; j < 3; ++j) {
            CHECK(r.estimate[i][j] == r.estimate[j][i]);
            CHECK(r.lower[i][j] <= r.upper[i][j]);
        }
    }
    CHECK(r.lower[0][2] == 0.0);
    CHECK(r.upper[0][2] == 0.0);
    CHECK(r.lower[0][1] == 0.5);
}
