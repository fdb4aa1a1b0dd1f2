#include "mgh/benchmark.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <mutex>
#include <thread>

namespace mgh {

namespace {

Summary summarize(const std::vector<double>& xs) {
    Summary s;
    if (xs.empty()) return s;
    double sum = 0.0;
    for (double x : xs) sum += x;
    s.mean = sum / static_cast<double>(xs.size());
    double sq = 0.0;
    for (double x : xs) sq += (x - s.mean) * (x - s.mean);
    s.stddev = std::sqrt(sq / static_cast<double>(xs.size()));
    return s;
}

nlohmann::json to_json(const Summary& s) { return {{"mean", s.mean}, {"stddev", s.stddev}}; }

Summary summary_from_json(const nlohmann::json& j) {
    return {j.at("mean").get<double>(), j.at("stddev").get<double>()};
}

bool close(double a, double b) {
    return std::abs(a - b) <= 1e-9 * std::max({1.0, std::abs(a), std::abs(b)});
}

bool close(const Summary& a, const Summary& b) {
    return close(a.mean, b.mean) && close(a.stddev, b.stddev);
}

}  // namespace

Aggregates compute_aggregates(const std::vector<PairRow>& rows) {
    Aggregates a;
    a.pairs = rows.size();
    std::vector<double> order, time, eta, upsilon;
    std::size_t exact = 0;
    for (const auto& r : rows) {
        order.push_back(0.5 * static_cast<double>(r.order_i + r.order_j));
        time.push_back(r.report.elapsed_lower + r.report.elapsed_upper);
        eta.push_back(r.report.relative_error);
        upsilon.push_back(r.report.utility);
        if (r.report.exact) ++exact;
    }
    a.order = summarize(order);
    a.time = summarize(time);
    a.relative_error = summarize(eta);
    a.utility = summarize(upsilon);
    a.percent_exact = rows.empty() ? 0.0 : 100.0 * static_cast<double>(exact) / static_cast<double>(rows.size());
    return a;
}

std::map<std::string, std::string> run_decisions() {
    return {
        {"sample_size_log", "natural"},
        {"generator_log", "natural"},
        {"nearest_integer", "round_half_to_even"},
        {"rng", "splitmix64"},
        {"sub_seed", "splitmix64 mix of (seed, direction, sample index)"},
        {"ba_attachment", "degree+1, m isolated seed nodes"},
    };
}

nlohmann::json RunManifest::to_json() const {
    nlohmann::json j;
    j["command_line"] = command_line;
    j["seed"] = seed;
    j["version"] = version;
    j["decisions"] = decisions;
    j["model"] = model;
    j["count"] = count;

    auto& gs = j["graphs"] = nlohmann::json::array();
    for (const auto& g : graphs) {
        gs.push_back({{"n", g.spec.n},
                      {"p", g.spec.p},
                      {"k", g.spec.k},
                      {"m", g.spec.m},
                      {"seed", g.spec.seed.value},
                      {"component_order", g.component_order}});
    }

    auto& rs = j["rows"] = nlohmann::json::array();
    for (const auto& r : rows) {
        const auto& b = r.report;
        rs.push_back({{"i", r.i},
                      {"j", r.j},
                      {"order_i", r.order_i},
                      {"order_j", r.order_j},
                      {"seed", r.seed},
                      {"lower", b.lower},
                      {"upper", b.upper},
                      {"estimate", b.estimate},
                      {"relative_error", b.relative_error},
                      {"utility", b.utility},
                      {"baseline", b.baseline},
                      {"exact", b.exact},
                      {"elapsed_lower", b.elapsed_lower},
                      {"elapsed_upper", b.elapsed_upper}});
    }

    j["aggregates"] = {{"pairs", aggregates.pairs},
                       {"order", mgh::to_json(aggregates.order)},
                       {"time", mgh::to_json(aggregates.time)},
                       {"relative_error", mgh::to_json(aggregates.relative_error)},
                       {"utility", mgh::to_json(aggregates.utility)},
                       {"percent_exact", aggregates.percent_exact}};
    return j;
}

RunManifest RunManifest::from_json(const nlohmann::json& j) {
    RunManifest m;
    m.command_line = j.at("command_line").get<std::string>();
    m.seed = j.at("seed").get<std::uint64_t>();
    m.version = j.at("version").get<std::string>();
    m.decisions = j.at("decisions").get<std::map<std::string, std::string>>();
    m.model = j.at("model").get<std::string>();
    m.count = j.at("count").get<std::size_t>();
    const auto model = parse_model(m.model);
    for (const auto& g : j.at("graphs")) {
        GraphRecord rec;
        if (model) rec.spec.model = *model;
        rec.spec.n = g.at("n").get<std::size_t>();
        rec.spec.p = g.at("p").get<double>();
        rec.spec.k = g.at("k").get<std::size_t>();
        rec.spec.m = g.at("m").get<std::size_t>();
        rec.spec.seed = {g.at("seed").get<std::uint64_t>()};
        rec.component_order = g.at("component_order").get<std::size_t>();
        m.graphs.push_back(rec);
    }
    for (const auto& r : j.at("rows")) {
        PairRow row;
        row.i = r.at("i").get<std::size_t>();
        row.j = r.at("j").get<std::size_t>();
        row.order_i = r.at("order_i").get<std::size_t>();
        row.order_j = r.at("order_j").get<std::size_t>();
        row.seed = r.at("seed").get<std::uint64_t>();
        auto& b = row.report;
        b.lower = r.at("lower").get<double>();
        b.upper = r.at("upper").get<double>();
        b.estimate = r.at("estimate").get<double>();
        b.relative_error = r.at("relative_error").get<double>();
        b.utility = r.at("utility").get<double>();
        b.baseline = r.at("baseline").get<double>();
        b.exact = r.at("exact").get<bool>();
        b.elapsed_lower = r.at("elapsed_lower").get<double>();
        b.elapsed_upper = r.at("elapsed_upper").get<double>();
        m.rows.push_back(row);
    }
    const auto& a = j.at("aggregates");
    m.aggregates.pairs = a.at("pairs").get<std::size_t>();
    m.aggregates.order = summary_from_json(a.at("order"));
    m.aggregates.time = summary_from_json(a.at("time"));
    m.aggregates.relative_error = summary_from_json(a.at("relative_error"));
    m.aggregates.utility = summary_from_json(a.at("utility"));
    m.aggregates.percent_exact = a.at("percent_exact").get<double>();

    const auto expect = compute_aggregates(m.rows);
    if (expect.pairs != m.aggregates.pairs || !close(expect.order, m.aggregates.order) ||
        !close(expect.time, m.aggregates.time) ||
        !close(expect.relative_error, m.aggregates.relative_error) ||
        !close(expect.utility, m.aggregates.utility) ||
        !close(expect.percent_exact, m.aggregates.percent_exact)) {
        throw std::runtime_error("manifest aggregates do not match its rows");
    }
    return m;
}

RandomSeed pair_seed(RandomSeed run_seed, std::size_t i, std::size_t j) {
    return {derive_seed(run_seed.value, 0x9a17, i, j)};
}

void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& task) {
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) task(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> workers;
        const auto n = std::min<std::size_t>(jobs, count);
        for (std::size_t w = 0; w < n; ++w) {
            workers.emplace_back([&] {
                for (;;) {
                    const auto i = next.fetch_add(1);
                    if (i >= count || failed.load()) return;
                    try {
                        task(i);
                    } catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (!failure) failure = std::current_exception();
                        failed = true;
                    }
                }
            });
        }
    }
    if (failure) std::rethrow_exception(failure);
}

RunManifest run_benchmark(const BenchmarkConfig& config, const std::string& command_line) {
    if (config.count < 2) throw std::invalid_argument("benchmark needs at least 2 graphs");

    RunManifest manifest;
    manifest.command_line = command_line;
    manifest.seed = config.seed.value;
    manifest.decisions = run_decisions();
    manifest.model = to_string(config.model);
    manifest.count = config.count;

    std::vector<DistanceMatrix> spaces;
    spaces.reserve(config.count);
    for (std::size_t i = 0; i < config.count; ++i) {
        const RandomSeed graph_seed{derive_seed(config.seed.value, static_cast<std::uint64_t>(config.model), i)};
        const auto spec = sample_spec(config.model, graph_seed, config.order);
        auto metric = metric_from_graph(generate(spec));
        manifest.graphs.push_back({spec, metric.metric.size()});
        spaces.push_back(std::move(metric.metric));
    }

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < config.count; ++i)
        for (std::size_t j = i + 1; j < config.count; ++j) pairs.emplace_back(i, j);

    manifest.rows.resize(pairs.size());
    parallel_for(pairs.size(), config.jobs, [&](std::size_t index) {
        const auto [i, j] = pairs[index];
        PairRow row;
        row.i = i;
        row.j = j;
        row.order_i = spaces[i].size();
        row.order_j = spaces[j].size();
        const auto seed = pair_seed(config.seed, i, j);
        row.seed = seed.value;
        row.report = estimate_mgh(spaces[i], spaces[j], seed, config.estimate);
        manifest.rows[index] = row;
    });
    manifest.aggregates = compute_aggregates(manifest.rows);
    return manifest;
}

void write_tsv(std::ostream& out, const RunManifest& manifest) {
    out << "i\tj\torder_i\torder_j\tlower\tupper\testimate\trelative_error\tutility\tbaseline\texact\t"
           "elapsed_lower\telapsed_upper\n";
    const auto old_precision = out.precision(17);
    for (const auto& r : manifest.rows) {
        const auto& b = r.report;
        out << r.i << '\t' << r.j << '\t' << r.order_i << '\t' << r.order_j << '\t' << b.lower << '\t'
            << b.upper << '\t' << b.estimate << '\t' << b.relative_error << '\t' << b.utility << '\t'
            << b.baseline << '\t' << (b.exact ? 1 : 0) << '\t' << b.elapsed_lower << '\t'
            << b.elapsed_upper << '\n';
    }
    out.precision(old_precision);
}

PairwiseResult pairwise_estimates(const std::vector<DistanceMatrix>& spaces, RandomSeed seed,
                                  unsigned jobs, const EstimateOptions& options) {
    const std::size_t n = spaces.size();
    PairwiseResult out;
    out.estimate.assign(n, std::vector<double>(n, 0.0));
    out.lower = out.estimate;
    out.upper = out.estimate;

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

    std::vector<BoundsReport> reports(pairs.size());
    parallel_for(pairs.size(), jobs, [&](std::size_t index) {
        const auto [i, j] = pairs[index];
        reports[index] = estimate_mgh(spaces[i], spaces[j], pair_seed(seed, i, j), options);
    });
    for (std::size_t index = 0; index < pairs.size(); ++index) {
        const auto [i, j] = pairs[index];
        const auto& r = reports[index];
        out.estimate[i][j] = out.estimate[j][i] = r.estimate;
        out.lower[i][j] = out.lower[j][i] = r.lower;
        out.upper[i][j] = out.upper[j][i] = r.upper;
    }
    return out;
}

}  // namespace mgh
