// mgh: estimate modified Gromov-Hausdorff distances between graphs.
//
//   mgh estimate a.el b.el --format edge_list --seed 7
//   mgh benchmark --model barabasi_albert --count 100 --seed 1 --out ba.json
//   mgh pairwise graphs/ --format edge_list --out dist
//   mgh generate --model erdos_renyi --seed 3 --out g.el

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mgh/benchmark.hpp"
#include "mgh/estimator.hpp"
#include "mgh/graph_io.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitInput = 2;

struct CommonOptions {
    std::string format = "edge_list";
    std::uint64_t seed = 0;
    std::size_t samples_x = 0;
    std::size_t samples_y = 0;
    bool binary_search = false;
    unsigned jobs = 1;
};

mgh::EstimateOptions estimate_options(const CommonOptions& o) {
    mgh::EstimateOptions opts;
    opts.lower.binary_search = o.binary_search;
    if (o.samples_x > 0 || o.samples_y > 0) {
        // An override of one direction keeps the default for the other; the
        // default depends on the pair, so it is resolved per pair below.
        opts.budgets = mgh::SampleBudgets{mgh::SampleBudget(std::max<std::size_t>(o.samples_x, 1)),
                                          mgh::SampleBudget(std::max<std::size_t>(o.samples_y, 1))};
    }
    return opts;
}

mgh::EstimateOptions resolve_budgets(mgh::EstimateOptions opts, const CommonOptions& o,
                                     const mgh::DistanceMatrix& dx, const mgh::DistanceMatrix& dy) {
    if (opts.budgets) {
        opts.budgets = mgh::SampleBudgets{
            o.samples_x > 0 ? mgh::SampleBudget(o.samples_x) : mgh::decide_sample_size(dx.size(), dy.size()),
            o.samples_y > 0 ? mgh::SampleBudget(o.samples_y) : mgh::decide_sample_size(dy.size(), dx.size())};
    }
    return opts;
}

mgh::GraphFormat format_or_throw(const std::string& name) {
    const auto f = mgh::parse_format(name);
    if (!f) throw mgh::GraphIoError("unknown format '" + name + "'", 0);
    return *f;
}

mgh::DistanceMatrix load_space(const fs::path& path, mgh::GraphFormat format) {
    const auto read = mgh::read_graph(path, format);
    if (read.warnings() > 0) {
        std::cerr << "warning: " << path.string() << ": dropped " << read.dropped_self_loops
                  << " self-loop(s) and " << read.dropped_duplicates << " duplicate edge(s)\n";
    }
    auto metric = mgh::metric_from_graph(read.graph);
    if (metric.truncated()) {
        std::cerr << "warning: " << path.string() << ": graph is disconnected; kept the largest component ("
                  << metric.metric.size() << " of " << read.graph.num_vertices() << " vertices)\n";
    }
    return std::move(metric.metric);
}

nlohmann::json report_json(const mgh::BoundsReport& r) {
    return {{"lower", r.lower},
            {"upper", r.upper},
            {"estimate", r.estimate},
            {"relative_error", r.relative_error},
            {"utility", r.utility},
            {"baseline", r.baseline},
            {"exact", r.exact},
            {"elapsed_lower", r.elapsed_lower},
            {"elapsed_upper", r.elapsed_upper}};
}

std::string joined_args(int argc, char** argv) {
    std::string s;
    for (int i = 0; i < argc; ++i) {
        if (i > 0) s += ' ';
        s += argv[i];
    }
    return s;
}

void write_csv(const fs::path& path, const std::vector<std::string>& names,
               const std::vector<std::vector<double>>& m) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out.precision(17);
    for (const auto& name : names) out << ',' << name;
    out << '\n';
    for (std::size_t i = 0; i < names.size(); ++i) {
        out << names[i];
        for (double v : m[i]) out << ',' << v;
        out << '\n';
    }
}

fs::path with_suffix(const fs::path& base, const std::string& suffix) {
    fs::path p = base;
    p.replace_extension();
    p += suffix;
    return p;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Modified Gromov-Hausdorff distance estimation between graphs"};
    app.require_subcommand(1);

    CommonOptions common;
    std::uint64_t default_seed = 0;
    if (const char* env = std::getenv("MGH_SEED")) {
        try {
            default_seed = std::stoull(env);
        } catch (const std::exception&) {
            std::cerr << "error: MGH_SEED is not an unsigned integer\n";
            return kExitInput;
        }
    }
    common.seed = default_seed;

    const auto add_estimation_flags = [&](CLI::App* sub) {
        sub->add_option("--seed", common.seed, "random seed (default: $MGH_SEED or 0)");
        sub->add_option("--samples-x", common.samples_x, "mappings sampled X -> Y (default: ceil(sqrt|X| ln(|X|+1)))");
        sub->add_option("--samples-y", common.samples_y, "mappings sampled Y -> X");
        sub->add_flag("--binary-search-lb", common.binary_search,
                      "bisect the lower-bound thresholds (faster, possibly looser)");
    };

    // estimate
    auto* estimate = app.add_subcommand("estimate", "bounds of the mGH distance between two graphs");
    std::string file_a, file_b, output_format = "json";
    estimate->add_option("a", file_a, "first graph")->required();
    estimate->add_option("b", file_b, "second graph")->required();
    estimate->add_option("--format", common.format, "edge_list | dense_csv | sparse_coo");
    estimate->add_option("--output", output_format, "json | tsv")->check(CLI::IsMember({"json", "tsv"}));
    add_estimation_flags(estimate);

    // benchmark
    auto* benchmark = app.add_subcommand("benchmark", "synthetic-network benchmark over all graph pairs");
    std::string model_name, out_path;
    std::size_t count = 100;
    benchmark->add_option("--model", model_name, "erdos_renyi | watts_strogatz | barabasi_albert")->required();
    benchmark->add_option("--count", count, "number of graphs");
    benchmark->add_option("--out", out_path, "manifest path (JSON); a .tsv is written next to it");
    benchmark->add_option("--jobs", common.jobs, "worker threads");
    add_estimation_flags(benchmark);

    // pairwise
    auto* pairwise = app.add_subcommand("pairwise", "pairwise estimate matrices for a directory of graphs");
    std::string directory, out_prefix = "pairwise";
    pairwise->add_option("dir", directory, "directory of graph files")->required();
    pairwise->add_option("--format", common.format, "edge_list | dense_csv | sparse_coo");
    pairwise->add_option("--out", out_prefix, "output prefix; writes <prefix>_{estimate,lower,upper}.csv");
    pairwise->add_option("--jobs", common.jobs, "worker threads");
    add_estimation_flags(pairwise);

    // generate
    auto* gen = app.add_subcommand("generate", "write one synthetic graph");
    std::size_t gen_n = 0, gen_k = 0, gen_m = 0;
    double gen_p = -1.0;
    std::string gen_out;
    gen->add_option("--model", model_name, "erdos_renyi | watts_strogatz | barabasi_albert")->required();
    gen->add_option("--n", gen_n, "graph order (default: sampled with all parameters)");
    gen->add_option("--p", gen_p, "edge / rewiring probability");
    gen->add_option("--k", gen_k, "half the lattice degree (watts_strogatz)");
    gen->add_option("--m", gen_m, "edges per new node (barabasi_albert)");
    gen->add_option("--seed", common.seed, "random seed");
    gen->add_option("--format", common.format, "edge_list | dense_csv | sparse_coo");
    gen->add_option("--out", gen_out, "output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (estimate->parsed()) {
            const auto format = format_or_throw(common.format);
            const auto dx = load_space(file_a, format);
            const auto dy = load_space(file_b, format);
            const auto opts = resolve_budgets(estimate_options(common), common, dx, dy);
            const auto r = mgh::estimate_mgh(dx, dy, {common.seed}, opts);
            if (output_format == "json") {
                auto j = report_json(r);
                j["seed"] = common.seed;
                j["order_a"] = dx.size();
                j["order_b"] = dy.size();
                std::cout << j.dump(2) << '\n';
            } else {
                std::cout.precision(17);
                std::cout << "lower\tupper\testimate\trelative_error\tutility\tbaseline\texact\n"
                          << r.lower << '\t' << r.upper << '\t' << r.estimate << '\t' << r.relative_error
                          << '\t' << r.utility << '\t' << r.baseline << '\t' << (r.exact ? 1 : 0) << '\n';
            }
            return 0;
        }

        if (benchmark->parsed()) {
            const auto model = mgh::parse_model(model_name);
            if (!model) throw std::invalid_argument("unknown model '" + model_name + "'");
            if (count < 2) throw std::invalid_argument("--count must be at least 2");
            if (common.samples_x > 0 || common.samples_y > 0) {
                if (common.samples_x == 0 || common.samples_y == 0) {
                    throw std::invalid_argument("benchmark needs both --samples-x and --samples-y to override");
                }
            }
            mgh::BenchmarkConfig config;
            config.model = *model;
            config.count = count;
            config.seed = {common.seed};
            config.jobs = std::max(1u, common.jobs);
            config.estimate = estimate_options(common);
            const auto manifest = mgh::run_benchmark(config, joined_args(argc, argv));

            const auto& a = manifest.aggregates;
            std::cout << manifest.model << ": " << a.pairs << " pairs, order " << a.order.mean << " +- "
                      << a.order.stddev << ", time " << a.time.mean << "s +- " << a.time.stddev
                      << "s, exact " << a.percent_exact << "%, eta " << a.relative_error.mean << " +- "
                      << a.relative_error.stddev << ", upsilon " << a.utility.mean << " +- "
                      << a.utility.stddev << '\n';
            if (!out_path.empty()) {
                std::ofstream json_out(out_path);
                if (!json_out) throw std::runtime_error("cannot write " + out_path);
                json_out << manifest.to_json().dump(1) << '\n';
                std::ofstream tsv_out(with_suffix(out_path, ".tsv"));
                mgh::write_tsv(tsv_out, manifest);
            }
            return 0;
        }

        if (pairwise->parsed()) {
            const auto format = format_or_throw(common.format);
            std::vector<fs::path> files;
            for (const auto& entry : fs::directory_iterator(directory))
                if (entry.is_regular_file()) files.push_back(entry.path());
            std::sort(files.begin(), files.end());
            if (files.empty()) throw mgh::GraphIoError(directory + ": no graph files", 0);

            // Everything is parsed before anything is written.
            std::vector<mgh::DistanceMatrix> spaces;
            std::vector<std::string> names;
            for (const auto& f : files) {
                spaces.push_back(load_space(f, format));
                names.push_back(f.filename().string());
            }
            if (common.samples_x > 0 || common.samples_y > 0) {
                if (common.samples_x == 0 || common.samples_y == 0) {
                    throw std::invalid_argument("pairwise needs both --samples-x and --samples-y to override");
                }
            }
            const auto result = mgh::pairwise_estimates(spaces, {common.seed}, std::max(1u, common.jobs),
                                                        estimate_options(common));
            write_csv(out_prefix + "_estimate.csv", names, result.estimate);
            write_csv(out_prefix + "_lower.csv", names, result.lower);
            write_csv(out_prefix + "_upper.csv", names, result.upper);
            return 0;
        }

        if (gen->parsed()) {
            const auto model = mgh::parse_model(model_name);
            if (!model) throw std::invalid_argument("unknown model '" + model_name + "'");
            const auto format = format_or_throw(common.format);
            mgh::GeneratorSpec spec;
            if (gen_n == 0) {
                spec = mgh::sample_spec(*model, {common.seed});
            } else {
                spec.model = *model;
                spec.n = gen_n;
                spec.p = gen_p;
                spec.k = gen_k;
                spec.m = gen_m;
                spec.seed = {common.seed};
                mgh::check_protocol_ranges(spec);
            }
            const auto g = mgh::generate(spec);
            if (gen_out.empty()) {
                mgh::write_graph(std::cout, g, format);
            } else {
                std::ofstream out(gen_out);
                if (!out) throw std::runtime_error("cannot write " + gen_out);
                mgh::write_graph(out, g, format);
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return 0;
}
