#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "mgh/benchmark.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
    int exit_code;
    std::string out;
};

fs::path scratch() {
    static const fs::path dir = [] {
        auto d = fs::temp_directory_path() / ("mgh_cli_test_" + std::to_string(::getpid()));
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Run run(const std::string& args, const std::string& env = {}) {
    const auto out = scratch() / "stdout.txt";
    const std::string cmd = env + " " + MGH_CLI_PATH + " " + args + " > " + out.string() + " 2> " +
                            (scratch() / "stderr.txt").string();
    const int status = std::system(cmd.c_str());
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out)};
}

void write(const fs::path& p, const std::string& text) {
    std::ofstream(p) << text;
}

std::vector<std::vector<std::string>> read_csv(const fs::path& p) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(slurp(p));
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::stringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (!line.empty() && line.back() == ',') cells.emplace_back();
        rows.push_back(cells);
    }
    return rows;
}

}  // namespace

TEST_CASE("estimate K3 vs P3") {
    write(scratch() / "k3.el", "n 3\n0 1\n1 2\n0 2\n");
    write(scratch() / "p3.el", "n 3\n0 1\n1 2\n");
    const auto r = run((scratch() / "k3.el").string() + " " + (scratch() / "p3.el").string(),
                       "");  // no subcommand: usage error
    CHECK(r.exit_code == 2);

    const auto e = run("estimate " + (scratch() / "k3.el").string() + " " + (scratch() / "p3.el").string() +
                       " --format edge_list --seed 7");
    REQUIRE(e.exit_code == 0);
    const auto j = nlohmann::json::parse(e.out);
    CHECK(j["lower"] == 0.5);
    CHECK(j["upper"] == 0.5);
    CHECK(j["exact"] == true);

    const auto other = run("estimate " + (scratch() / "k3.el").string() + " " + (scratch() / "p3.el").string() +
                           " --seed 12345 --output tsv");
    REQUIRE(other.exit_code == 0);
    CHECK(other.out.find("0.5\t0.5") != std::string::npos);

    // Default seed from the environment.
    const auto env = run("estimate " + (scratch() / "k3.el").string() + " " + (scratch() / "p3.el").string(),
                         "MGH_SEED=99");
    REQUIRE(env.exit_code == 0);
    CHECK(nlohmann::json::parse(env.out)["seed"] == 99);
}

TEST_CASE("estimate input errors exit 2") {
    CHECK(run("estimate /nonexistent/a.el /nonexistent/b.el").exit_code == 2);
    write(scratch() / "bad.el", "n 3\n0 1\n1 zz\n");
    const auto r = run("estimate " + (scratch() / "bad.el").string() + " " + (scratch() / "bad.el").string());
    CHECK(r.exit_code == 2);
    const auto err = slurp(scratch() / "stderr.txt");
    CHECK(err.find("bad.el") != std::string::npos);
    CHECK(err.find("line 3") != std::string::npos);
    CHECK(run("estimate a b --format graphml").exit_code == 2);
}

TEST_CASE("benchmark writes a reloadable manifest") {
    const auto path = scratch() / "bench.json";
    const auto r = run("benchmark --model barabasi_albert --count 3 --seed 1 --out " + path.string());
    REQUIRE(r.exit_code == 0);
    const auto m = mgh::RunManifest::from_json(nlohmann::json::parse(slurp(path)));
    CHECK(m.rows.size() == 3);
    CHECK(m.model == "barabasi_albert");
    CHECK(fs::exists(scratch() / "bench.tsv"));

    const auto two = run("benchmark --model erdos_renyi --count 2 --seed 1 --out " + path.string());
    REQUIRE(two.exit_code == 0);
    CHECK(mgh::RunManifest::from_json(nlohmann::json::parse(slurp(path))).rows.size() == 1);

    CHECK(run("benchmark --model small_world --count 3").exit_code == 2);
    CHECK(run("benchmark --model erdos_renyi --count 1").exit_code == 2);
}

TEST_CASE("pairwise matrices") {
    const auto dir = scratch() / "graphs";
    fs::create_directories(dir);
    write(dir / "a.el", "n 3\n0 1\n1 2\n");
    write(dir / "b.el", "n 3\n0 1\n1 2\n0 2\n");
    write(dir / "c.el", "n 3\n1 2\n0 1\n");  // same graph as a.el
    const auto prefix = scratch() / "pw";
    REQUIRE(run("pairwise " + dir.string() + " --out " + prefix.string() + " --seed 3").exit_code == 0);

    const auto est = read_csv(prefix.string() + "_estimate.csv");
    const auto lower = read_csv(prefix.string() + "_lower.csv");
    REQUIRE(est.size() == 4);
    CHECK(est[0] == std::vector<std::string>{"", "a.el", "b.el", "c.el"});
    for (std::size_t i = 1; i <= 3; ++i) {
        REQUIRE(est[i].size() == 4);
        CHECK(std::stod(est[i][i]) == 0.0);
        for (std::size_t j = 1; j <= 3; ++j) CHECK(est[i][j] == est[j][i]);
    }
    CHECK(std::stod(lower[1][3]) == 0.0);
    CHECK(std::stod(lower[1][2]) == 0.5);

    // A malformed file aborts without writing anything.
    const auto bad_dir = scratch() / "graphs_bad";
    fs::create_directories(bad_dir);
    write(bad_dir / "a.el", "n 3\n0 1\n");
    write(bad_dir / "b.el", "n 3\n0 9\n");
    const auto bad_prefix = scratch() / "pw_bad";
    CHECK(run("pairwise " + bad_dir.string() + " --out " + bad_prefix.string()).exit_code == 2);
    CHECK_FALSE(fs::exists(bad_prefix.string() + "_estimate.csv"));
}

TEST_CASE("generate") {
    const auto out = scratch() / "gen.el";
    REQUIRE(run("generate --model watts_strogatz --n 10 --k 2 --p 0.2 --seed 4 --out " + out.string()).exit_code == 0);
    CHECK(slurp(out).rfind("n 10\n", 0) == 0);
    REQUIRE(run("generate --model erdos_renyi --seed 4").exit_code == 0);
    CHECK(run("generate --model barabasi_albert --n 10 --m 9 --seed 4").exit_code == 2);
}
