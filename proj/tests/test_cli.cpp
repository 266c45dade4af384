#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run(const std::string& args) {
    static int counter = 0;
    const fs::path dir = fs::temp_directory_path() / "groot_cli_test";
    fs::create_directories(dir);
    const fs::path out = dir / ("out" + std::to_string(counter) + ".txt");
    const fs::path err = dir / ("err" + std::to_string(counter) + ".txt");
    ++counter;
    const std::string cmd =
        std::string(GROOT_CLI_PATH) + " " + args + " > " + out.string() + " 2> " + err.string();
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

fs::path fresh_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("root command") {
    RunResult r = run("root 3,4,13 --format json");
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["leaves"] == json::parse("[-6,-2,0,0,-2,-6]"));
    CHECK(j["angles"] == json::parse("[-8,-4,-2,-4,-8]"));
    CHECK(j["sigma"] == -6);

    RunResult poincare = run("root 2,3,5");
    CHECK(poincare.code == 0);
    CHECK(poincare.out.find("leaves=[2]") != std::string::npos);

    CHECK(run("root 4,6,9").code == 2);
    CHECK(run("root 'B(2)' --format json").code == 0);
    CHECK(run("root nonsense").code == 2);
    CHECK(run("root").code == 2);
}

TEST_CASE("dot output is valid and deterministic") {
    RunResult a = run("root 2,3,7 --format dot");
    RunResult b = run("root 2,3,7 --format dot");
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.rfind("digraph", 0) == 0);
    CHECK(std::count(a.out.begin(), a.out.end(), '{') == std::count(a.out.begin(), a.out.end(), '}'));
}

TEST_CASE("subroot command") {
    RunResult r = run("subroot 'Y1(3)'");
    REQUIRE(r.code == 0);
    CHECK(r.out == "M(12,0;6,6)\n");
    RunResult closed = run("subroot 'Y1(3)' --closed-form");
    CHECK(closed.out == r.out);
    RunResult j = run("subroot 3,4,13 --format json");
    CHECK(json::parse(j.out)["params"] == json::parse("[[0,-2]]"));
}

TEST_CASE("class command") {
    RunResult r = run("class 2,3,5");
    REQUIRE(r.code == 0);
    CHECK(r.out == "1*T\n");
    RunResult rev = run("class -- -2,3,5");
    REQUIRE(rev.code == 0);
    CHECK(rev.out == "-1*T\n");
    RunResult y1 = run("class 'Y1(1)' --format json");
    json j = json::parse(y1.out);
    CHECK(j["T"] == 1);
    CHECK(j["X"]["2"] == 1);
    CHECK(j["X"]["1"] == -1);
}

TEST_CASE("kernel command and exit codes") {
    RunResult zero = run("kernel \"Y3(2) # -B(8)\" --format json");
    REQUIRE(zero.code == 0);
    json j = json::parse(zero.out);
    CHECK(j["zero"] == true);
    CHECK(j["swEquivalencePair"] == true);
    bool has_kappa = false;
    for (const auto& name : j["vanishing"]) has_kappa = has_kappa || name == "kappa";
    CHECK(has_kappa);

    RunResult four_terms = run("kernel \"Y1(1) # -B(2) # B(1) # -B(0)\" --format json");
    REQUIRE(four_terms.code == 0);
    json j4 = json::parse(four_terms.out);
    CHECK(j4["zero"] == true);
    CHECK(j4["swEquivalencePair"] == false);

    RunResult multiplied = run("kernel \"Y1(2) # -B(4) # B(2) # -2*B(0)\"");
    CHECK(multiplied.code == 0);

    RunResult nonzero = run("kernel \"B(1)\"");
    CHECK(nonzero.code == 1);
    CHECK(nonzero.out.find("X_1") != std::string::npos);

    CHECK(run("kernel \"B(1) ## B(2)\"").code == 2);
    CHECK(run("kernel \"Q(1)\"").code == 2);
}

TEST_CASE("independence and scan commands") {
    CHECK(run("independence --family paper-A --n-max 15").code == 0);
    CHECK(run("independence --family paper-B --n-max 5 --format json").code == 0);
    RunResult members = run("independence 2,3,5 2,3,11 --format json");
    CHECK(members.code == 0);
    // sigma(2,3,7) reverses to an inapplicable formula: failed check, exit 1
    RunResult bad = run("independence 2,3,5 2,3,7 --format json");
    CHECK(bad.code == 1);
    json j = json::parse(bad.out);
    CHECK(j["verdict"] == false);
    CHECK(j["checks"]["allFinite"] == false);

    CHECK(run("scan --n-max 100").code == 0);
    RunResult sj = run("scan --n-max 50 --format json");
    CHECK(json::parse(sj.out)["verdict"] == true);
}

TEST_CASE("cache behavior") {
    const fs::path dir = fresh_dir("groot_cache_test");
    const std::string flag = "--cache-dir " + dir.string();

    RunResult cold = run(flag + " root 3,4,13 --format json");
    REQUIRE(cold.code == 0);
    const fs::path entry = dir / "root_3_4_13.v1.json";
    CHECK(fs::exists(entry));

    RunResult warm = run(flag + " root 3,4,13 --format json");
    CHECK(warm.code == 0);
    CHECK(warm.out == cold.out);

    {
        std::ofstream corrupt(entry, std::ios::trunc);
        corrupt << "{not json";
    }
    RunResult recovered = run(flag + " root 3,4,13 --format json");
    CHECK(recovered.code == 0);
    CHECK(recovered.out == cold.out);

    // valid json, nonsense extrema: also ignored and recomputed
    {
        std::ofstream corrupt(entry, std::ios::trunc);
        corrupt << json{{"version", 1},
                        {"triple", {3, 4, 13}},
                        {"sigma", -6},
                        {"minima", {5, 9}},
                        {"maxima", {7}}}
                       .dump();
    }
    RunResult recovered2 = run(flag + " root 3,4,13 --format json");
    CHECK(recovered2.code == 0);
    CHECK(recovered2.out == cold.out);
}

TEST_CASE("cache directory from env var and config file") {
    const fs::path env_dir = fresh_dir("groot_cache_env");
    const std::string cmd = "GROOT_CACHE_DIR=" + env_dir.string() + " " + std::string(GROOT_CLI_PATH) +
                            " root 2,3,11 --format json > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    CHECK(WEXITSTATUS(status) == 0);
    CHECK(fs::exists(env_dir / "root_2_3_11.v1.json"));

    const fs::path cfg_dir = fresh_dir("groot_cache_cfg");
    const fs::path cfg = fs::temp_directory_path() / "groot_config.json";
    {
        std::ofstream out(cfg, std::ios::trunc);
        out << json{{"cache_dir", cfg_dir.string()}}.dump();
    }
    RunResult via_cfg = run("--config " + cfg.string() + " root 2,3,7 --format json");
    CHECK(via_cfg.code == 0);
    CHECK(fs::exists(cfg_dir / "root_2_3_7.v1.json"));
}

TEST_CASE("reproduce-paper smoke run") {
    RunResult r = run("reproduce-paper --n-pipeline 1 --n-closed-form 2");
    CHECK(r.code == 0);
    CHECK(r.out.find("all claims pass") != std::string::npos);
}
