#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

// BOHR_CLI_PATH is injected by the build as the absolute path of the tool.

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    const std::string cmd =
        env_prefix + "\"" + std::string(BOHR_CLI_PATH) + "\" " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t got = 0;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
    const int status = pclose(pipe);
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream stream(text);
    std::string line;
    while (std::getline(stream, line)) lines.push_back(line);
    return lines;
}

std::vector<std::string> csv_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::istringstream stream(line);
    std::string field;
    while (std::getline(stream, field, ',')) fields.push_back(field);
    return fields;
}

}  // namespace

TEST_CASE("exit codes follow the documented contract") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("radius --family nope").exit_code == 2);
    CHECK(run_cli("radius --family y --p 3").exit_code == 2);
    CHECK(run_cli("radius --family rap --a 1").exit_code == 3);
    CHECK(run_cli("figure1 --grid 10 --out /nonexistent_bohr_dir/f.csv").exit_code == 4);
    CHECK(run_cli("verify --functional majorant --trials 40 --seed 3").exit_code == 0);
    CHECK(run_cli("sharpness --functional majorant --probe-offset -0.01").exit_code == 0);
    CHECK(run_cli("multidim --theorem 2.1 --a 0.99 --margin -0.01 --lines 3 --seed 7").exit_code ==
          5);
}

TEST_CASE("bundled radii table prints csv and json") {
    struct Row {
        int k, m0, N;
        double p, root;
    };
    const Row expected[] = {
        {2, 2, 2, 0.12, 0.428676417}, {2, 4, 1, 0.6, 0.463451649}, {2, 3, 3, 0.1, 0.542709532},
        {3, 4, 1, 1.2, 0.661435909}, {3, 5, 2, 1.6, 0.781954566}, {7, 3, 1, 2.0, 0.811851376},
        {4, 5, 7, 0.19, 0.861238751}, {5, 7, 10, 1.7, 0.940732078},
    };

    const RunResult csv = run_cli("table1");
    CHECK(csv.exit_code == 0);
    const auto lines = lines_of(csv.out);
    REQUIRE(lines.size() == 9);
    CHECK(lines[0] == "k,m0,N,p,root");
    for (size_t i = 0; i < 8; ++i) {
        const auto fields = csv_fields(lines[i + 1]);
        REQUIRE(fields.size() == 5);
        CHECK(std::stoi(fields[0]) == expected[i].k);
        CHECK(std::stoi(fields[1]) == expected[i].m0);
        CHECK(std::stoi(fields[2]) == expected[i].N);
        CHECK(std::abs(std::stod(fields[3]) - expected[i].p) <= 1e-12);
        CHECK(std::abs(std::stod(fields[4]) - expected[i].root) <= 1e-5);
    }

    const RunResult as_json = run_cli("table1 --format json");
    CHECK(as_json.exit_code == 0);
    const auto rows = nlohmann::json::parse(as_json.out);
    REQUIRE(rows.size() == 8);
    for (size_t i = 0; i < 8; ++i) {
        CHECK(rows[i].at("k").get<int>() == expected[i].k);
        CHECK(rows[i].at("m0").get<int>() == expected[i].m0);
        CHECK(rows[i].at("N").get<int>() == expected[i].N);
        CHECK(std::abs(rows[i].at("p").get<double>() - expected[i].p) <= 1e-12);
        CHECK(std::abs(rows[i].at("root").get<double>() - expected[i].root) <= 1e-5);
    }
}

TEST_CASE("closed form radius report") {
    const RunResult res = run_cli("radius --family closed --which bohr-third --k 2");
    CHECK(res.exit_code == 0);
    const auto j = nlohmann::json::parse(res.out);
    CHECK(std::abs(j.at("root").get<double>() - 1.0 / std::sqrt(3.0)) <= 1e-12);
    CHECK(j.at("residual").get<double>() == 0.0);
    CHECK(j.at("bracket_width").get<double>() == 0.0);
    CHECK(j.at("unique_on_grid").get<bool>() == true);
}

TEST_CASE("default radius solve hits the known root") {
    const RunResult res = run_cli("radius --family y");
    CHECK(res.exit_code == 0);
    const auto j = nlohmann::json::parse(res.out);
    CHECK(std::abs(j.at("root").get<double>() - (std::sqrt(5.0) - 2.0)) <= 1e-9);
    CHECK(j.at("unique_on_grid").get<bool>() == true);
}

TEST_CASE("verification reports are deterministic and seedable from the environment") {
    const std::string args = "verify --functional refined-l --trials 40 --seed 9 --format json";
    const RunResult first = run_cli(args);
    CHECK(first.exit_code == 0);
    const auto j = nlohmann::json::parse(first.out);
    CHECK(j.at("trials_run").get<long>() == 40);
    CHECK(j.at("seed").get<std::uint64_t>() == 9);
    CHECK(j.at("violations").empty());
    CHECK(j.at("max_value").get<double>() <= 1.0 + 1e-9);

    CHECK(run_cli(args).out == first.out);
    const RunResult from_env =
        run_cli("verify --functional refined-l --trials 40 --format json", "BOHR_SEED=9 ");
    CHECK(from_env.out == first.out);

    const RunResult csv = run_cli("verify --functional refined-l --trials 40 --seed 9 --format csv");
    CHECK(csv.exit_code == 0);
    const auto lines = lines_of(csv.out);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "trials_run,max_value,violations,seed");
    const auto fields = csv_fields(lines[1]);
    REQUIRE(fields.size() == 4);
    CHECK(fields[0] == "40");
    CHECK(fields[2] == "0");
    CHECK(fields[3] == "9");
}

TEST_CASE("sharpness probes on both sides of the radius") {
    const RunResult above = run_cli("sharpness --functional refined-l --probe-offset 0.02");
    CHECK(above.exit_code == 0);
    const auto j = nlohmann::json::parse(above.out);
    CHECK(j.at("found").get<bool>() == true);
    CHECK(j.at("exceeded").get<bool>() == true);
    CHECK(std::abs(j.at("radius").get<double>() - 0.6) <= 1e-12);
    CHECK(j.at("functional_value").get<double>() > 1.0);

    const RunResult below = run_cli("sharpness --functional majorant --probe-offset -0.01");
    CHECK(below.exit_code == 0);
    const auto jb = nlohmann::json::parse(below.out);
    CHECK(jb.at("found").get<bool>() == false);
    CHECK(std::abs(jb.at("radius").get<double>() - 1.0 / 3.0) <= 1e-9);
}

TEST_CASE("curve sampling writes one labeled block per equation") {
    const std::string path = "/tmp/bohr_cli_fig1_test.csv";
    std::remove(path.c_str());
    const RunResult res = run_cli("figure1 --grid 40 --out " + path);
    CHECK(res.exit_code == 0);

    std::ifstream file(path);
    REQUIRE(file.good());
    std::stringstream buffer;
    buffer << file.rdbuf();
    const auto lines = lines_of(buffer.str());
    REQUIRE(lines.size() == 1 + 8 * 39);
    CHECK(lines[0] == "label,r,y");
    CHECK(lines[1].rfind("y p=0.12 k=2 N=2 m0=2,0.025,", 0) == 0);
    std::remove(path.c_str());

    const RunResult to_stdout = run_cli("figure1 --grid 5");
    CHECK(to_stdout.exit_code == 0);
    CHECK(lines_of(to_stdout.out).size() == 1 + 8 * 4);
}

TEST_CASE("line sampling subcommand reports violations above the radius") {
    const RunResult clean = run_cli("multidim --theorem 2.3 --lines 15 --seed 4");
    CHECK(clean.exit_code == 0);
    const auto j = nlohmann::json::parse(clean.out);
    CHECK(j.at("trials_run").get<long>() == 15);
    CHECK(j.at("violations").empty());

    const RunResult bad = run_cli(
        "multidim --theorem 2.1 --a 0.99 --margin -0.01 --lines 3 --seed 7 --format json");
    CHECK(bad.exit_code == 5);
    const auto jb = nlohmann::json::parse(bad.out);
    REQUIRE_FALSE(jb.at("violations").empty());
    CHECK(std::abs(jb.at("violations")[0].at("value").get<double>() - 1.0003504519517246) <= 1e-9);
    CHECK(std::abs(jb.at("radius").get<double>() - 1.0 / 3.0) <= 1e-12);

    const RunResult csv =
        run_cli("multidim --theorem majorant --lines 10 --seed 2 --format csv");
    CHECK(csv.exit_code == 0);
    const auto lines = lines_of(csv.out);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "lines,max_value,violations,seed");
    CHECK(csv_fields(lines[1]).size() == 4);
}
