#include "doctest.h"

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

namespace {

struct Result {
    int code;
    std::string out;
};

// Runs the CLI through the shell; `redirect` lets a test capture stderr.
Result run(const std::string& args, const std::string& redirect = "2>/dev/null") {
    const std::string cmd = std::string(WKIT_CLI_PATH) + " " + args + " " + redirect;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Result run_env(const std::string& env, const std::string& args) {
    const std::string cmd = env + " " + std::string(WKIT_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << content;
    return path;
}

} // namespace

TEST_CASE("defect on sides") {
    const Result r = run("defect --sides 3 4 5 --format json");
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["defect_explicit"].get<double>() == doctest::Approx(50 - 24 * std::sqrt(3.0)).epsilon(1e-12));
    CHECK(j["triangle_defect"].get<double>() == doctest::Approx(8.43078).epsilon(1e-6));
    CHECK(j["equality"] == false);

    const Result e = run("defect --sides 1 1 1 --format json");
    CHECK(e.code == 0);
    CHECK(nlohmann::json::parse(e.out)["equality"] == true);

    const Result t = run("defect --sides 3 4 5");
    CHECK(t.out.find("equality") != std::string::npos);
    CHECK(t.out.find("false") != std::string::npos);
}

TEST_CASE("defect on vectors") {
    const Result r = run("defect --u 1 0 --v 0 1 --format csv");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("lhs,wedge_term,defect_intrinsic,defect_explicit,residual,equality\n4,", 0) == 0);
    CHECK(run("defect --u 1 0 --v 0 1 0").code == 2);
    CHECK(run("defect --u 1 0").code == 2);
}

TEST_CASE("invalid triangle exits with an input error") {
    const Result r = run("defect --sides 1 1 3", "2>&1");
    CHECK(r.code == 2);
    CHECK(r.out.find("triangle inequality violated") != std::string::npos);
    CHECK(run("shape --sides 1 1 3").code == 2);
    CHECK(run("nosuchcommand").code == 2);
    CHECK(run("defect --sides 1 2").code == 2);
}

TEST_CASE("sweep is deterministic and passes") {
    const Result a = run("sweep --count 1 --seed 0");
    const Result b = run("sweep --count 1 --seed 0");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);

    const Result big = run("sweep --count 100000 --seed 0 --tol 1e-9 --format json");
    CHECK(big.code == 0);
    const auto j = nlohmann::json::parse(big.out);
    CHECK(j["pass"] == true);
    CHECK(j["max_residual"].get<double>() < 1e-9);

    // JSON keys come out in a stable (sorted) order
    std::string prev;
    for (const auto& [k, v] : j.items()) {
        CHECK(prev < k);
        prev = k;
    }

    const Result threaded = run("sweep --count 5000 --seed 7 --jobs 4");
    CHECK(threaded.out == run("sweep --count 5000 --seed 7 --jobs 1").out);
}

TEST_CASE("exact sweep") {
    const Result r = run("sweep --exact --count 1000 --format json");
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["nonzero_residuals"] == 0);
    CHECK(j["count"] == 1000);
}

TEST_CASE("WKIT_TOL overrides the default tolerance") {
    const auto j = nlohmann::json::parse(run_env("WKIT_TOL=1e-6", "sweep --count 10 --format json").out);
    CHECK(j["tol"].get<double>() == 1e-6);
    CHECK(run_env("WKIT_TOL=abc", "sweep --count 10").code == 2);
    const auto k = nlohmann::json::parse(run_env("WKIT_TOL=1e-6", "sweep --count 10 --tol 1e-8 --format json").out);
    CHECK(k["tol"].get<double>() == 1e-8);
}

TEST_CASE("shape classification") {
    const auto j = nlohmann::json::parse(run("shape --sides 3 4 5 --format json").out);
    CHECK(j["x"] == 25.0);
    CHECK(j["y"].get<double>() == doctest::Approx(12.0));
    CHECK(j["class"] == "interior");
    CHECK(j["in_halfdisk"] == true);

    const auto e = nlohmann::json::parse(run("shape --sides 1 1 1 --format json").out);
    CHECK(e["x"] == 1.5);
    CHECK(e["y"].get<double>() == doctest::Approx(0.8660254037844386));
    CHECK(e["class"] == "equilateral_tangent");

    CHECK(nlohmann::json::parse(run("shape --sides 2 2 3 --format json").out)["class"] == "isosceles_limit");
}

TEST_CASE("shape figure CSV") {
    const Result r = run("shape --figure 2");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("series,x,y\n", 0) == 0);
    CHECK(r.out.find("\nT,1.5,0.8660254037844386\n") != std::string::npos);
    CHECK(r.out.find("\nomega,2,0\n") != std::string::npos);
    CHECK(r.out.find("\nboundary,") != std::string::npos);
    CHECK(r.out.find("\ntangent,") != std::string::npos);
    CHECK(r.out.find("\ncircle:") != std::string::npos);
    CHECK(run("shape --figure 0").code == 2);
}

TEST_CASE("curve on builtin circle and line") {
    const Result c = run("curve --builtin circle:2 --t 0:6.28:0.01 --format json");
    CHECK(c.code == 0);
    const auto j = nlohmann::json::parse(c.out);
    CHECK(j["samples"].size() == 629);
    CHECK(j["summary"]["max_abs_residual"].get<double>() < 1e-9);
    CHECK(j["summary"]["inequality_violations"] == 0);
    for (const auto& s : j["samples"]) CHECK(s["curvature"].get<double>() == doctest::Approx(0.5).epsilon(1e-12));

    const auto l = nlohmann::json::parse(run("curve --builtin line --t 0:1:0.1 --format json").out);
    CHECK(l["samples"].size() == 11);
    for (const auto& s : l["samples"]) {
        CHECK(s["curvature"] == 0.0);
        CHECK(s["defect"] == 2.0);
        CHECK(s["rhs_bound"] == 2.0);
    }
    CHECK(run("curve --builtin helix:1:1 --t 0:20:0.5").code == 0);
    CHECK(run("curve --builtin circle:-1").code == 2);
    CHECK(run("curve --builtin square:1").code == 2);
}

TEST_CASE("curve from a samples file") {
    std::string precise = "t,x,y,z\n";
    char buf[128];
    for (int k = 0; k <= 200; ++k) {
        const double t = 0.001 * k;
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,0\n", t, 2 * std::cos(t / 2), 2 * std::sin(t / 2));
        precise += buf;
    }
    const auto ok = temp_file("wkit_cli_circle.csv", precise);
    const Result r = run("curve --input " + ok.string() + " --format json");
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["samples"].size() == 199);
    for (const auto& s : j["samples"]) CHECK(std::abs(s["curvature"].get<double>() - 0.5) < 1e-5);

    const auto slow = temp_file("wkit_cli_slow.csv", "t,x,y,z\n0,0,0,0\n1,2,0,0\n2,4,0,0\n3,6,0,0\n");
    const Result s = run("curve --input " + slow.string(), "2>&1");
    CHECK(s.code == 2);
    CHECK(s.out.find("unit-speed violated at row 2") != std::string::npos);

    const auto bad = temp_file("wkit_cli_bad.csv", "t,x,y,z\n0,0,0,0\n1,x,0,0\n2,0,0,0\n");
    CHECK(run("curve --input " + bad.string()).code == 2);
    CHECK(run("curve --input /nonexistent/file.csv").code == 2);
}
