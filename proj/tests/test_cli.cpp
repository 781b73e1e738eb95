#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <string>
#include <sys/wait.h>

#include "braidkit/presentation_json.hpp"
#include "braidkit/presentations.hpp"

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    const char* exe = std::getenv("BRAIDKIT_CLI");
    REQUIRE(exe != nullptr);
    std::string cmd = std::string("\"") + exe + "\" " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

nlohmann::json report(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("check hopf passes at degree 3", "[cli]") {
    auto r = run("check hopf su-qphi2 --degree 3");
    CHECK(r.code == 0);
    auto j = report(r);
    CHECK(j["schema"] == "braidkit-report/1");
    CHECK(j["tool"]["version"] == "0.1.0");
    CHECK(j["pass"] == true);
    CHECK(j["parameters"]["degree"] == 3);
    CHECK(j["summary"]["failures"] == 0);
    CHECK_FALSE(j.contains("wall_clock_seconds"));
}

TEST_CASE("search su2 reports no generic solution", "[cli]") {
    auto r = run("search su2");
    CHECK(r.code == 0);
    auto j = report(r);
    CHECK(j["details"]["conclusion"] == "no solution for generic phi");
    CHECK(j["pass"] == true);
}

TEST_CASE("search hat-u2 reports the twist", "[cli]") {
    auto r = run("search hat-u2");
    CHECK(r.code == 0);
    CHECK(report(r)["details"]["conclusion"] == "unique solution eps = 2 delta delta");
}

TEST_CASE("rep and sweep run", "[cli]") {
    auto r = run("rep --l 1 --q 0.7 --phi 0.3 --psi 1.1");
    CHECK(r.code == 0);
    CHECK(report(r)["details"]["two_l"] == 2);
    auto s = run("rep sweep --seed 5 --samples 3");
    CHECK(s.code == 0);
    CHECK(report(s)["parameters"]["seed"] == 5);
}

TEST_CASE("usage errors exit with 2", "[cli]") {
    CHECK(run("--no-such-flag check star").code == 2);
    CHECK(run("").code == 2);
    CHECK(run("check hopf not-an-algebra").code == 2);
    CHECK(run("rep --l 0.3 --q 0.7").code == 2);
    CHECK(run("rep --l 1 --q -1").code == 2);
    CHECK(run("rep --l 1 --q 0.7 --sign x").code == 2);
    CHECK(run("sphere nowhere").code == 2);
    CHECK(run("search").code == 2);
    CHECK(run("--help").code == 0);
}

TEST_CASE("reports are byte-stable", "[cli]") {
    for (const char* args : {"check pairing", "sphere covariance", "rep sweep --seed 2 --samples 2", "limit"}) {
        INFO(args);
        auto a = run(args), b = run(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
        CHECK(report(a)["checks"].is_array());
    }
}

TEST_CASE("timing adds wall clock field", "[cli]") {
    auto r = run("--timing witness");
    CHECK(r.code == 0);
    CHECK(report(r).contains("wall_clock_seconds"));
}

TEST_CASE("presentation files drive hopf and search", "[cli]") {
    auto dir = std::filesystem::temp_directory_path() / "braidkit_cli_test";
    std::filesystem::create_directories(dir);
    auto path = dir / "hat.json";
    {
        std::ofstream f(path);
        f << braidkit::to_json(*braidkit::uq_hat_u2()).dump(2);
    }
    auto h = run("--presentation " + path.string() + " check hopf --degree 2");
    CHECK(h.code == 0);
    CHECK(report(h)["parameters"]["algebra"] == "uq-hat-u2");
    auto s = run("--presentation " + path.string() + " search");
    CHECK(s.code == 0);
    CHECK(report(s)["details"]["conclusion"] == "nontrivial braiding found");

    auto bad = dir / "bad.json";
    {
        std::ofstream f(bad);
        f << "{\"schema\": 7}";
    }
    CHECK(run("--presentation " + bad.string() + " search").code == 2);
    std::filesystem::remove_all(dir);
}
