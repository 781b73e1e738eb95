#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>

#include "braidkit/presentation_json.hpp"
#include "braidkit/suites.hpp"

using namespace braidkit;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int parse_sign(const std::string& s) {
    if (s == "+" || s == "+1" || s == "1") return 1;
    if (s == "-" || s == "-1") return -1;
    throw UsageError("--sign must be + or -");
}

int doubled_l(double l) {
    double t = 2 * l;
    if (!(l >= 0) || std::abs(t - std::round(t)) > 1e-12) throw UsageError("--l must be a non-negative half-integer");
    return static_cast<int>(std::lround(t));
}

json check_json(const SuiteCheck& c) {
    return {{"id", c.id}, {"anchor", c.anchor}, {"status", c.pass ? "pass" : "fail"}, {"residual", c.residual}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"braidkit: verification suites for braided quantum symmetries"};
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    bool timing = false;
    std::string presentation_path;
    app.add_option("--seed", seed, "seed for random parameter sampling")->capture_default_str();
    app.add_flag("--timing", timing, "include wall-clock time in the report");
    app.add_option("--presentation", presentation_path, "presentation file used by check hopf and search");

    // check
    auto* check = app.add_subcommand("check", "algebraic verification suites");
    check->require_subcommand(1);
    std::size_t degree = 2;
    std::string algebra, action_kind;
    std::size_t max_len = 4;
    auto* hopf = check->add_subcommand("hopf", "braided Hopf axioms");
    hopf->add_option("algebra", algebra, "su-qphi2, uq-hat-u2, uq-u2 or uq-su2");
    hopf->add_option("--degree", degree, "word degree")->capture_default_str();
    auto* pairing = check->add_subcommand("pairing", "pairing table and identities");
    pairing->add_option("--degree", degree, "word degree")->capture_default_str();
    auto* action = check->add_subcommand("action", "action tables and module algebra axioms");
    action->add_option("kind", action_kind, "left, right, adjoint or sphere")->required();
    action->add_option("--degree", degree, "word degree")->capture_default_str();
    auto* star = check->add_subcommand("star", "star compatibility of the actions");
    star->add_option("--degree", degree, "word degree")->capture_default_str();
    auto* confluence = check->add_subcommand("confluence", "local confluence of the built-in rewrite systems");
    confluence->add_option("--length", max_len, "maximal overlap length")->capture_default_str();

    // sphere
    std::string sphere_check;
    auto* sphere = app.add_subcommand("sphere", "Podles sphere checks");
    sphere->add_option("check", sphere_check, "covariance, embedding, kernel, alternate or psi-nonzero")->required();

    // rep
    std::optional<double> rep_l, rep_q;
    double rep_phi = 0, rep_psi = 0, rep_tol = 1e-10;
    std::string rep_sign = "+";
    auto* rep = app.add_subcommand("rep", "finite-dimensional representations");
    rep->add_option("--l", rep_l, "highest weight l (half-integer)");
    rep->add_option("--q", rep_q, "deformation parameter q > 0");
    rep->add_option("--phi", rep_phi, "phase phi")->capture_default_str();
    rep->add_option("--psi", rep_psi, "phase psi")->capture_default_str();
    rep->add_option("--sign", rep_sign, "sign of the raising operators, + or -")->capture_default_str();
    rep->add_option("--tol", rep_tol, "operator-norm tolerance")->capture_default_str();
    std::optional<std::uint64_t> sweep_seed;
    int samples = 20, max_two_l = 5;
    auto* sweep = rep->add_subcommand("sweep", "seeded random parameter sweep");
    sweep->add_option("--seed", sweep_seed, "seed (defaults to the global --seed)");
    sweep->add_option("--samples", samples, "samples per (l, sign)")->capture_default_str();
    sweep->add_option("--max-two-l", max_two_l, "largest 2l")->capture_default_str();
    sweep->add_option("--tol", rep_tol, "operator-norm tolerance")->capture_default_str();

    // search
    std::string search_target;
    auto* search = app.add_subcommand("search", "scalar braiding search");
    search->add_option("target", search_target, "su2 or hat-u2");

    // limit
    int steps = 8;
    auto* limit = app.add_subcommand("limit", "classical limit probe");
    limit->add_option("--steps", steps, "numeric steps")->capture_default_str();

    // witness
    double w_q = 0.5, w_psi = 0.3, w_bound = 1e6;
    int w_kmax = 10;
    auto* witness = app.add_subcommand("witness", "unbounded eigenvalue sequence");
    witness->add_option("--q", w_q, "q in (0, 1)")->capture_default_str();
    witness->add_option("--psi", w_psi, "phase psi")->capture_default_str();
    witness->add_option("--k-max", w_kmax, "last k")->capture_default_str();
    witness->add_option("--bound", w_bound, "magnitude to exceed")->capture_default_str();

    auto* all = app.add_subcommand("all", "every acceptance criterion");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    auto t0 = std::chrono::steady_clock::now();
    SuiteResult result;
    json params = json::object();
    std::string command;
    try {
        PresentationPtr custom;
        if (!presentation_path.empty()) {
            custom = load_presentation_file(presentation_path);
            params["presentation"] = presentation_path;
        }
        if (check->parsed()) {
            if (hopf->parsed()) {
                command = "check hopf";
                PresentationPtr P;
                if (custom) P = custom;
                else if (!algebra.empty()) P = named_algebra(algebra);
                else throw UsageError("check hopf needs an algebra or --presentation");
                params["algebra"] = P->name;
                params["degree"] = degree;
                result = suite_hopf(P, degree);
            } else if (pairing->parsed()) {
                command = "check pairing";
                params["degree"] = degree;
                result = suite_pairing(degree, 3);
            } else if (action->parsed()) {
                command = "check action";
                params["kind"] = action_kind;
                params["degree"] = degree;
                result = suite_action(action_kind, degree);
            } else if (star->parsed()) {
                command = "check star";
                params["degree"] = degree;
                result = suite_star(degree);
            } else {
                command = "check confluence";
                params["length"] = max_len;
                result = suite_confluence(max_len);
            }
        } else if (sphere->parsed()) {
            command = "sphere";
            params["check"] = sphere_check;
            result = suite_sphere(sphere_check);
        } else if (rep->parsed()) {
            if (!(rep_tol > 0)) throw UsageError("--tol must be positive");
            if (sweep->parsed()) {
                command = "rep sweep";
                std::uint64_t s = sweep_seed ? *sweep_seed : seed;
                if (samples < 1) throw UsageError("--samples must be positive");
                if (max_two_l < 0) throw UsageError("--max-two-l must be non-negative");
                params = {{"seed", s}, {"samples", samples}, {"max_two_l", max_two_l}, {"tol", rep_tol}};
                result = suite_rep_sweep(s, samples, max_two_l, rep_tol);
            } else {
                command = "rep";
                if (!rep_l || !rep_q) throw UsageError("rep needs --l and --q (or the sweep subcommand)");
                if (!(*rep_q > 0)) throw UsageError("--q must be positive");
                NumericContext ctx;
                ctx.q = *rep_q;
                ctx.phi = rep_phi;
                ctx.psi = rep_psi;
                RepParams p{doubled_l(*rep_l), rep_psi, parse_sign(rep_sign), ctx};
                params = {{"l", *rep_l}, {"q", *rep_q}, {"phi", rep_phi}, {"psi", rep_psi}, {"sign", p.sign}, {"tol", rep_tol}};
                result = suite_rep(p, rep_tol);
            }
        } else if (search->parsed()) {
            command = "search";
            if (custom) {
                params["target"] = custom->name;
                result = suite_search(custom, "report");
            } else {
                if (search_target.empty()) throw UsageError("search needs a target or --presentation");
                params["target"] = search_target;
                result = suite_search_named(search_target);
            }
        } else if (limit->parsed()) {
            command = "limit";
            params["steps"] = steps;
            result = suite_limit(steps);
        } else if (witness->parsed()) {
            command = "witness";
            params = {{"q", w_q}, {"psi", w_psi}, {"k_max", w_kmax}, {"bound", w_bound}};
            result = suite_witness(w_q, w_psi, w_kmax, w_bound);
        } else if (all->parsed()) {
            command = "all";
            params["seed"] = seed;
            result.name = "all";
            json criteria = json::object();
            for (int n = 1; n <= 10; ++n) {
                SuiteResult c = criterion_suite(n, seed);
                std::string key = n < 10 ? "criterion-0" + std::to_string(n) : "criterion-" + std::to_string(n);
                criteria[key] = {{"title", criterion_title(n)}, {"pass", c.pass()}};
                c.details = json::object();
                result.merge(c, key);
            }
            result.details["criteria"] = criteria;
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const SchemaError& e) {
        std::cerr << "presentation error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "presentation error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    result.sort();
    json checks = json::array();
    for (const auto& c : result.checks) checks.push_back(check_json(c));
    json report = {
        {"schema", "braidkit-report/1"},
        {"tool", {{"name", "braidkit"}, {"version", tool_version}}},
        {"suite", command},
        {"parameters", params},
        {"pass", result.pass()},
        {"summary", {{"checks", result.checks.size()}, {"failures", result.failures()}}},
        {"checks", checks},
        {"details", result.details},
    };
    if (timing) report["wall_clock_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << report.dump(2) << "\n";
    return result.pass() ? 0 : 1;
}
