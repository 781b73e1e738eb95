#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <nlohmann/json.hpp>
#include <random>
#include <string>
#include <vector>

#include "braidkit/braidsearch.hpp"
#include "braidkit/duality.hpp"
#include "braidkit/hopf.hpp"
#include "braidkit/jet.hpp"
#include "braidkit/presentations.hpp"
#include "braidkit/reps.hpp"
#include "braidkit/spheres.hpp"

namespace braidkit {

inline constexpr const char* tool_version = "0.1.0";

struct SuiteCheck {
    std::string id;
    std::string anchor;  // short name of the statement being checked
    bool pass = true;
    std::string residual;
};

struct SuiteResult {
    std::string name;
    std::vector<SuiteCheck> checks;
    nlohmann::json details = nlohmann::json::object();

    bool pass() const {
        return std::all_of(checks.begin(), checks.end(), [](const SuiteCheck& c) { return c.pass; });
    }
    std::size_t failures() const {
        return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const SuiteCheck& c) { return !c.pass; }));
    }
    void add(std::string id, std::string anchor, bool ok, std::string residual = "0") {
        checks.push_back({std::move(id), std::move(anchor), ok, ok && residual.empty() ? "0" : std::move(residual)});
    }
    // One check per axiom of the report.
    void add_report(const std::string& prefix, const std::string& anchor, const AxiomReport& rep) {
        std::map<std::string, std::vector<const CheckRecord*>> by_axiom;
        for (const auto& r : rep.records) by_axiom[r.axiom].push_back(&r);
        if (by_axiom.empty()) add(prefix, anchor, false, "no checks were generated");
        for (const auto& [axiom, recs] : by_axiom) {
            std::size_t bad = 0;
            const CheckRecord* first = nullptr;
            for (const auto* r : recs)
                if (!r->pass && !bad++) first = r;
            std::string res = std::to_string(recs.size()) + " checks, " + std::to_string(bad) + " failed";
            if (first) res += "; first " + first->element + ": " + first->residual;
            add(prefix + "/" + axiom, anchor, bad == 0, res);
        }
    }
    void merge(const SuiteResult& o, const std::string& prefix) {
        for (auto c : o.checks) {
            c.id = prefix + "/" + c.id;
            checks.push_back(std::move(c));
        }
        if (!o.details.empty()) details[prefix] = o.details;
    }
    void sort() {
        std::stable_sort(checks.begin(), checks.end(), [](const SuiteCheck& a, const SuiteCheck& b) { return a.id < b.id; });
    }
};

namespace detail {

inline std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

struct TableEntry {
    const char* h;
    const char* a;
    Scalar coeff;    // zero for a vanishing entry
    const char* to;  // generator of the result
};

inline std::vector<TableEntry> pairing_reference() {
    Scalar sm = Scalar::s(-1), sp = Scalar::s(), u2 = Scalar::u(2), um2 = Scalar::u(-2);
    return {
        {"e", "gamma*", -Scalar::q(-1) * Scalar::u(-4), ""}, {"f", "gamma", 1, ""},
        {"k", "alpha", sm * u2, ""},       {"k", "alpha*", sp * um2, ""},
        {"k*", "alpha", sm * um2, ""},     {"k*", "alpha*", sp * u2, ""},
        {"k^-1", "alpha", sp * um2, ""},   {"k^-1", "alpha*", sm * u2, ""},
        {"k*^-1", "alpha", sp * u2, ""},   {"k*^-1", "alpha*", sm * um2, ""},
    };
}

inline std::vector<TableEntry> left_action_reference() {
    Scalar sm = Scalar::s(-1), sp = Scalar::s(), u2 = Scalar::u(2), um2 = Scalar::u(-2);
    return {
        {"e", "alpha", 0, ""},
        {"e", "alpha*", 1, "gamma"},
        {"e", "gamma", 0, ""},
        {"e", "gamma*", -Scalar::q(-1) * Scalar::u(-4), "alpha"},
        {"f", "alpha", -Scalar::q() * Scalar::u(4), "gamma*"},
        {"f", "alpha*", 0, ""},
        {"f", "gamma", 1, "alpha*"},
        {"f", "gamma*", 0, ""},
        {"k", "alpha", sm * u2, "alpha"},
        {"k", "alpha*", sp * um2, "alpha*"},
        {"k", "gamma", sm * u2, "gamma"},
        {"k", "gamma*", sp * um2, "gamma*"},
        {"k*", "alpha", sm * um2, "alpha"},
        {"k*", "alpha*", sp * u2, "alpha*"},
        {"k*", "gamma", sm * um2, "gamma"},
        {"k*", "gamma*", sp * u2, "gamma*"},
        {"k^-1", "alpha", sp * um2, "alpha"},
        {"k^-1", "alpha*", sm * u2, "alpha*"},
        {"k^-1", "gamma", sp * um2, "gamma"},
        {"k^-1", "gamma*", sm * u2, "gamma*"},
        {"k*^-1", "alpha", sp * u2, "alpha"},
        {"k*^-1", "alpha*", sm * um2, "alpha*"},
        {"k*^-1", "gamma", sp * u2, "gamma"},
        {"k*^-1", "gamma*", sm * um2, "gamma*"},
    };
}

// Entries read as a <| h.
inline std::vector<TableEntry> right_action_reference() {
    Scalar sm = Scalar::s(-1), sp = Scalar::s(), u2 = Scalar::u(2), um2 = Scalar::u(-2);
    return {
        {"e", "alpha", 1, "gamma"},
        {"e", "alpha*", 0, ""},
        {"e", "gamma", 0, ""},
        {"e", "gamma*", -Scalar::q(-1) * Scalar::u(-4), "alpha*"},
        {"f", "alpha", 0, ""},
        {"f", "alpha*", -Scalar::q() * Scalar::u(4), "gamma*"},
        {"f", "gamma", 1, "alpha"},
        {"f", "gamma*", 0, ""},
        {"k", "alpha", sm * u2, "alpha"},
        {"k", "alpha*", sp * um2, "alpha*"},
        {"k", "gamma*", sm * u2, "gamma*"},
        {"k", "gamma", sp * um2, "gamma"},
        {"k*", "alpha", sm * um2, "alpha"},
        {"k*", "alpha*", sp * u2, "alpha*"},
        {"k*", "gamma*", sm * um2, "gamma*"},
        {"k*", "gamma", sp * u2, "gamma"},
        {"k^-1", "alpha", sp * um2, "alpha"},
        {"k^-1", "alpha*", sm * u2, "alpha*"},
        {"k^-1", "gamma*", sp * um2, "gamma*"},
        {"k^-1", "gamma", sm * u2, "gamma"},
        {"k*^-1", "alpha", sp * u2, "alpha"},
        {"k*^-1", "alpha*", sm * um2, "alpha*"},
        {"k*^-1", "gamma*", sp * u2, "gamma*"},
        {"k*^-1", "gamma", sm * um2, "gamma"},
    };
}

inline void add_action_table(SuiteResult& out, const std::string& prefix, const std::string& anchor, const Action& act,
                             const std::vector<TableEntry>& ref) {
    for (const auto& t : ref) {
        NCPoly got = act.act(act.H->g(t.h), act.A->g(t.a));
        NCPoly want = t.coeff.is_zero() ? NCPoly() : act.A->g(t.to) * t.coeff;
        std::string id = act.side == Side::left ? std::string(t.h) + "|>" + t.a : std::string(t.a) + "<|" + t.h;
        out.add(prefix + "/" + id, anchor, got == want, "got " + act.A->str(got) + ", expected " + act.A->str(want));
    }
}

}  // namespace detail

inline PresentationPtr named_algebra(const std::string& name) {
    if (name == "su-qphi2") return su_qphi2();
    if (name == "uq-hat-u2") return uq_hat_u2();
    if (name == "uq-u2") return uq_u2();
    if (name == "uq-su2") return uq_su2_classical();
    throw PreconditionError("unknown algebra " + name + " (expected su-qphi2, uq-hat-u2, uq-u2 or uq-su2)");
}

inline SuiteResult suite_hopf(const PresentationPtr& P, std::size_t degree) {
    SuiteResult r;
    r.name = "hopf";
    r.details["algebra"] = P->name;
    r.details["degree"] = degree;
    r.add_report("hopf/" + P->name, "braided Hopf axioms", check_braided_hopf(P, degree));
    return r;
}

inline SuiteResult suite_pairing(std::size_t degree, std::size_t relation_degree = 3) {
    SuiteResult r;
    r.name = "pairing";
    auto P = standard_pairing();
    for (const auto& t : detail::pairing_reference()) {
        Scalar got = P.pair(P.H->g(t.h), P.A->g(t.a));
        r.add(std::string("pairing/table/<") + t.h + "," + t.a + ">", "pairing on generators", got == t.coeff,
              "got " + got.str() + ", expected " + t.coeff.str());
    }
    // every other generator pair vanishes
    std::size_t nonzero = 0;
    for (std::size_t h = 0; h < P.H->size(); ++h)
        for (std::size_t a = 0; a < P.A->size(); ++a)
            if (!P.pair(NCPoly::gen(static_cast<int>(h)), NCPoly::gen(static_cast<int>(a))).is_zero()) ++nonzero;
    r.add("pairing/table/nonzero-count", "pairing on generators", nonzero == detail::pairing_reference().size(),
          std::to_string(nonzero) + " nonzero generator pairs");
    r.add_report("pairing/properties", "braided pairing identities", check_pairing_properties(P, degree, relation_degree));
    return r;
}

inline SuiteResult suite_action(const std::string& kind, std::size_t degree) {
    SuiteResult r;
    r.name = "action";
    r.details["kind"] = kind;
    auto U = uq_hat_u2();
    if (kind == "left" || kind == "right") {
        auto P = standard_pairing(U, su_qphi2());
        Action act = kind == "left" ? left_action(P) : right_action(P);
        detail::add_action_table(r, "action/" + kind + "/table", kind + " action on generators", act,
                                 kind == "left" ? detail::left_action_reference() : detail::right_action_reference());
        r.add_report("action/" + kind + "/module-algebra", "module algebra", check_module_algebra(act, degree));
    } else if (kind == "adjoint") {
        r.add_report("action/adjoint/module-algebra", "module algebra", check_module_algebra(adjoint_action(U), degree));
    } else if (kind == "sphere") {
        Action act = sphere_action(U, podles_sphere(), true);
        r.add_report("action/sphere/module-algebra", "module algebra", check_module_algebra(act, degree));
        r.add_report("action/sphere/covariance", "covariant sphere relations", check_covariance(true, degree));
    } else {
        throw PreconditionError("unknown action " + kind + " (expected left, right, adjoint or sphere)");
    }
    return r;
}

inline SuiteResult suite_star(std::size_t degree) {
    SuiteResult r;
    r.name = "star";
    auto U = uq_hat_u2();
    auto P = standard_pairing(U, su_qphi2());
    r.add_report("star/adjoint", "star compatible action", check_star_compatibility(adjoint_action(U), degree));
    r.add_report("star/left", "star compatible action", check_star_compatibility(left_action(P), degree));
    r.add_report("star/sphere", "star compatible action", check_star_compatibility(sphere_action(U, podles_sphere(), true), degree));
    r.add_report("star/phase-model", "tensor star phase identities", check_star_phase_model(StarPhaseModel{}, -4, 4));
    auto an = analyze_alpha(left_action(P), degree);
    r.add("star/alpha-zero", "free exponent alpha vanishes", an.nonzero_residuals > 0 && an.all_vanish_at_alpha_zero,
          std::to_string(an.nonzero_residuals) + " residuals with formal alpha" +
              (an.all_vanish_at_alpha_zero ? ", all vanish at alpha = 0" : ", some survive alpha = 0"));
    r.details["alpha"] = 0;
    return r;
}

inline SuiteResult suite_sphere(const std::string& which) {
    SuiteResult r;
    r.name = "sphere";
    r.details["check"] = which;
    if (which == "covariance") {
        r.add_report("sphere/covariance/psi=0", "covariant sphere relations", check_covariance(true, 2));
        r.add_report("sphere/covariance/psi!=0", "covariant sphere relations", check_covariance(false, 2));
        auto h = homogeneity_constraint_check();
        for (const auto& c : h.cases)
            r.add("sphere/homogeneity/" + std::string(c.psi_zero ? "psi=0/" : "psi!=0/") + c.candidate, "k-eigenvalue homogeneity",
                  c.k_invariant == c.expected, c.k_invariant ? "k-homogeneous" : "not k-homogeneous");
        nlohmann::json scan = nlohmann::json::object();
        for (const auto& [l, ok] : h.l_scan) {
            scan[std::to_string(l)] = ok;
            r.add("sphere/degree-scan/l=" + std::to_string(l), "degree of e1", ok == (l == 2), ok ? "covariant" : "not covariant");
        }
        r.details["degree_scan"] = scan;
        r.add_report("sphere/unprimed", "unprimed relations", unprimed_relation_check());
    } else if (which == "embedding") {
        r.add_report("sphere/embedding", "embedding into SU_{q,phi}(2)", verify_embedding());
    } else if (which == "kernel") {
        auto U = uq_hat_u2();
        r.add_report("sphere/kernel", "kernel subalgebra of kk* - 1", kernel_subalgebra_check(KernelElement::kk_star_minus_one(*U), 3));
    } else if (which == "alternate") {
        auto a = alternate_presentation_check();
        r.add_report("sphere/alternate", "alternate generators", a.report);
        r.details["conflicts"] = a.conflicts;
    } else if (which == "psi-nonzero") {
        r.add_report("sphere/psi-nonzero/star", "no star structure for psi != 0", psi_nonzero_star_obstruction());
        r.add_report("sphere/psi-nonzero/basis", "normal basis for psi != 0", psi_nonzero_normal_basis(6));
    } else {
        throw PreconditionError("unknown sphere check " + which + " (expected covariance, embedding, kernel, alternate or psi-nonzero)");
    }
    return r;
}

inline void add_rep_checks(SuiteResult& r, const std::string& prefix, const RepParams& p, double tol) {
    RepSet rep = build_rep(p);
    auto rel = check_relations(rep, tol);
    r.add(prefix + "/relations", "defining relations", rel.pass(), "max residual " + detail::sci(rel.max_residual));
    std::string res;
    bool ok = false;
    try {
        int d = commutant_dimension(rep);
        ok = d == 1;
        res = "commutant dimension " + std::to_string(d);
    } catch (const IllConditioned& e) {
        res = e.what();
    }
    r.add(prefix + "/irreducible", "commutant is scalar", ok, res);
    double sm = k_spectrum_mismatch(rep, p.psi);
    r.add(prefix + "/k-spectrum", "K spectrum", sm <= tol, "mismatch " + detail::sci(sm));
}

inline SuiteResult suite_rep(const RepParams& p, double tol = 1e-10) {
    SuiteResult r;
    r.name = "rep";
    r.details = {{"two_l", p.two_l}, {"q", p.ctx.q}, {"phi", p.ctx.phi}, {"psi", p.psi}, {"sign", p.sign}};
    add_rep_checks(r, "rep", p, tol);
    return r;
}

// Seeded samples q in [0.3, 0.95], phi, psi in [0, 2 pi) for 2l = 1..max_two_l and both signs.
inline SuiteResult suite_rep_sweep(std::uint64_t seed, int samples, int max_two_l = 5, double tol = 1e-10) {
    if (samples < 1) throw PreconditionError("samples must be positive");
    SuiteResult r;
    r.name = "rep sweep";
    r.details = {{"seed", seed}, {"samples", samples}, {"max_two_l", max_two_l}, {"tolerance", tol}};
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uq(0.3, 0.95), ua(0, 2 * std::acos(-1.0));
    for (int two_l = 1; two_l <= max_two_l; ++two_l)
        for (int sign : {1, -1}) {
            SuiteResult part;
            double worst_rel = 0, worst_spec = 0;
            int reducible = 0;
            for (int i = 0; i < samples; ++i) {
                double q = uq(rng), phi = ua(rng), psi = ua(rng);
                NumericContext ctx;
                ctx.q = q;
                ctx.phi = phi;
                ctx.psi = psi;
                RepParams p{two_l, psi, sign, ctx};
                RepSet rep = build_rep(p);
                worst_rel = std::max(worst_rel, check_relations(rep, tol).max_residual);
                worst_spec = std::max(worst_spec, k_spectrum_mismatch(rep, psi));
                try {
                    if (commutant_dimension(rep) != 1) ++reducible;
                } catch (const IllConditioned&) {
                    ++reducible;
                }
            }
            std::string prefix = "rep-sweep/2l=" + std::to_string(two_l) + (sign > 0 ? "/sign=+" : "/sign=-");
            r.add(prefix + "/relations", "defining relations", worst_rel <= tol, "max residual " + detail::sci(worst_rel));
            r.add(prefix + "/irreducible", "commutant is scalar", reducible == 0,
                  std::to_string(reducible) + " of " + std::to_string(samples) + " samples reducible or ambiguous");
            r.add(prefix + "/k-spectrum", "K spectrum", worst_spec <= tol, "max mismatch " + detail::sci(worst_spec));
        }
    return r;
}

inline nlohmann::json assignment_json(const ConstraintSystem& cs, const std::vector<mpq_class>& x) {
    nlohmann::json j = nlohmann::json::object();
    for (std::size_t i = 0; i < x.size(); ++i)
        if (sgn(x[i]) != 0) j[cs.unknowns[i].first + "," + cs.unknowns[i].second] = x[i].get_str();
    return j;
}

inline SuiteResult suite_search(const PresentationPtr& P, const std::string& expect) {
    SuiteResult r;
    r.name = "search";
    auto s = braiding_search(P);
    nlohmann::json eqs = nlohmann::json::array();
    for (const auto& e : s.system.equations)
        eqs.push_back({{"family", family_name(e.family)}, {"origin", e.origin}, {"equation", s.system.equation_str(e)}});
    r.details["presentation"] = P->name;
    r.details["unknowns"] = s.system.unknowns.size();
    r.details["equations"] = eqs;
    r.details["feasible"] = s.space.feasible;
    r.details["rank"] = s.space.rank;
    r.details["dimension"] = s.space.dimension;
    if (s.space.feasible) {
        r.details["particular"] = assignment_json(s.system, s.space.particular);
        nlohmann::json basis = nlohmann::json::array();
        for (const auto& v : s.space.basis) basis.push_back(assignment_json(s.system, v));
        r.details["basis"] = basis;
    }
    if (s.lemma_space.feasible && s.lemma_space.dimension == 1)
        r.details["without_multiplicativity"] = assignment_json(s.system, s.lemma_space.basis[0]);
    r.details["obstructions"] = s.obstructions;
    if (expect == "none") {
        r.details["conclusion"] = s.generic_solution ? "nontrivial braiding found" : "no solution for generic phi";
        r.add("search/" + P->name + "/no-generic-solution", "no scalar braiding for generic phase", s.space.feasible && !s.generic_solution,
              s.generic_solution ? "a nonzero assignment solves the system" : "only eps = 0");
        bool lemma = s.lemma_space.feasible && s.lemma_space.dimension == 1;
        if (lemma) {
            const auto& v = s.lemma_space.basis[0];
            auto at = [&](const char* g, const char* h) { return v[static_cast<std::size_t>(s.system.unknown(g, h))]; };
            lemma = sgn(at("e", "e")) != 0 && at("e", "f") == -at("e", "e") && at("f", "e") == -at("e", "e") && at("f", "f") == at("e", "e");
        }
        r.add("search/" + P->name + "/lemma-family", "eps(e,e) = -eps(e,f) = -eps(f,e) = eps(f,f)", lemma,
              "dimension " + std::to_string(s.lemma_space.dimension) + " before multiplicativity");
        if (s.phase_period > 0)
            r.details["phase_condition"] = "a nonzero family member a needs exp(i " + std::to_string(s.phase_period) + " a phi) = 1";
    } else if (expect == "twist") {
        r.details["conclusion"] = s.twist_solves && s.space.dimension == 0 ? "unique solution eps = 2 delta delta" : "see solution space";
        r.add("search/" + P->name + "/feasible", "solution exists", s.space.feasible, s.space.feasible ? "" : "infeasible");
        r.add("search/" + P->name + "/twist-solves", "eps = 2 delta delta", s.twist_solves, "2 delta delta violates the system");
        bool ef = s.space.feasible && s.space.particular[static_cast<std::size_t>(s.system.unknown("e", "f"))] == -8 &&
                  s.space.particular[static_cast<std::size_t>(s.system.unknown("e", "e"))] == 8;
        r.add("search/" + P->name + "/eps(e,f)=-8", "braiding exponents", ef,
              s.space.feasible ? "eps(e,f) = " + s.space.particular[static_cast<std::size_t>(s.system.unknown("e", "f"))].get_str() : "");
        r.add("search/" + P->name + "/family-contains-twist", "solution family", s.space.feasible && s.space.particular == s.twist,
              "dimension " + std::to_string(s.space.dimension));
    } else {
        // report only: the system must be consistent
        r.details["conclusion"] = s.generic_solution ? "nontrivial braiding found" : "only eps = 0";
        r.add("search/" + P->name + "/feasible", "solution exists", s.space.feasible,
              s.space.feasible ? "dimension " + std::to_string(s.space.dimension) : "infeasible");
    }
    return r;
}

inline SuiteResult suite_search_named(const std::string& name) {
    if (name == "su2") return suite_search(uq_su2_classical(), "none");
    if (name == "hat-u2") {
        auto r = suite_search(uq_hat_u2(), "twist");
        auto tw = verify_twist_consistency(uq_hat_u2(), su_qphi2());
        r.add_report("search/uq-hat-u2/twist-consistency", "braiding phases", tw);
        return r;
    }
    throw PreconditionError("unknown search target " + name + " (expected su2 or hat-u2)");
}

inline SuiteResult suite_limit(int steps) {
    if (steps < 2) throw PreconditionError("steps must be at least 2");
    SuiteResult r;
    r.name = "limit";
    auto rep = classical_limit_probe(steps);
    for (const auto& j : rep.jets)
        r.add("limit/jet/" + j.relation, "first-order identities", j.zeroth_order && j.first_order,
              j.zeroth_order ? "first order: " + j.first_order_raw : "zeroth order does not vanish");
    r.add("limit/fe-commutator", "[f,e] in the limit", !rep.fe_commutator.empty(), rep.fe_commutator);
    r.add("limit/phase-obstruction", "k* = k fails at phi != 0", rep.obstruction_magnitude > 1e-12, detail::sci(rep.obstruction_magnitude));
    r.add("limit/slope", "numeric approach to the limit", rep.slope >= 0.9, "slope " + detail::sci(rep.slope));
    nlohmann::json samples = nlohmann::json::array();
    for (const auto& s : rep.samples) samples.push_back({{"q", s.q}, {"phi", s.phi}, {"h", s.h_abs}, {"residual", s.residual}});
    r.details["fe_commutator"] = rep.fe_commutator;
    r.details["samples"] = samples;
    r.details["slope"] = rep.slope;
    return r;
}

inline SuiteResult suite_witness(double q = 0.5, double psi = 0.3, int k_max = 10, double bound = 1e6) {
    SuiteResult r;
    r.name = "witness";
    auto w = unbounded_eigenvalue_witness(q, psi, 1.0, k_max);
    r.details = {{"q", q}, {"psi", psi}, {"k_max", k_max}, {"magnitudes", w.magnitudes}};
    r.add("witness/strictly-increasing", "unbounded eigenvalues", w.strictly_increasing, "sequence not increasing");
    int k = w.first_k_exceeding(bound);
    r.add("witness/exceeds-bound", "unbounded eigenvalues", k >= 0 && k <= k_max,
          k >= 0 ? "exceeds " + detail::sci(bound) + " at k = " + std::to_string(k) : "bound not reached");
    return r;
}

inline std::vector<PresentationPtr> builtin_presentations() {
    return {su_qphi2(),        uq_hat_u2(),      uq_u2(),          uq_su2_classical(),
            podles_sphere(),   podles_sphere({false, 0, 0, false}), sphere_unprimed(), sphere_alternate()};
}

inline SuiteResult suite_confluence(std::size_t max_len = 4) {
    SuiteResult r;
    r.name = "confluence";
    for (const auto& P : builtin_presentations()) {
        auto fails = local_confluence_check(P->rs, max_len);
        r.add("confluence/" + P->name, "divergent overlaps", fails.empty(), std::to_string(fails.size()) + " divergent overlaps");
    }
    return r;
}

struct Criterion {
    int number;
    std::string title;
    SuiteResult result;
};

// The acceptance criteria, each as one suite. The seed drives the representation sweep.
inline SuiteResult criterion_suite(int n, std::uint64_t seed = 0) {
    SuiteResult r;
    switch (n) {
        case 1:
            for (const char* a : {"su-qphi2", "uq-hat-u2", "uq-u2"}) r.merge(suite_hopf(named_algebra(a), 3), a);
            break;
        case 2: r = suite_pairing(2, 3); break;
        case 3:
            r.merge(suite_action("left", 2), "left");
            r.merge(suite_action("right", 2), "right");
            r.merge(suite_action("adjoint", 2), "adjoint");
            break;
        case 4: r = suite_star(2); break;
        case 5:
            r.merge(suite_sphere("covariance"), "covariance");
            r.merge(suite_sphere("embedding"), "embedding");
            r.merge(suite_sphere("kernel"), "kernel");
            r.merge(suite_sphere("psi-nonzero"), "psi-nonzero");
            break;
        case 6: r = suite_rep_sweep(seed, 20, 5); break;
        case 7:
            r.merge(suite_search_named("su2"), "su2");
            r.merge(suite_search_named("hat-u2"), "hat-u2");
            break;
        case 8: r = suite_limit(8); break;
        case 9: r = suite_witness(0.5, 0.3, 10, 1e6); break;
        case 10: r = suite_confluence(4); break;
        default: throw PreconditionError("criteria are numbered 1 to 10");
    }
    r.name = "criterion " + std::to_string(n);
    r.sort();
    return r;
}

inline std::string criterion_title(int n) {
    static const char* titles[] = {"",
                                   "Hopf axioms at degree 3",
                                   "pairing table and identities",
                                   "action tables and module algebra",
                                   "star compatibility",
                                   "sphere covariance, embedding, kernel, psi != 0",
                                   "representation sweep",
                                   "braiding search",
                                   "classical limit",
                                   "unbounded eigenvalue witness",
                                   "local confluence"};
    if (n < 1 || n > 10) throw PreconditionError("criteria are numbered 1 to 10");
    return titles[n];
}

}  // namespace braidkit
