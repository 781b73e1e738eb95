#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>

#include "braidkit/braidsearch.hpp"
#include "braidkit/presentations.hpp"

using namespace braidkit;

namespace {

mpq_class value(const SearchResult& r, const std::vector<mpq_class>& x, const std::string& g, const std::string& h) {
    return x[static_cast<std::size_t>(r.system.unknown(g, h))];
}

// Relabels generators by perm: new index perm[i] for old index i.
PresentationSpec permuted(const PresentationSpec& s, const std::vector<int>& perm) {
    auto map_word = [&](const Word& w) {
        Word r;
        for (int g : w) r.push_back(perm[static_cast<std::size_t>(g)]);
        return r;
    };
    auto map_poly = [&](const NCPoly& p) {
        NCPoly r;
        for (const auto& [w, c] : p.terms()) r.add_term(map_word(w), c);
        return r;
    };
    PresentationSpec t = s;
    const std::size_t n = s.gens.size();
    for (std::size_t i = 0; i < n; ++i) {
        auto gi = s.gens[i];
        if (gi.star >= 0) gi.star = perm[static_cast<std::size_t>(gi.star)];
        if (gi.inverse >= 0) gi.inverse = perm[static_cast<std::size_t>(gi.inverse)];
        const auto j = static_cast<std::size_t>(perm[i]);
        t.gens[j] = gi;
        if (!s.weights.empty()) t.weights[j] = s.weights[i];
        t.counit[j] = s.counit[i];
        t.antipode[j] = map_poly(s.antipode[i]);
        t.coproduct[j].clear();
        for (const auto& c : s.coproduct[i]) t.coproduct[j].push_back({c.coeff, map_word(c.left), map_word(c.right)});
    }
    for (auto& r : t.relations) r = map_poly(r);
    return t;
}

}  // namespace

TEST_CASE("su(2) constraints contain the grouplike and lemma equations", "[braidsearch]") {
    auto P = uq_su2_classical();
    auto cs = generate_constraints(*P);
    CHECK(cs.unknowns.size() == 16);
    // eps(k,h) = 0 for every h
    auto grouplike = solve(cs.restricted({ConstraintFamily::grouplike}));
    for (const auto& h : {"e", "f", "k", "k^-1"}) {
        CHECK(sgn(grouplike.particular[static_cast<std::size_t>(cs.unknown("k", h))]) == 0);
        for (const auto& v : grouplike.basis) CHECK(sgn(v[static_cast<std::size_t>(cs.unknown("k", h))]) == 0);
    }
    auto r = braiding_search(P);
    // eps(e,e) = -eps(e,f) = -eps(f,e) = eps(f,f) spans what survives before multiplicativity
    REQUIRE(r.lemma_space.feasible);
    REQUIRE(r.lemma_space.dimension == 1);
    const auto& v = r.lemma_space.basis[0];
    mpq_class a = value(r, v, "e", "e");
    CHECK(sgn(a) != 0);
    CHECK(value(r, v, "e", "f") == -a);
    CHECK(value(r, v, "f", "e") == -a);
    CHECK(value(r, v, "f", "f") == a);
    for (const auto& [g, h] : cs.unknowns)
        if (g == "k" || h == "k" || g == "k^-1" || h == "k^-1") CHECK(sgn(value(r, v, g, h)) == 0);
}

TEST_CASE("su(2) has no braiding valid for generic phase", "[braidsearch]") {
    auto r = braiding_search(uq_su2_classical());
    REQUIRE(r.space.feasible);
    CHECK(r.space.dimension == 0);
    CHECK_FALSE(r.generic_solution);
    for (const auto& x : r.space.particular) CHECK(sgn(x) == 0);
    // the multiplicativity equations are what kill the lemma family
    CHECK_FALSE(r.obstructions.empty());
    CHECK(r.phase_period == 1);
    // a nonzero lemma family member violates the full system
    std::vector<std::string> failures;
    CHECK_FALSE(satisfies(r.system, r.lemma_space.basis[0], &failures));
    CHECK_FALSE(failures.empty());
}

TEST_CASE("hat-u(2) search returns eps = 2 delta delta", "[braidsearch]") {
    auto P = uq_hat_u2();
    auto r = braiding_search(P);
    REQUIRE(r.space.feasible);
    CHECK(r.generic_solution);
    CHECK(r.space.dimension == 0);
    const auto& x = r.space.particular;
    CHECK(value(r, x, "e", "f") == -8);
    CHECK(value(r, x, "f", "e") == -8);
    CHECK(value(r, x, "e", "e") == 8);
    CHECK(value(r, x, "f", "f") == 8);
    CHECK(x == twist_assignment(*P, r.system));
    CHECK(r.twist_solves);
    for (const auto& g : {"k", "k*", "k^-1", "k*^-1"})
        for (const auto& h : {"e", "f", "k", "k*"}) {
            CHECK(sgn(value(r, x, g, h)) == 0);
            CHECK(sgn(value(r, x, h, g)) == 0);
        }
    auto a = to_assignment(r.system, x);
    CHECK(a.at({"e", "f"}) == -8);
}

TEST_CASE("twisted presentations solve their own systems", "[braidsearch]") {
    for (const auto& P : {su_qphi2(), uq_hat_u2(), uq_u2()}) {
        INFO(P->name);
        auto r = braiding_search(P);
        CHECK(r.twist_solves);
        CHECK(r.space.feasible);
        CHECK(r.space.dimension == 0);
        CHECK(r.space.particular == r.twist);
    }
}

TEST_CASE("twist consistency and the braiding table", "[braidsearch]") {
    auto SU = su_qphi2();
    auto r = braiding_search(SU);
    CHECK(value(r, r.space.particular, "gamma", "gamma") == 8);

    auto rep = verify_twist_consistency(SU);
    CHECK(rep.pass());
    CHECK(rep.summary().count("psi-phase") == 1);

    auto U = uq_hat_u2();
    auto cross = verify_twist_consistency(U, SU);
    CHECK(cross.pass());
    bool seen = false;
    for (const auto& rec : cross.records)
        if (rec.axiom == "cross-phase" && rec.element == "e,gamma") seen = rec.pass;
    CHECK(seen);
    CHECK(cross_exponent(*U, U->info(U->index("e")).delta(), *SU, SU->info(SU->index("gamma")).delta()) == 8);

    CHECK_THROWS_AS(verify_twist_consistency(uq_su2_classical()), PreconditionError);
}

TEST_CASE("primitive line has no constraints", "[braidsearch]") {
    auto P = build_presentation(primitive_line_spec());
    auto cs = generate_constraints(*P);
    CHECK(cs.unknowns.size() == 1);
    CHECK(cs.equations.empty());
    auto s = solve(cs);
    CHECK(s.feasible);
    CHECK(s.dimension == 1);
}

TEST_CASE("constructed contradiction yields a certificate", "[braidsearch]") {
    auto cs = contradiction_system();
    auto s = solve(cs);
    CHECK_FALSE(s.feasible);
    CHECK(certificate_valid(cs, s));
    // y = (1, -1) up to scale
    REQUIRE(s.certificate.size() == 2);
    CHECK(s.certificate[0] == -s.certificate[1]);

    // a consistent duplicate is not a contradiction
    cs.equations[1].constant = 1;
    auto t = solve(cs);
    CHECK(t.feasible);
    CHECK(t.rank == 1);
    CHECK(t.particular[0] == 1);
    CHECK_FALSE(certificate_valid(cs, t));
}

TEST_CASE("exact elimination on a small system", "[braidsearch]") {
    ConstraintSystem cs;
    cs.unknowns = {{"a", "a"}, {"a", "b"}, {"b", "a"}};
    cs.equations = {{{{0, 2}, {1, 1}}, mpq_class(1), ConstraintFamily::manual, "r1"},
                    {{{1, 3}, {2, -1}}, mpq_class(1, 2), ConstraintFamily::manual, "r2"}};
    auto s = solve(cs);
    REQUIRE(s.feasible);
    CHECK(s.rank == 2);
    CHECK(s.dimension == 1);
    CHECK(satisfies(cs, s.particular));
    std::vector<mpq_class> y = s.particular;
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += 7 * s.basis[0][i];
    CHECK(satisfies(cs, y));
}

TEST_CASE("solution space is independent of generator order", "[braidsearch]") {
    for (auto spec : {uq_su2_classical_spec(), uq_hat_u2_spec()}) {
        INFO(spec.name);
        auto base = braiding_search(build_presentation(spec));
        std::vector<int> perm(spec.gens.size());
        std::iota(perm.begin(), perm.end(), 0);
        std::reverse(perm.begin(), perm.end());
        auto other = braiding_search(build_presentation(permuted(spec, perm)));
        REQUIRE(other.space.feasible == base.space.feasible);
        CHECK(other.space.dimension == base.space.dimension);
        CHECK(other.lemma_space.dimension == base.lemma_space.dimension);
        CHECK(to_assignment(other.system, other.space.particular) == to_assignment(base.system, base.space.particular));
    }
}
