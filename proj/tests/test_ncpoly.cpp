#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "braidkit/presentations.hpp"

using namespace braidkit;

namespace {

NCPoly random_poly(std::mt19937_64& rng, const Presentation& p, int terms, int max_len) {
    std::uniform_int_distribution<int> len(0, max_len), gen(0, static_cast<int>(p.size()) - 1), coef(-3, 3), ex(-2, 2);
    NCPoly r;
    for (int t = 0; t < terms; ++t) {
        Word w;
        int n = len(rng);
        for (int i = 0; i < n; ++i) w.push_back(gen(rng));
        Scalar c = Scalar(GaussQ(coef(rng), coef(rng))) * Scalar::s(ex(rng)) * Scalar::u(ex(rng));
        r.add_term(w, c);
    }
    return r;
}

}  // namespace

TEST_CASE("multiply and normal form in SU_{q,phi}(2)", "[ncpoly]") {
    auto su = su_qphi2();
    NCPoly a = su->g("alpha"), as = su->g("alpha*"), c = su->g("gamma"), cs = su->g("gamma*");
    CHECK(su->mul(c, a) == Scalar::q(-1) * Scalar::u(-4) * (a * c));
    CHECK(su->mul(NCPoly(1), a) == a);
    CHECK(su->mul(as, a) == NCPoly(1) - c * cs);
    CHECK(su->nf(as * a + c * cs - NCPoly(1)).is_zero());
    // normal form is idempotent
    std::mt19937_64 rng(3);
    for (int n = 0; n < 10; ++n) {
        NCPoly p = random_poly(rng, *su, 4, 4);
        NCPoly f = su->nf(p);
        CHECK(su->nf(f) == f);
    }
}

TEST_CASE("normal form in U_{q,phi}(u-hat(2))", "[ncpoly]") {
    auto U = uq_hat_u2();
    NCPoly e = U->g("e"), f = U->g("f"), k = U->g("k"), ki = U->g("k^-1"), ks = U->g("k*"), ksi = U->g("k*^-1");
    NCPoly rel = e * f - f * e - (k * ks - ki * ksi) * (Scalar::q(-1) - Scalar::q()).inv();
    CHECK(U->nf(rel).is_zero());
    CHECK(U->mul(k, ki) == NCPoly(1));
    CHECK(U->nf(e * k - Scalar::q() * Scalar::u(-4) * (k * e)).is_zero());
}

TEST_CASE("star is an involutive anti-automorphism", "[ncpoly]") {
    auto su = su_qphi2();
    auto U = uq_hat_u2();
    NCPoly a = su->g("alpha"), c = su->g("gamma");
    CHECK(star(a * c, su->gens) == su->g("gamma*") * su->g("alpha*"));
    CHECK(star(Scalar::q() * Scalar::u(4) * U->g("e"), U->gens) == Scalar::q() * Scalar::u(-4) * U->g("f"));
    std::mt19937_64 rng(5);
    for (int n = 0; n < 20; ++n) {
        NCPoly p = random_poly(rng, *su, 4, 3), r = random_poly(rng, *su, 3, 3);
        CHECK(star(star(p, su->gens), su->gens) == p);
        CHECK(star(p * r, su->gens) == star(r, su->gens) * star(p, su->gens));
    }
}

TEST_CASE("delta degrees", "[ncpoly]") {
    auto su = su_qphi2();
    auto U = uq_hat_u2();
    CHECK(delta_degree(su->g("gamma"), su->gens) == -2);
    CHECK(delta_degree(U->g("e"), U->gens) == -2);
    CHECK(delta_degree(su->g("alpha") * su->g("alpha*"), su->gens) == 0);
    CHECK_THROWS_AS(delta_degree(su->g("gamma") + su->g("alpha"), su->gens), Inhomogeneous);
    // normal form preserves delta on homogeneous input
    std::mt19937_64 rng(9);
    for (int n = 0; n < 20; ++n) {
        NCPoly p = random_poly(rng, *su, 5, 4);
        for (const auto& [d, comp] : delta_components(p, su->gens)) {
            NCPoly f = su->nf(comp);
            if (!f.is_zero()) CHECK(delta_degree(f, su->gens) == d);
        }
    }
}

TEST_CASE("star maps relations into the ideal", "[ncpoly]") {
    for (auto p : {su_qphi2(), uq_hat_u2(), uq_u2(), uq_su2_classical(), podles_sphere()}) {
        for (const auto& r : p->closed_relations) CHECK(p->nf(star(p->nf(r), p->gens)).is_zero());
    }
}

TEST_CASE("local confluence of built-in systems", "[ncpoly]") {
    for (auto p : {su_qphi2(), uq_hat_u2(), uq_u2(), uq_su2_classical(), podles_sphere(),
                   podles_sphere({false, 0, 0, false}), sphere_unprimed(), sphere_alternate()}) {
        INFO(p->name);
        CHECK(local_confluence_check(p->rs, 4).empty());
    }
}

TEST_CASE("an incomplete system is detected", "[ncpoly]") {
    auto su = su_qphi2();
    int c = su->index("gamma"), cs = su->index("gamma*");
    std::vector<Rule> rules;
    for (const auto& r : su->rs.rules())
        if (r.lhs != Word{cs, c}) rules.push_back(r);
    REQUIRE(rules.size() + 1 == su->rs.rules().size());
    RewriteSystem broken(su->rs.order(), rules);
    auto failures = local_confluence_check(broken, 4);
    REQUIRE(!failures.empty());
    bool involves_gamma_pair = false;
    for (const auto& f : failures) {
        NCPoly diff = f.left - f.right;
        for (const auto& [w, co] : diff.terms())
            for (std::size_t i = 0; i + 1 < w.size(); ++i)
                if (w[i] == cs && w[i + 1] == c) involves_gamma_pair = true;
    }
    CHECK(involves_gamma_pair);
}

TEST_CASE("rule orientation is validated and budgets are enforced", "[ncpoly]") {
    MonomialOrder o{{1, 1}};
    CHECK_THROWS_AS(RewriteSystem(o, {Rule{{0, 1}, NCPoly::word({1, 0})}}), ValidationError);
    // a cycle disguised by a tiny budget
    RewriteSystem rs(o, {Rule{{1, 0}, NCPoly::word({0, 1})}}, 3);
    Word big(12, 1);
    big.insert(big.end(), 12, 0);
    CHECK_THROWS_AS(rs.normal_form(NCPoly::word(big)), NonTermination);
}

TEST_CASE("completion derives the ascending sphere rule", "[ncpoly]") {
    auto sp = podles_sphere();
    int e1 = sp->index("e1'"), e0 = sp->index("e0"), em1 = sp->index("em1'");
    Scalar q2 = Scalar::q(2), one_q2 = 1 + q2;
    Scalar lam = Scalar::param("lambda"), rho = Scalar::param("rho");
    NCPoly expected = (NCPoly::word({e0}, lam) + NCPoly(q2 * rho) - NCPoly::word({e0, e0}, one_q2)) * (q2 * one_q2).inv();
    CHECK(sp->word_nf({e1, em1}) == expected);
    CHECK(sp->word_nf({e0, e1}) == NCPoly::word({e1, e0}, q2) + NCPoly::word({e1}, lam / one_q2));
}
