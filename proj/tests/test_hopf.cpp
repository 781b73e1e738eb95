#include <catch2/catch_amalgamated.hpp>

#include "braidkit/hopf.hpp"
#include "braidkit/presentations.hpp"

using namespace braidkit;

namespace {

TensorPoly t2(const PresentationPtr& P, const NCPoly& a, const NCPoly& b) { return TensorPoly::simple({P, P}, {a, b}); }

}  // namespace

TEST_CASE("coproduct on SU_{q,phi}(2) and U_{q,phi}(u-hat(2))", "[hopf]") {
    auto su = su_qphi2();
    NCPoly a = su->g("alpha"), c = su->g("gamma"), cs = su->g("gamma*");
    CHECK(coproduct(su, a) == t2(su, a, a) - t2(su, cs, c) * (Scalar::q() * Scalar::u(-4)));
    CHECK(coproduct(su, NCPoly(1)) == t2(su, 1, 1));

    auto U = uq_hat_u2();
    NCPoly e = U->g("e"), k = U->g("k"), ki = U->g("k^-1"), ks = U->g("k*");
    NCPoly kks = U->mul(k, ks);
    CHECK(coproduct(U, kks) == t2(U, kks, kks));
    CHECK(coproduct(U, e) == t2(U, e, k) + t2(U, ki, e));
}

TEST_CASE("counit and antipode", "[hopf]") {
    auto su = su_qphi2();
    NCPoly c = su->g("gamma");
    CHECK(antipode(*su, c) == -Scalar::q() * Scalar::u(4) * c);
    CHECK(antipode(*su, su->mul(c, c)) == Scalar::q(2) * Scalar::u(16) * su->mul(c, c));
    CHECK(counit(*su, su->g("alpha*")) == Scalar(1));

    auto U = uq_hat_u2();
    CHECK(counit(*U, U->g("e") * U->g("f")).is_zero());
    CHECK(antipode(*U, U->g("k") * U->g("k^-1")) == NCPoly(1));
    CHECK(antipode(*U, U->g("e")) == -Scalar::q(-1) * Scalar::u(4) * U->g("e"));

    // m(S (x) id) Delta(alpha) = alpha* alpha + gamma gamma* reduced = 1
    auto S = [&](const Word& w) { return antipode_word(*su, w); };
    CHECK(multiply_tensor(map_slot(coproduct(su, su->g("alpha")), 0, su, S)) == NCPoly(1));
}

TEST_CASE("coassociativity on e", "[hopf]") {
    auto U = uq_hat_u2();
    NCPoly e = U->g("e"), k = U->g("k"), ki = U->g("k^-1");
    auto d = [&](const Word& w) { return coproduct_word(U, w); };
    TensorPoly left = expand_slot(coproduct(U, e), 0, {U, U}, d);
    TensorPoly right = expand_slot(coproduct(U, e), 1, {U, U}, d);
    TensorPoly expected = TensorPoly::simple({U, U, U}, {e, k, k}) + TensorPoly::simple({U, U, U}, {ki, e, k}) +
                          TensorPoly::simple({U, U, U}, {ki, ki, e});
    CHECK(left == expected);
    CHECK(right == expected);
}

TEST_CASE("braiding phases", "[hopf]") {
    auto U = uq_hat_u2();
    auto su = su_qphi2();
    NCPoly e = U->g("e"), f = U->g("f"), k = U->g("k"), c = su->g("gamma");
    CHECK(braid_psi(U, e, f) == t2(U, f, e) * Scalar::u(-8));
    CHECK(braid_psi(su, c, c) == t2(su, c, c) * Scalar::u(8));
    CHECK(braid_psi(U, k, e * f + e) == t2(U, e * f + e, k));
    // inverse
    TensorPoly x = braid_psi(U, e, f + e);
    CHECK(braid_slots(x, 0, true) == t2(U, e, f + e));
    // flip at phi = 0
    auto U0 = substitute_phase_one(*U);
    CHECK(braid_psi(U0, U0->g("e"), U0->g("f")) == t2(U0, U0->g("f"), U0->g("e")));
}

TEST_CASE("twisting reproduces the braided presentations", "[hopf]") {
    for (auto P : {su_qphi2(), uq_hat_u2(), uq_u2()}) {
        INFO(P->name);
        auto src = substitute_phase_one(*P);
        auto tw = twist(*src);
        REQUIRE(tw->rs.rules().size() == P->rs.rules().size());
        for (std::size_t i = 0; i < P->rs.rules().size(); ++i) {
            CHECK(tw->rs.rules()[i].lhs == P->rs.rules()[i].lhs);
            CHECK(tw->rs.rules()[i].rhs == P->rs.rules()[i].rhs);
        }
        for (int g = 0; g < static_cast<int>(P->size()); ++g) {
            CHECK(coproduct(tw, NCPoly::gen(g)) == coproduct(P, NCPoly::gen(g)));
            CHECK(antipode(*tw, NCPoly::gen(g)) == antipode(*P, NCPoly::gen(g)));
            CHECK(counit(*tw, NCPoly::gen(g)) == counit(*P, NCPoly::gen(g)));
            // S_phi(x) = u^{d(x)^2} S(x) on generators
            int d = P->info(g).delta();
            CHECK(antipode(*tw, NCPoly::gen(g)) == antipode(*src, NCPoly::gen(g)) * u_pow(d * d));
        }
        // twisting at phi = 0 is the identity
        auto back = substitute_phase_one(*tw);
        for (std::size_t i = 0; i < src->rs.rules().size(); ++i) CHECK(back->rs.rules()[i].rhs == src->rs.rules()[i].rhs);
    }
    CHECK_THROWS_AS(twist(*uq_su2_classical()), UngradedGenerator);
}

TEST_CASE("antipode phase on twisted generators", "[hopf]") {
    // For single generators the twisted antipode table equals u^{d^2} times the converted source entry.
    auto su = su_qphi2();
    auto src = substitute_phase_one(*su);
    NCPoly c = su->g("gamma");
    CHECK(antipode(*su, c) == antipode(*src, src->g("gamma")) * Scalar::u(4));
    CHECK(antipode(*su, su->g("alpha")) == antipode(*src, src->g("alpha")));
}

TEST_CASE("braided antipode is a braided anti-homomorphism", "[hopf]") {
    auto su = su_qphi2();
    auto words = normal_words(*su, 2);
    for (const auto& x : words)
        for (const auto& y : words) {
            NCPoly lhs = antipode(*su, su->word_nf(concat(x, y)));
            NCPoly rhs = multiply_tensor(braid_psi(su, antipode_word(*su, x), antipode_word(*su, y)));
            CHECK(su->nf(lhs - rhs).is_zero());
        }
}

TEST_CASE("full Hopf axiom suites at degree 3", "[hopf][suite]") {
    for (auto P : {su_qphi2(), uq_hat_u2(), uq_u2(), uq_su2_classical()}) {
        auto rep = check_braided_hopf(P, 3);
        INFO(P->name);
        for (const auto& r : rep.records)
            if (!r.pass) FAIL_CHECK(r.axiom << " " << r.element << " : " << r.residual);
        CHECK(rep.pass());
        CHECK(rep.records.size() > 100);
    }
}

TEST_CASE("a corrupted antipode is detected", "[hopf][suite]") {
    auto spec = su_qphi2_spec();
    spec.antipode[2] = spec.antipode[2] * Scalar(-1);
    auto P = build_presentation(spec);
    auto rep = check_braided_hopf(P, 2);
    CHECK_FALSE(rep.pass());
    auto s = rep.summary();
    CHECK(s["antipode-left"].second > 0);
    CHECK(s["coassociativity"].second == 0);
}

TEST_CASE("presentations without coalgebra are rejected", "[hopf]") {
    CHECK_THROWS_AS(check_braided_hopf(podles_sphere(), 2), PreconditionError);
}
