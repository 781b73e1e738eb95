#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "braidkit/jet.hpp"
#include "braidkit/reps.hpp"

using namespace braidkit;
using Catch::Matchers::WithinAbs;

namespace {

NumericContext ctx(double q, double phi, double psi = 0) {
    NumericContext c;
    c.q = q;
    c.phi = phi;
    c.psi = psi;
    return c;
}

}  // namespace

TEST_CASE("q-numbers", "[reps]") {
    CHECK_THAT(q_number_numeric(2, 2.0), WithinAbs(2.5, 1e-15));
    CHECK_THAT(q_number_numeric(3, 1.0), WithinAbs(3.0, 1e-15));
    CHECK_THAT(q_number_numeric(-2, 0.5), WithinAbs(-2.5, 1e-15));
    CHECK(q_number_numeric(0, 0.7) == 0);
    // agrees with the exact q-number
    CHECK_THAT(q_number_numeric(4, 0.6), WithinAbs(q_number(4).eval(ctx(0.6, 0)).real(), 1e-13));
}

TEST_CASE("build_rep entries", "[reps]") {
    SECTION("l = 1/2 raising operator") {
        RepSet r = build_rep({1, 0.4, 1, ctx(0.7, 0.2)});
        CHECK(r.F.isApprox(CMatrix{{0, 0}, {1, 0}}));
        CHECK(r.E.isApprox(CMatrix{{0, 1}, {0, 0}}));
        // K diag entries q^{-+1/2} e^{+-2i phi - i psi}
        CHECK(std::abs(r.K(0, 0) - std::pow(0.7, -0.5) * std::polar(1.0, 2 * 0.2 - 0.4)) < 1e-14);
        CHECK(std::abs(r.K(1, 1) - std::pow(0.7, 0.5) * std::polar(1.0, -2 * 0.2 - 0.4)) < 1e-14);
    }
    SECTION("l = 1, m = 0 raising entry") {
        double q = 0.6;
        RepSet r = build_rep({2, 0, 1, ctx(q, 0.1)});
        CHECK_THAT(r.F(2, 1).real(), WithinAbs(std::sqrt(q + 1 / q), 1e-14));
        RepSet neg = build_rep({2, 0, -1, ctx(q, 0.1)});
        CHECK(neg.F.isApprox(-r.F));
        CHECK(neg.E.isApprox(-r.E));
    }
    SECTION("adjoint structure") {
        RepSet r = build_rep({3, 0.9, 1, ctx(0.8, 0.3)});
        CHECK(r.Kstar == r.K.adjoint());
        RepSet flat = build_rep({4, 0, 1, ctx(0.8, 0)});
        CHECK(flat.E.adjoint().isApprox(flat.F));
    }
}

TEST_CASE("relation residuals", "[reps]") {
    CHECK(check_relations(build_rep({2, 1.1, 1, ctx(0.7, 0.3, 1.1)}), 1e-10).max_residual < 1e-10);
    CHECK(check_relations(build_rep({1, 0, 1, ctx(1.0, 0)}), 1e-12).max_residual < 1e-12);
    RepSet bad = build_rep({2, 0.2, 1, ctx(0.7, 0.3)});
    bad.K(0, 0) += 1e-3;
    CHECK(check_relations(bad, 1e-10).max_residual > 1e-4);

    std::mt19937_64 rng(0);
    std::uniform_real_distribution<double> uq(0.3, 0.95), ua(0, 2 * std::acos(-1.0));
    for (int two_l = 1; two_l <= 5; ++two_l)
        for (int sign : {1, -1})
            for (int i = 0; i < 20; ++i) {
                double q = uq(rng), phi = ua(rng), psi = ua(rng);
                RepSet r = build_rep({two_l, psi, sign, ctx(q, phi, psi)});
                INFO("2l=" << two_l << " q=" << q << " phi=" << phi);
                CHECK(check_relations(r, 1e-10).pass());
                CHECK(commutant_dimension(r) == 1);
                CHECK(k_spectrum_mismatch(r, psi) < 1e-10);
            }
}

TEST_CASE("commutant dimension", "[reps]") {
    RepSet a = build_rep({1, 0.3, 1, ctx(0.7, 0.2)});
    CHECK(commutant_dimension(a) == 1);
    CHECK(commutant_dimension(direct_sum(a, a)) == 4);
    RepSet b = build_rep({1, 1.3, 1, ctx(0.7, 0.2)});
    CHECK(commutant_dimension(direct_sum(a, b)) >= 2);
    CHECK(commutant_dimension(build_rep({0, 0, 1, ctx(0.7, 0.2)})) == 1);
}

TEST_CASE("sphere fundamental action", "[reps][spheres]") {
    NumericContext c = ctx(0.6, 0.35);
    SphereMatrices s = sphere_fundamental_action(c);
    double q = 0.6;
    cplx u2 = std::polar(1.0, 0.7), u4 = u2 * u2;
    // k e'_1 = q u^-4 e'_1, e e'_{-1} = 0, f e'_{-1} = u^-2 q^-1/2 (1+q^2) e_0
    CHECK(std::abs(s.k(0, 0) - q / u4) < 1e-14);
    CHECK(s.e.col(2).norm() == 0);
    CHECK(std::abs(s.f(1, 2) - (1 + q * q) / (u2 * std::sqrt(q))) < 1e-14);
    CHECK(std::abs(s.f(0, 1) + u2 * std::sqrt(q)) < 1e-14);
    SphereMatrices t = sphere_action_from_rep(c);
    CHECK(s.e.isApprox(t.e, 1e-12));
    CHECK(s.f.isApprox(t.f, 1e-12));
    CHECK(s.k.isApprox(t.k, 1e-12));
    CHECK(s.kstar.isApprox(t.kstar, 1e-12));
}

TEST_CASE("unbounded eigenvalue witness", "[reps]") {
    auto w = unbounded_eigenvalue_witness(0.5, 0.3, 1.0, 10);
    CHECK_THAT(w.magnitudes[3], WithinAbs(64.0, 1e-9));
    CHECK(w.strictly_increasing);
    CHECK(w.first_k_exceeding(1e6) == 10);
    CHECK_THAT(w.magnitudes[10], WithinAbs(1048576.0, 1e-6));
    auto v = unbounded_eigenvalue_witness(0.9, 0.0, 1.0, 4);
    CHECK_THAT(v.magnitudes[2] / v.magnitudes[1], WithinAbs(1 / 0.81, 1e-12));
    CHECK_THROWS_AS(unbounded_eigenvalue_witness(0.5, 0.3, 0.0, 3), PreconditionError);
    CHECK_THROWS_AS(unbounded_eigenvalue_witness(1.0, 0.3, 1.0, 3), PreconditionError);
}

TEST_CASE("classical limit probe", "[reps][limit]") {
    auto rep = classical_limit_probe(8);
    for (const auto& j : rep.jets) {
        INFO(j.relation << " first order: " << j.first_order_raw);
        CHECK(j.zeroth_order);
        CHECK(j.first_order);
    }
    // [f,e] = (1 + i r) H + (1 - i r) H*, reducing to H + H* as r -> 0
    auto L = u2_limit_algebra();
    Scalar c = 1 + Scalar::i() * Scalar::param("r");
    CHECK(rep.fe_commutator == L->str(L->g("H") * c + L->g("H*") * c.conj()));
    CHECK_THAT(rep.obstruction_magnitude, WithinAbs(2.0, 1e-12));
    CHECK(rep.samples.size() == 8);
    CHECK(rep.slope >= 0.9);
    CHECK(rep.pass());
}
