#include <catch2/catch_amalgamated.hpp>

#include <numbers>
#include <random>

#include "braidkit/scalar.hpp"

using namespace braidkit;

namespace {

Scalar random_laurent(std::mt19937_64& rng, int terms) {
    std::uniform_int_distribution<int> coef(-5, 5), ex(-2, 2), pick(0, 3);
    LaurentPoly p;
    int lam = param_index("lambda");
    for (int t = 0; t < terms; ++t) {
        Exponents e{ex(rng), ex(rng), ex(rng)};
        if (pick(rng) == 0) {
            e.resize(static_cast<std::size_t>(lam) + 1, 0);
            e[static_cast<std::size_t>(lam)] = std::abs(ex(rng));
        }
        p.add_term([&] { trim(e); return e; }(), GaussQ(coef(rng), coef(rng) / 2));
    }
    return Scalar(p);
}

Scalar random_scalar(std::mt19937_64& rng) {
    Scalar d = random_laurent(rng, 2);
    while (d.is_zero()) d = random_laurent(rng, 2);
    return random_laurent(rng, 3) / d;
}

NumericContext sample_ctx() {
    NumericContext c;
    c.q = 0.63;
    c.phi = 0.41;
    c.psi = -1.3;
    c.params["lambda"] = {0.7, 0.2};
    return c;
}

}  // namespace

TEST_CASE("scalar trivial arithmetic", "[scalar]") {
    CHECK(Scalar::s() + Scalar() == Scalar::s());
    CHECK((Scalar::u() + Scalar::u(-1)) - (Scalar::u() + Scalar::u(-1)) == Scalar());
    Scalar d = Scalar::s() - Scalar::s(-1);
    CHECK(d.inv() + (-d).inv() == Scalar());
    CHECK(Scalar::u(4).conj() == Scalar::u(-4));
    CHECK(Scalar::s(2) * Scalar::s(-2) == Scalar(1));
    Scalar x = Scalar::s(2) - Scalar::s(-2);
    CHECK(x.inv() * x == Scalar(1));
    CHECK_THROWS_AS(Scalar().inv(), DivisionByZero);
}

TEST_CASE("canonical form cancels common factors", "[scalar]") {
    // (q^2 - 1)/(q - 1) = q + 1
    Scalar a = (Scalar::q(2) - 1) / (Scalar::q() - 1);
    CHECK(a == Scalar::q() + 1);
    CHECK(a.is_laurent());
    // (q - q^-1)/(s - s^-1) = s + s^-1
    Scalar b = (Scalar::q() - Scalar::q(-1)) / (Scalar::s() - Scalar::s(-1));
    CHECK(b == Scalar::s(1) + Scalar::s(-1));
    // multivariate: (u^2 s^2 - 1)/(u s - 1) = u s + 1
    Scalar c = (Scalar::u(2) * Scalar::s(2) - 1) / (Scalar::u() * Scalar::s() - 1);
    CHECK(c == Scalar::u() * Scalar::s() + 1);
}

TEST_CASE("field axioms on random scalars", "[scalar]") {
    std::mt19937_64 rng(7);
    for (int n = 0; n < 25; ++n) {
        Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Scalar());
        if (!a.is_zero()) CHECK(a * a.inv() == Scalar(1));
        CHECK(a.conj().conj() == a);
        CHECK((a * b).conj() == a.conj() * b.conj());
        CHECK((a + b).conj() == a.conj() + b.conj());
    }
}

TEST_CASE("eval is a homomorphism", "[scalar]") {
    std::mt19937_64 rng(11);
    auto ctx = sample_ctx();
    for (int n = 0; n < 25; ++n) {
        Scalar a = random_scalar(rng), b = random_scalar(rng);
        auto ea = a.eval(ctx), eb = b.eval(ctx), eab = (a * b).eval(ctx);
        CHECK(std::abs(eab - ea * eb) <= 1e-10 * std::max(1.0, std::abs(eab)));
        auto esum = (a + b).eval(ctx);
        CHECK(std::abs(esum - (ea + eb)) <= 1e-10 * std::max(1.0, std::abs(esum)));
        // conj matches complex conjugation for real parameters
        NumericContext real = ctx;
        real.params["lambda"] = 0.7;
        CHECK(std::abs(a.conj().eval(real) - std::conj(a.eval(real))) <= 1e-10 * std::max(1.0, std::abs(a.eval(real))));
    }
}

TEST_CASE("eval examples", "[scalar]") {
    NumericContext c;
    c.q = 2;
    CHECK(std::abs(q_number(2).eval(c) - 2.5) < 1e-12);
    c.q = 4;
    CHECK(std::abs(Scalar::s().eval(c) - 2.0) < 1e-12);
    NumericContext p;
    p.phi = std::numbers::pi / 2;
    CHECK(std::abs(Scalar::u(2).eval(p) - (-1.0)) < 1e-12);
    NumericContext pole;
    pole.q = 1;
    CHECK_THROWS_AS((Scalar::s() - Scalar::s(-1)).inv().eval(pole), PoleAtContext);
}

TEST_CASE("q numbers", "[scalar]") {
    CHECK(q_number(0) == Scalar());
    CHECK(q_number(1) == Scalar(1));
    CHECK(q_number(2) == Scalar::s(2) + Scalar::s(-2));
    CHECK(q_number(-3) == -q_number(3));
    for (int m = 1; m < 7; ++m) {
        Scalar def = (Scalar::q(m) - Scalar::q(-m)) / (Scalar::q() - Scalar::q(-1));
        CHECK(def == q_number(m));
        NumericContext one;
        one.q = 1;
        CHECK(std::abs(q_number(m).eval(one) - double(m)) < 1e-12);
    }
    CHECK(q_factorial(0) == Scalar(1));
    CHECK(q_factorial(1) == Scalar(1));
    CHECK(q_factorial(2) == Scalar::q() + Scalar::q(-1));
    CHECK(q_factorial(4) == q_number(2) * q_number(3) * q_number(4));
}

TEST_CASE("substitution and square reduction", "[scalar]") {
    int t = param_index("t");
    Scalar tt = Scalar::param("t");
    Scalar sq = 1 + Scalar::q(2);
    CHECK((tt * tt).reduce_square(t, sq) == sq);
    CHECK((tt.pow(3)).reduce_square(t, sq) == sq * tt);
    CHECK((tt.inv()).reduce_square(t, sq) == tt / sq);
    CHECK(((1 / (1 + tt)).reduce_square(t, sq) * (1 + tt)).reduce_square(t, sq) == Scalar(1));
    Scalar a = (Scalar::u(2) + Scalar::s()) / (Scalar::q() + 3);
    CHECK(a.substitute(var_u, Scalar(1)) == (1 + Scalar::s()) / (Scalar::q() + 3));
}
