#pragma once

#include <complex>
#include <map>
#include <string>

#include "braidkit/laurent.hpp"

namespace braidkit {

struct NumericContext {
    double q = 1.0;
    double phi = 0.0;
    double psi = 0.0;
    std::map<std::string, std::complex<double>> params;

    std::complex<double> value_of(int var) const {
        switch (var) {
            case var_s:
                if (!(q > 0)) throw PreconditionError("NumericContext requires q > 0");
                return std::sqrt(q);
            case var_u: return std::polar(1.0, phi);
            case var_w: return std::polar(1.0, psi);
            default: {
                auto name = variable_name(var);
                auto it = params.find(name);
                if (it == params.end()) throw PreconditionError("no numeric value for parameter " + name);
                return it->second;
            }
        }
    }
};

// Rational function num/den. Canonical: den is a polynomial without monomial content
// and with leading coefficient 1, num is Laurent, and gcd(num, den) = 1.
class Scalar {
public:
    Scalar() : den_(1) {}
    Scalar(long c) : num_(c), den_(1) {}                  // NOLINT
    Scalar(const GaussQ& c) : num_(c), den_(1) {}         // NOLINT
    Scalar(const LaurentPoly& p) : num_(p), den_(1) {}    // NOLINT
    Scalar(const mpq_class& c) : num_(GaussQ(c)), den_(1) {}  // NOLINT

    static Scalar fraction(const LaurentPoly& num, const LaurentPoly& den) {
        Scalar r;
        r.num_ = num;
        r.den_ = den;
        r.canonicalize();
        return r;
    }
    static Scalar rational(long n, long d) { return Scalar(mpq_class(n, d)); }
    static Scalar i() { return Scalar(GaussQ::i()); }
    static Scalar var(int v, int power = 1) { return Scalar(LaurentPoly::variable(v, power)); }
    static Scalar s(int power = 1) { return var(var_s, power); }
    static Scalar q(int power = 1) { return var(var_s, 2 * power); }
    static Scalar u(int power = 1) { return var(var_u, power); }
    static Scalar w(int power = 1) { return var(var_w, power); }
    static Scalar param(const std::string& name, int power = 1) { return var(param_index(name), power); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.is_one() && num_.is_one(); }
    bool is_laurent() const { return den_.is_one(); }

    Scalar& operator+=(const Scalar& o) {
        if (o.is_zero()) return *this;
        if (is_zero()) return *this = o;
        if (den_ == o.den_) {
            num_ += o.num_;
            if (!den_.is_one()) canonicalize();
            return *this;
        }
        if (den_.is_one()) {
            num_ = num_ * o.den_ + o.num_;
            den_ = o.den_;
            return *this;
        }
        if (o.den_.is_one()) {
            num_ += o.num_ * den_;
            return *this;
        }
        LaurentPoly g = detail::poly_gcd(den_, o.den_);
        LaurentPoly a = detail::divide_exact(o.den_, g);
        LaurentPoly b = detail::divide_exact(den_, g);
        num_ = num_ * a + o.num_ * b;
        den_ = den_ * a;
        canonicalize();
        return *this;
    }
    Scalar& operator-=(const Scalar& o) { return *this += -o; }
    Scalar& operator*=(const Scalar& o) {
        if (is_zero()) return *this;
        if (o.is_zero()) return *this = Scalar();
        if (den_.is_one() && o.den_.is_one()) {
            num_ = num_ * o.num_;
            return *this;
        }
        // Cross-cancel: both operands are already reduced.
        LaurentPoly n1 = num_, d1 = den_, n2 = o.num_, d2 = o.den_;
        cancel(n1, d2);
        cancel(n2, d1);
        num_ = n1 * n2;
        den_ = d1 * d2;
        canonicalize(false);
        return *this;
    }
    Scalar& operator/=(const Scalar& o) { return *this *= o.inv(); }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend Scalar operator-(const Scalar& a) {
        Scalar r = a;
        r.num_ = -r.num_;
        return r;
    }
    friend bool operator==(const Scalar& a, const Scalar& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    Scalar inv() const {
        if (is_zero()) throw DivisionByZero();
        return fraction(den_, num_);
    }
    Scalar pow(int n) const {
        Scalar base = n < 0 ? inv() : *this;
        Scalar r(1);
        for (int k = 0; k < std::abs(n); ++k) r *= base;
        return r;
    }
    Scalar conj() const {
        Scalar r;
        r.num_ = num_.conj();
        r.den_ = den_.conj();
        r.canonicalize();
        return r;
    }

    std::complex<double> eval(const NumericContext& ctx) const {
        auto vf = [&](int v) { return ctx.value_of(v); };
        std::complex<double> d = den_.eval(vf);
        if (std::abs(d) < 1e-14) throw PoleAtContext("denominator vanishes at evaluation point");
        return num_.eval(vf) / d;
    }

    bool contains_var(int v) const { return num_.contains_var(v) || den_.contains_var(v); }

    // Replace variable v by a Scalar value.
    Scalar substitute(int v, const Scalar& value) const {
        if (!contains_var(v)) return *this;
        return substitute_poly(num_, v, value) / substitute_poly(den_, v, value);
    }

    // Reduce modulo t^2 = square for a formal parameter t; the result is rationalized so
    // that the denominator is free of t.
    Scalar reduce_square(int t, const Scalar& square) const {
        if (!contains_var(t)) return *this;
        auto split = [&](const LaurentPoly& p) {
            Scalar even, odd;
            for (const auto& [d, c] : p.coefficients_in(t)) {
                int r = ((d % 2) + 2) % 2;
                int k = (d - r) / 2;
                Scalar term = Scalar(c) * square.pow(k);
                (r == 0 ? even : odd) += term;
            }
            return std::pair<Scalar, Scalar>{even, odd};
        };
        auto [n0, n1] = split(num_);
        auto [d0, d1] = split(den_);
        Scalar tt = var(t);
        if (d1.is_zero()) return (n0 + n1 * tt) / d0;
        // (n0 + n1 t)(d0 - d1 t) / (d0^2 - d1^2 S)
        Scalar nd0 = n0 * d0 - n1 * d1 * square;
        Scalar nd1 = n1 * d0 - n0 * d1;
        Scalar dd = d0 * d0 - d1 * d1 * square;
        return (nd0 + nd1 * tt) / dd;
    }

    std::string str() const {
        if (den_.is_one()) return num_.str();
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }

private:
    static Scalar substitute_poly(const LaurentPoly& p, int v, const Scalar& value) {
        Scalar out;
        for (const auto& [d, c] : p.coefficients_in(v)) out += Scalar(c) * value.pow(d);
        return out;
    }

    static void cancel(LaurentPoly& n, LaurentPoly& d) {
        if (d.is_constant()) return;
        Exponents mn = n.min_exponents();
        LaurentPoly g = detail::poly_gcd(n.shifted(exp_sub({}, mn)), d);
        if (g.is_constant()) return;
        n = detail::divide_exact(n.shifted(exp_sub({}, mn)), g).shifted(mn);
        d = detail::divide_exact(d, g);
    }

    void canonicalize(bool reduce = true) {
        if (den_.is_zero()) throw DivisionByZero();
        if (num_.is_zero()) {
            den_ = LaurentPoly(1);
            return;
        }
        Exponents mn = num_.min_exponents();
        Exponents md = den_.min_exponents();
        LaurentPoly n = num_.shifted(exp_sub({}, mn));
        LaurentPoly d = den_.shifted(exp_sub({}, md));
        Exponents mono = exp_sub(mn, md);
        if (reduce && !d.is_constant()) {
            LaurentPoly g = detail::poly_gcd(n, d);
            if (!g.is_constant()) {
                n = detail::divide_exact(n, g);
                d = detail::divide_exact(d, g);
            }
        }
        GaussQ lc = d.leading_coeff().inv();
        num_ = n.shifted(mono).scaled(lc);
        den_ = d.scaled(lc);
    }

    LaurentPoly num_;
    LaurentPoly den_;
};

inline Scalar q_number(int m) {
    if (m < 0) return -q_number(-m);
    Scalar r;
    for (int j = 0; j < m; ++j) r += Scalar::s(2 * (m - 1 - 2 * j));
    return r;
}

inline Scalar q_factorial(int m) {
    if (m < 0) throw PreconditionError("q_factorial requires m >= 0");
    Scalar r(1);
    for (int j = 1; j <= m; ++j) r *= q_number(j);
    return r;
}

}  // namespace braidkit
