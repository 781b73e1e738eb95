#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <iterator>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "braidkit/gaussian.hpp"

namespace braidkit {

// Global symbol table: s, u, w come first, formal parameters are interned by name.
class VariableRegistry {
public:
    static VariableRegistry& instance() {
        static VariableRegistry reg;
        return reg;
    }

    int index(const std::string& name) {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = by_name_.find(name);
        if (it != by_name_.end()) return it->second;
        int idx = static_cast<int>(names_.size());
        names_.push_back(name);
        by_name_.emplace(name, idx);
        return idx;
    }

    int find(const std::string& name) const {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = by_name_.find(name);
        return it == by_name_.end() ? -1 : it->second;
    }

    std::string name(int idx) const {
        std::lock_guard<std::mutex> lock(mu_);
        return names_.at(static_cast<std::size_t>(idx));
    }

private:
    VariableRegistry() {
        for (const char* n : {"s", "u", "w"}) {
            by_name_.emplace(n, static_cast<int>(names_.size()));
            names_.emplace_back(n);
        }
    }
    mutable std::mutex mu_;
    std::vector<std::string> names_;
    std::unordered_map<std::string, int> by_name_;
};

inline constexpr int var_s = 0;
inline constexpr int var_u = 1;
inline constexpr int var_w = 2;

inline int param_index(const std::string& name) { return VariableRegistry::instance().index(name); }
inline std::string variable_name(int idx) { return VariableRegistry::instance().name(idx); }

// Exponent vectors carry no trailing zeros, so equal monomials compare equal.
using Exponents = std::vector<int>;

inline void trim(Exponents& e) {
    while (!e.empty() && e.back() == 0) e.pop_back();
}

inline int exp_at(const Exponents& e, int v) {
    return v < static_cast<int>(e.size()) ? e[static_cast<std::size_t>(v)] : 0;
}

inline Exponents exp_add(const Exponents& a, const Exponents& b) {
    Exponents r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

inline Exponents exp_sub(const Exponents& a, const Exponents& b) {
    Exponents r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

// Lexicographic, s most significant; a monomial order on Laurent monomials.
struct ExpLess {
    bool operator()(const Exponents& a, const Exponents& b) const {
        std::size_t n = std::max(a.size(), b.size());
        for (std::size_t i = 0; i < n; ++i) {
            int x = i < a.size() ? a[i] : 0;
            int y = i < b.size() ? b[i] : 0;
            if (x != y) return x < y;
        }
        return false;
    }
};

class LaurentPoly {
public:
    using Terms = std::map<Exponents, GaussQ, ExpLess>;

    LaurentPoly() = default;
    LaurentPoly(const GaussQ& c) {  // NOLINT
        if (!c.is_zero()) terms_.emplace(Exponents{}, c);
    }
    LaurentPoly(long c) : LaurentPoly(GaussQ(c)) {}  // NOLINT

    static LaurentPoly monomial(Exponents e, const GaussQ& c = GaussQ(1)) {
        LaurentPoly p;
        trim(e);
        if (!c.is_zero()) p.terms_.emplace(std::move(e), c);
        return p;
    }
    static LaurentPoly variable(int v, int power = 1) {
        Exponents e(static_cast<std::size_t>(v) + 1, 0);
        e[static_cast<std::size_t>(v)] = power;
        return monomial(std::move(e));
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }
    bool is_one() const { return terms_.size() == 1 && terms_.begin()->first.empty() && terms_.begin()->second.is_one(); }
    std::size_t size() const { return terms_.size(); }

    GaussQ constant_term() const {
        auto it = terms_.find(Exponents{});
        return it == terms_.end() ? GaussQ() : it->second;
    }
    const Exponents& leading_exponents() const { return terms_.rbegin()->first; }
    const GaussQ& leading_coeff() const { return terms_.rbegin()->second; }

    void add_term(const Exponents& e, const GaussQ& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator-(const LaurentPoly& a) {
        LaurentPoly r;
        for (const auto& [e, c] : a.terms_) r.terms_.emplace_hint(r.terms_.end(), e, -c);
        return r;
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(exp_add(ea, eb), ca * cb);
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly scaled(const GaussQ& c) const {
        if (c.is_zero()) return {};
        LaurentPoly r;
        for (const auto& [e, x] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, x * c);
        return r;
    }
    LaurentPoly shifted(const Exponents& by) const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), exp_add(e, by), c);
        return r;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    int max_var() const {
        int m = -1;
        for (const auto& [e, c] : terms_) m = std::max(m, static_cast<int>(e.size()) - 1);
        return m;
    }
    bool contains_var(int v) const {
        for (const auto& [e, c] : terms_)
            if (exp_at(e, v) != 0) return true;
        return false;
    }
    int degree_in(int v) const {
        int d = 0;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            int x = exp_at(e, v);
            if (first || x > d) d = x;
            first = false;
        }
        return d;
    }
    // Componentwise minimum exponent over all terms (absent variables count as 0).
    Exponents min_exponents() const {
        Exponents m;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (first) {
                m = e;
                first = false;
                continue;
            }
            std::size_t n = std::max(m.size(), e.size());
            m.resize(n, 0);
            for (std::size_t i = 0; i < n; ++i) m[i] = std::min(m[i], i < e.size() ? e[i] : 0);
        }
        trim(m);
        return m;
    }
    bool is_polynomial() const {
        for (const auto& [e, c] : terms_)
            for (int x : e)
                if (x < 0) return false;
        return true;
    }

    // Split by powers of v; coefficients do not contain v.
    std::map<int, LaurentPoly> coefficients_in(int v) const {
        std::map<int, LaurentPoly> out;
        for (const auto& [e, c] : terms_) {
            int d = exp_at(e, v);
            Exponents rest = e;
            if (v < static_cast<int>(rest.size())) rest[static_cast<std::size_t>(v)] = 0;
            trim(rest);
            out[d].add_term(rest, c);
        }
        return out;
    }

    LaurentPoly conj() const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) {
            Exponents f = e;
            if (f.size() > var_u) f[var_u] = -f[var_u];
            if (f.size() > var_w) f[var_w] = -f[var_w];
            r.add_term(f, c.conj());
        }
        return r;
    }

    template <class ValueOf>
    std::complex<double> eval(ValueOf&& value_of) const {
        std::complex<double> total = 0;
        std::vector<std::complex<double>> cache;
        for (const auto& [e, c] : terms_) {
            std::complex<double> t = c.to_complex();
            for (std::size_t v = 0; v < e.size(); ++v) {
                if (e[v] == 0) continue;
                if (cache.size() <= v) cache.resize(v + 1, std::complex<double>(std::nan(""), 0));
                if (std::isnan(cache[v].real())) cache[v] = value_of(static_cast<int>(v));
                t *= std::pow(cache[v], e[v]);
            }
            total += t;
        }
        return total;
    }

    std::string str() const;

private:
    Terms terms_;
};

inline std::string monomial_str(const Exponents& e) {
    std::string s;
    for (std::size_t v = 0; v < e.size(); ++v) {
        if (e[v] == 0) continue;
        if (!s.empty()) s += "*";
        s += variable_name(static_cast<int>(v));
        if (e[v] != 1) s += "^" + std::to_string(e[v]);
    }
    return s;
}

inline std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string m = monomial_str(e);
        std::string cs = c.str();
        std::string term;
        if (m.empty()) term = cs;
        else if (c.is_one()) term = m;
        else if (c == GaussQ(-1)) term = "-" + m;
        else term = cs + "*" + m;
        if (!out.empty()) out += term[0] == '-' ? " - " + term.substr(1) : " + " + term;
        else out = term;
    }
    return out;
}

namespace detail {

// Exact division of polynomials (nonnegative exponents); throws if not exact.
inline LaurentPoly divide_exact(LaurentPoly a, const LaurentPoly& b) {
    if (b.is_zero()) throw DivisionByZero();
    if (b.is_constant()) return a.scaled(b.leading_coeff().inv());
    LaurentPoly q;
    const Exponents& lb = b.leading_exponents();
    GaussQ lcinv = b.leading_coeff().inv();
    while (!a.is_zero()) {
        Exponents d = exp_sub(a.leading_exponents(), lb);
        for (int x : d)
            if (x < 0) throw Error("internal: inexact polynomial division");
        GaussQ c = a.leading_coeff() * lcinv;
        LaurentPoly t = LaurentPoly::monomial(d, c);
        q += t;
        a -= t * b;
    }
    return q;
}

inline LaurentPoly monic(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    return p.scaled(p.leading_coeff().inv());
}

inline LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

inline LaurentPoly content_in(const LaurentPoly& p, int v) {
    LaurentPoly g;
    for (const auto& [d, c] : p.coefficients_in(v)) {
        g = poly_gcd(g, c);
        if (g.is_constant() && !g.is_zero()) return LaurentPoly(1);
    }
    return g;
}

inline LaurentPoly lc_in(const LaurentPoly& p, int v) { return p.coefficients_in(v).rbegin()->second; }

// Sparse pseudo-remainder of a by b as univariate polynomials in v.
inline LaurentPoly prem_in(LaurentPoly a, const LaurentPoly& b, int v) {
    int db = b.degree_in(v);
    LaurentPoly lb = lc_in(b, v);
    while (!a.is_zero() && a.degree_in(v) >= db) {
        int da = a.degree_in(v);
        LaurentPoly la = lc_in(a, v);
        a = lb * a - la * b * LaurentPoly::variable(v, da - db);
    }
    return a;
}

inline LaurentPoly primitive_in(const LaurentPoly& p, int v) {
    if (p.is_zero()) return p;
    return monic(divide_exact(p, content_in(p, v)));
}

// Exact quotient if b divides a, otherwise empty.
inline std::optional<LaurentPoly> try_divide(LaurentPoly a, const LaurentPoly& b) {
    LaurentPoly q;
    const Exponents& lb = b.leading_exponents();
    GaussQ lcinv = b.leading_coeff().inv();
    while (!a.is_zero()) {
        Exponents d = exp_sub(a.leading_exponents(), lb);
        for (int x : d)
            if (x < 0) return std::nullopt;
        LaurentPoly t = LaurentPoly::monomial(d, a.leading_coeff() * lcinv);
        q += t;
        a -= t * b;
    }
    return q;
}

// Euclid over Q(i) for polynomials in the single variable v.
inline LaurentPoly univariate_gcd(LaurentPoly a, LaurentPoly b, int v) {
    if (a.degree_in(v) < b.degree_in(v)) std::swap(a, b);
    while (!b.is_zero()) {
        LaurentPoly r = std::move(a);
        int db = b.degree_in(v);
        GaussQ lbinv = b.leading_coeff().inv();
        while (!r.is_zero() && r.degree_in(v) >= db) {
            int dr = r.degree_in(v);
            r -= (b * LaurentPoly::variable(v, dr - db)).scaled(r.leading_coeff() * lbinv);
        }
        a = std::move(b);
        b = monic(r);
    }
    return monic(a);
}

inline std::vector<int> variables_of(const LaurentPoly& p) {
    std::vector<int> vs;
    for (int v = 0; v <= p.max_var(); ++v)
        if (p.contains_var(v)) vs.push_back(v);
    return vs;
}

// Certifies gcd(a, b) = 1 for content-free polynomials by specializing all but one
// variable at points where both leading coefficients survive. False means "unknown".
inline bool certainly_coprime(const LaurentPoly& a, const LaurentPoly& b) {
    std::vector<int> va = variables_of(a), vb = variables_of(b), shared;
    std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(shared));
    for (int v : shared) {
        bool certified = false;
        for (int attempt = 0; attempt < 3 && !certified; ++attempt) {
            auto specialize = [&](const LaurentPoly& p, bool& ok) {
                LaurentPoly out;
                auto coeffs = p.coefficients_in(v);
                for (const auto& [d, c] : coeffs) {
                    GaussQ val;
                    for (const auto& [e, x] : c.terms()) {
                        GaussQ term = x;
                        for (std::size_t k = 0; k < e.size(); ++k) {
                            if (e[k] == 0) continue;
                            mpq_class pt(static_cast<long>(2 + 3 * k + 7 * attempt), static_cast<long>(1 + attempt + k % 2));
                            mpq_class pw = 1;
                            for (int j = 0; j < e[k]; ++j) pw *= pt;
                            term *= GaussQ(pw);
                        }
                        val += term;
                    }
                    if (d == coeffs.rbegin()->first && val.is_zero()) ok = false;
                    out += LaurentPoly::variable(v, d).scaled(val);
                }
                return out;
            };
            bool ok = true;
            LaurentPoly sa = specialize(a, ok), sb = specialize(b, ok);
            if (!ok) continue;
            if (univariate_gcd(sa, sb, v).is_constant()) certified = true;
            else return false;
        }
        if (!certified) return false;
    }
    return true;
}

inline LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return monic(b);
    if (b.is_zero()) return monic(a);
    if (a.is_constant() || b.is_constant()) return LaurentPoly(1);
    Exponents ma = a.min_exponents(), mb = b.min_exponents();
    if (!ma.empty() || !mb.empty()) {
        Exponents common(std::max(ma.size(), mb.size()), 0);
        for (std::size_t i = 0; i < common.size(); ++i) common[i] = std::min(exp_at(ma, static_cast<int>(i)), exp_at(mb, static_cast<int>(i)));
        trim(common);
        LaurentPoly g = poly_gcd(a.shifted(exp_sub({}, ma)), b.shifted(exp_sub({}, mb)));
        return g.shifted(common);
    }
    {
        std::vector<int> va = variables_of(a), vb = variables_of(b);
        if (va.size() == 1 && va == vb) return univariate_gcd(a, b, va[0]);
    }
    if (auto q = try_divide(a, b)) return monic(b);
    if (auto q = try_divide(b, a)) return monic(a);
    if (certainly_coprime(a, b)) return LaurentPoly(1);
    int v = std::max(a.max_var(), b.max_var());
    bool in_a = a.contains_var(v), in_b = b.contains_var(v);
    if (!in_a) return poly_gcd(a, content_in(b, v));
    if (!in_b) return poly_gcd(content_in(a, v), b);
    LaurentPoly ca = content_in(a, v), cb = content_in(b, v);
    LaurentPoly c = poly_gcd(ca, cb);
    LaurentPoly pa = monic(divide_exact(a, ca)), pb = monic(divide_exact(b, cb));
    if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
    while (true) {
        LaurentPoly r = prem_in(pa, pb, v);
        if (r.is_zero()) break;
        if (!r.contains_var(v)) {
            pb = LaurentPoly(1);
            break;
        }
        pa = std::move(pb);
        pb = primitive_in(r, v);
    }
    return monic(c * primitive_in(pb, v));
}

}  // namespace detail
}  // namespace braidkit
