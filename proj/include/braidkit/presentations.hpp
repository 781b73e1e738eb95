#pragma once

#include <string>
#include <vector>

#include "braidkit/presentation.hpp"

namespace braidkit {

namespace detail {

inline NCPoly w(std::initializer_list<int> letters, const Scalar& c = Scalar(1)) { return NCPoly::word(Word(letters), c); }

inline CoproductTerm ct(const Scalar& c, Word l, Word r) { return CoproductTerm{c, std::move(l), std::move(r)}; }

inline Scalar q_inv_minus_q_inv() { return (Scalar::q(-1) - Scalar::q()).inv(); }

}  // namespace detail

// SU_{q,phi}(2). Generator order alpha, alpha*, gamma, gamma*.
inline PresentationSpec su_qphi2_spec() {
    using detail::w;
    enum { a = 0, as = 1, c = 2, cs = 3 };
    PresentationSpec s;
    s.name = "su-qphi2";
    s.gens = {
        {"alpha", 1, 1, as, -1, 1},
        {"alpha*", -1, -1, a, -1, 1},
        {"gamma", -1, 1, cs, -1, 1},
        {"gamma*", 1, -1, c, -1, 1},
    };
    s.weights = {2, 2, 1, 1};
    Scalar q = Scalar::q(), u4 = Scalar::u(4), um4 = Scalar::u(-4);
    s.relations = {
        w({a, c}) - w({c, a}, q * u4),
        w({a, cs}) - w({cs, a}, q * um4),
        w({c, as}) - w({as, c}, q * u4),
        w({cs, as}) - w({as, cs}, q * um4),
        w({a, as}) + w({cs, c}, Scalar::q(2)) - NCPoly(1),
        w({as, a}) + w({c, cs}) - NCPoly(1),
        w({c, cs}) - w({cs, c}),
    };
    s.coproduct = {
        {detail::ct(1, {a}, {a}), detail::ct(-q * um4, {cs}, {c})},
        {detail::ct(1, {as}, {as}), detail::ct(-q * um4, {c}, {cs})},
        {detail::ct(1, {c}, {a}), detail::ct(1, {as}, {c})},
        {detail::ct(1, {cs}, {as}), detail::ct(1, {a}, {cs})},
    };
    s.counit = {1, 1, 0, 0};
    s.antipode = {w({as}), w({a}), w({c}, -q * u4), w({cs}, -Scalar::q(-1) * u4)};
    return s;
}

inline PresentationPtr su_qphi2() { return build_presentation(su_qphi2_spec()); }

// U_{q,phi}(u-hat(2)). Generator order f, k, k^-1, k*, k*^-1, e.
inline PresentationSpec uq_hat_u2_spec() {
    using detail::w;
    enum { f = 0, k = 1, ki = 2, ks = 3, ksi = 4, e = 5 };
    PresentationSpec s;
    s.name = "uq-hat-u2";
    s.gens = {
        {"f", 1, -1, e, -1, 1},
        {"k", 1, 1, ks, ki, 1},
        {"k^-1", -1, -1, ksi, k, 1},
        {"k*", -1, -1, k, ksi, 1},
        {"k*^-1", 1, 1, ki, ks, 1},
        {"e", -1, 1, f, -1, 1},
    };
    Scalar q = Scalar::q(), um4 = Scalar::u(-4);
    s.relations = {
        w({e, k}) - w({k, e}, q * um4),
        w({k, f}) - w({f, k}, q * um4),
        w({e, f}) - w({f, e}) - (w({k, ks}) - w({ki, ksi})) * detail::q_inv_minus_q_inv(),
        w({k, ks}) - w({ks, k}),
    };
    s.coproduct = {
        {detail::ct(1, {f}, {ks}), detail::ct(1, {ksi}, {f})},
        {detail::ct(1, {k}, {k})},
        {detail::ct(1, {ki}, {ki})},
        {detail::ct(1, {ks}, {ks})},
        {detail::ct(1, {ksi}, {ksi})},
        {detail::ct(1, {e}, {k}), detail::ct(1, {ki}, {e})},
    };
    s.counit = {0, 1, 1, 1, 1, 0};
    Scalar u4 = Scalar::u(4);
    s.antipode = {w({f}, -q * u4), w({ki}), w({k}), w({ksi}), w({ks}), w({e}, -Scalar::q(-1) * u4)};
    return s;
}

inline PresentationPtr uq_hat_u2() { return build_presentation(uq_hat_u2_spec()); }

// U_{q,phi}(u(2)). Generator order f, |k|, |k|^-1, U, U^-1, e.
inline PresentationSpec uq_u2_spec() {
    using detail::w;
    enum { f = 0, m = 1, mi = 2, U = 3, Ui = 4, e = 5 };
    PresentationSpec s;
    s.name = "uq-u2";
    s.gens = {
        {"f", 1, -1, e, -1, 1},
        {"|k|", 0, 0, m, mi, 1},
        {"|k|^-1", 0, 0, mi, m, 1},
        {"U", 1, 1, Ui, Ui, 1},
        {"U^-1", -1, -1, U, U, 1},
        {"e", -1, 1, f, -1, 1},
    };
    Scalar q = Scalar::q(), um4 = Scalar::u(-4), u4 = Scalar::u(4);
    s.relations = {
        w({e, m}) - w({m, e}, q),
        w({m, f}) - w({f, m}, q),
        w({e, U}) - w({U, e}, um4),
        w({U, f}) - w({f, U}, um4),
        w({e, f}) - w({f, e}) - (w({m, m}) - w({mi, mi})) * detail::q_inv_minus_q_inv(),
        w({m, U}) - w({U, m}),
    };
    s.coproduct = {
        {detail::ct(1, {f}, {m, Ui}), detail::ct(1, {mi, U}, {f})},
        {detail::ct(1, {m}, {m})},
        {detail::ct(1, {mi}, {mi})},
        {detail::ct(1, {U}, {U})},
        {detail::ct(1, {Ui}, {Ui})},
        {detail::ct(1, {e}, {m, U}), detail::ct(1, {mi, Ui}, {e})},
    };
    s.counit = {0, 1, 1, 1, 1, 0};
    s.antipode = {w({f}, -q * u4), w({mi}), w({m}), w({Ui}), w({U}), w({e}, -Scalar::q(-1) * u4)};
    return s;
}

inline PresentationPtr uq_u2() { return build_presentation(uq_u2_spec()); }

// Unbraided U_q(su(2)). Generator order f, k, k^-1, e. Ungraded.
inline PresentationSpec uq_su2_classical_spec() {
    using detail::w;
    enum { f = 0, k = 1, ki = 2, e = 3 };
    PresentationSpec s;
    s.name = "uq-su2";
    s.gens = {
        {"f", 0, 0, e, -1, 1},
        {"k", 0, 0, k, ki, 1},
        {"k^-1", 0, 0, ki, k, 1},
        {"e", 0, 0, f, -1, 1},
    };
    Scalar q = Scalar::q();
    s.relations = {
        w({e, k}) - w({k, e}, q),
        w({k, f}) - w({f, k}, q),
        w({k, k}) - w({ki, ki}) - (w({f, e}) - w({e, f})) * (q - Scalar::q(-1)),
    };
    s.coproduct = {
        {detail::ct(1, {f}, {k}), detail::ct(1, {ki}, {f})},
        {detail::ct(1, {k}, {k})},
        {detail::ct(1, {ki}, {ki})},
        {detail::ct(1, {e}, {k}), detail::ct(1, {ki}, {e})},
    };
    s.counit = {0, 1, 1, 0};
    s.antipode = {w({f}, -q), w({ki}), w({k}), w({e}, -Scalar::q(-1))};
    s.braided = false;
    s.graded = false;
    return s;
}

inline PresentationPtr uq_su2_classical() { return build_presentation(uq_su2_classical_spec()); }

struct SphereParams {
    bool psi_zero = true;
    Scalar lambda = Scalar::param("lambda");
    Scalar rho = Scalar::param("rho");
    bool star = true;
};

// Podles sphere in the primed basis. psi = 0: generator order e1', e0, em1'.
// psi != 0: generator order e0, e1', em1' with lambda = rho = 0.
inline PresentationPtr podles_sphere(const SphereParams& p = {}) {
    using detail::w;
    PresentationSpec s;
    Scalar q2 = Scalar::q(2), one_q2 = 1 + Scalar::q(2);
    if (p.psi_zero) {
        enum { e1 = 0, e0 = 1, em1 = 2 };
        s.name = "podles-sphere";
        s.gens = {{"e1'", 1, -1, em1, -1, 1}, {"e0", 0, 0, e0, -1, 1}, {"em1'", -1, 1, e1, -1, 1}};
        s.weights = {2, 1, 2};
        s.has_star = p.star;
        if (!p.star)
            for (auto& g : s.gens) g.star = -1;
        s.relations = {
            w({e0, e1}, one_q2) - w({e1, e0}, q2 * one_q2) - w({e1}, p.lambda),
            (w({e1, em1}) - w({em1, e1})) * q2 + w({e0, e0}, 1 - Scalar::q(4)) - w({e0}, p.lambda),
            w({em1, e0}, one_q2) - w({e0, em1}, q2 * one_q2) - w({em1}, p.lambda),
            w({em1, e1}) + w({e0, e0}, one_q2) + w({e1, em1}, q2) - NCPoly(p.rho),
        };
        for (const auto* x : {&p.lambda, &p.rho})
            for (int v = 3; v < 64; ++v)
                if (x->contains_var(v)) s.parameters.push_back(variable_name(v));
    } else {
        if (p.star) throw StarNotAdmissible("the psi != 0 sphere admits no star structure for generic w");
        enum { e0 = 0, e1 = 1, em1 = 2 };
        s.name = "podles-sphere-psi";
        s.gens = {{"e0", 0, 0, -1, -1, 1}, {"e1'", 1, -1, -1, -1, 1}, {"em1'", -1, 1, -1, -1, 1}};
        s.weights = {1, 2, 2};
        s.has_star = false;
        Scalar z = Scalar::q(2) * Scalar::w(2), zi = z.inv();
        s.relations = {
            w({e1, e0}) - w({e0, e1}, zi),
            w({em1, e0}) - w({e0, em1}, z),
            w({e1, em1}) + w({e0, e0}, zi),
            w({em1, e1}) + w({e0, e0}, z),
        };
    }
    return build_presentation(s);
}

// Sphere relations in the unprimed basis with parameters lambda', rho'.
inline PresentationPtr sphere_unprimed() {
    using detail::w;
    enum { e1 = 0, e0 = 1, em1 = 2 };
    PresentationSpec s;
    s.name = "sphere-unprimed";
    s.gens = {{"e1", 1, -1, -1, -1, 1}, {"e0", 0, 0, -1, -1, 1}, {"em1", -1, 1, -1, -1, 1}};
    s.weights = {2, 1, 2};
    s.has_star = false;
    s.parameters = {"lambda'", "rho'"};
    Scalar lp = Scalar::param("lambda'"), rp = Scalar::param("rho'");
    Scalar q = Scalar::q(), q2 = Scalar::q(2), um4 = Scalar::u(-4);
    s.relations = {
        w({e0, e1}) - w({e1, e0}, q2) - w({e1}, lp),
        w({em1, e1}, q * um4) + w({e0, e0}, 1 - q2) - w({e1, em1}, q * um4) - w({e0}, lp),
        w({em1, e0}) - w({e0, em1}, q2) - w({em1}, lp),
        w({em1, e1}, -Scalar::q(-1) * um4) + w({e0, e0}) - w({e1, em1}, q * um4) - NCPoly(rp),
    };
    return build_presentation(s);
}

// Alternate sphere presentation in A, B, b. Generator order B, A, b.
inline PresentationPtr sphere_alternate() {
    using detail::w;
    enum { B = 0, A = 1, b = 2 };
    PresentationSpec s;
    s.name = "sphere-alternate";
    s.gens = {{"B", 1, -1, -1, -1, 1}, {"A", 0, 0, -1, -1, 1}, {"b", -1, 1, -1, -1, 1}};
    s.weights = {2, 1, 2};
    s.has_star = false;
    s.parameters = {"c"};
    Scalar c = Scalar::param("c"), q2 = Scalar::q(2);
    s.relations = {
        w({A, b}, q2) - w({b, A}),
        w({A, B}) - w({B, A}, q2),
        w({b, B}) + w({A, A}, Scalar::q(4)) + w({A}, q2) + NCPoly(c),
        w({B, b}) + w({A, A}) + w({A}) + NCPoly(c),
    };
    return build_presentation(s);
}

}  // namespace braidkit
