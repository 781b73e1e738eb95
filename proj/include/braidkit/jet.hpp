#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "braidkit/presentation.hpp"
#include "braidkit/reps.hpp"

namespace braidkit {

// First-order jet a0 + eps a1 with coefficients in a ring T (eps^2 = 0).
template <class T>
struct Jet {
    T value{};
    T d{};
    Jet() = default;
    Jet(T v, T dv) : value(std::move(v)), d(std::move(dv)) {}
    Jet operator+(const Jet& o) const { return {value + o.value, d + o.d}; }
    Jet operator-(const Jet& o) const { return {value - o.value, d - o.d}; }
    Jet operator*(const Jet& o) const { return {value * o.value, value * o.d + d * o.value}; }
};

using JetScalar = Jet<Scalar>;
using JetPoly = Jet<NCPoly>;

inline JetPoly jet_scale(const JetScalar& c, const JetPoly& p) {
    return {p.value * c.value, p.d * c.value + p.value * c.d};
}

// Limiting algebra in generators f, H, H*, e with [e,H] = [e,H*] = e, [H,f] = [H*,f] = f,
// [H,H*] = 0 and [f,e] = c H + conj(c) H*, c = 1 + i r.
inline PresentationPtr u2_limit_algebra() {
    enum { f = 0, H = 1, Hs = 2, e = 3 };
    PresentationSpec s;
    s.name = "u2-limit";
    s.gens = {{"f", 0, 0, e, -1, 1}, {"H", 0, 0, Hs, -1, 1}, {"H*", 0, 0, H, -1, 1}, {"e", 0, 0, f, -1, 1}};
    s.parameters = {"r"};
    s.braided = false;
    s.graded = false;
    Scalar c = 1 + Scalar::i() * Scalar::param("r");
    auto w = [](Word x, const Scalar& k = Scalar(1)) { return NCPoly::word(std::move(x), k); };
    s.relations = {
        w({e, H}) - w({H, e}) - w({e}),
        w({e, Hs}) - w({Hs, e}) - w({e}),
        w({H, f}) - w({f, H}) - w({f}),
        w({Hs, f}) - w({f, Hs}) - w({f}),
        w({Hs, H}) - w({H, Hs}),
        w({f, e}) - w({e, f}) - w({H}, c) - w({Hs}, c.conj()),
    };
    return build_presentation(s);
}

struct JetCheck {
    std::string relation;
    bool zeroth_order = false;  // value part vanishes
    bool first_order = false;   // first-order part reduces to zero in the limit algebra
    std::string first_order_raw;
};

struct LimitSample {
    double q = 1, phi = 0, h_abs = 0, residual = 0;
};

struct ClassicalLimitReport {
    std::vector<JetCheck> jets;
    std::string fe_commutator;        // first-order [f,e] in terms of H, H*
    double obstruction_magnitude = 0;  // |1 - e^{-4 i phi}| at phi = pi/4
    std::vector<LimitSample> samples;
    double slope = 0;
    bool pass() const {
        for (const auto& j : jets)
            if (!j.zeroth_order || !j.first_order) return false;
        return obstruction_magnitude > 1e-12 && slope >= 0.9;
    }
};

namespace detail {

inline double loglog_slope(const std::vector<LimitSample>& s) {
    double n = static_cast<double>(s.size()), sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& p : s) {
        double x = std::log(p.h_abs), y = std::log(p.residual);
        sx += x, sy += y, sxx += x * x, sxy += x * y;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// Residual of the limiting relations with H = (K - 1)/h and H* = (K* - 1)/conj(h).
inline double limit_residual(const RepSet& r, cplx h) {
    const Eigen::Index n = r.E.rows();
    CMatrix I = CMatrix::Identity(n, n);
    CMatrix H = (r.K - I) / h, Hs = (r.Kstar - I) / std::conj(h);
    const CMatrix &E = r.E, &F = r.F;
    double res = 0;
    for (const CMatrix& x : {CMatrix(E * H - H * E - E), CMatrix(E * Hs - Hs * E - E), CMatrix(H * F - F * H - F),
                             CMatrix(Hs * F - F * Hs - F), CMatrix(H * Hs - Hs * H), CMatrix(F * E - E * F - H - Hs)})
        res = std::max(res, op_norm(x));
    return res;
}

}  // namespace detail

// Jet expansion with q e^{-4 i phi} = e^h, h = eps (1 + i r), k = 1 + h H, q = e^{eps},
// followed by a numeric approach to the limit along q_n -> 1, phi_n = (ln q_n)^2.
inline ClassicalLimitReport classical_limit_probe(int n_steps = 8) {
    ClassicalLimitReport rep;
    auto L = u2_limit_algebra();
    NCPoly e = L->g("e"), f = L->g("f"), H = L->g("H"), Hs = L->g("H*");
    Scalar c = 1 + Scalar::i() * Scalar::param("r"), cc = c.conj();
    auto P = [](const NCPoly& x) { return JetPoly{x, NCPoly()}; };
    JetPoly one{NCPoly(1), NCPoly()};
    JetPoly je = P(e), jf = P(f);
    JetPoly k{NCPoly(1), H * c}, ks{NCPoly(1), Hs * cc};
    JetPoly ki{NCPoly(1), H * (-c)}, ksi{NCPoly(1), Hs * (-cc)};
    JetScalar eh{Scalar(1), c}, ehc{Scalar(1), cc};  // e^h, e^{conj h}
    JetScalar qinv_minus_q{Scalar(0), Scalar(-2)};

    auto add = [&](const std::string& name, const JetPoly& x) {
        JetCheck j;
        j.relation = name;
        j.zeroth_order = x.value.is_zero();
        NCPoly d = L->nf(x.d);
        j.first_order = d.is_zero();
        j.first_order_raw = L->str(x.d);
        rep.jets.push_back(j);
    };
    add("ek = q u^-4 ke", je * k - jet_scale(eh, k * je));
    add("kf = q u^-4 fk", k * jf - jet_scale(eh, jf * k));
    add("ek* = q u^4 k*e", je * ks - jet_scale(ehc, ks * je));
    add("k*f = q u^4 fk*", ks * jf - jet_scale(ehc, jf * ks));
    add("kk* = k*k", k * ks - ks * k);
    add("(ef - fe)(q^-1 - q) = kk* - k^-1 k*^-1", jet_scale(qinv_minus_q, je * jf - jf * je) - (k * ks - ki * ksi));
    add("k k^-1 = 1", k * ki - one);

    // [f,e] read off from the first-order part of the Cartan relation
    NCPoly cartan = (k * ks - ki * ksi).d;
    rep.fe_commutator = L->str(cartan * Scalar::rational(1, 2));

    NumericContext obst;
    obst.q = 1;
    obst.phi = std::acos(-1.0) / 4;
    rep.obstruction_magnitude = std::abs((1 - Scalar::u(-4)).eval(obst));

    for (int s = 1; s <= n_steps; ++s) {
        LimitSample p;
        p.q = std::exp(-std::ldexp(1.0, -s));
        double lq = std::log(p.q);
        p.phi = lq * lq;
        cplx h(lq, -4 * p.phi);
        p.h_abs = std::abs(h);
        NumericContext ctx;
        ctx.q = p.q;
        ctx.phi = p.phi;
        p.residual = detail::limit_residual(build_rep(RepParams{2, 0.0, 1, ctx}), h);
        rep.samples.push_back(p);
    }
    rep.slope = detail::loglog_slope(rep.samples);
    return rep;
}

}  // namespace braidkit
