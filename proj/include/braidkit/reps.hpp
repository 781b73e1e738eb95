#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <string>
#include <vector>

#include "braidkit/errors.hpp"
#include "braidkit/scalar.hpp"

namespace braidkit {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;

// l is stored doubled so half-integers stay exact.
struct RepParams {
    int two_l = 1;
    double psi = 0.0;
    int sign = 1;
    NumericContext ctx;
};

struct RepSet {
    CMatrix E, F, K, Kstar;
    std::vector<double> m;  // basis labels, index i <-> m = -l + i
    double q = 1.0;
    double phi = 0.0;
    std::size_t dim() const { return m.size(); }
};

// [n]_q as a numeric sum q^{n-1} + q^{n-3} + ... + q^{1-n}, regular at q = 1.
inline double q_number_numeric(int n, double q) {
    if (n < 0) return -q_number_numeric(-n, q);
    double r = 0;
    for (int j = 0; j < n; ++j) r += std::pow(q, n - 1 - 2 * j);
    return r;
}

inline RepSet build_rep(const RepParams& p) {
    if (p.two_l < 0) throw PreconditionError("l must be non-negative");
    if (p.sign != 1 && p.sign != -1) throw PreconditionError("sign must be +1 or -1");
    const int n = p.two_l + 1;
    const double q = p.ctx.q, phi = p.ctx.phi;
    RepSet r;
    r.q = q;
    r.phi = phi;
    r.E = CMatrix::Zero(n, n);
    r.F = CMatrix::Zero(n, n);
    r.K = CMatrix::Zero(n, n);
    r.Kstar = CMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        // work with doubled labels: 2m = 2i - 2l
        int tm = 2 * i - p.two_l;
        double m = tm / 2.0;
        r.m.push_back(m);
        cplx k = std::pow(q, m) * std::polar(1.0, -4 * m * phi - p.psi);
        r.K(i, i) = k;
        r.Kstar(i, i) = std::conj(k);
        int lm = (p.two_l - tm) / 2, lp = (p.two_l + tm) / 2;  // l - m, l + m
        if (i + 1 < n) r.F(i + 1, i) = p.sign * std::sqrt(q_number_numeric(lm, q) * q_number_numeric(lp + 1, q));
        if (i > 0) r.E(i - 1, i) = p.sign * std::sqrt(q_number_numeric(lp, q) * q_number_numeric(lm + 1, q));
    }
    return r;
}

inline RepSet direct_sum(const RepSet& a, const RepSet& b) {
    auto ds = [](const CMatrix& x, const CMatrix& y) {
        CMatrix z = CMatrix::Zero(x.rows() + y.rows(), x.cols() + y.cols());
        z.topLeftCorner(x.rows(), x.cols()) = x;
        z.bottomRightCorner(y.rows(), y.cols()) = y;
        return z;
    };
    RepSet r;
    r.E = ds(a.E, b.E);
    r.F = ds(a.F, b.F);
    r.K = ds(a.K, b.K);
    r.Kstar = ds(a.Kstar, b.Kstar);
    r.m = a.m;
    r.m.insert(r.m.end(), b.m.begin(), b.m.end());
    r.q = a.q;
    r.phi = a.phi;
    return r;
}

inline double op_norm(const CMatrix& x) {
    if (x.size() == 0) return 0;
    Eigen::JacobiSVD<CMatrix> svd(x);
    return svd.singularValues()(0);
}

struct RelationReport {
    std::map<std::string, double> residuals;
    double max_residual = 0;
    double tol = 0;
    bool pass() const { return max_residual <= tol; }
};

// Defining relations and their conjugates evaluated in operator norm.
inline RelationReport check_relations(const RepSet& r, double tol) {
    if (!(tol > 0)) throw PreconditionError("tolerance must be positive");
    const double q = r.q;
    const cplx a = q * std::polar(1.0, -4 * r.phi), ac = std::conj(a);
    const CMatrix& E = r.E;
    const CMatrix& F = r.F;
    const CMatrix& K = r.K;
    const CMatrix& Ks = r.Kstar;
    const Eigen::Index n = E.rows();
    CMatrix I = CMatrix::Identity(n, n);
    CMatrix Ki = K.inverse(), Ksi = Ks.inverse();
    CMatrix cartan;
    if (std::abs(q - 1) > 1e-6) {
        cartan = (K * Ks - Ki * Ksi) / (1 / q - q);
    } else {
        // limit q -> 1 of (q^{2m} - q^{-2m}) / (q^{-1} - q)
        cartan = CMatrix::Zero(n, n);
        for (Eigen::Index i = 0; i < n; ++i) cartan(i, i) = -2 * r.m[static_cast<std::size_t>(i)];
    }
    RelationReport rep;
    rep.tol = tol;
    rep.residuals["ek = q u^-4 ke"] = op_norm(E * K - a * K * E);
    rep.residuals["kf = q u^-4 fk"] = op_norm(K * F - a * F * K);
    rep.residuals["ef - fe = (kk* - k^-1 k*^-1)/(q^-1 - q)"] = op_norm(E * F - F * E - cartan);
    rep.residuals["kk* = k*k"] = op_norm(K * Ks - Ks * K);
    rep.residuals["k*f = q u^4 fk*"] = op_norm(Ks * F - ac * F * Ks);
    rep.residuals["ek* = q u^4 k*e"] = op_norm(E * Ks - ac * Ks * E);
    rep.residuals["k k^-1 = 1"] = op_norm(K * Ki - I);
    rep.residuals["k* = k^dagger"] = op_norm(Ks - K.adjoint());
    for (const auto& [name, v] : rep.residuals) rep.max_residual = std::max(rep.max_residual, v);
    return rep;
}

// Dimension of the commutant of {E, F, K, K*}. Singular values within two decades
// of the threshold are treated as ambiguous.
inline int commutant_dimension(const RepSet& r, double tol = 1e-8) {
    const Eigen::Index n = r.E.rows();
    if (n == 0) return 0;
    CMatrix I = CMatrix::Identity(n, n);
    CMatrix stacked(4 * n * n, n * n);
    const CMatrix* ops[] = {&r.E, &r.F, &r.K, &r.Kstar};
    for (int j = 0; j < 4; ++j) {
        const CMatrix& X = *ops[j];
        // vec(XM - MX) = (I (x) X - X^T (x) I) vec(M)
        CMatrix op = CMatrix::Zero(n * n, n * n);
        for (Eigen::Index a = 0; a < n; ++a)
            for (Eigen::Index b = 0; b < n; ++b) {
                op.block(a * n, b * n, n, n) += I(a, b) * X;
                op.block(a * n, b * n, n, n) -= X(b, a) * I;
            }
        stacked.block(j * n * n, 0, n * n, n * n) = op;
    }
    Eigen::JacobiSVD<CMatrix> svd(stacked);
    const auto& sv = svd.singularValues();
    double smax = sv(0);
    if (smax == 0) return static_cast<int>(n * n);
    double thr = tol * smax;
    int dim = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > thr / 100 && sv(i) < thr * 100)
            throw IllConditioned("singular value " + std::to_string(sv(i) / smax) + " is close to the threshold");
        if (sv(i) <= thr) ++dim;
    }
    return dim;
}

// Max distance between the K spectrum and {q^m e^{-4imphi - i psi}} as multisets.
inline double k_spectrum_mismatch(const RepSet& r, double psi) {
    Eigen::ComplexEigenSolver<CMatrix> es(r.K);
    std::vector<cplx> got(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
    std::vector<cplx> want;
    for (double m : r.m) want.push_back(std::pow(r.q, m) * std::polar(1.0, -4 * m * r.phi - psi));
    double worst = 0;
    std::vector<bool> used(want.size(), false);
    for (const auto& g : got) {
        double best = 1e300;
        std::size_t bi = 0;
        for (std::size_t i = 0; i < want.size(); ++i)
            if (!used[i] && std::abs(g - want[i]) < best) best = std::abs(g - want[i]), bi = i;
        used[bi] = true;
        worst = std::max(worst, best);
    }
    return worst;
}

struct SphereMatrices {
    CMatrix e, f, k, kstar;  // basis order (e'_1, e_0, e'_{-1})
};

// Fundamental action on the primed sphere generators, written out entry by entry.
inline SphereMatrices sphere_fundamental_action(const NumericContext& ctx) {
    const double q = ctx.q, sq = std::sqrt(q);
    const cplx u2 = std::polar(1.0, 2 * ctx.phi), u4 = u2 * u2;
    SphereMatrices s;
    s.e = s.f = s.k = s.kstar = CMatrix::Zero(3, 3);
    s.k(0, 0) = q / u4;
    s.k(1, 1) = 1;
    s.k(2, 2) = u4 / q;
    s.kstar(0, 0) = q * u4;
    s.kstar(1, 1) = 1;
    s.kstar(2, 2) = 1.0 / (q * u4);
    s.f(0, 1) = -u2 * sq;
    s.f(1, 2) = (1 + q * q) / (u2 * sq);
    s.e(1, 0) = -(1 + q * q) / (u2 * q * sq);
    s.e(2, 1) = u2 / sq;
    return s;
}

// The same action obtained from build_rep(l = 1, psi = 0, sign +) by the basis change
// e_1 = -u^2 q t^{-1} e'_1, e_{-1} = u^2 t^{-1} e'_{-1}, t = sqrt(1 + q^2).
inline SphereMatrices sphere_action_from_rep(const NumericContext& ctx) {
    RepSet r = build_rep(RepParams{2, 0.0, 1, ctx});
    const double q = ctx.q, t = std::sqrt(1 + q * q);
    const cplx u2 = std::polar(1.0, 2 * ctx.phi);
    // columns: primed vectors in the rep basis (e_{-1}, e_0, e_1)
    CMatrix P = CMatrix::Zero(3, 3);
    P(2, 0) = -1.0 / (u2 * q) * t;
    P(1, 1) = 1;
    P(0, 2) = t / u2;
    CMatrix Pi = P.inverse();
    return SphereMatrices{Pi * r.E * P, Pi * r.F * P, Pi * r.K * P, Pi * r.Kstar * P};
}

struct EigenvalueWitness {
    std::vector<cplx> growing;    // q^{-2k} e^{-2ik psi} lambda0
    std::vector<cplx> shrinking;  // q^{2k} e^{2ik psi} lambda0
    std::vector<double> magnitudes;
    bool strictly_increasing = true;
    int first_k_exceeding(double bound) const {
        for (std::size_t k = 0; k < magnitudes.size(); ++k)
            if (magnitudes[k] > bound) return static_cast<int>(k);
        return -1;
    }
};

inline EigenvalueWitness unbounded_eigenvalue_witness(double q, double psi, cplx lambda0, int k_max) {
    if (!(q > 0 && q < 1)) throw PreconditionError("witness requires 0 < q < 1");
    if (lambda0 == cplx(0)) throw PreconditionError("witness requires a nonzero eigenvalue");
    if (k_max < 0) throw PreconditionError("k_max must be non-negative");
    EigenvalueWitness w;
    for (int k = 0; k <= k_max; ++k) {
        w.growing.push_back(std::pow(q, -2 * k) * std::polar(1.0, -2 * k * psi) * lambda0);
        w.shrinking.push_back(std::pow(q, 2 * k) * std::polar(1.0, 2 * k * psi) * lambda0);
        w.magnitudes.push_back(std::abs(w.growing.back()));
        if (k > 0 && !(w.magnitudes[static_cast<std::size_t>(k)] > w.magnitudes[static_cast<std::size_t>(k - 1)]))
            w.strictly_increasing = false;
    }
    return w;
}

}  // namespace braidkit
