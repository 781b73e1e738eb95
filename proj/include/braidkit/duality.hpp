#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "braidkit/hopf.hpp"
#include "braidkit/presentations.hpp"

namespace braidkit {

// Braided pairing <h, a> between H and A, extended from a generator table.
class Pairing {
public:
    PresentationPtr H, A;
    std::map<std::pair<int, int>, Scalar> table;  // (H generator, A generator) -> value; default 0

    Pairing(PresentationPtr h, PresentationPtr a, std::map<std::pair<int, int>, Scalar> t)
        : H(std::move(h)), A(std::move(a)), table(std::move(t)) {}

    Scalar generator_value(int h, int a) const {
        auto it = table.find({h, a});
        return it == table.end() ? Scalar() : it->second;
    }

    // <h, a1 rest> = sum u^{2 d(h2) d(a1)} <h1, a1><h2, rest>
    // <h' g, a>    = sum u^{2 d(g) d(a1)} <h', a1><g, a2>
    Scalar pair_words(const Word& h, const Word& a) const {
        if (h.empty()) return counit_word(*A, a);
        if (a.empty()) return counit_word(*H, h);
        auto key = std::make_pair(h, a);
        {
            std::lock_guard<std::mutex> lock(memo_->mu);
            auto it = memo_->values.find(key);
            if (it != memo_->values.end()) return it->second;
        }
        Scalar r;
        if (a.size() >= 2) {
            Word a1{a.front()}, rest(a.begin() + 1, a.end());
            int da1 = A->delta(a1);
            for (const auto& [tw, c] : coproduct_word(H, h).terms()) {
                Scalar x = pair_words(tw[0], a1);
                if (x.is_zero()) continue;
                Scalar y = pair_words(tw[1], rest);
                if (y.is_zero()) continue;
                r += c * x * y * u_pow(cross_exponent(*H, H->delta(tw[1]), *A, da1));
            }
        } else if (h.size() >= 2) {
            Word hp(h.begin(), h.end() - 1), g{h.back()};
            int dg = H->delta(g);
            for (const auto& [tw, c] : coproduct_word(A, a).terms()) {
                Scalar x = pair_words(g, tw[1]);
                if (x.is_zero()) continue;
                Scalar y = pair_words(hp, tw[0]);
                if (y.is_zero()) continue;
                r += c * x * y * u_pow(cross_exponent(*H, dg, *A, A->delta(tw[0])));
            }
        } else {
            r = generator_value(h[0], a[0]);
        }
        std::lock_guard<std::mutex> lock(memo_->mu);
        memo_->values.emplace(key, r);
        return r;
    }

    Scalar pair(const NCPoly& h, const NCPoly& a) const {
        Scalar r;
        for (const auto& [wh, ch] : h.terms())
            for (const auto& [wa, ca] : a.terms()) r += ch * ca * pair_words(wh, wa);
        return r;
    }

private:
    struct Memo {
        std::mutex mu;
        std::map<std::pair<Word, Word>, Scalar> values;
    };
    std::shared_ptr<Memo> memo_ = std::make_shared<Memo>();
};

// The generator values of the pairing between U_{q,phi}(u-hat(2)) and SU_{q,phi}(2).
inline Pairing standard_pairing(PresentationPtr U = uq_hat_u2(), PresentationPtr SU = su_qphi2()) {
    Scalar s = Scalar::s(), si = Scalar::s(-1), u2 = Scalar::u(2), um2 = Scalar::u(-2);
    int a = SU->index("alpha"), as = SU->index("alpha*"), c = SU->index("gamma"), cs = SU->index("gamma*");
    int e = U->index("e"), f = U->index("f"), k = U->index("k"), ks = U->index("k*"), ki = U->index("k^-1"),
        ksi = U->index("k*^-1");
    std::map<std::pair<int, int>, Scalar> t{
        {{e, cs}, -Scalar::q(-1) * Scalar::u(-4)},
        {{f, c}, Scalar(1)},
        {{k, a}, si * u2},
        {{k, as}, s * um2},
        {{ks, a}, si * um2},
        {{ks, as}, s * u2},
        {{ki, a}, s * um2},
        {{ki, as}, si * u2},
        {{ksi, a}, s * u2},
        {{ksi, as}, si * um2},
    };
    return Pairing(std::move(U), std::move(SU), std::move(t));
}

enum class Side { left, right };

// An action of H on A; act(h, a) is h |> a for left actions and a <| h for right actions.
class Action {
public:
    using WordFn = std::function<NCPoly(const Word& h, const Word& a)>;

    std::string name;
    Side side = Side::left;
    PresentationPtr H, A;

    Action(std::string n, Side s, PresentationPtr h, PresentationPtr a, WordFn fn)
        : name(std::move(n)), side(s), H(std::move(h)), A(std::move(a)), fn_(std::move(fn)) {}

    NCPoly act_words(const Word& h, const Word& a) const {
        auto key = std::make_pair(h, a);
        {
            std::lock_guard<std::mutex> lock(memo_->mu);
            auto it = memo_->values.find(key);
            if (it != memo_->values.end()) return it->second;
        }
        NCPoly r = A->nf(fn_(h, a));
        std::lock_guard<std::mutex> lock(memo_->mu);
        memo_->values.emplace(key, r);
        return r;
    }

    NCPoly act(const NCPoly& h, const NCPoly& a) const {
        NCPoly r;
        for (const auto& [wh, ch] : h.terms())
            for (const auto& [wa, ca] : a.terms()) r += act_words(wh, wa) * (ch * ca);
        return r;
    }

private:
    struct Memo {
        std::mutex mu;
        std::map<std::pair<Word, Word>, NCPoly> values;
    };
    WordFn fn_;
    std::shared_ptr<Memo> memo_ = std::make_shared<Memo>();
};

// h |> x = sum u^{2 d(h) d(x1)} x1 <h, x2>
inline Action left_action(const Pairing& P) {
    auto H = P.H, A = P.A;
    return Action("left", Side::left, H, A, [P, H, A](const Word& h, const Word& x) {
        NCPoly r;
        int dh = H->delta(h);
        for (const auto& [tw, c] : coproduct_word(A, x).terms()) {
            Scalar v = P.pair_words(h, tw[1]);
            if (!v.is_zero()) r.add_term(tw[0], c * v * u_pow(cross_exponent(*H, dh, *A, A->delta(tw[0]))));
        }
        return r;
    });
}

// x <| h = sum u^{2 d(h) d(x2)} <h, x1> x2, the pairing read as a function A x H.
inline Action right_action(const Pairing& P) {
    auto H = P.H, A = P.A;
    return Action("right", Side::right, H, A, [P, H, A](const Word& h, const Word& x) {
        NCPoly r;
        int dh = H->delta(h);
        for (const auto& [tw, c] : coproduct_word(A, x).terms()) {
            Scalar v = P.pair_words(h, tw[0]);
            if (!v.is_zero()) r.add_term(tw[1], c * v * u_pow(cross_exponent(*H, dh, *A, A->delta(tw[1]))));
        }
        return r;
    });
}

// h |> g = sum u^{2 d(h2) d(g)} h1 g S(h2)
inline Action adjoint_action(const PresentationPtr& H) {
    return Action("adjoint", Side::left, H, H, [H](const Word& h, const Word& g) {
        NCPoly r;
        int dg = H->delta(g);
        NCPoly gp = NCPoly::word(g);
        for (const auto& [tw, c] : coproduct_word(H, h).terms()) {
            NCPoly t = H->mul(H->mul(NCPoly::word(tw[0]), gp), antipode_word(*H, tw[1]));
            r += t * (c * u_pow(H->braid_exponent(H->delta(tw[1]), dg)));
        }
        return r;
    });
}

// Left action given on generators, extended by h |> (ab) = sum u^{2 d(h2) d(a)} (h1 |> a)(h2 |> b)
// and (hg) |> a = h |> (g |> a).
using ActionTable = std::map<std::pair<int, int>, NCPoly>;

inline Action table_action(std::string name, PresentationPtr H, PresentationPtr A, ActionTable table) {
    auto tab = std::make_shared<ActionTable>(std::move(table));
    auto self = std::make_shared<std::function<NCPoly(const Word&, const Word&)>>();
    std::weak_ptr<std::function<NCPoly(const Word&, const Word&)>> weak = self;
    // generator acting on a word
    auto gen_on_word = std::make_shared<std::function<NCPoly(int, const Word&)>>();
    *gen_on_word = [H, A, tab, weak](int g, const Word& a) -> NCPoly {
        auto rec = weak.lock();
        if (a.empty()) return NCPoly(counit_word(*H, {g}));
        if (a.size() == 1) {
            auto it = tab->find({g, a[0]});
            return it == tab->end() ? NCPoly() : A->nf(it->second);
        }
        Word a1{a.front()}, rest(a.begin() + 1, a.end());
        int da1 = A->delta(a1);
        NCPoly r;
        for (const auto& [tw, c] : coproduct_word(H, {g}).terms()) {
            NCPoly x = (*rec)(tw[0], a1);
            if (x.is_zero()) continue;
            NCPoly y = (*rec)(tw[1], rest);
            if (y.is_zero()) continue;
            r += A->mul(x, y) * (c * u_pow(cross_exponent(*H, H->delta(tw[1]), *A, da1)));
        }
        return r;
    };
    *self = [A, gen_on_word, weak](const Word& h, const Word& a) -> NCPoly {
        if (h.empty()) return A->word_nf(a);
        auto rec = weak.lock();
        Word rest(h.begin() + 1, h.end());
        // literal words are expanded by Leibniz so relations are genuinely tested
        NCPoly inner = rest.empty() ? NCPoly::word(a) : (*rec)(rest, a);
        NCPoly r;
        for (const auto& [w, c] : inner.terms()) r += (*gen_on_word)(h.front(), w) * c;
        return r;
    };
    // keep the recursive closure alive for the lifetime of the action
    return Action(std::move(name), Side::left, std::move(H), std::move(A),
                  [self](const Word& h, const Word& a) { return (*self)(h, a); });
}

// Complete a table on grouplike inverses: if g |> x = c x for every generator x then g^-1 |> x = c^-1 x.
inline void add_inverse_eigenvalues(ActionTable& t, const Presentation& H, const Presentation& A) {
    for (int g = 0; g < static_cast<int>(H.size()); ++g) {
        int gi = H.info(g).inverse;
        if (gi < 0) continue;
        bool has_g = false, has_gi = false;
        for (int x = 0; x < static_cast<int>(A.size()); ++x) {
            has_g |= t.count({g, x}) > 0;
            has_gi |= t.count({gi, x}) > 0;
        }
        if (!has_g || has_gi) continue;
        for (int x = 0; x < static_cast<int>(A.size()); ++x) {
            auto it = t.find({g, x});
            if (it == t.end()) throw PreconditionError("grouplike " + H.info(g).id + " has no eigenvalue on " + A.info(x).id);
            Scalar c = it->second.coeff({x});
            if (it->second.size() != 1 || c.is_zero())
                throw PreconditionError("grouplike " + H.info(g).id + " does not act diagonally on " + A.info(x).id);
            t[{gi, x}] = NCPoly::gen(x) * c.inv();
        }
    }
}

namespace detail {

inline std::string word_or_one(const Word& w, const Generators& g) { return w.empty() ? "1" : word_str(w, g); }

inline std::vector<Word> generator_words(const Presentation& P) {
    std::vector<Word> out;
    for (int g = 0; g < static_cast<int>(P.size()); ++g) out.push_back({g});
    return out;
}

}  // namespace detail

// Module-algebra axioms on generators of H and normal words of A up to the degree.
inline AxiomReport check_module_algebra(const Action& act, std::size_t degree) {
    if (degree < 1) throw PreconditionError("degree must be at least 1");
    const auto& H = act.H;
    const auto& A = act.A;
    AxiomReport rep;
    rep.name = "module-algebra:" + act.name;
    auto hs = [&](const Word& w) { return detail::word_or_one(w, H->gens); };
    auto as = [&](const Word& w) { return detail::word_or_one(w, A->gens); };
    auto pstr = [&](const NCPoly& p) { return A->str(p); };
    auto words = normal_words(*A, degree);
    auto gens = detail::generator_words(*H);
    bool left = act.side == Side::left;

    for (const auto& a : words) {
        rep.add_residual("unit-acts-trivially", as(a), act.act_words({}, a) - A->word_nf(a), pstr);
        for (const auto& h : gens) {
            std::string el = hs(h) + "," + as(a);
            NCPoly r = act.act_words(h, a);
            if (!r.is_zero()) {
                bool ok = true;
                try {
                    ok = delta_degree(r, A->gens) == H->delta(h) + A->delta(a);
                } catch (const Inhomogeneous&) {
                    ok = false;
                }
                rep.add("grading", el, ok, pstr(r));
            }
            // Xi compatibility: Xi(g (x) (h |> a)) phases agree with Psi then Xi
            for (const auto& g : gens) {
                NCPoly lhs_p;
                for (const auto& [d, comp] : delta_components(r, A->gens))
                    lhs_p += comp * u_pow(cross_exponent(*H, H->delta(g), *A, d));
                NCPoly rhs_p = r * u_pow(cross_exponent(*H, H->delta(g), *H, H->delta(h)) +
                                         cross_exponent(*H, H->delta(g), *A, A->delta(a)));
                rep.add_residual("xi-action-compatible", hs(g) + "," + el, lhs_p - rhs_p, pstr);
                // composition
                if (a.size() < degree) {
                    NCPoly hg = H->word_nf(concat(h, g));
                    NCPoly lhs = act.act(hg, NCPoly::word(a));
                    NCPoly rhs = left ? act.act(NCPoly::word(h), act.act_words(g, a)) : act.act(NCPoly::word(g), r);
                    rep.add_residual("composition", hs(h) + "*" + hs(g) + "," + as(a), lhs - rhs, pstr);
                }
            }
        }
    }
    for (const auto& h : gens) {
        rep.add_residual("acts-on-unit", hs(h), act.act_words(h, {}) - NCPoly(counit_word(*H, h)), pstr);
        auto d = coproduct_word(H, h);
        for (const auto& a : words)
            for (const auto& b : words) {
                if (a.empty() || b.empty() || a.size() + b.size() > degree) continue;
                NCPoly lhs = act.act(NCPoly::word(h), A->word_nf(concat(a, b)));
                NCPoly rhs;
                int da = A->delta(a), db = A->delta(b);
                for (const auto& [tw, c] : d.terms()) {
                    int e = left ? cross_exponent(*H, H->delta(tw[1]), *A, da) : cross_exponent(*H, H->delta(tw[0]), *A, db);
                    rhs += A->mul(act.act_words(tw[0], a), act.act_words(tw[1], b)) * (c * u_pow(e));
                }
                rep.add_residual("leibniz", hs(h) + "," + as(a) + "*" + as(b), lhs - rhs, pstr);
            }
        // the action descends to the quotient of A
        for (const auto& r : A->closed_relations) {
            NCPoly x;
            for (const auto& [w, c] : r.terms()) x += act.act_words(h, w) * c;
            rep.add_residual("relations-of-module", hs(h) + "," + pstr(r), A->nf(x), pstr);
        }
    }
    // relations of H act as zero, the action being built by composition
    auto compose = [&](const Word& h, const Word& a) {
        NCPoly x = A->word_nf(a);
        if (left) {
            for (auto it = h.rbegin(); it != h.rend(); ++it) x = act.act(NCPoly::word({*it}), x);
        } else {
            for (int g : h) x = act.act(NCPoly::word({g}), x);
        }
        return x;
    };
    for (const auto& r : H->closed_relations)
        for (const auto& a : words) {
            if (a.size() >= degree) continue;
            NCPoly x;
            for (const auto& [w, c] : r.terms()) x += compose(w, a) * c;
            rep.add_residual("relations-of-algebra", H->str(r) + "," + as(a), A->nf(x), pstr);
        }
    return rep;
}

// <S h, a> = <h, S a>, the product/coproduct rules, counits, phase identities and well-definedness.
inline AxiomReport check_pairing_properties(const Pairing& P, std::size_t degree, std::size_t relation_degree = 3) {
    const auto& H = P.H;
    const auto& A = P.A;
    AxiomReport rep;
    rep.name = "pairing";
    auto hs = [&](const Word& w) { return detail::word_or_one(w, H->gens); };
    auto as = [&](const Word& w) { return detail::word_or_one(w, A->gens); };
    auto sstr = [](const Scalar& s) { return s.str(); };
    auto hw = normal_words(*H, degree);
    auto aw = normal_words(*A, degree);

    for (const auto& h : hw)
        for (const auto& a : aw) {
            std::string el = hs(h) + "," + as(a);
            Scalar v = P.pair_words(h, a);
            rep.add_residual("antipode", el, P.pair(antipode_word(*H, h), NCPoly::word(a)) - P.pair(NCPoly::word(h), antipode_word(*A, a)),
                             sstr);
            if (h.empty()) rep.add_residual("counit-H", el, v - counit_word(*A, a), sstr);
            if (a.empty()) rep.add_residual("counit-A", el, v - counit_word(*H, h), sstr);
            // phase identities: the pairing only sees d(h) + d(a) = 0
            for (int g = 0; g < static_cast<int>(A->size()); ++g) {
                int e = cross_exponent(*A, A->info(g).delta(), *A, A->delta(a) + H->delta(h));
                rep.add_residual("phase-A", el + "," + as({g}), v * u_pow(e) - v, sstr);
            }
            for (int g = 0; g < static_cast<int>(H->size()); ++g) {
                int e = cross_exponent(*H, H->info(g).delta(), *H, H->delta(h) + A->delta(a));
                rep.add_residual("phase-H", hs({g}) + "," + el, v * u_pow(e) - v, sstr);
            }
        }
    // <h, ab> and <hg, a> through the reduced products
    for (const auto& h : hw)
        for (const auto& a : aw)
            for (const auto& b : aw) {
                if (a.empty() || b.empty() || a.size() + b.size() > degree) continue;
                Scalar lhs = P.pair(NCPoly::word(h), A->word_nf(concat(a, b)));
                Scalar rhs;
                for (const auto& [tw, c] : coproduct_word(H, h).terms())
                    rhs += c * P.pair_words(tw[0], a) * P.pair_words(tw[1], b) *
                           u_pow(cross_exponent(*H, H->delta(tw[1]), *A, A->delta(a)));
                rep.add_residual("product-in-A", hs(h) + "," + as(a) + "*" + as(b), lhs - rhs, sstr);
            }
    for (const auto& h : hw)
        for (const auto& g : hw)
            for (const auto& a : aw) {
                if (h.empty() || g.empty() || h.size() + g.size() > degree) continue;
                Scalar lhs = P.pair(H->word_nf(concat(h, g)), NCPoly::word(a));
                Scalar rhs;
                for (const auto& [tw, c] : coproduct_word(A, a).terms())
                    rhs += c * P.pair_words(h, tw[0]) * P.pair_words(g, tw[1]) *
                           u_pow(cross_exponent(*H, H->delta(g), *A, A->delta(tw[0])));
                rep.add_residual("product-in-H", hs(h) + "*" + hs(g) + "," + as(a), lhs - rhs, sstr);
            }
    // relations pair to zero
    auto aw3 = normal_words(*A, relation_degree);
    auto hw3 = normal_words(*H, relation_degree);
    for (const auto& r : H->closed_relations)
        for (const auto& a : aw3) rep.add_residual("relations-of-H", H->str(r) + "," + as(a), P.pair(r, NCPoly::word(a)), sstr);
    for (const auto& r : A->closed_relations)
        for (const auto& h : hw3) rep.add_residual("relations-of-A", hs(h) + "," + A->str(r), P.pair(NCPoly::word(h), r), sstr);
    return rep;
}

// Tensor star phase phi(x, y) = t^x u^{-2xy}; t stands for e^alpha.
struct StarPhaseModel {
    Scalar t = Scalar(1);

    static StarPhaseModel formal() { return StarPhaseModel{Scalar::param("t_alpha")}; }

    Scalar phase(int x, int y) const { return t.pow(x) * u_pow(-2 * x * y); }

    // phi(g + h, a) = phi(h, g + a) phi(g, a) u^{2 h g}
    Scalar residual_1(int h, int g, int a) const {
        return phase(g + h, a) - phase(h, g + a) * phase(g, a) * u_pow(2 * h * g);
    }
    // phi(h1 + h2, a + b) = phi(h1, a) phi(h2, b) u^{-2 h2 a} u^{-2 h1 b}
    Scalar residual_2(int h1, int h2, int a, int b) const {
        return phase(h1 + h2, a + b) - phase(h1, a) * phase(h2, b) * u_pow(-2 * h2 * a - 2 * h1 * b);
    }
};

inline AxiomReport check_star_phase_model(const StarPhaseModel& m, int lo = -4, int hi = 4) {
    AxiomReport rep;
    rep.name = "star-phase-model";
    auto sstr = [](const Scalar& s) { return s.str(); };
    for (int x = lo; x <= hi; ++x)
        for (int y = lo; y <= hi; ++y)
            for (int z = lo; z <= hi; ++z) {
                std::string el = std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z);
                rep.add_residual("s_comp1", el, m.residual_1(x, y, z), sstr);
                for (int w = lo; w <= hi; ++w)
                    rep.add_residual("s_comp2", el + "," + std::to_string(w), m.residual_2(x, y, z, w), sstr);
            }
    return rep;
}

// (h |> a)* = phi(d(Sh), d(a)) (Sh)* |> a* for generators h and normal words a.
inline AxiomReport check_star_compatibility(const Action& act, std::size_t degree, const StarPhaseModel& m = {}) {
    if (act.side != Side::left) throw PreconditionError("star compatibility is stated for left actions");
    const auto& H = act.H;
    const auto& A = act.A;
    if (!H->has_star || !A->has_star) throw PreconditionError("both algebras need a star structure");
    AxiomReport rep;
    rep.name = "star:" + act.name;
    auto pstr = [&](const NCPoly& p) { return A->str(p); };
    for (const auto& a : normal_words(*A, degree))
        for (int g = 0; g < static_cast<int>(H->size()); ++g) {
            Word h{g};
            NCPoly lhs = A->star(act.act_words(h, a));
            NCPoly sh = antipode_word(*H, h);
            NCPoly rhs = act.act(H->star(sh), A->star(NCPoly::word(a))) * m.phase(H->delta(h), A->delta(a));
            rep.add_residual("star-compatible", detail::word_or_one(h, H->gens) + "," + detail::word_or_one(a, A->gens),
                             lhs - rhs, pstr);
        }
    return rep;
}

// Residual of the star compatibility when the free exponent is kept formal.
// Every nonzero residual vanishes at t = 1, which forces alpha = 0.
struct AlphaAnalysis {
    std::size_t nonzero_residuals = 0;
    bool all_vanish_at_alpha_zero = true;
};

inline AlphaAnalysis analyze_alpha(const Action& act, std::size_t degree) {
    AlphaAnalysis out;
    auto m = StarPhaseModel::formal();
    int t = param_index("t_alpha");
    const auto& A = act.A;
    const auto& H = act.H;
    for (const auto& a : normal_words(*A, degree))
        for (int g = 0; g < static_cast<int>(H->size()); ++g) {
            NCPoly lhs = A->star(act.act_words({g}, a));
            NCPoly rhs = act.act(H->star(antipode_word(*H, {g})), A->star(NCPoly::word(a))) *
                         m.phase(H->info(g).delta(), A->delta(a));
            NCPoly res = lhs - rhs;
            if (res.is_zero()) continue;
            ++out.nonzero_residuals;
            for (const auto& [w, c] : res.terms())
                if (!c.substitute(t, Scalar(1)).is_zero()) out.all_vanish_at_alpha_zero = false;
        }
    return out;
}

}  // namespace braidkit
