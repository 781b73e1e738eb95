#pragma once

#include <mutex>
#include <string>
#include <vector>

#include "braidkit/report.hpp"
#include "braidkit/tensor.hpp"

namespace braidkit {

inline Scalar u_pow(int e) { return e == 0 ? Scalar(1) : Scalar::u(e); }

inline void require_coalgebra(const Presentation& P) {
    if (!P.has_coalgebra()) throw PreconditionError(P.name + " has no coalgebra tables");
}

// Coproduct of a word, extended multiplicatively through the braided tensor square.
inline TensorPoly coproduct_word(const PresentationPtr& P, const Word& w) {
    require_coalgebra(*P);
    std::vector<PresentationPtr> slots{P, P};
    {
        std::lock_guard<std::mutex> lock(P->memo->mu);
        auto it = P->memo->coproduct.find(w);
        if (it != P->memo->coproduct.end()) return TensorPoly(slots, it->second);
    }
    TensorPoly r(slots);
    if (w.empty()) {
        r.add_term({Word{}, Word{}}, Scalar(1));
    } else if (w.size() == 1) {
        for (const auto& t : P->coproduct[static_cast<std::size_t>(w[0])])
            r += TensorPoly::simple(slots, {P->word_nf(t.left) * t.coeff, P->word_nf(t.right)});
    } else {
        Word prefix(w.begin(), w.end() - 1);
        r = braided_product(coproduct_word(P, prefix), coproduct_word(P, Word{w.back()}));
    }
    std::lock_guard<std::mutex> lock(P->memo->mu);
    P->memo->coproduct.emplace(w, r.terms());
    return r;
}

inline TensorPoly coproduct(const PresentationPtr& P, const NCPoly& p) {
    TensorPoly r({P, P});
    for (const auto& [w, c] : p.terms()) r += coproduct_word(P, w) * c;
    return r;
}

inline Scalar counit_word(const Presentation& P, const Word& w) {
    require_coalgebra(P);
    return detail::counit_word(w, P.counit);
}

inline Scalar counit(const Presentation& P, const NCPoly& p) {
    require_coalgebra(P);
    return detail::counit_poly(p, P.counit);
}

// S(w g) = u^{2 d(w) d(g)} S(g) S(w).
inline NCPoly antipode_word(const Presentation& P, const Word& w) {
    require_coalgebra(P);
    if (w.empty()) return NCPoly(1);
    {
        std::lock_guard<std::mutex> lock(P.memo->mu);
        auto it = P.memo->antipode.find(w);
        if (it != P.memo->antipode.end()) return it->second;
    }
    NCPoly r;
    int g = w.back();
    NCPoly sg = P.nf(P.antipode[static_cast<std::size_t>(g)]);
    if (w.size() == 1) {
        r = sg;
    } else {
        Word prefix(w.begin(), w.end() - 1);
        int e = P.braid_exponent(P.delta(prefix), P.info(g).delta());
        r = P.mul(sg, antipode_word(P, prefix)) * u_pow(e);
    }
    std::lock_guard<std::mutex> lock(P.memo->mu);
    P.memo->antipode.emplace(w, r);
    return r;
}

inline NCPoly antipode(const Presentation& P, const NCPoly& p) {
    NCPoly r;
    for (const auto& [w, c] : p.terms()) r += antipode_word(P, w) * c;
    return r;
}

// Psi(x (x) y) = u^{2 d(x) d(y)} y (x) x, componentwise in delta.
inline TensorPoly braid_psi(const PresentationPtr& P, const NCPoly& x, const NCPoly& y, bool inverse = false) {
    return braid_slots(TensorPoly::simple({P, P}, {x, y}), 0, inverse);
}

// Multiplication of a rank-2 tensor into the algebra.
inline NCPoly multiply_tensor(const TensorPoly& t) { return flatten(merge_slots(t, 0)); }

// Normal words of length <= degree, ordered by length then lexicographically.
inline std::vector<Word> normal_words(const Presentation& P, std::size_t degree) {
    std::vector<Word> out{Word{}};
    std::vector<Word> frontier{Word{}};
    for (std::size_t len = 1; len <= degree; ++len) {
        std::vector<Word> next;
        for (const auto& w : frontier)
            for (int g = 0; g < static_cast<int>(P.size()); ++g) {
                Word x = w;
                x.push_back(g);
                if (P.rs.is_normal(x)) next.push_back(x);
            }
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return out;
}

// Same presentation with u set to 1 and the flip as braiding.
inline PresentationPtr substitute_phase_one(const Presentation& P) {
    PresentationSpec s = map_spec_coeffs(P, [](const Scalar& c) { return c.substitute(var_u, Scalar(1)); });
    s.braided = false;
    s.name = P.name + "@phi=0";
    return build_presentation(s);
}

namespace detail {

inline int twist_form(const Generators& g, int x, int y) {
    const auto& a = g[static_cast<std::size_t>(x)];
    const auto& b = g[static_cast<std::size_t>(y)];
    return a.mu * b.nu - b.mu * a.nu;
}

inline int twist_beta(const Generators& g, const Word& w) {
    int b = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j) b += twist_form(g, w[i], w[j]);
    return b;
}

}  // namespace detail

// Graded twisting: x*y = u^{mu(x)nu(y) - mu(y)nu(x)} xy, Delta with u^{d(x1)d(x2)}, S with u^{d(x)^2}.
inline PresentationPtr twist(const Presentation& src) {
    if (!src.graded) throw UngradedGenerator("generator " + src.gens.front().id + " of " + src.name + " carries no grading");
    if (src.braided) throw PreconditionError("twist expects an unbraided source");
    const auto& G = src.gens;
    auto convert = [&](const NCPoly& p) {
        NCPoly r;
        for (const auto& [w, c] : p.terms()) r.add_term(w, c * u_pow(-detail::twist_beta(G, w)));
        return r;
    };
    PresentationSpec s = src;
    s.name = src.name + "-twisted";
    s.braided = true;
    std::vector<Rule> rules;
    for (const auto& r : src.rs.rules()) rules.push_back(Rule{r.lhs, convert(r.rhs) * u_pow(detail::twist_beta(G, r.lhs))});
    s.relations.clear();
    for (const auto& r : rules) s.relations.push_back(NCPoly::word(r.lhs) - r.rhs);
    s.rules = rules;
    for (auto& terms : s.coproduct)
        for (auto& t : terms)
            t.coeff *= u_pow(word_delta(t.left, G) * word_delta(t.right, G) - detail::twist_beta(G, t.left) -
                             detail::twist_beta(G, t.right));
    for (std::size_t i = 0; i < s.antipode.size(); ++i) {
        int d = G[i].delta();
        s.antipode[i] = convert(s.antipode[i]) * u_pow(d * d);
    }
    return build_presentation(s);
}

// Full braided Hopf axiom suite on normal words up to the given degree.
inline AxiomReport check_braided_hopf(const PresentationPtr& P, std::size_t degree) {
    if (degree < 1) throw PreconditionError("degree must be at least 1");
    require_coalgebra(*P);
    AxiomReport rep;
    rep.name = "hopf:" + P->name;
    const auto& G = P->gens;
    auto ws = [&](const Word& w) { return w.empty() ? std::string("1") : word_str(w, G); };
    auto tstr = [](const TensorPoly& t) { return t.str(); };
    auto pstr = [&](const NCPoly& p) { return P->str(p); };
    auto sstr = [](const Scalar& s) { return s.str(); };
    std::vector<PresentationPtr> two{P, P};
    auto delta_map = [&](const Word& w) { return coproduct_word(P, w); };
    auto words = normal_words(*P, degree);

    for (const auto& w : words) {
        std::string el = ws(w);
        TensorPoly d = coproduct_word(P, w);
        TensorPoly left = expand_slot(d, 0, two, delta_map);
        TensorPoly right = expand_slot(d, 1, two, delta_map);
        rep.add_residual("coassociativity", el, left - right, tstr);

        NCPoly wp = NCPoly::word(w);
        auto eps = [&](const Word& x) { return counit_word(*P, x); };
        rep.add_residual("counit-left", el, flatten(contract_slot(d, 0, eps)) - wp, pstr);
        rep.add_residual("counit-right", el, flatten(contract_slot(d, 1, eps)) - wp, pstr);

        auto S = [&](const Word& x) { return antipode_word(*P, x); };
        NCPoly unit = NCPoly(counit_word(*P, w));
        rep.add_residual("antipode-left", el, multiply_tensor(map_slot(d, 0, P, S)) - unit, pstr);
        rep.add_residual("antipode-right", el, multiply_tensor(map_slot(d, 1, P, S)) - unit, pstr);

        if (w.size() < degree) {
            for (int g = 0; g < static_cast<int>(P->size()); ++g) {
                Word gw = concat(Word{g}, w);
                std::string gel = ws(Word{g}) + "*" + el;
                NCPoly prod = P->word_nf(gw);
                rep.add_residual("coproduct-homomorphism", gel,
                                 coproduct(P, prod) - braided_product(coproduct_word(P, {g}), d), tstr);
                rep.add_residual("counit-homomorphism", gel,
                                 counit(*P, prod) - counit_word(*P, {g}) * counit_word(*P, w), sstr);
            }
        }
    }

    // S(xy) = m Psi (S x (x) S y) on pairs of normal words.
    for (const auto& x : words)
        for (const auto& y : words) {
            if (x.empty() || y.empty() || x.size() + y.size() > degree) continue;
            NCPoly lhs = antipode(*P, P->word_nf(concat(x, y)));
            NCPoly rhs = multiply_tensor(braid_psi(P, antipode_word(*P, x), antipode_word(*P, y)));
            rep.add_residual("antipode-antihomomorphism", ws(x) + "*" + ws(y), lhs - rhs, pstr);
        }

    for (const auto& r : P->closed_relations) {
        std::string el = pstr(r);
        rep.add_residual("coproduct-relations", el, coproduct(P, r), tstr);
        rep.add_residual("counit-relations", el, counit(*P, r), sstr);
        rep.add_residual("antipode-relations", el, P->nf(antipode(*P, r)), pstr);
        if (P->has_star) rep.add_residual("star-relations", el, P->star(r), pstr);
    }

    // Braiding naturality on generator triples and generator-word pairs.
    for (int a = 0; a < static_cast<int>(P->size()); ++a) {
        NCPoly x = NCPoly::gen(a);
        for (const auto& w : words) {
            if (w.empty() || w.size() >= degree) continue;
            NCPoly y = NCPoly::word(w);
            std::string el = ws({a}) + "," + ws(w);
            // Psi_{A, A(x)A}(x (x) Delta y) = (Delta (x) id) Psi(x (x) y)
            TensorPoly t = TensorPoly::simple({P, P}, {x, y});
            TensorPoly lhs1 = braid_slots(braid_slots(expand_slot(t, 1, two, delta_map), 0), 1);
            TensorPoly rhs1 = expand_slot(braid_slots(t, 0), 0, two, delta_map);
            rep.add_residual("psi-coproduct-natural", el, lhs1 - rhs1, tstr);
            // Psi_{A(x)A, A}(Delta x (x) y) = (id (x) Delta) Psi(x (x) y)
            TensorPoly lhs2 = braid_slots(braid_slots(expand_slot(t, 0, two, delta_map), 1), 0);
            TensorPoly rhs2 = expand_slot(braid_slots(t, 0), 1, two, delta_map);
            rep.add_residual("psi-coproduct-natural", el + "'", lhs2 - rhs2, tstr);
            // Psi(m(x (x) y) (x) z) = (id (x) m)(Psi (x) id)(id (x) Psi)(x (x) y (x) z)
            for (int c = 0; c < static_cast<int>(P->size()); ++c) {
                TensorPoly xyz = TensorPoly::simple({P, P, P}, {x, y, NCPoly::gen(c)});
                TensorPoly lhs3 = braid_psi(P, P->mul(x, y), NCPoly::gen(c));
                TensorPoly rhs3 = merge_slots(braid_slots(braid_slots(xyz, 1), 0), 1);
                rep.add_residual("psi-product-natural", el + "," + ws({c}), lhs3 - rhs3, tstr);
            }
            // Psi(Sx (x) y) = (id (x) S) Psi(x (x) y)
            auto S = [&](const Word& z) { return antipode_word(*P, z); };
            TensorPoly lhs4 = braid_psi(P, antipode(*P, x), y);
            TensorPoly rhs4 = map_slot(braid_slots(t, 0), 1, P, S);
            rep.add_residual("psi-antipode-natural", el, lhs4 - rhs4, tstr);
        }
    }

    if (P->has_star) {
        for (int g = 0; g < static_cast<int>(P->size()); ++g) {
            NCPoly x = NCPoly::gen(g);
            NCPoly y = antipode(*P, P->star(antipode(*P, P->star(x))));
            rep.add_residual("antipode-star-involution", ws({g}), y - x, pstr);
        }
    }
    return rep;
}

}  // namespace braidkit
