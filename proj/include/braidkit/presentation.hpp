#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "braidkit/ncpoly.hpp"

namespace braidkit {

struct CoproductTerm {
    Scalar coeff;
    Word left;
    Word right;
};

using CoproductTable = std::vector<std::vector<CoproductTerm>>;

struct PresentationSpec {
    std::string name;
    Generators gens;
    std::vector<std::string> parameters;
    std::vector<NCPoly> relations;  // each element means r = 0
    std::vector<int> weights;       // monomial-order weights; default 1
    CoproductTable coproduct;       // empty for plain algebras
    std::vector<Scalar> counit;
    std::vector<NCPoly> antipode;
    bool has_star = true;
    bool braided = true;   // braiding phase u^{2 delta delta}; otherwise the flip
    bool graded = true;    // mu, nu come from a character and may be used for twisting
    bool close = true;     // add star and inverse consequences before completion
    std::optional<std::vector<Rule>> rules;  // use these rules verbatim instead of completing
    std::size_t completion_len = 6;
};

class Presentation;
using PresentationPtr = std::shared_ptr<const Presentation>;

struct TensorWordLess {
    bool operator()(const std::vector<Word>& a, const std::vector<Word>& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        ShortLex sl;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (sl(a[i], b[i])) return true;
            if (sl(b[i], a[i])) return false;
        }
        return false;
    }
};

class Presentation : public PresentationSpec {
public:
    RewriteSystem rs;
    std::vector<NCPoly> closed_relations;

    int index(const std::string& id) const {
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (gens[i].id == id) return static_cast<int>(i);
        throw PreconditionError("unknown generator " + id + " in " + name);
    }
    NCPoly g(const std::string& id) const { return NCPoly::gen(index(id)); }
    std::size_t size() const { return gens.size(); }
    const GeneratorInfo& info(int g) const { return gens[static_cast<std::size_t>(g)]; }
    int delta(const Word& w) const { return word_delta(w, gens); }
    bool has_coalgebra() const { return !coproduct.empty(); }

    NCPoly nf(const NCPoly& p) const { return rs.normal_form(p); }
    NCPoly mul(const NCPoly& a, const NCPoly& b) const { return rs.multiply(a, b); }
    NCPoly word_nf(const Word& w) const { return rs.normal_form(NCPoly::word(w)); }
    NCPoly star(const NCPoly& p) const { return nf(braidkit::star(p, gens)); }
    std::string str(const NCPoly& p) const { return poly_str(p, gens); }

    // Braiding exponent of u for Psi(x (x) y) with degrees dx, dy.
    int braid_exponent(int dx, int dy) const { return braided ? 2 * dx * dy : 0; }

    // Memo tables used by the coalgebra layer.
    struct Memo {
        std::mutex mu;
        std::map<Word, std::map<std::vector<Word>, Scalar, TensorWordLess>> coproduct;
        std::map<Word, NCPoly> antipode;
    };
    std::shared_ptr<Memo> memo = std::make_shared<Memo>();
};

namespace detail {

inline MonomialOrder order_of(const PresentationSpec& s) {
    MonomialOrder o;
    o.weights = s.weights;
    o.weights.resize(s.gens.size(), 1);
    return o;
}

// Binomial a*xy + b*yx with inverse partners gives a*y'x + b*xy' (y invertible)
// and a*yx' + b*x'y (x invertible).
inline std::vector<NCPoly> inverse_consequences(const NCPoly& r, const Generators& gens) {
    std::vector<NCPoly> out;
    if (r.size() != 2) return out;
    auto it = r.terms().begin();
    const Word& w1 = it->first;
    Scalar c1 = it->second;
    ++it;
    const Word& w2 = it->first;
    Scalar c2 = it->second;
    if (w1.size() != 2 || w2.size() != 2) return out;
    if (!(w1[0] == w2[1] && w1[1] == w2[0]) || w1[0] == w1[1]) return out;
    int x = w1[0], y = w1[1];
    int yi = gens[static_cast<std::size_t>(y)].inverse;
    int xi = gens[static_cast<std::size_t>(x)].inverse;
    if (yi >= 0 && yi != x) {
        NCPoly p;
        p.add_term({yi, x}, c1);
        p.add_term({x, yi}, c2);
        out.push_back(p);
    }
    if (xi >= 0 && xi != y) {
        NCPoly p;
        p.add_term({y, xi}, c1);
        p.add_term({xi, y}, c2);
        out.push_back(p);
    }
    return out;
}

inline Scalar counit_word(const Word& w, const std::vector<Scalar>& counit) {
    Scalar r(1);
    for (int g : w) {
        r *= counit[static_cast<std::size_t>(g)];
        if (r.is_zero()) break;
    }
    return r;
}

inline Scalar counit_poly(const NCPoly& p, const std::vector<Scalar>& counit) {
    Scalar r;
    for (const auto& [w, c] : p.terms()) r += c * counit_word(w, counit);
    return r;
}

}  // namespace detail

inline PresentationPtr build_presentation(PresentationSpec spec) {
    const std::size_t n = spec.gens.size();
    if (n == 0) throw ValidationError("presentation has no generators");
    for (std::size_t i = 0; i < n; ++i) {
        const auto& g = spec.gens[i];
        if (spec.has_star) {
            if (g.star < 0 || static_cast<std::size_t>(g.star) >= n)
                throw ValidationError("generator " + g.id + " has no valid star partner");
            if (spec.gens[static_cast<std::size_t>(g.star)].star != static_cast<int>(i))
                throw ValidationError("star of star is not the identity on " + g.id);
            if (spec.graded && spec.gens[static_cast<std::size_t>(g.star)].delta() != -g.delta())
                throw ValidationError("star partner of " + g.id + " does not negate delta");
        }
        if (g.inverse >= 0) {
            if (static_cast<std::size_t>(g.inverse) >= n) throw ValidationError("invalid inverse partner of " + g.id);
            const auto& gi = spec.gens[static_cast<std::size_t>(g.inverse)];
            if (gi.inverse != static_cast<int>(i)) throw ValidationError("inverse partner of " + g.id + " is not mutual");
            if (gi.mu != -g.mu || gi.nu != -g.nu) throw ValidationError("inverse partner of " + g.id + " does not negate degrees");
        }
    }
    if (!spec.coproduct.empty()) {
        if (spec.coproduct.size() != n || spec.counit.size() != n || spec.antipode.size() != n)
            throw ValidationError("coalgebra tables must cover every generator");
    }
    for (const auto& r : spec.relations) {
        if (r.is_zero()) continue;
        try {
            delta_degree(r, spec.gens);
        } catch (const Inhomogeneous&) {
            throw ValidationError("relation is not delta-homogeneous: " + poly_str(r, spec.gens));
        }
    }

    auto p = std::make_shared<Presentation>();
    static_cast<PresentationSpec&>(*p) = spec;
    MonomialOrder order = detail::order_of(spec);

    std::vector<NCPoly> all;
    for (const auto& r : spec.relations)
        if (!r.is_zero()) all.push_back(r);
    if (spec.close) {
        std::size_t base = all.size();
        if (spec.has_star)
            for (std::size_t i = 0; i < base; ++i) all.push_back(braidkit::star(all[i], spec.gens));
        std::size_t with_star = all.size();
        for (std::size_t i = 0; i < with_star; ++i)
            for (auto& c : detail::inverse_consequences(all[i], spec.gens)) all.push_back(c);
        for (std::size_t i = 0; i < n; ++i) {
            int j = spec.gens[i].inverse;
            if (j < 0) continue;
            all.push_back(NCPoly::word({static_cast<int>(i), j}) - NCPoly(1));
        }
    }
    if (spec.rules) {
        p->rs = RewriteSystem(order, *spec.rules);
    } else {
        p->rs = complete(order, all, spec.completion_len);
    }
    for (const auto& r : p->rs.rules()) p->closed_relations.push_back(NCPoly::word(r.lhs) - r.rhs);

    for (const auto& r : p->closed_relations) {
        if (spec.graded || spec.braided) {
            try {
                delta_degree(r, spec.gens);
            } catch (const Inhomogeneous&) {
                throw ValidationError("rewrite rule is not delta-homogeneous: " + poly_str(r, spec.gens));
            }
        }
        if (p->has_coalgebra() && !detail::counit_poly(r, spec.counit).is_zero())
            throw ValidationError("counit is not a homomorphism on relation " + poly_str(r, spec.gens));
        if (spec.has_star && !p->rs.normal_form(braidkit::star(r, spec.gens)).is_zero())
            throw ValidationError("star image of relation does not reduce to zero: " + poly_str(r, spec.gens));
    }
    for (const auto& r : spec.relations)
        if (!p->rs.normal_form(r).is_zero())
            throw ValidationError("stated relation does not reduce to zero: " + poly_str(r, spec.gens));
    return p;
}

// Relations and tables with every coefficient mapped by f.
template <class F>
PresentationSpec map_spec_coeffs(const Presentation& p, F&& f) {
    PresentationSpec s = p;
    std::vector<Rule> rules;
    for (const auto& r : p.rs.rules()) rules.push_back(Rule{r.lhs, r.rhs.map_coeffs(f)});
    s.relations.clear();
    for (const auto& r : rules) s.relations.push_back(NCPoly::word(r.lhs) - r.rhs);
    s.rules = rules;
    for (auto& terms : s.coproduct)
        for (auto& t : terms) t.coeff = f(t.coeff);
    for (auto& c : s.counit) c = f(c);
    for (auto& a : s.antipode) a = a.map_coeffs(f);
    return s;
}

}  // namespace braidkit
