#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "braidkit/presentation.hpp"

namespace braidkit {

using TensorWord = std::vector<Word>;

// Element of P_1 (x) ... (x) P_n with the braided product of homogeneous tensors.
class TensorPoly {
public:
    using Terms = std::map<TensorWord, Scalar, TensorWordLess>;

    TensorPoly() = default;
    explicit TensorPoly(std::vector<PresentationPtr> slots) : slots_(std::move(slots)) {}
    TensorPoly(std::vector<PresentationPtr> slots, Terms terms) : slots_(std::move(slots)), terms_(std::move(terms)) {}

    static TensorPoly simple(std::vector<PresentationPtr> slots, const std::vector<NCPoly>& factors) {
        TensorPoly t(slots);
        Terms acc;
        acc.emplace(TensorWord{}, Scalar(1));
        for (const auto& f : factors) {
            Terms next;
            for (const auto& [tw, c] : acc)
                for (const auto& [w, d] : f.terms()) {
                    TensorWord n = tw;
                    n.push_back(w);
                    next.emplace(std::move(n), c * d);
                }
            acc = std::move(next);
        }
        for (const auto& [tw, c] : acc) t.add_term(tw, c);
        return t;
    }

    const std::vector<PresentationPtr>& slots() const { return slots_; }
    std::size_t rank() const { return slots_.size(); }
    const Terms& terms() const& { return terms_; }
    Terms terms() && { return std::move(terms_); }  // safe in range-for over temporaries
    bool is_zero() const { return terms_.empty(); }

    void add_term(const TensorWord& w, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    // Adds c * (p_1 (x) ... ) where slot i is replaced by a polynomial.
    void add_with_slot(const TensorWord& base, std::size_t slot, const NCPoly& p, const Scalar& c) {
        for (const auto& [w, d] : p.terms()) {
            TensorWord n = base;
            n[slot] = w;
            add_term(n, c * d);
        }
    }

    TensorPoly& operator+=(const TensorPoly& o) {
        if (slots_.empty()) slots_ = o.slots_;
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }
    TensorPoly& operator-=(const TensorPoly& o) {
        if (slots_.empty()) slots_ = o.slots_;
        for (const auto& [w, c] : o.terms_) add_term(w, -c);
        return *this;
    }
    TensorPoly& operator*=(const Scalar& c) {
        if (c.is_zero()) terms_.clear();
        for (auto& [w, x] : terms_) x *= c;
        return *this;
    }
    friend TensorPoly operator+(TensorPoly a, const TensorPoly& b) { return a += b; }
    friend TensorPoly operator-(TensorPoly a, const TensorPoly& b) { return a -= b; }
    friend TensorPoly operator*(TensorPoly a, const Scalar& c) { return a *= c; }
    friend TensorPoly operator*(const Scalar& c, TensorPoly a) { return a *= c; }
    // Equality compares coefficients only; slot presentations are assumed to match.
    friend bool operator==(const TensorPoly& a, const TensorPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const TensorPoly& a, const TensorPoly& b) { return !(a == b); }

    int slot_delta(std::size_t i, const Word& w) const { return slots_[i]->delta(w); }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [tw, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += "[" + c.str() + "]";
            for (std::size_t i = 0; i < tw.size(); ++i) s += (i ? " (x) " : " ") + word_str(tw[i], slots_[i]->gens);
        }
        return s;
    }

private:
    std::vector<PresentationPtr> slots_;
    Terms terms_;
};

// u^{2 dx dy} when both algebras carry the twisted braiding, 1 otherwise.
inline int cross_exponent(const Presentation& x, int dx, const Presentation& y, int dy) {
    return (x.braided && y.braided) ? 2 * dx * dy : 0;
}

inline Scalar cross_phase(const Presentation& x, int dx, const Presentation& y, int dy) {
    int e = cross_exponent(x, dx, y, dy);
    return e == 0 ? Scalar(1) : Scalar::u(e);
}

// Braided product of simple tensors: moving b_j left past a_i (i > j) costs u^{2 d(a_i) d(b_j)}.
inline TensorPoly braided_product(const TensorPoly& a, const TensorPoly& b) {
    const auto& slots = a.slots().empty() ? b.slots() : a.slots();
    TensorPoly out(slots);
    std::size_t n = slots.size();
    for (const auto& [wa, ca] : a.terms()) {
        for (const auto& [wb, cb] : b.terms()) {
            int e = 0;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < i; ++j)
                    e += cross_exponent(*slots[i], slots[i]->delta(wa[i]), *slots[j], slots[j]->delta(wb[j]));
            Scalar c = ca * cb * (e == 0 ? Scalar(1) : Scalar::u(e));
            TensorPoly prod = TensorPoly::simple(slots, [&] {
                std::vector<NCPoly> f;
                for (std::size_t i = 0; i < n; ++i) f.push_back(slots[i]->word_nf(concat(wa[i], wb[i])));
                return f;
            }());
            for (const auto& [w, d] : prod.terms()) out.add_term(w, c * d);
        }
    }
    return out;
}

// Apply a linear map Word -> TensorPoly to slot i; the image slots replace slot i.
inline TensorPoly expand_slot(const TensorPoly& t, std::size_t i, const std::vector<PresentationPtr>& image_slots,
                              const std::function<TensorPoly(const Word&)>& f) {
    std::vector<PresentationPtr> slots;
    for (std::size_t j = 0; j < i; ++j) slots.push_back(t.slots()[j]);
    for (const auto& s : image_slots) slots.push_back(s);
    for (std::size_t j = i + 1; j < t.rank(); ++j) slots.push_back(t.slots()[j]);
    TensorPoly out(slots);
    for (const auto& [tw, c] : t.terms()) {
        TensorPoly img = f(tw[i]);
        for (const auto& [iw, d] : img.terms()) {
            TensorWord n(tw.begin(), tw.begin() + static_cast<std::ptrdiff_t>(i));
            n.insert(n.end(), iw.begin(), iw.end());
            n.insert(n.end(), tw.begin() + static_cast<std::ptrdiff_t>(i + 1), tw.end());
            out.add_term(n, c * d);
        }
    }
    return out;
}

// Apply a linear map Word -> NCPoly (same or new presentation) to slot i.
inline TensorPoly map_slot(const TensorPoly& t, std::size_t i, const PresentationPtr& target,
                           const std::function<NCPoly(const Word&)>& f) {
    std::vector<PresentationPtr> slots = t.slots();
    slots[i] = target;
    TensorPoly out(slots);
    for (const auto& [tw, c] : t.terms()) out.add_with_slot(tw, i, f(tw[i]), c);
    return out;
}

// Multiply slots i and i+1 (same algebra) into one slot.
inline TensorPoly merge_slots(const TensorPoly& t, std::size_t i) {
    std::vector<PresentationPtr> slots;
    for (std::size_t j = 0; j < t.rank(); ++j)
        if (j != i + 1) slots.push_back(t.slots()[j]);
    TensorPoly out(slots);
    const auto& P = *t.slots()[i];
    for (const auto& [tw, c] : t.terms()) {
        TensorWord base;
        for (std::size_t j = 0; j < tw.size(); ++j)
            if (j != i + 1) base.push_back(tw[j]);
        out.add_with_slot(base, i, P.word_nf(concat(tw[i], tw[i + 1])), c);
    }
    return out;
}

// Braiding of slots i and i+1: x (x) y -> u^{2 d(x) d(y)} y (x) x. Inverse uses the opposite phase.
inline TensorPoly braid_slots(const TensorPoly& t, std::size_t i, bool inverse = false) {
    std::vector<PresentationPtr> slots = t.slots();
    std::swap(slots[i], slots[i + 1]);
    TensorPoly out(slots);
    const auto& X = *t.slots()[i];
    const auto& Y = *t.slots()[i + 1];
    for (const auto& [tw, c] : t.terms()) {
        int e = cross_exponent(X, X.delta(tw[i]), Y, Y.delta(tw[i + 1]));
        TensorWord n = tw;
        std::swap(n[i], n[i + 1]);
        out.add_term(n, c * (e == 0 ? Scalar(1) : Scalar::u(inverse ? -e : e)));
    }
    return out;
}

// Contract slot i to a scalar.
inline TensorPoly contract_slot(const TensorPoly& t, std::size_t i, const std::function<Scalar(const Word&)>& f) {
    std::vector<PresentationPtr> slots;
    for (std::size_t j = 0; j < t.rank(); ++j)
        if (j != i) slots.push_back(t.slots()[j]);
    TensorPoly out(slots);
    for (const auto& [tw, c] : t.terms()) {
        Scalar v = f(tw[i]);
        if (v.is_zero()) continue;
        TensorWord n;
        for (std::size_t j = 0; j < tw.size(); ++j)
            if (j != i) n.push_back(tw[j]);
        out.add_term(n, c * v);
    }
    return out;
}

// Rank-1 tensor to polynomial.
inline NCPoly flatten(const TensorPoly& t) {
    NCPoly out;
    for (const auto& [tw, c] : t.terms()) out.add_term(tw.empty() ? Word{} : tw[0], c);
    return out;
}

inline Scalar rank0_value(const TensorPoly& t) {
    auto it = t.terms().find(TensorWord{});
    return it == t.terms().end() ? Scalar() : it->second;
}

}  // namespace braidkit
