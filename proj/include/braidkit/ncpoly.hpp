#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "braidkit/scalar.hpp"

namespace braidkit {

using Word = std::vector<int>;

struct ShortLex {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

inline Word concat(const Word& a, const Word& b) {
    Word r;
    r.reserve(a.size() + b.size());
    r.insert(r.end(), a.begin(), a.end());
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

class NCPoly {
public:
    using Terms = std::map<Word, Scalar, ShortLex>;

    NCPoly() = default;
    NCPoly(const Scalar& c) {  // NOLINT
        if (!c.is_zero()) terms_.emplace(Word{}, c);
    }
    NCPoly(long c) : NCPoly(Scalar(c)) {}  // NOLINT

    static NCPoly word(const Word& w, const Scalar& c = Scalar(1)) {
        NCPoly p;
        if (!c.is_zero()) p.terms_.emplace(w, c);
        return p;
    }
    static NCPoly gen(int g) { return word(Word{g}); }

    const Terms& terms() const& { return terms_; }
    Terms terms() && { return std::move(terms_); }  // safe in range-for over temporaries
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Scalar coeff(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? Scalar() : it->second;
    }

    void add_term(const Word& w, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    NCPoly& operator+=(const NCPoly& o) {
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }
    NCPoly& operator-=(const NCPoly& o) {
        for (const auto& [w, c] : o.terms_) add_term(w, -c);
        return *this;
    }
    NCPoly& operator*=(const Scalar& c) {
        if (c.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [w, x] : terms_) x *= c;
        return *this;
    }
    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
    friend NCPoly operator-(NCPoly a) {
        for (auto& [w, c] : a.terms_) c = -c;
        return a;
    }
    friend NCPoly operator*(NCPoly a, const Scalar& c) { return a *= c; }
    friend NCPoly operator*(const Scalar& c, NCPoly a) { return a *= c; }
    // Free-algebra product (no reduction).
    friend NCPoly operator*(const NCPoly& a, const NCPoly& b) {
        NCPoly r;
        for (const auto& [wa, ca] : a.terms_)
            for (const auto& [wb, cb] : b.terms_) r.add_term(concat(wa, wb), ca * cb);
        return r;
    }
    friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const NCPoly& a, const NCPoly& b) { return !(a == b); }

    template <class F>
    NCPoly map_coeffs(F&& f) const {
        NCPoly r;
        for (const auto& [w, c] : terms_) r.add_term(w, f(c));
        return r;
    }

private:
    Terms terms_;
};

struct GeneratorInfo {
    std::string id;
    int mu = 0;
    int nu = 0;
    int star = -1;
    int inverse = -1;
    int weight = 1;
    int delta() const { return mu - nu; }
};

using Generators = std::vector<GeneratorInfo>;

inline int word_delta(const Word& w, const Generators& gens) {
    int d = 0;
    for (int g : w) d += gens[static_cast<std::size_t>(g)].delta();
    return d;
}

inline int delta_degree(const NCPoly& p, const Generators& gens) {
    if (p.is_zero()) return 0;
    int d = word_delta(p.terms().begin()->first, gens);
    for (const auto& [w, c] : p.terms())
        if (word_delta(w, gens) != d) throw Inhomogeneous("element mixes delta degrees");
    return d;
}

// Split into delta-homogeneous components.
inline std::map<int, NCPoly> delta_components(const NCPoly& p, const Generators& gens) {
    std::map<int, NCPoly> out;
    for (const auto& [w, c] : p.terms()) out[word_delta(w, gens)].add_term(w, c);
    return out;
}

inline NCPoly star(const NCPoly& p, const Generators& gens) {
    NCPoly r;
    for (const auto& [w, c] : p.terms()) {
        Word sw(w.rbegin(), w.rend());
        for (int& g : sw) {
            int st = gens[static_cast<std::size_t>(g)].star;
            if (st < 0) throw StarNotAdmissible("generator " + gens[static_cast<std::size_t>(g)].id + " has no star partner");
            g = st;
        }
        r.add_term(sw, c.conj());
    }
    return r;
}

inline std::string word_str(const Word& w, const Generators& gens) {
    if (w.empty()) return "1";
    std::string s;
    for (int g : w) {
        if (!s.empty()) s += " ";
        s += gens[static_cast<std::size_t>(g)].id;
    }
    return s;
}

inline std::string poly_str(const NCPoly& p, const Generators& gens) {
    if (p.is_zero()) return "0";
    std::string s;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        if (!s.empty()) s += " + ";
        s += "[" + it->second.str() + "]";
        if (!it->first.empty()) s += " " + word_str(it->first, gens);
    }
    return s;
}

// Weighted degree, then length, then lexicographic by generator index.
struct MonomialOrder {
    std::vector<int> weights;

    int weight(const Word& w) const {
        int t = 0;
        for (int g : w) t += g < static_cast<int>(weights.size()) ? weights[static_cast<std::size_t>(g)] : 1;
        return t;
    }
    bool less(const Word& a, const Word& b) const {
        int wa = weight(a), wb = weight(b);
        if (wa != wb) return wa < wb;
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
    Word leading_word(const NCPoly& p) const {
        const Word* best = nullptr;
        for (const auto& [w, c] : p.terms())
            if (!best || less(*best, w)) best = &w;
        return best ? *best : Word{};
    }
};

struct Rule {
    Word lhs;
    NCPoly rhs;
};

struct ConfluenceFailure {
    Word overlap;
    NCPoly left;
    NCPoly right;
};

class RewriteSystem {
public:
    static constexpr std::size_t default_budget = 1'000'000;

    RewriteSystem() : cache_(std::make_shared<Cache>()) {}
    RewriteSystem(MonomialOrder order, std::vector<Rule> rules, std::size_t budget = default_budget)
        : order_(std::move(order)), rules_(std::move(rules)), budget_(budget), cache_(std::make_shared<Cache>()) {
        for (const auto& r : rules_) {
            if (r.lhs.size() < 2) throw ValidationError("rule left-hand side must have length >= 2");
            for (const auto& [w, c] : r.rhs.terms())
                if (!order_.less(w, r.lhs)) throw ValidationError("rule right-hand side is not smaller than its left-hand side");
        }
        index();
    }

    const std::vector<Rule>& rules() const { return rules_; }
    const MonomialOrder& order() const { return order_; }
    std::size_t budget() const { return budget_; }

    struct Match {
        std::size_t rule;
        std::size_t pos;
    };

    std::optional<Match> find_match(const Word& w) const {
        for (std::size_t i = 0; i < w.size(); ++i) {
            auto g = static_cast<std::size_t>(w[i]);
            if (g >= by_first_.size()) continue;
            for (std::size_t r : by_first_[g]) {
                const Word& l = rules_[r].lhs;
                if (i + l.size() <= w.size() && std::equal(l.begin(), l.end(), w.begin() + static_cast<std::ptrdiff_t>(i)))
                    return Match{r, i};
            }
        }
        return std::nullopt;
    }
    bool is_normal(const Word& w) const { return !find_match(w); }

    NCPoly apply_at(const Word& w, const Match& m) const {
        const Rule& r = rules_[m.rule];
        Word pre(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(m.pos));
        Word post(w.begin() + static_cast<std::ptrdiff_t>(m.pos + r.lhs.size()), w.end());
        NCPoly out;
        for (const auto& [rw, rc] : r.rhs.terms()) out.add_term(concat(concat(pre, rw), post), rc);
        return out;
    }

    NCPoly normal_form(const NCPoly& p) const {
        Guard guard(*this);
        NCPoly out;
        for (const auto& [w, c] : p.terms()) {
            if (w.size() < 2) {
                out.add_term(w, c);
                continue;
            }
            NCPoly nw_poly = normal_word(w);
            for (const auto& [nw, nc] : nw_poly.terms()) out.add_term(nw, c * nc);
        }
        return out;
    }

    NCPoly multiply(const NCPoly& a, const NCPoly& b) const { return normal_form(a * b); }

private:
    struct Cache {
        std::mutex mu;
        std::map<Word, NCPoly> memo;
    };
    struct Counters {
        std::size_t steps = 0;
        std::size_t depth = 0;
        int active = 0;
    };
    static Counters& counters() {
        static thread_local Counters c;
        return c;
    }
    struct Guard {
        explicit Guard(const RewriteSystem&) {
            auto& c = counters();
            if (c.active++ == 0) c.steps = 0;
        }
        ~Guard() { --counters().active; }
    };
    struct DepthGuard {
        DepthGuard() {
            if (++counters().depth > 20000) {
                --counters().depth;
                throw NonTermination("rewrite recursion too deep; rule order does not terminate");
            }
        }
        ~DepthGuard() { --counters().depth; }
    };

    void index() {
        by_first_.clear();
        for (std::size_t r = 0; r < rules_.size(); ++r) {
            auto g = static_cast<std::size_t>(rules_[r].lhs[0]);
            if (by_first_.size() <= g) by_first_.resize(g + 1);
            by_first_[g].push_back(r);
        }
    }

    NCPoly normal_word(const Word& w) const {
        {
            std::lock_guard<std::mutex> lock(cache_->mu);
            auto it = cache_->memo.find(w);
            if (it != cache_->memo.end()) return it->second;
        }
        NCPoly out;
        auto m = find_match(w);
        if (!m) {
            out = NCPoly::word(w);
        } else {
            if (++counters().steps > budget_) throw NonTermination("rewrite step budget exceeded");
            DepthGuard dg;
            NCPoly step = apply_at(w, *m);
            for (const auto& [nw, nc] : step.terms()) {
                if (nw.size() < 2) {
                    out.add_term(nw, nc);
                    continue;
                }
                NCPoly sub = normal_word(nw);
                for (const auto& [fw, fc] : sub.terms()) out.add_term(fw, nc * fc);
            }
        }
        std::lock_guard<std::mutex> lock(cache_->mu);
        cache_->memo.emplace(w, out);
        return out;
    }

    MonomialOrder order_;
    std::vector<Rule> rules_;
    std::size_t budget_ = default_budget;
    std::vector<std::vector<std::size_t>> by_first_;
    std::shared_ptr<Cache> cache_;
};

// Overlap ambiguities (and inclusions) of the rule set, with word length <= max_len.
inline std::vector<std::pair<Word, std::pair<RewriteSystem::Match, RewriteSystem::Match>>> critical_words(
    const RewriteSystem& rs, std::size_t max_len) {
    std::vector<std::pair<Word, std::pair<RewriteSystem::Match, RewriteSystem::Match>>> out;
    const auto& rules = rs.rules();
    for (std::size_t i = 0; i < rules.size(); ++i) {
        for (std::size_t j = 0; j < rules.size(); ++j) {
            const Word& a = rules[i].lhs;
            const Word& b = rules[j].lhs;
            for (std::size_t k = 1; k < std::min(a.size(), b.size()); ++k) {
                if (!std::equal(a.end() - static_cast<std::ptrdiff_t>(k), a.end(), b.begin())) continue;
                Word w = concat(a, Word(b.begin() + static_cast<std::ptrdiff_t>(k), b.end()));
                if (w.size() > max_len) continue;
                out.push_back({w, {{i, 0}, {j, a.size() - k}}});
            }
            if (i != j && b.size() <= a.size()) {
                for (std::size_t p = 0; p + b.size() <= a.size(); ++p)
                    if (std::equal(b.begin(), b.end(), a.begin() + static_cast<std::ptrdiff_t>(p)) && a.size() <= max_len)
                        out.push_back({a, {{i, 0}, {j, p}}});
            }
        }
    }
    return out;
}

inline std::vector<ConfluenceFailure> local_confluence_check(const RewriteSystem& rs, std::size_t max_len) {
    std::vector<ConfluenceFailure> failures;
    for (const auto& [w, ms] : critical_words(rs, max_len)) {
        NCPoly l = rs.normal_form(rs.apply_at(w, ms.first));
        NCPoly r = rs.normal_form(rs.apply_at(w, ms.second));
        if (l != r) failures.push_back({w, l, r});
    }
    return failures;
}

namespace detail {

inline Rule orient(const NCPoly& r, const MonomialOrder& order) {
    Word lw = order.leading_word(r);
    Scalar lc = r.coeff(lw);
    NCPoly rest = r;
    rest.add_term(lw, -lc);
    return Rule{lw, rest * (-lc.inv())};
}

}  // namespace detail

// Buchberger-style completion of a set of relations (each meaning "r = 0"). Overlaps
// longer than max_len are not examined; the loop is bounded by max_rounds.
inline RewriteSystem complete(const MonomialOrder& order, const std::vector<NCPoly>& relations, std::size_t max_len = 6,
                              int max_rounds = 50) {
    std::vector<Rule> rules;
    std::deque<NCPoly> pending(relations.begin(), relations.end());
    auto contains = [](const Word& big, const Word& small) {
        if (small.size() > big.size()) return false;
        return std::search(big.begin(), big.end(), small.begin(), small.end()) != big.end();
    };
    for (int round = 0; round < max_rounds; ++round) {
        while (!pending.empty()) {
            NCPoly r = pending.front();
            pending.pop_front();
            r = RewriteSystem(order, rules).normal_form(r);
            if (r.is_zero()) continue;
            Rule nr = detail::orient(r, order);
            if (nr.lhs.size() < 2) throw ValidationError("relation reduces to a generator or unit: " + std::to_string(nr.lhs.size()));
            std::vector<Rule> kept;
            for (auto& old : rules) {
                if (contains(old.lhs, nr.lhs)) pending.push_back(NCPoly::word(old.lhs) - old.rhs);
                else kept.push_back(std::move(old));
            }
            kept.push_back(std::move(nr));
            rules = std::move(kept);
        }
        // inter-reduce right-hand sides
        for (std::size_t i = 0; i < rules.size(); ++i) {
            std::vector<Rule> others;
            for (std::size_t j = 0; j < rules.size(); ++j)
                if (j != i) others.push_back(rules[j]);
            rules[i].rhs = RewriteSystem(order, others).normal_form(rules[i].rhs);
        }
        std::sort(rules.begin(), rules.end(), [&](const Rule& a, const Rule& b) { return order.less(a.lhs, b.lhs); });
        RewriteSystem rs(order, rules);
        for (const auto& f : local_confluence_check(rs, max_len)) pending.push_back(f.left - f.right);
        if (pending.empty()) return rs;
    }
    throw NonTermination("completion did not converge");
}

}  // namespace braidkit
