#pragma once

#include <fstream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "braidkit/presentation.hpp"

namespace braidkit {

using json = nlohmann::json;

namespace detail {

// Maps between registry variable indices and document exponent positions (s, u, w, params...).
struct VarLayout {
    std::vector<int> vars;  // position -> registry index

    explicit VarLayout(const std::vector<std::string>& params) : vars{var_s, var_u, var_w} {
        for (const auto& p : params) vars.push_back(param_index(p));
    }
    int position(int var) const {
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == var) return static_cast<int>(i);
        throw ValidationError("variable " + variable_name(var) + " is not a declared parameter");
    }
};

inline json rational_json(const mpq_class& r) {
    if (r.get_den() == 1 && r.get_num().fits_slong_p()) return json(r.get_num().get_si());
    return json(r.get_str());
}

inline mpq_class parse_rational(const json& j) {
    if (j.is_number_integer()) return mpq_class(j.get<long>());
    if (j.is_string()) {
        mpq_class r;
        if (r.set_str(j.get<std::string>(), 10) != 0) throw SchemaError("bad rational literal " + j.dump());
        r.canonicalize();
        return r;
    }
    throw SchemaError("rational must be an integer or a \"p/q\" string, got " + j.dump());
}

inline json gauss_json(const GaussQ& c) {
    if (sgn(c.im) == 0) return rational_json(c.re);
    return json::array({rational_json(c.re), rational_json(c.im)});
}

inline GaussQ parse_gauss(const json& j) {
    if (j.is_array()) {
        if (j.size() != 2) throw SchemaError("complex coefficient must be [re, im]");
        return GaussQ(parse_rational(j[0]), parse_rational(j[1]));
    }
    return GaussQ(parse_rational(j));
}

inline json laurent_json(const LaurentPoly& p, const VarLayout& L) {
    json arr = json::array();
    for (const auto& [e, c] : p.terms()) {
        std::vector<int> ex(L.vars.size(), 0);
        for (std::size_t v = 0; v < e.size(); ++v)
            if (e[v] != 0) ex[static_cast<std::size_t>(L.position(static_cast<int>(v)))] = e[v];
        arr.push_back(json::array({gauss_json(c), ex}));
    }
    return arr;
}

inline LaurentPoly parse_laurent(const json& j, const VarLayout& L) {
    if (!j.is_array()) throw SchemaError("polynomial must be an array of [coeff, exps] terms");
    LaurentPoly p;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 2 || !t[1].is_array()) throw SchemaError("term must be [coeff, exps]");
        if (t[1].size() > L.vars.size()) throw SchemaError("exponent tuple longer than (s,u,w,params)");
        Exponents e;
        for (std::size_t i = 0; i < t[1].size(); ++i) {
            if (!t[1][i].is_number_integer()) throw SchemaError("exponents must be integers");
            int v = L.vars[i];
            if (static_cast<int>(e.size()) <= v) e.resize(static_cast<std::size_t>(v) + 1, 0);
            e[static_cast<std::size_t>(v)] = t[1][i].get<int>();
        }
        trim(e);
        p.add_term(e, parse_gauss(t[0]));
    }
    return p;
}

inline json scalar_json(const Scalar& s, const VarLayout& L) {
    json j{{"num", laurent_json(s.num(), L)}};
    if (!s.den().is_one()) j["den"] = laurent_json(s.den(), L);
    return j;
}

inline Scalar parse_scalar(const json& j, const VarLayout& L) {
    if (j.is_number_integer() || j.is_string()) return Scalar(GaussQ(parse_rational(j)));
    if (!j.is_object() || !j.contains("num")) throw SchemaError("scalar literal must be an object with \"num\"");
    LaurentPoly num = parse_laurent(j.at("num"), L);
    if (!j.contains("den")) return Scalar(num);
    LaurentPoly den = parse_laurent(j.at("den"), L);
    if (den.is_zero()) throw ValidationError("scalar literal has zero denominator");
    return Scalar::fraction(num, den);
}

template <class T>
T field(const json& j, const char* key, const char* where) {
    if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string("missing field \"") + key + "\" in " + where);
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw SchemaError(std::string("field \"") + key + "\" in " + where + " has the wrong type");
    }
}

inline void collect_vars(const Scalar& s, std::set<int>& out) {
    for (const auto* p : {&s.num(), &s.den()})
        for (const auto& [e, c] : p->terms())
            for (std::size_t v = 3; v < e.size(); ++v)
                if (e[v] != 0) out.insert(static_cast<int>(v));
}

}  // namespace detail

inline json to_json(const Presentation& P) {
    std::set<int> vars;
    for (const auto& p : P.parameters) vars.insert(param_index(p));
    auto visit = [&](const NCPoly& p) {
        for (const auto& [w, c] : p.terms()) detail::collect_vars(c, vars);
    };
    for (const auto& r : P.rs.rules()) visit(r.rhs);
    for (const auto& t : P.coproduct)
        for (const auto& x : t) detail::collect_vars(x.coeff, vars);
    for (const auto& c : P.counit) detail::collect_vars(c, vars);
    for (const auto& a : P.antipode) visit(a);
    std::vector<std::string> params;
    for (int v : vars) params.push_back(variable_name(v));
    detail::VarLayout L(params);

    auto ids = [&](const Word& w) {
        json a = json::array();
        for (int g : w) a.push_back(P.gens[static_cast<std::size_t>(g)].id);
        return a;
    };
    auto poly = [&](const NCPoly& p) {
        json a = json::array();
        for (const auto& [w, c] : p.terms()) a.push_back({{"coeff", detail::scalar_json(c, L)}, {"word", ids(w)}});
        return a;
    };
    json doc;
    doc["name"] = P.name;
    doc["parameters"] = params;
    doc["braided"] = P.braided;
    doc["graded"] = P.graded;
    doc["verbatim"] = true;
    json gens = json::array();
    for (std::size_t i = 0; i < P.size(); ++i) {
        const auto& g = P.gens[i];
        json j{{"id", g.id}, {"mu", g.mu}, {"nu", g.nu}, {"weight", g.weight}};
        j["star"] = g.star >= 0 ? json(P.gens[static_cast<std::size_t>(g.star)].id) : json(nullptr);
        if (g.inverse >= 0) j["inverse"] = P.gens[static_cast<std::size_t>(g.inverse)].id;
        if (i < P.weights.size()) j["weight"] = P.weights[i];
        gens.push_back(j);
    }
    doc["generators"] = gens;
    json rels = json::array();
    for (const auto& r : P.rs.rules()) rels.push_back({{"lhs", ids(r.lhs)}, {"rhs", poly(r.rhs)}});
    doc["relations"] = rels;
    if (P.has_coalgebra()) {
        json cop = json::object(), eps = json::object(), ant = json::object();
        for (std::size_t i = 0; i < P.size(); ++i) {
            const auto& id = P.gens[i].id;
            json terms = json::array();
            for (const auto& t : P.coproduct[i])
                terms.push_back({{"coeff", detail::scalar_json(t.coeff, L)}, {"left", ids(t.left)}, {"right", ids(t.right)}});
            cop[id] = terms;
            eps[id] = detail::scalar_json(P.counit[i], L);
            ant[id] = poly(P.antipode[i]);
        }
        doc["coproduct"] = cop;
        doc["counit"] = eps;
        doc["antipode"] = ant;
    }
    return doc;
}

inline PresentationPtr load_presentation(const json& doc) {
    if (!doc.is_object()) throw SchemaError("presentation document must be an object");
    PresentationSpec s;
    s.name = detail::field<std::string>(doc, "name", "presentation");
    if (doc.contains("parameters")) s.parameters = detail::field<std::vector<std::string>>(doc, "parameters", "presentation");
    detail::VarLayout L(s.parameters);
    if (!doc.contains("generators") || !doc.at("generators").is_array() || doc.at("generators").empty())
        throw SchemaError("\"generators\" must be a non-empty array");
    const json& gj = doc.at("generators");
    std::map<std::string, int> index;
    for (const auto& g : gj) {
        auto id = detail::field<std::string>(g, "id", "generator");
        if (!index.emplace(id, static_cast<int>(index.size())).second) throw ValidationError("duplicate generator " + id);
    }
    auto lookup = [&](const json& j, const char* where) {
        if (!j.is_string()) throw SchemaError(std::string("generator reference in ") + where + " must be a string");
        auto it = index.find(j.get<std::string>());
        if (it == index.end()) throw ValidationError("unknown generator " + j.get<std::string>() + " in " + where);
        return it->second;
    };
    auto word = [&](const json& j, const char* where) {
        if (!j.is_array()) throw SchemaError(std::string("word in ") + where + " must be an array");
        Word w;
        for (const auto& x : j) w.push_back(lookup(x, where));
        return w;
    };
    auto poly = [&](const json& j, const char* where) {
        if (!j.is_array()) throw SchemaError(std::string(where) + " must be an array of {coeff, word}");
        NCPoly p;
        for (const auto& t : j) {
            if (!t.is_object() || !t.contains("coeff") || !t.contains("word"))
                throw SchemaError(std::string("term in ") + where + " needs \"coeff\" and \"word\"");
            p.add_term(word(t.at("word"), where), detail::parse_scalar(t.at("coeff"), L));
        }
        return p;
    };
    int with_star = 0;
    for (const auto& g : gj) {
        GeneratorInfo info;
        info.id = g.at("id").get<std::string>();
        info.mu = detail::field<int>(g, "mu", "generator");
        info.nu = detail::field<int>(g, "nu", "generator");
        if (!g.contains("star")) throw SchemaError("generator " + info.id + " has no \"star\" field");
        info.star = g.at("star").is_null() ? -1 : lookup(g.at("star"), "star");
        with_star += info.star >= 0 ? 1 : 0;
        info.inverse = g.contains("inverse") && !g.at("inverse").is_null() ? lookup(g.at("inverse"), "inverse") : -1;
        info.weight = g.contains("weight") ? detail::field<int>(g, "weight", "generator") : 1;
        s.weights.push_back(info.weight);
        s.gens.push_back(info);
    }
    if (with_star != 0 && with_star != static_cast<int>(s.gens.size()))
        throw ValidationError("star partners must be given for all generators or none");
    s.has_star = with_star != 0;
    s.braided = doc.value("braided", true);
    s.graded = doc.value("graded", true);
    bool verbatim = doc.value("verbatim", false);
    if (!doc.contains("relations") || !doc.at("relations").is_array()) throw SchemaError("\"relations\" must be an array");
    std::vector<Rule> rules;
    for (const auto& r : doc.at("relations")) {
        if (!r.is_object() || !r.contains("lhs") || !r.contains("rhs"))
            throw SchemaError("relation needs \"lhs\" and \"rhs\"");
        Word lhs = word(r.at("lhs"), "relation lhs");
        NCPoly rhs = poly(r.at("rhs"), "relation rhs");
        s.relations.push_back(NCPoly::word(lhs) - rhs);
        rules.push_back(Rule{lhs, rhs});
    }
    if (verbatim) {
        s.rules = rules;
        s.close = false;
    }
    bool has_co = doc.contains("coproduct") || doc.contains("counit") || doc.contains("antipode");
    if (has_co) {
        for (const char* k : {"coproduct", "counit", "antipode"})
            if (!doc.contains(k) || !doc.at(k).is_object()) throw SchemaError(std::string("\"") + k + "\" must be an object");
        std::size_t n = s.gens.size();
        s.coproduct.assign(n, {});
        s.counit.assign(n, Scalar());
        s.antipode.assign(n, NCPoly());
        std::vector<int> seen(n, 0);
        for (const auto& [id, terms] : doc.at("coproduct").items()) {
            int g = lookup(json(id), "coproduct");
            if (!terms.is_array()) throw SchemaError("coproduct entry must be an array");
            for (const auto& t : terms) {
                if (!t.is_object() || !t.contains("coeff") || !t.contains("left") || !t.contains("right"))
                    throw SchemaError("coproduct term needs \"coeff\", \"left\", \"right\"");
                s.coproduct[static_cast<std::size_t>(g)].push_back(
                    {detail::parse_scalar(t.at("coeff"), L), word(t.at("left"), "coproduct"), word(t.at("right"), "coproduct")});
            }
            seen[static_cast<std::size_t>(g)] |= 1;
        }
        for (const auto& [id, v] : doc.at("counit").items()) {
            int g = lookup(json(id), "counit");
            s.counit[static_cast<std::size_t>(g)] = detail::parse_scalar(v, L);
            seen[static_cast<std::size_t>(g)] |= 2;
        }
        for (const auto& [id, v] : doc.at("antipode").items()) {
            int g = lookup(json(id), "antipode");
            s.antipode[static_cast<std::size_t>(g)] = poly(v, "antipode");
            seen[static_cast<std::size_t>(g)] |= 4;
        }
        for (std::size_t i = 0; i < n; ++i)
            if (seen[i] != 7) throw SchemaError("coalgebra tables miss generator " + s.gens[i].id);
    }
    return build_presentation(s);
}

inline PresentationPtr load_presentation_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open " + path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("malformed JSON: ") + e.what());
    }
    return load_presentation(doc);
}

// Structural equality: generators, rewrite rules and coalgebra tables.
inline bool same_presentation(const Presentation& a, const Presentation& b) {
    if (a.name != b.name || a.size() != b.size() || a.braided != b.braided || a.has_star != b.has_star) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const auto &x = a.gens[i], &y = b.gens[i];
        if (x.id != y.id || x.mu != y.mu || x.nu != y.nu || x.star != y.star || x.inverse != y.inverse) return false;
    }
    const auto &ra = a.rs.rules(), &rb = b.rs.rules();
    if (ra.size() != rb.size()) return false;
    for (std::size_t i = 0; i < ra.size(); ++i)
        if (ra[i].lhs != rb[i].lhs || ra[i].rhs != rb[i].rhs) return false;
    if (a.counit != b.counit || a.antipode != b.antipode || a.coproduct.size() != b.coproduct.size()) return false;
    for (std::size_t i = 0; i < a.coproduct.size(); ++i) {
        if (a.coproduct[i].size() != b.coproduct[i].size()) return false;
        for (std::size_t j = 0; j < a.coproduct[i].size(); ++j) {
            const auto &s = a.coproduct[i][j], &t = b.coproduct[i][j];
            if (s.coeff != t.coeff || s.left != t.left || s.right != t.right) return false;
        }
    }
    return true;
}

}  // namespace braidkit
