#ifndef NCM_IO_HPP
#define NCM_IO_HPP

#include "ncm/algebra.hpp"
#include "ncm/bubbletree.hpp"
#include "ncm/freeop.hpp"

#include <json.hpp>

namespace ncm {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "ncm/1";

// Labels are written by element name; integers for Z.
inline Json label_to_json(const Magma& m, Label x) {
    if (!m.finite()) return x;
    return m.label_name(x);
}

inline Label label_from_json(const Magma& m, const Json& j) {
    if (!m.finite()) return j.get<Label>();
    return m.parse_label(j.get<std::string>());
}

inline Json to_json(const Clique& p) {
    Json arcs = Json::array();
    for (const auto& a : p.arcs()) arcs.push_back(Json::array({a.i, a.j, label_to_json(*p.magma(), a.label)}));
    return Json{{"magma", p.magma()->name()}, {"arity", p.arity()}, {"arcs", arcs}};
}

inline Clique clique_from_json(const Json& j, const MagmaPtr& m) {
    if (j.at("magma").get<std::string>() != m->name())
        throw std::invalid_argument("clique JSON is over " + j.at("magma").get<std::string>() + ", expected " + m->name());
    std::vector<ArcLabel> arcs;
    for (const auto& a : j.at("arcs")) arcs.push_back({a.at(0).get<int>(), a.at(1).get<int>(), label_from_json(*m, a.at(2))});
    return Clique(m, j.at("arity").get<int>(), std::move(arcs));
}

// Leaves are null. Triangle nodes are {"triple": [p0, p1, p2], "children": [l, r]};
// other nodes are {"gen": clique, "children": [...]}.
inline Json to_json(const SyntaxTree& t) {
    if (t.is_leaf()) return nullptr;
    Json ch = Json::array();
    for (const auto& c : t.children()) ch.push_back(to_json(c));
    const Clique& g = t.label();
    if (g.arity() == 2) {
        const Magma& m = *g.magma();
        Json triple = Json::array({label_to_json(m, g.base()), label_to_json(m, g.edge(1)), label_to_json(m, g.edge(2))});
        return Json{{"triple", triple}, {"children", ch}};
    }
    return Json{{"gen", to_json(g)}, {"children", ch}};
}

inline SyntaxTree tree_from_json(const Json& j, const MagmaPtr& m) {
    if (j.is_null()) return SyntaxTree::leaf();
    std::vector<SyntaxTree> ch;
    for (const auto& c : j.at("children")) ch.push_back(tree_from_json(c, m));
    if (j.contains("triple")) {
        const auto& p = j.at("triple");
        return SyntaxTree::node(
            Clique::triangle(m, label_from_json(*m, p.at(0)), label_from_json(*m, p.at(1)), label_from_json(*m, p.at(2))),
            std::move(ch));
    }
    return SyntaxTree::node(clique_from_json(j.at("gen"), m), std::move(ch));
}

inline Json to_json(const SchroderTree& s, const Magma& m) {
    Json j{{"label", label_to_json(m, s.label)}};
    if (!s.is_leaf()) {
        Json ch = Json::array();
        for (const auto& c : s.children) ch.push_back(to_json(c, m));
        j["children"] = ch;
    }
    return j;
}

inline SchroderTree schroder_from_json(const Json& j, const Magma& m) {
    SchroderTree s{label_from_json(m, j.at("label")), {}};
    if (j.contains("children"))
        for (const auto& c : j.at("children")) s.children.push_back(schroder_from_json(c, m));
    return s;
}

// Coefficients are exact: numerator and denominator as decimal strings.
inline Json coefficient_to_json(const Rational& c) {
    return Json{{"num", boost::multiprecision::numerator(c).str()}, {"den", boost::multiprecision::denominator(c).str()}};
}

inline Rational coefficient_from_json(const Json& j) {
    const BigInt den(j.at("den").get<std::string>());
    if (den == 0) throw std::invalid_argument("coefficient with zero denominator");
    return Rational(BigInt(j.at("num").get<std::string>()), den);
}

inline Json to_json(const LinComb& f) {
    Json terms = Json::array();
    for (const auto& [t, c] : f.terms()) {
        Json term{{"tree", to_json(t)}};
        term.update(coefficient_to_json(c));
        terms.push_back(term);
    }
    return terms;
}

inline LinComb lincomb_from_json(const Json& j, const MagmaPtr& m) {
    LinComb f;
    for (const auto& term : j) f.add(tree_from_json(term.at("tree"), m), coefficient_from_json(term));
    return f;
}

inline Json to_json(const WordPolynomial& f) {
    Json terms = Json::array();
    for (const auto& [w, c] : f.terms()) {
        Json term{{"word", w}};
        term.update(coefficient_to_json(c));
        terms.push_back(term);
    }
    return terms;
}

inline WordPolynomial polynomial_from_json(const Json& j) {
    WordPolynomial f;
    for (const auto& term : j) f.add(term.at("word").get<Word>(), coefficient_from_json(term));
    return f;
}

inline Json to_json(const Magma& m) {
    Json j{{"name", m.name()}, {"finite", m.finite()}};
    if (!m.finite()) {
        j["unit"] = 0;
        return j;
    }
    j["elements"] = m.names();
    j["unit"] = m.label_name(m.unit());
    Json rows = Json::array();
    for (Label x : m.elements()) {
        Json row = Json::array();
        for (Label y : m.elements()) row.push_back(m.label_name(m.raw(x, y)));
        rows.push_back(row);
    }
    j["table"] = rows;
    return j;
}

} // namespace ncm

#endif // NCM_IO_HPP
