#ifndef NCM_KOSZUL_HPP
#define NCM_KOSZUL_HPP

#include "ncm/rewrite.hpp"

namespace ncm {

// <x o_i y, x' o_i' y'> = 1 if equal with i = 1, -1 if equal with i = 2, else 0.
inline Rational pairing(const SyntaxTree& s, const SyntaxTree& t) {
    for (const auto* x : {&s, &t})
        if (x->is_leaf() || x->arity() != 3 || x->degree() != 2)
            throw std::invalid_argument("pairing: arguments must be degree-2 trees of arity 3");
    if (!(s == t)) return 0;
    return s.child(1).is_leaf() ? Rational(-1) : Rational(1);
}

inline Rational pairing(const LinComb& a, const LinComb& b) {
    Rational r = 0;
    for (const auto& [t, c] : a.terms()) {
        auto it = b.terms().find(t);
        if (it != b.terms().end()) r += c * it->second * pairing(t, t);
    }
    return r;
}

// Spanning set of the dual relation space.
inline std::vector<LinComb> dual_relation_space(const MagmaPtr& m) {
    m->require_finite("dual_relation_space");
    const auto els = m->elements();
    auto tri = [&](Label a, Label b, Label c) { return Clique::triangle(m, a, b, c); };
    std::vector<LinComb> out;
    for (Label a : els)
        for (Label b : els)
            for (Label c : els)
                for (Label d : els) {
                    for (Label delta : m->non_unit_elements()) {
                        LinComb first, second;
                        for (Label p : els)
                            for (Label q : els)
                                if (m->op(p, q) == delta) {
                                    first.add(compose_tree(tri(a, p, b), 1, tri(q, c, d)), 1);
                                    second.add(compose_tree(tri(a, b, p), 2, tri(q, c, d)), 1);
                                }
                        if (!first.empty()) out.push_back(first);
                        if (!second.empty()) out.push_back(second);
                    }
                    LinComb mixed;
                    for (Label p : els)
                        for (Label q : els)
                            if (m->is_unit(m->op(p, q))) {
                                mixed.add(compose_tree(tri(a, p, b), 1, tri(q, c, d)), 1);
                                mixed.add(compose_tree(tri(a, c, p), 2, tri(q, d, b)), -1);
                            }
                    if (!mixed.empty()) out.push_back(mixed);
                }
    return out;
}

// Basis of {f : <r, f> = 0 for every r in space} in the arity-3 space.
inline std::vector<LinComb> annihilator(const std::vector<LinComb>& space, const MagmaPtr& m) {
    Arity3Basis basis{m->size()};
    Echelon e;
    for (const auto& r : space) e.insert(to_row(r, basis, true));
    std::vector<LinComb> out;
    for (const auto& row : e.nullspace(basis.dimension())) {
        LinComb f;
        for (const auto& [idx, v] : row) f.add(basis.tree(idx, m), Rational(v));
        out.push_back(f);
    }
    return out;
}

// M x M with componentwise product; label (a, b) is a * m + b.
inline MagmaPtr square_magma(const MagmaPtr& m) {
    m->require_finite("square_magma");
    const auto n = static_cast<Label>(m->size());
    std::vector<std::string> names;
    for (Label a = 0; a < n; ++a)
        for (Label b = 0; b < n; ++b) names.push_back("(" + m->label_name(a) + "," + m->label_name(b) + ")");
    std::vector<Label> table;
    for (Label x = 0; x < n * n; ++x)
        for (Label y = 0; y < n * n; ++y) table.push_back(m->op(x / n, y / n) * n + m->op(x % n, y % n));
    return Magma::from_table(m->name() + "^2", names, m->unit() * n + m->unit(), table);
}

inline bool is_dual_clique(const Clique& p, const Magma& m) {
    const auto n = static_cast<Label>(m.size());
    if (!crossing_free(p)) return false;
    for (const auto& a : p.arcs()) {
        const bool diag = Clique::is_diagonal(a.i, a.j, p.arity());
        const bool equal = a.label / n == a.label % n;
        if (diag == equal) return false;
    }
    return true;
}

// Noncrossing dual M-cliques: base and edges carry (a, a), solid diagonals (a, b) with a != b.
inline std::vector<Clique> enumerate_dual_cliques(const MagmaPtr& m, int n,
                                                  std::size_t limit = kDefaultEnumerationLimit) {
    m->require_finite("enumerate_dual_cliques");
    const auto sq = square_magma(m);
    const auto k = static_cast<Label>(m->size());
    std::vector<Label> sides, diags;
    for (Label a = 0; a < k; ++a)
        for (Label b = 0; b < k; ++b) (a == b ? sides : diags).push_back(a * k + b);
    return enumerate_labeled(sq, n, sides, diags, limit);
}

struct KoszulCertificate {
    std::size_t m = 0;
    std::size_t dim_relations = 0;
    std::size_t dim_relations_dual = 0;
    std::size_t total = 0;
    bool passed() const {
        const BigInt mm = m;
        return BigInt(dim_relations) == ncm::dim_relations(mm) &&
               BigInt(dim_relations_dual) == ncm::dim_relations_dual(mm) &&
               BigInt(dim_relations + dim_relations_dual) == 2 * ipow(mm, 6);
    }
};

inline KoszulCertificate koszul_certificate(const MagmaPtr& m) {
    KoszulCertificate c;
    c.m = m->size();
    c.dim_relations = rank_of(relation_space(m), m);
    c.dim_relations_dual = rank_of(dual_relation_space(m), m);
    c.total = Arity3Basis{c.m}.dimension();
    return c;
}

} // namespace ncm

#endif // NCM_KOSZUL_HPP
