#ifndef NCM_FREEOP_HPP
#define NCM_FREEOP_HPP

#include "ncm/numeric.hpp"
#include "ncm/syntax_tree.hpp"

#include <array>
#include <map>

namespace ncm {

using Triple = std::array<Label, 3>; // (base, edge 1, edge 2)

inline Triple triangle_labels(const Clique& p) {
    if (p.arity() != 2) throw std::invalid_argument("not a triangle");
    return {p.base(), p.edge(1), p.edge(2)};
}

inline Clique triangle(const MagmaPtr& m, const Triple& t) { return Clique::triangle(m, t[0], t[1], t[2]); }

// All m^3 triangles, lexicographic in (base, edge 1, edge 2).
inline std::vector<Clique> all_triangles(const MagmaPtr& m) {
    std::vector<Clique> out;
    for (Label a : m->elements())
        for (Label b : m->elements())
            for (Label c : m->elements()) out.push_back(Clique::triangle(m, a, b, c));
    return out;
}

// x o_i y as a degree-2 syntax tree.
inline SyntaxTree compose_tree(const Clique& x, int i, const Clique& y) {
    return graft(SyntaxTree::corolla(x), i, SyntaxTree::corolla(y));
}

inline SyntaxTree compose_tree(const SyntaxTree& x, int i, const SyntaxTree& y) { return graft(x, i, y); }

// Binary tree shapes with n leaves; internal nodes carry a placeholder label.
inline std::vector<SyntaxTree> binary_shapes(int n, const Clique& placeholder) {
    if (n == 1) return {SyntaxTree::leaf()};
    std::vector<SyntaxTree> out;
    for (int l = 1; l < n; ++l)
        for (const auto& a : binary_shapes(l, placeholder))
            for (const auto& b : binary_shapes(n - l, placeholder))
                out.push_back(SyntaxTree::node(placeholder, {a, b}));
    return out;
}

inline BigInt catalan(unsigned k) { return binomial(2 * k, k) / (k + 1); }

inline BigInt count_syntax_trees(std::size_t m, int n) {
    if (n < 1) return 0;
    return catalan(static_cast<unsigned>(n - 1)) * ipow(BigInt(m * m * m), static_cast<unsigned>(n - 1));
}

inline constexpr std::size_t kDefaultTreeLimit = 2'000'000;

namespace detail {
inline void collect_nodes(SyntaxTree& t, std::vector<SyntaxTree*>& out) {
    if (t.is_leaf()) return;
    out.push_back(&t);
    for (auto& c : t.children()) collect_nodes(c, out);
}
} // namespace detail

// All syntax trees on the m^3 triangles with n leaves.
inline std::vector<SyntaxTree> enumerate_syntax_trees(const MagmaPtr& m, int n,
                                                      std::size_t limit = kDefaultTreeLimit) {
    m->require_finite("enumerate_syntax_trees");
    const BigInt projected = count_syntax_trees(m->size(), n);
    if (projected > limit)
        throw std::length_error("enumerate_syntax_trees: " + projected.str() + " trees exceed the limit " +
                                std::to_string(limit));
    const auto tris = all_triangles(m);
    std::vector<SyntaxTree> out;
    for (auto shape : binary_shapes(n, tris[0])) {
        std::vector<SyntaxTree*> nodes;
        detail::collect_nodes(shape, nodes);
        std::vector<std::size_t> idx(nodes.size(), 0);
        while (true) {
            for (std::size_t k = 0; k < nodes.size(); ++k) nodes[k]->set_label(tris[idx[k]]);
            out.push_back(shape);
            std::size_t k = nodes.size();
            while (k > 0) {
                if (++idx[k - 1] < tris.size()) break;
                idx[k - 1] = 0;
                --k;
            }
            if (k == 0) break;
        }
    }
    return out;
}

// Exact-rational linear combination of syntax trees.
class LinComb {
public:
    LinComb() = default;
    LinComb(const SyntaxTree& t, Rational c = 1) { add(t, c); }

    void add(const SyntaxTree& t, const Rational& c) {
        if (c == 0) return;
        auto it = terms_.find(t);
        if (it == terms_.end()) {
            terms_.emplace(t, c);
            return;
        }
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }

    LinComb& operator+=(const LinComb& o) {
        for (const auto& [t, c] : o.terms_) add(t, c);
        return *this;
    }
    LinComb& operator-=(const LinComb& o) {
        for (const auto& [t, c] : o.terms_) add(t, -c);
        return *this;
    }
    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    friend LinComb operator*(const Rational& s, const LinComb& a) {
        LinComb r;
        for (const auto& [t, c] : a.terms_) r.add(t, s * c);
        return r;
    }

    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::map<SyntaxTree, Rational>& terms() const { return terms_; }
    bool operator==(const LinComb& o) const { return terms_ == o.terms_; }

private:
    std::map<SyntaxTree, Rational> terms_;
};

// Arity-3 basis: index = shape * m^6 + tri(x) * m^3 + tri(y), shape 0 for x o_1 y, 1 for x o_2 y,
// tri(p0, p1, p2) = (p0 * m + p1) * m + p2.
struct Arity3Basis {
    std::size_t m;

    std::size_t dimension() const { return 2 * m * m * m * m * m * m; }

    std::size_t tri(const Clique& p) const {
        auto t = triangle_labels(p);
        return (static_cast<std::size_t>(t[0]) * m + static_cast<std::size_t>(t[1])) * m +
               static_cast<std::size_t>(t[2]);
    }

    std::size_t index(const SyntaxTree& t) const {
        if (t.is_leaf() || t.degree() != 2 || t.arity() != 3) throw std::invalid_argument("not a degree-2 binary tree");
        const std::size_t m3 = m * m * m;
        const bool first = !t.child(1).is_leaf();
        const auto& y = first ? t.child(1) : t.child(2);
        return (first ? 0 : 1) * m3 * m3 + tri(t.label()) * m3 + tri(y.label());
    }

    SyntaxTree tree(std::size_t idx, const MagmaPtr& magma) const {
        const std::size_t m3 = m * m * m;
        const std::size_t shape = idx / (m3 * m3);
        auto decode = [&](std::size_t k) {
            Triple t{static_cast<Label>(k / (m * m)), static_cast<Label>((k / m) % m), static_cast<Label>(k % m)};
            return triangle(magma, t);
        };
        return compose_tree(decode((idx / m3) % m3), shape == 0 ? 1 : 2, decode(idx % m3));
    }
};

} // namespace ncm

#endif // NCM_FREEOP_HPP
