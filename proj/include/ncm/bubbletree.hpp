#ifndef NCM_BUBBLETREE_HPP
#define NCM_BUBBLETREE_HPP

#include "ncm/syntax_tree.hpp"

#include <stdexcept>
#include <vector>

namespace ncm {

// Vertices x = z_1 < ... < z_k = y of the area adjacent to (x, y): each step
// goes to the farthest vertex reachable by a solid diagonal or an edge.
inline std::vector<int> area_path(const Clique& p, int x, int y) {
    const int n = p.arity();
    const bool base = x == 1 && y == n + 1;
    if (x < 1 || y > n + 1 || y - x < 2 || !(base || Clique::is_diagonal(x, y, n)))
        throw std::invalid_argument("area: arc is neither the base nor a diagonal");
    std::vector<int> path{x};
    int z = x;
    while (z < y) {
        int next = z + 1;
        for (int w = y; w > z + 1; --w)
            if (!(z == x && w == y) && p.solid(z, w)) {
                next = w;
                break;
            }
        path.push_back(next);
        z = next;
    }
    return path;
}

inline Clique area(const Clique& p, int x, int y) {
    const auto path = area_path(p, x, y);
    std::vector<Label> edges;
    for (std::size_t k = 0; k + 1 < path.size(); ++k) edges.push_back(p.label(path[k], path[k + 1]));
    return Clique::bubble(p.magma(), p.label(x, y), edges);
}

// The clique on vertices x..y of p, renumbered from 1, with its base set to 1.
inline Clique sub_clique(const Clique& p, int x, int y) {
    std::vector<ArcLabel> arcs;
    for (const auto& a : p.arcs())
        if (a.i >= x && a.j <= y && !(a.i == x && a.j == y)) arcs.push_back({a.i - x + 1, a.j - x + 1, a.label});
    return Clique(p.magma(), y - x, std::move(arcs));
}

inline SyntaxTree bt(const Clique& p) {
    if (!crossing_free(p)) throw std::invalid_argument("bt: clique is not noncrossing");
    if (p.arity() == 1) return SyntaxTree::leaf();
    const auto path = area_path(p, 1, p.arity() + 1);
    std::vector<SyntaxTree> children;
    for (std::size_t k = 0; k + 1 < path.size(); ++k)
        children.push_back(path[k + 1] - path[k] == 1 ? SyntaxTree::leaf() : bt(sub_clique(p, path[k], path[k + 1])));
    return SyntaxTree::node(area(p, 1, p.arity() + 1), std::move(children));
}

inline Clique ev_bubbletree(const SyntaxTree& t, const MagmaPtr& m) { return ev(t, m); }

// Conditions characterizing the image of bt: bubbles everywhere, unit bases
// below the root, internal children only under solid edges.
inline bool in_bt_image(const SyntaxTree& t, bool root = true) {
    if (t.is_leaf()) return true;
    const Clique& b = t.label();
    if (b.arity() < 2 || !b.is_bubble()) return false;
    if (!root && !b.magma()->is_unit(b.base())) return false;
    for (int k = 1; k <= b.arity(); ++k) {
        const auto& c = t.child(k);
        if (c.is_leaf()) continue;
        if (!b.solid(k, k + 1)) return false;
        if (!in_bt_image(c, false)) return false;
    }
    return true;
}

// Each edge carries a label; `label` on the root is the stem. Leaves have no children.
struct SchroderTree {
    Label label = 0;
    std::vector<SchroderTree> children;

    bool is_leaf() const { return children.empty(); }
    int leaves() const {
        if (is_leaf()) return 1;
        int n = 0;
        for (const auto& c : children) n += c.leaves();
        return n;
    }
    bool operator==(const SchroderTree&) const = default;
};

namespace detail {
inline SchroderTree to_schroder_rec(const Clique& p, Label stem) {
    if (p.arity() == 1) return {stem, {}};
    const auto path = area_path(p, 1, p.arity() + 1);
    SchroderTree s{stem, {}};
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
        const Label e = p.label(path[k], path[k + 1]);
        if (path[k + 1] - path[k] == 1)
            s.children.push_back({e, {}});
        else
            s.children.push_back(to_schroder_rec(sub_clique(p, path[k], path[k + 1]), e));
    }
    return s;
}
} // namespace detail

inline SchroderTree to_schroder(const Clique& p) {
    if (!crossing_free(p)) throw std::invalid_argument("to_schroder: clique is not noncrossing");
    return detail::to_schroder_rec(p, p.base());
}

inline void validate_schroder(const SchroderTree& s, const Magma& m, bool root = true) {
    if (s.is_leaf()) {
        if (root && !m.is_unit(s.label)) throw std::invalid_argument("Schroder tree: a lone leaf has stem 1");
        return;
    }
    if (s.children.size() < 2) throw std::invalid_argument("Schroder tree: internal node with one child");
    if (!m.contains(s.label)) throw std::invalid_argument("Schroder tree: label outside magma");
    for (const auto& c : s.children) {
        if (!c.is_leaf() && m.is_unit(c.label))
            throw std::invalid_argument("Schroder tree: unit label between internal nodes");
        if (c.is_leaf() && !m.contains(c.label)) throw std::invalid_argument("Schroder tree: label outside magma");
        if (!c.is_leaf()) validate_schroder(c, m, false);
    }
}

namespace detail {
inline Clique from_schroder_rec(const SchroderTree& s, const MagmaPtr& m, Label base) {
    if (s.is_leaf()) return Clique::unit(m);
    std::vector<Label> edges;
    for (const auto& c : s.children) edges.push_back(c.label);
    Clique r = Clique::bubble(m, base, edges);
    for (int k = static_cast<int>(s.children.size()); k >= 1; --k) {
        const auto& c = s.children[static_cast<std::size_t>(k - 1)];
        if (!c.is_leaf()) r = partial_compose(r, k, from_schroder_rec(c, m, m->unit()));
    }
    return r;
}
} // namespace detail

inline Clique from_schroder(const SchroderTree& s, const MagmaPtr& m) {
    validate_schroder(s, *m);
    return detail::from_schroder_rec(s, m, s.label);
}

namespace detail {
inline bool graft_schroder(SchroderTree& s, int& remaining, const SchroderTree& t, const Magma& m) {
    for (std::size_t k = 0; k < s.children.size(); ++k) {
        SchroderTree& c = s.children[k];
        if (!c.is_leaf()) {
            if (graft_schroder(c, remaining, t, m)) return true;
            continue;
        }
        if (--remaining > 0) continue;
        const Label lab = m.op(c.label, t.label);
        if (t.is_leaf()) {
            c.label = lab;
        } else if (!m.is_unit(lab)) {
            c = t;
            c.label = lab;
        } else {
            auto pos = s.children.begin() + static_cast<std::ptrdiff_t>(k);
            pos = s.children.erase(pos);
            s.children.insert(pos, t.children.begin(), t.children.end());
        }
        return true;
    }
    return false;
}
} // namespace detail

// Grafts t on the i-th leaf of s; the new edge gets a * b, or is contracted when that is 1.
inline SchroderTree schroder_compose(const SchroderTree& s, int i, const SchroderTree& t, const Magma& m) {
    if (i < 1 || i > s.leaves()) throw std::out_of_range("schroder_compose: position out of range");
    if (s.is_leaf()) {
        SchroderTree r = t;
        r.label = m.op(s.label, t.label);
        return r;
    }
    SchroderTree r = s;
    int remaining = i;
    detail::graft_schroder(r, remaining, t, m);
    return r;
}

} // namespace ncm

#endif // NCM_BUBBLETREE_HPP
