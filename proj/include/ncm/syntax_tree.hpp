#ifndef NCM_SYNTAX_TREE_HPP
#define NCM_SYNTAX_TREE_HPP

#include "ncm/clique.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncm {

// Planar rooted tree whose internal nodes carry cliques (triangles, bubbles or
// arbitrary generators) with as many children as the clique's arity.
class SyntaxTree {
public:
    static SyntaxTree leaf() { return SyntaxTree(); }

    static SyntaxTree node(Clique gen, std::vector<SyntaxTree> children) {
        if (static_cast<int>(children.size()) != gen.arity())
            throw std::invalid_argument("node arity does not match its generator");
        SyntaxTree t;
        t.gen_ = std::move(gen);
        t.children_ = std::move(children);
        return t;
    }

    static SyntaxTree corolla(Clique gen) {
        std::vector<SyntaxTree> ch(static_cast<std::size_t>(gen.arity()), leaf());
        return node(std::move(gen), std::move(ch));
    }

    bool is_leaf() const { return !gen_.has_value(); }
    const Clique& label() const { return *gen_; }
    void set_label(Clique c) {
        if (c.arity() != label().arity()) throw std::invalid_argument("relabel changes node arity");
        gen_ = std::move(c);
    }
    const std::vector<SyntaxTree>& children() const { return children_; }
    std::vector<SyntaxTree>& children() { return children_; }
    const SyntaxTree& child(int k) const { return children_.at(static_cast<std::size_t>(k - 1)); }
    SyntaxTree& child(int k) { return children_.at(static_cast<std::size_t>(k - 1)); }

    int arity() const {
        if (is_leaf()) return 1;
        int n = 0;
        for (const auto& c : children_) n += c.arity();
        return n;
    }

    int degree() const {
        if (is_leaf()) return 0;
        int d = 1;
        for (const auto& c : children_) d += c.degree();
        return d;
    }

    friend int compare(const SyntaxTree& a, const SyntaxTree& b) {
        if (a.is_leaf() || b.is_leaf()) return static_cast<int>(!a.is_leaf()) - static_cast<int>(!b.is_leaf());
        if (*a.gen_ < *b.gen_) return -1;
        if (*b.gen_ < *a.gen_) return 1;
        for (std::size_t k = 0; k < a.children_.size(); ++k)
            if (int c = compare(a.children_[k], b.children_[k])) return c;
        return 0;
    }
    bool operator==(const SyntaxTree& o) const { return compare(*this, o) == 0; }
    bool operator<(const SyntaxTree& o) const { return compare(*this, o) < 0; }

private:
    std::optional<Clique> gen_;
    std::vector<SyntaxTree> children_;
};

// Canonical text encoding: "|" for a leaf, "(<arity>[i,j:l ...] child...)" for nodes.
inline std::string encode(const SyntaxTree& t) {
    if (t.is_leaf()) return "|";
    std::string s = "(" + std::to_string(t.label().arity()) + "[";
    bool first = true;
    for (const auto& a : t.label().arcs()) {
        if (!first) s += ' ';
        s += std::to_string(a.i) + "," + std::to_string(a.j) + ":" + std::to_string(a.label);
        first = false;
    }
    s += "]";
    for (const auto& c : t.children()) s += encode(c);
    return s + ")";
}

namespace detail {
inline bool graft_at(SyntaxTree& s, int& remaining, const SyntaxTree& t) {
    if (s.is_leaf()) {
        if (--remaining == 0) {
            s = t;
            return true;
        }
        return false;
    }
    for (auto& c : s.children())
        if (graft_at(c, remaining, t)) return true;
    return false;
}
} // namespace detail

inline SyntaxTree graft(const SyntaxTree& s, int i, const SyntaxTree& t) {
    if (i < 1 || i > s.arity()) throw std::out_of_range("graft: position out of range");
    SyntaxTree r = s;
    int remaining = i;
    detail::graft_at(r, remaining, t);
    return r;
}

// Complete composition x o [c_1, ..., c_k], composing right to left so that
// positions stay valid.
inline Clique full_compose(const Clique& x, const std::vector<Clique>& args) {
    if (static_cast<int>(args.size()) != x.arity()) throw std::invalid_argument("full_compose: arity mismatch");
    Clique r = x;
    for (int i = x.arity(); i >= 1; --i) r = partial_compose(r, i, args[static_cast<std::size_t>(i - 1)]);
    return r;
}

inline Clique ev(const SyntaxTree& t, const MagmaPtr& magma) {
    if (t.is_leaf()) return Clique::unit(magma);
    std::vector<Clique> args;
    args.reserve(t.children().size());
    for (const auto& c : t.children()) args.push_back(ev(c, magma));
    return full_compose(t.label(), args);
}

// Convenience for trees with at least one internal node.
inline Clique ev(const SyntaxTree& t) {
    if (t.is_leaf()) throw std::invalid_argument("ev of a bare leaf needs the magma");
    return ev(t, t.label().magma());
}

} // namespace ncm

#endif // NCM_SYNTAX_TREE_HPP
