#ifndef NCM_REWRITE_HPP
#define NCM_REWRITE_HPP

#include "ncm/clique.hpp"
#include "ncm/freeop.hpp"
#include "ncm/linalg.hpp"
#include "ncm/series.hpp"

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ncm {

// Path from the root: child positions (1-based) leading to an internal node.
using Address = std::vector<int>;

struct Redex {
    Address node;
    int slot = 1; // which child of the node is the inner triangle
    int rule = 1; // 1, 2 or 3
    bool operator==(const Redex&) const = default;
};

// --- relation space ---------------------------------------------------------

// Spanning set of the arity-3 relation space, three families.
inline std::vector<LinComb> relation_space(const MagmaPtr& m) {
    m->require_finite("relation_space");
    const auto els = m->elements();
    const Label u = m->unit();
    std::vector<LinComb> out;
    auto tri = [&](Label a, Label b, Label c) { return Clique::triangle(m, a, b, c); };
    auto pairs_with = [&](Label d) {
        std::vector<std::pair<Label, Label>> v;
        for (Label a : els)
            for (Label b : els)
                if (m->op(a, b) == d) v.push_back({a, b});
        return v;
    };
    std::vector<std::vector<std::pair<Label, Label>>> fibre(els.size());
    for (Label d : els) fibre[static_cast<std::size_t>(d)] = pairs_with(d);

    // a, b, c, d range over the four labels not constrained by the side condition.
    for (Label a : els)
        for (Label b : els)
            for (Label c : els)
                for (Label d : els) {
                    for (Label delta : m->non_unit_elements()) {
                        const auto& f = fibre[static_cast<std::size_t>(delta)];
                        for (std::size_t i = 0; i < f.size(); ++i)
                            for (std::size_t j = i + 1; j < f.size(); ++j) {
                                auto [p, q] = f[i];
                                auto [r, s] = f[j];
                                out.push_back(LinComb(compose_tree(tri(a, p, b), 1, tri(q, c, d))) -
                                              LinComb(compose_tree(tri(a, r, b), 1, tri(s, c, d))));
                                out.push_back(LinComb(compose_tree(tri(a, b, p), 2, tri(q, c, d))) -
                                              LinComb(compose_tree(tri(a, b, r), 2, tri(s, c, d))));
                            }
                    }
                    for (auto [p1, q0] : fibre[static_cast<std::size_t>(u)])
                        for (auto [r2, r0] : fibre[static_cast<std::size_t>(u)])
                            out.push_back(LinComb(compose_tree(tri(a, p1, b), 1, tri(q0, c, d))) -
                                          LinComb(compose_tree(tri(a, c, r2), 2, tri(r0, d, b))));
                }
    return out;
}

// Integer row of a linear combination in the arity-3 basis; `signed_pairing`
// multiplies o_2 coordinates by -1.
inline SparseRow to_row(const LinComb& lc, const Arity3Basis& basis, bool signed_pairing = false) {
    std::map<std::size_t, Rational> entries;
    for (const auto& [t, c] : lc.terms()) {
        const std::size_t idx = basis.index(t);
        const bool second = idx >= basis.dimension() / 2;
        entries[idx] += (signed_pairing && second) ? Rational(-c) : c;
    }
    BigInt l = 1;
    for (const auto& [i, v] : entries) {
        BigInt d = boost::multiprecision::denominator(v);
        l = l / boost::multiprecision::gcd(l, d) * d;
    }
    std::map<std::size_t, BigInt> ints;
    for (const auto& [i, v] : entries) ints[i] = boost::multiprecision::numerator(Rational(v * l));
    return make_row(std::move(ints));
}

inline std::size_t rank_of(const std::vector<LinComb>& space, const MagmaPtr& m) {
    Arity3Basis basis{m->size()};
    Echelon e;
    for (const auto& lc : space) e.insert(to_row(lc, basis));
    return e.rank();
}

// --- rewrite rule -------------------------------------------------------------

inline const SyntaxTree& subtree(const SyntaxTree& t, const Address& a) {
    const SyntaxTree* s = &t;
    for (int k : a) s = &s->child(k);
    return *s;
}

inline SyntaxTree& subtree(SyntaxTree& t, const Address& a) {
    SyntaxTree* s = &t;
    for (int k : a) s = &s->child(k);
    return *s;
}

namespace detail {

inline bool rule_matches(const SyntaxTree& x, int slot, int rule, const Magma& m) {
    if (x.is_leaf()) return false;
    const SyntaxTree& y = x.child(slot);
    if (y.is_leaf()) return false;
    const Triple p = triangle_labels(x.label());
    const Triple q = triangle_labels(y.label());
    switch (rule) {
    case 1: return slot == 1 && !m.is_unit(q[0]);
    case 2: return slot == 1 && m.is_unit(m.op(p[1], q[0]));
    case 3: return slot == 2 && !m.is_unit(q[0]);
    default: return false;
    }
}

// Rewrites the pattern rooted at x in place; the match must have been checked.
inline void apply_rule(SyntaxTree& x, int rule, const MagmaPtr& mp) {
    const Magma& m = *mp;
    const Label u = m.unit();
    if (rule == 1 || rule == 3) {
        const int slot = rule == 1 ? 1 : 2;
        SyntaxTree& y = x.child(slot);
        Triple p = triangle_labels(x.label());
        Triple q = triangle_labels(y.label());
        p[static_cast<std::size_t>(slot)] = m.op(p[static_cast<std::size_t>(slot)], q[0]);
        q[0] = u;
        x.set_label(triangle(mp, p));
        y.set_label(triangle(mp, q));
        return;
    }
    // (p0,p1,p2) o_1 (q0,q1,q2) -> (p0,q1,1) o_2 (1,q2,p2), subtrees A, B, C kept in order.
    const Triple p = triangle_labels(x.label());
    const Triple q = triangle_labels(x.child(1).label());
    SyntaxTree a = x.child(1).child(1);
    SyntaxTree b = x.child(1).child(2);
    SyntaxTree c = x.child(2);
    SyntaxTree inner = SyntaxTree::node(Clique::triangle(mp, u, q[2], p[2]), {std::move(b), std::move(c)});
    x = SyntaxTree::node(Clique::triangle(mp, p[0], q[1], u), {std::move(a), std::move(inner)});
}

inline void collect_redexes(const SyntaxTree& t, Address& at, const Magma& m, std::vector<Redex>& out) {
    if (t.is_leaf()) return;
    for (int k = 1; k <= static_cast<int>(t.children().size()); ++k) {
        at.push_back(k);
        collect_redexes(t.child(k), at, m, out);
        at.pop_back();
    }
    for (auto [slot, rule] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 3}})
        if (rule_matches(t, slot, rule, m)) out.push_back({at, slot, rule});
}

} // namespace detail

// Redexes in leftmost-innermost order (post-order, left to right).
inline std::vector<Redex> redexes(const SyntaxTree& t, const Magma& m) {
    std::vector<Redex> out;
    Address at;
    detail::collect_redexes(t, at, m, out);
    return out;
}

inline SyntaxTree rewrite_at(const SyntaxTree& t, const Redex& r, const MagmaPtr& m) {
    SyntaxTree s = t;
    SyntaxTree& x = subtree(s, r.node);
    if (!detail::rule_matches(x, r.slot, r.rule, *m)) throw std::invalid_argument("rewrite_at: rule does not match");
    detail::apply_rule(x, r.rule, m);
    return s;
}

// First matching rule at the node (rule 1, then 2, then 3), if any.
inline std::optional<SyntaxTree> rewrite_step(const SyntaxTree& t, const Address& node, const MagmaPtr& m) {
    const SyntaxTree& x = subtree(t, node);
    for (auto [slot, rule] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 3}})
        if (detail::rule_matches(x, slot, rule, *m)) return rewrite_at(t, {node, slot, rule}, m);
    return std::nullopt;
}

inline std::vector<std::pair<Redex, SyntaxTree>> successors(const SyntaxTree& t, const MagmaPtr& m) {
    std::vector<std::pair<Redex, SyntaxTree>> out;
    for (const auto& r : redexes(t, *m)) out.emplace_back(r, rewrite_at(t, r, m));
    return out;
}

inline bool is_normal_form(const SyntaxTree& t, const Magma& m) {
    if (t.is_leaf()) return true;
    const Triple p = triangle_labels(t.label());
    for (int k = 1; k <= 2; ++k) {
        const SyntaxTree& c = t.child(k);
        if (c.is_leaf()) continue;
        if (!m.is_unit(triangle_labels(c.label())[0])) return false;
        if (k == 1 && m.is_unit(p[1])) return false;
        if (!is_normal_form(c, m)) return false;
    }
    return true;
}

struct Phi {
    long alpha = 0;
    long beta = 0;
    auto operator<=>(const Phi&) const = default;
};

namespace detail {
inline int phi_rec(const SyntaxTree& t, const Magma& m, Phi& acc) {
    if (t.is_leaf()) return 0;
    const int left = phi_rec(t.child(1), m, acc);
    const int right = phi_rec(t.child(2), m, acc);
    acc.alpha += left;
    if (!m.is_unit(t.label().base())) ++acc.beta;
    return left + right + 1;
}
} // namespace detail

inline Phi phi_measure(const SyntaxTree& t, const Magma& m) {
    Phi acc;
    detail::phi_rec(t, m, acc);
    return acc;
}

// Leftmost-innermost normalization, aborting past the bound on the number of
// strictly decreasing values of phi.
inline SyntaxTree normal_form(SyntaxTree t, const MagmaPtr& m) {
    const long d = t.degree();
    const long bound = (d * d + 1) * (d + 1) + 1;
    for (long steps = 0;; ++steps) {
        auto rs = redexes(t, *m);
        if (rs.empty()) return t;
        if (steps > bound) throw std::logic_error("normal_form: step bound exceeded");
        t = rewrite_at(t, rs.front(), m);
    }
}

// Span of {s - t : s -> t} at arity 3.
inline std::vector<LinComb> rewrite_differences(const MagmaPtr& m) {
    std::vector<LinComb> out;
    for (const auto& s : enumerate_syntax_trees(m, 3))
        for (const auto& [r, t] : successors(s, m)) out.push_back(LinComb(s) - LinComb(t));
    return out;
}

// --- convergence certificate ---------------------------------------------------

struct ConfluenceCertificate {
    int arity = 0;
    std::size_t trees_checked = 0;
    std::vector<std::size_t> normal_form_counts; // index k-1 for arity k
    std::vector<std::string> expected_counts;
    std::vector<std::string> violations;
    bool passed() const { return violations.empty(); }
};

inline BigInt projected_state_count(std::size_t m, int n) {
    BigInt s = 0;
    for (int k = 1; k <= n; ++k) s += count_syntax_trees(m, k);
    return s;
}

// Explores every rewrite sequence from every tree of arity <= n, memoized on
// tree encodings, and checks uniqueness of normal forms, phi decrease, ev
// preservation, the normal-form predicate, the counts and the ev bijection.
inline ConfluenceCertificate confluence_report(const MagmaPtr& m, int n, std::size_t limit = kDefaultTreeLimit) {
    m->require_finite("confluence_report");
    const BigInt projected = projected_state_count(m->size(), n);
    if (projected > limit)
        throw std::length_error("confluence_report: " + projected.str() + " states exceed the limit " +
                                std::to_string(limit));
    ConfluenceCertificate cert;
    cert.arity = n;
    auto fail = [&](const std::string& what, const SyntaxTree& t) {
        if (cert.violations.size() < 50) cert.violations.push_back(what + ": " + encode(t));
    };
    for (int k = 1; k <= n; ++k) {
        std::unordered_map<std::string, std::set<std::string>> memo;
        std::function<const std::set<std::string>&(const SyntaxTree&)> explore =
            [&](const SyntaxTree& t) -> const std::set<std::string>& {
            const std::string key = encode(t);
            if (auto it = memo.find(key); it != memo.end()) return it->second;
            std::set<std::string> nfs;
            const auto next = successors(t, m);
            if (next.empty()) {
                nfs.insert(key);
            } else {
                const Phi before = phi_measure(t, *m);
                const Clique value = ev(t, m);
                for (const auto& [r, s] : next) {
                    if (!(phi_measure(s, *m) < before)) fail("phi does not decrease", t);
                    if (!(ev(s, m) == value)) fail("ev not preserved", t);
                    const auto& sub = explore(s);
                    nfs.insert(sub.begin(), sub.end());
                }
            }
            return memo.emplace(key, std::move(nfs)).first->second;
        };
        std::vector<Clique> images;
        std::size_t normal = 0;
        for (const auto& t : enumerate_syntax_trees(m, k, limit)) {
            ++cert.trees_checked;
            const auto& nfs = explore(t);
            if (nfs.size() != 1) fail("several normal forms", t);
            const bool irreducible = redexes(t, *m).empty();
            if (irreducible != is_normal_form(t, *m)) fail("normal-form predicate disagrees", t);
            if (encode(normal_form(t, m)) != *nfs.begin()) fail("strategy normal form differs", t);
            if (irreducible) {
                ++normal;
                images.push_back(ev(t, m));
            }
        }
        cert.normal_form_counts.push_back(normal);
        const BigInt expected = dim_ncm(BigInt(m->size()), k);
        cert.expected_counts.push_back(expected.str());
        if (BigInt(normal) != expected)
            cert.violations.push_back("arity " + std::to_string(k) + ": " + std::to_string(normal) +
                                      " normal forms, expected " + expected.str());
        std::sort(images.begin(), images.end());
        if (std::adjacent_find(images.begin(), images.end()) != images.end())
            cert.violations.push_back("arity " + std::to_string(k) + ": ev is not injective on normal forms");
        if (images != enumerate_noncrossing(m, k))
            cert.violations.push_back("arity " + std::to_string(k) + ": ev image differs from the noncrossing cliques");
    }
    return cert;
}

} // namespace ncm

#endif // NCM_REWRITE_HPP
