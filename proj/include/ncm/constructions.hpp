#ifndef NCM_CONSTRUCTIONS_HPP
#define NCM_CONSTRUCTIONS_HPP

#include "ncm/freeop.hpp"
#include "ncm/linalg.hpp"
#include "ncm/series.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace ncm {

struct SuboperadClosure {
    MagmaPtr magma;
    std::vector<Clique> generators;
    int nmax = 0;
    std::vector<std::vector<Clique>> by_arity; // index = arity, sorted
    std::vector<std::string> trace;
    bool partial = false;
    std::string partial_reason;

    std::vector<std::size_t> dims() const {
        std::vector<std::size_t> d;
        for (int n = 1; n < static_cast<int>(by_arity.size()); ++n) d.push_back(by_arity[static_cast<std::size_t>(n)].size());
        return d;
    }
};

inline constexpr std::size_t kDefaultClosureLimit = 5'000'000;

// Every element of arity n is x o_i g with x of smaller arity and g a generator,
// so arities are filled in increasing order.
inline SuboperadClosure suboperad_closure(const MagmaPtr& m, const std::vector<Clique>& gens, int nmax,
                                          std::size_t limit = kDefaultClosureLimit) {
    if (nmax < 1) throw std::invalid_argument("suboperad_closure: nmax must be >= 1");
    SuboperadClosure c;
    c.magma = m;
    c.generators = gens;
    c.nmax = nmax;
    c.by_arity.resize(static_cast<std::size_t>(nmax) + 1);
    for (const auto& g : gens) {
        if (g.arity() < 2) throw std::invalid_argument("suboperad_closure: generators need arity >= 2");
        if (!crossing_free(g)) throw std::invalid_argument("suboperad_closure: generator is not noncrossing");
    }
    std::vector<std::unordered_set<Clique>> seen(c.by_arity.size());
    auto store = [&](Clique p) {
        auto n = static_cast<std::size_t>(p.arity());
        if (seen[n].insert(p).second) c.by_arity[n].push_back(std::move(p));
    };
    store(Clique::unit(m));
    std::size_t total = 1;
    for (int n = 2; n <= nmax && !c.partial; ++n) {
        for (const auto& g : gens) {
            const int k = n - g.arity() + 1;
            if (k < 1) continue;
            for (const auto& x : c.by_arity[static_cast<std::size_t>(k)]) {
                for (int i = 1; i <= k; ++i) store(partial_compose(x, i, g));
                if (c.by_arity[static_cast<std::size_t>(n)].size() + total > limit) {
                    c.partial = true;
                    c.partial_reason = "element limit " + std::to_string(limit) + " reached at arity " + std::to_string(n);
                    break;
                }
            }
            if (c.partial) break;
        }
        auto& level = c.by_arity[static_cast<std::size_t>(n)];
        std::sort(level.begin(), level.end());
        total += level.size();
        c.trace.push_back("arity " + std::to_string(n) + ": " + std::to_string(level.size()));
    }
    if (c.partial) c.by_arity.resize(c.by_arity.size() - 1);
    return c;
}

// For each stored pair (x, y) and position i with a composite inside the bound,
// returns the first composite missing from the closure.
inline std::optional<std::string> closure_gap(const SuboperadClosure& c) {
    std::vector<std::unordered_set<Clique>> sets;
    for (const auto& lvl : c.by_arity) sets.emplace_back(lvl.begin(), lvl.end());
    const int top = static_cast<int>(c.by_arity.size()) - 1;
    for (int a = 1; a <= top; ++a)
        for (int b = 1; a + b - 1 <= top; ++b)
            for (const auto& x : c.by_arity[static_cast<std::size_t>(a)])
                for (const auto& y : c.by_arity[static_cast<std::size_t>(b)])
                    for (int i = 1; i <= a; ++i) {
                        Clique z = partial_compose(x, i, y);
                        if (!sets[static_cast<std::size_t>(z.arity())].count(z))
                            return to_string(x) + " o_" + std::to_string(i) + " " + to_string(y);
                    }
    return std::nullopt;
}

inline bool relation_verify(const MagmaPtr& m, const SyntaxTree& lhs, const SyntaxTree& rhs) {
    if (lhs.arity() != rhs.arity()) throw std::invalid_argument("relation_verify: arity mismatch");
    return ev(lhs, m) == ev(rhs, m);
}

struct RelationDisplay {
    std::string name;
    SyntaxTree lhs;
    SyntaxTree rhs;
};

struct NamedConstruction {
    std::string name;
    MagmaPtr magma;
    std::vector<Clique> generators;
    std::vector<std::string> generator_names;
    std::vector<BigInt> expected_dims; // from arity 1
    std::vector<RelationDisplay> relations;
    AlgebraicEquation hilbert;
};

namespace detail {
inline SyntaxTree c1(const Clique& x, const Clique& y) { return compose_tree(x, 1, y); }
inline SyntaxTree c2(const Clique& x, const Clique& y) { return compose_tree(x, 2, y); }
inline std::vector<BigInt> big(std::initializer_list<int> xs) { return {xs.begin(), xs.end()}; }
} // namespace detail

inline std::vector<std::string> named_construction_names() { return {"NCT", "FF4", "BNC", "MOTZKIN", "CUBIC_E2"}; }

inline NamedConstruction named_construction(const std::string& name) {
    using detail::c1;
    using detail::c2;
    NamedConstruction nc;
    nc.name = name;
    if (name == "NCT") {
        auto z = Magma::integers();
        nc.magma = z;
        const Clique l = Clique::triangle(z, 0, -1, 0), r = Clique::triangle(z, 0, 0, -1);
        nc.generators = {l, r};
        nc.generator_names = {"(0;-1,0)", "(0;0,-1)"};
        nc.expected_dims = detail::big({1, 2, 7, 30, 143, 728});
        nc.relations = {{"swap", c1(r, l), c2(l, r)}};
        nc.hilbert = equations::nct();
    } else if (name == "FF4") {
        auto z = Magma::integers();
        nc.magma = z;
        const Clique a = Clique::triangle(z, -1, -1, 1), b = Clique::triangle(z, -1, 1, -1),
                     c = Clique::triangle(z, -1, 1, 1), d = Clique::triangle(z, 1, -1, -1);
        nc.generators = {a, b, c, d};
        nc.generator_names = {"(-1;-1,1)", "(-1;1,-1)", "(-1;1,1)", "(1;-1,-1)"};
        nc.expected_dims = detail::big({1, 4, 24, 176, 1440});
        nc.relations = {{"ff4-1", c1(b, a), c2(a, b)}, {"ff4-2", c1(c, c), c2(c, c)},
                        {"ff4-3", c1(c, a), c2(a, c)}, {"ff4-4", c1(c, b), c2(c, a)},
                        {"ff4-5", c1(b, c), c2(c, b)}, {"ff4-6", c1(d, d), c2(d, d)},
                        {"ff4-7", c1(b, b), c2(b, d)}, {"ff4-8", c1(a, d), c2(a, a)}};
        nc.hilbert = equations::ff4();
    } else if (name == "BNC") {
        auto m = bnc();
        nc.magma = m;
        for (Label x : m->non_unit_elements())
            for (Label y : m->non_unit_elements())
                for (Label w : m->non_unit_elements()) {
                    nc.generators.push_back(Clique::triangle(m, x, y, w));
                    nc.generator_names.push_back("(" + m->label_name(x) + ";" + m->label_name(y) + "," +
                                                 m->label_name(w) + ")");
                }
        nc.expected_dims = detail::big({1, 8, 80, 992});
        nc.hilbert = equations::ncm_dual(2);
    } else if (name == "MOTZKIN") {
        auto m = d0();
        nc.magma = m;
        const Label one = m->unit(), zero = m->parse_label("0");
        const Clique t = Clique::triangle(m, one, one, one);
        const Clique s = Clique::bubble(m, one, {one, zero, one});
        nc.generators = {t, s};
        nc.generator_names = {"T", "S"};
        nc.expected_dims = detail::big({1, 1, 2, 4, 9, 21, 51, 127});
        nc.relations = {{"TT", c1(t, t), c2(t, t)},
                        {"ST", c1(s, t), c2(t, s)},
                        {"TS", c1(t, s), compose_tree(s, 3, t)},
                        {"SS", c1(s, s), compose_tree(s, 3, s)}};
        nc.hilbert = equations::motzkin();
    } else if (name == "CUBIC_E2") {
        auto m = e2();
        nc.magma = m;
        const Label one = m->unit();
        const Clique g[2] = {Clique::triangle(m, 1, one, 1), Clique::triangle(m, 2, one, 2)};
        nc.generators = {g[0], g[1]};
        nc.generator_names = {"(e1;1,e1)", "(e2;1,e2)"};
        nc.expected_dims = detail::big({1, 2, 8, 36, 180, 956, 5300});
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                const auto gi = SyntaxTree::corolla(g[i]);
                nc.relations.push_back({"e" + std::to_string(i + 1) + "e" + std::to_string(j + 1),
                                        graft(gi, 2, c2(g[0], g[j])), graft(gi, 2, c2(g[1], g[j]))});
            }
        nc.hilbert = equations::cubic_e2();
    } else {
        throw std::invalid_argument("unknown construction: " + name + " (expected NCT, FF4, BNC, MOTZKIN or CUBIC_E2)");
    }
    return nc;
}

// All syntax trees on the generators with exactly `degree` internal nodes.
inline std::vector<SyntaxTree> generator_trees(const std::vector<Clique>& gens, int degree) {
    if (degree < 1) return {SyntaxTree::leaf()};
    std::vector<SyntaxTree> level;
    for (const auto& g : gens) level.push_back(SyntaxTree::corolla(g));
    for (int d = 2; d <= degree; ++d) {
        std::vector<SyntaxTree> next;
        std::unordered_set<std::string> seen;
        for (const auto& t : level)
            for (int i = 1; i <= t.arity(); ++i)
                for (const auto& g : gens) {
                    SyntaxTree u = graft(t, i, SyntaxTree::corolla(g));
                    if (seen.insert(encode(u)).second) next.push_back(std::move(u));
                }
        level = std::move(next);
    }
    std::sort(level.begin(), level.end());
    return level;
}

struct RelationScan {
    int degree = 0;
    std::size_t trees = 0;
    std::size_t distinct = 0;
    std::size_t rank = 0;                        // dim span{s - t : ev(s) = ev(t)}
    std::vector<std::vector<SyntaxTree>> groups; // fibres of ev with more than one tree
};

// Groups the degree-d trees on the generators by evaluation.
inline RelationScan relation_scan(const MagmaPtr& m, const std::vector<Clique>& gens, int degree) {
    RelationScan r;
    r.degree = degree;
    const auto trees = generator_trees(gens, degree);
    r.trees = trees.size();
    std::unordered_map<Clique, std::vector<SyntaxTree>> fibres;
    std::vector<Clique> order;
    for (const auto& t : trees) {
        Clique c = ev(t, m);
        auto [it, fresh] = fibres.try_emplace(c);
        if (fresh) order.push_back(c);
        it->second.push_back(t);
    }
    r.distinct = fibres.size();
    std::sort(order.begin(), order.end());
    for (const auto& c : order) {
        auto& f = fibres[c];
        r.rank += f.size() - 1;
        if (f.size() > 1) r.groups.push_back(std::move(f));
    }
    return r;
}

inline bool is_bnc_magma(const Magma& m) { return m.finite() && m.name() == "BNC" && m.size() == 3; }

inline bool bnc_membership(const Clique& p) {
    if (!is_bnc_magma(*p.magma())) throw std::invalid_argument("bnc_membership: clique is not over M_BNC");
    if (!crossing_free(p)) return false;
    if (p.is_unit()) return true;
    if (!p.solid(1, p.arity() + 1)) return false;
    for (int k = 1; k <= p.arity(); ++k)
        if (!p.solid(k, k + 1)) return false;
    return true;
}

inline Clique bnc_complement(const Clique& p) {
    const Magma& m = *p.magma();
    if (!is_bnc_magma(m)) throw std::invalid_argument("bnc_complement: clique is not over M_BNC");
    const Label a = m.parse_label("a"), b = m.parse_label("b");
    return map_labels(p, [a, b](Label x) { return x == a ? b : x == b ? a : x; });
}

} // namespace ncm

#endif // NCM_CONSTRUCTIONS_HPP
