#ifndef NCM_CLIQUE_HPP
#define NCM_CLIQUE_HPP

#include "ncm/magma.hpp"
#include "ncm/numeric.hpp"

#include <algorithm>
#include <compare>
#include <functional>
#include <limits>
#include <string>
#include <vector>

namespace ncm {

struct ArcLabel {
    int i = 0;
    int j = 0;
    Label label = 0;
    auto operator<=>(const ArcLabel&) const = default;
};

// An M-clique of arity n on vertices 1..n+1. Only non-unit labels are stored,
// sorted by arc, so equality of the arc lists is equality of cliques.
class Clique {
public:
    Clique() = default;

    Clique(MagmaPtr magma, int arity, std::vector<ArcLabel> arcs) : magma_(std::move(magma)), arity_(arity) {
        if (!magma_) throw std::invalid_argument("clique needs a magma");
        if (arity_ < 1) throw std::invalid_argument("clique arity must be >= 1");
        std::sort(arcs.begin(), arcs.end());
        for (std::size_t k = 0; k < arcs.size(); ++k) {
            const auto& a = arcs[k];
            if (a.i < 1 || a.i >= a.j || a.j > arity_ + 1)
                throw std::invalid_argument("arc (" + std::to_string(a.i) + "," + std::to_string(a.j) +
                                            ") out of range for arity " + std::to_string(arity_));
            if (k > 0 && arcs[k - 1].i == a.i && arcs[k - 1].j == a.j)
                throw std::invalid_argument("arc listed twice");
            if (!magma_->contains(a.label)) throw std::invalid_argument("label outside magma");
            if (!magma_->is_unit(a.label)) arcs_.push_back(a);
        }
        if (arity_ == 1 && !arcs_.empty()) throw std::invalid_argument("the arity-1 clique is the unit clique");
    }

    static Clique unit(MagmaPtr m) { return Clique(std::move(m), 1, {}); }

    static Clique triangle(MagmaPtr m, Label p0, Label p1, Label p2) {
        return Clique(std::move(m), 2, {{1, 3, p0}, {1, 2, p1}, {2, 3, p2}});
    }

    static Clique bubble(MagmaPtr m, Label base, const std::vector<Label>& edges) {
        const int n = static_cast<int>(edges.size());
        std::vector<ArcLabel> arcs{{1, n + 1, base}};
        for (int k = 0; k < n; ++k) arcs.push_back({k + 1, k + 2, edges[static_cast<std::size_t>(k)]});
        if (n == 1) {
            if (!m->is_unit(base) || !m->is_unit(edges[0])) throw std::invalid_argument("arity-1 bubble must be unlabeled");
            arcs.clear();
        }
        return Clique(std::move(m), n, std::move(arcs));
    }

    const MagmaPtr& magma() const { return magma_; }
    int arity() const { return arity_; }
    const std::vector<ArcLabel>& arcs() const { return arcs_; }

    Label label(int i, int j) const {
        auto it = std::lower_bound(arcs_.begin(), arcs_.end(), ArcLabel{i, j, std::numeric_limits<Label>::min()});
        if (it != arcs_.end() && it->i == i && it->j == j) return it->label;
        return magma_->unit();
    }
    bool solid(int i, int j) const { return !magma_->is_unit(label(i, j)); }
    Label base() const { return label(1, arity_ + 1); }
    Label edge(int k) const { return label(k, k + 1); }

    static bool is_diagonal(int i, int j, int arity) { return j - i >= 2 && !(i == 1 && j == arity + 1); }

    std::vector<ArcLabel> solid_diagonals() const {
        std::vector<ArcLabel> out;
        for (const auto& a : arcs_)
            if (is_diagonal(a.i, a.j, arity_)) out.push_back(a);
        return out;
    }

    bool is_unit() const { return arity_ == 1; }
    bool is_bubble() const { return solid_diagonals().empty(); }

    bool operator==(const Clique& o) const {
        return arity_ == o.arity_ && arcs_ == o.arcs_ && same_magma(o);
    }
    bool operator<(const Clique& o) const {
        if (arity_ != o.arity_) return arity_ < o.arity_;
        return arcs_ < o.arcs_;
    }

    bool same_magma(const Clique& o) const {
        return magma_ == o.magma_ || (magma_ && o.magma_ && magma_->name() == o.magma_->name());
    }

    std::size_t hash() const {
        std::size_t h = std::hash<int>{}(arity_);
        for (const auto& a : arcs_) {
            h ^= std::hash<long long>{}((static_cast<long long>(a.i) << 40) ^ (static_cast<long long>(a.j) << 20) ^
                                        a.label) +
                 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }

private:
    MagmaPtr magma_;
    int arity_ = 1;
    std::vector<ArcLabel> arcs_;
};

struct CliqueHash {
    std::size_t operator()(const Clique& c) const { return c.hash(); }
};

inline std::string to_string(const Clique& p) {
    std::string s = "{arity " + std::to_string(p.arity());
    for (const auto& a : p.arcs())
        s += "; (" + std::to_string(a.i) + "," + std::to_string(a.j) + ")=" + p.magma()->label_name(a.label);
    return s + "}";
}

inline bool crossing(int i, int j, int k, int l) { return (i < k && k < j && j < l) || (k < i && i < l && l < j); }

inline bool crossing_free(const Clique& p) {
    const auto d = p.solid_diagonals();
    for (std::size_t a = 0; a < d.size(); ++a)
        for (std::size_t b = a + 1; b < d.size(); ++b)
            if (crossing(d[a].i, d[a].j, d[b].i, d[b].j)) return false;
    return true;
}

inline Clique partial_compose(const Clique& p, int i, const Clique& q) {
    if (!p.same_magma(q)) throw std::invalid_argument("partial_compose: cliques over different magmas");
    const int n = p.arity();
    const int m = q.arity();
    if (i < 1 || i > n) throw std::out_of_range("partial_compose: position out of range");
    const Magma& M = *p.magma();
    auto shift = [&](int v) { return v <= i ? v : v + m - 1; };
    std::vector<ArcLabel> arcs;
    arcs.reserve(p.arcs().size() + q.arcs().size() + 1);
    for (const auto& a : p.arcs())
        if (!(a.i == i && a.j == i + 1)) arcs.push_back({shift(a.i), shift(a.j), a.label});
    for (const auto& a : q.arcs())
        if (!(a.i == 1 && a.j == m + 1)) arcs.push_back({a.i + i - 1, a.j + i - 1, a.label});
    arcs.push_back({i, i + m, M.op(p.edge(i), q.base())});
    return Clique(p.magma(), n + m - 1, std::move(arcs));
}

// Letters p_1..p_n; the arity-1 unit clique has the empty border.
inline std::vector<Label> border(const Clique& p) {
    std::vector<Label> w;
    if (p.arity() == 1) return w;
    for (int k = 1; k <= p.arity(); ++k) w.push_back(p.edge(k));
    return w;
}

inline Clique map_labels(const Clique& p, const std::function<Label(Label)>& theta, MagmaPtr target = nullptr) {
    if (!target) target = p.magma();
    if (theta(p.magma()->unit()) != target->unit()) throw std::invalid_argument("map_labels: map does not fix the unit");
    std::vector<ArcLabel> arcs;
    for (const auto& a : p.arcs()) arcs.push_back({a.i, a.j, theta(a.label)});
    return Clique(target, p.arity(), std::move(arcs));
}

// All noncrossing sets of diagonals of the (n+1)-gon, as (i, j) pairs sorted.
inline std::vector<std::vector<std::pair<int, int>>> noncrossing_supports(int n) {
    std::vector<std::pair<int, int>> diags;
    for (int i = 1; i <= n + 1; ++i)
        for (int j = i + 2; j <= n + 1; ++j)
            if (Clique::is_diagonal(i, j, n)) diags.push_back({i, j});
    std::vector<std::vector<std::pair<int, int>>> out;
    std::vector<std::pair<int, int>> chosen;
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == diags.size()) {
            out.push_back(chosen);
            return;
        }
        rec(k + 1);
        auto [i, j] = diags[k];
        for (auto [a, b] : chosen)
            if (crossing(a, b, i, j)) return;
        chosen.push_back(diags[k]);
        rec(k + 1);
        chosen.pop_back();
    };
    rec(0);
    return out;
}

inline constexpr std::size_t kDefaultEnumerationLimit = 20'000'000;

// Labels every support: base and edges over M, solid diagonals over M minus unit.
// `diag_labels` and `side_labels` let dual cliques reuse this routine.
inline std::vector<Clique> enumerate_labeled(const MagmaPtr& magma, int n, const std::vector<Label>& side_labels,
                                             const std::vector<Label>& diag_labels,
                                             std::size_t limit = kDefaultEnumerationLimit) {
    if (n < 1) throw std::invalid_argument("arity must be >= 1");
    if (n == 1) return {Clique::unit(magma)};
    std::vector<Clique> out;
    for (const auto& support : noncrossing_supports(n)) {
        std::vector<std::pair<int, int>> slots;
        for (int k = 1; k <= n; ++k) slots.push_back({k, k + 1});
        slots.push_back({1, n + 1});
        const std::size_t sides = slots.size();
        slots.insert(slots.end(), support.begin(), support.end());
        if (!support.empty() && diag_labels.empty()) continue;
        std::vector<std::size_t> idx(slots.size(), 0);
        while (true) {
            std::vector<ArcLabel> arcs;
            arcs.reserve(slots.size());
            for (std::size_t s = 0; s < slots.size(); ++s) {
                Label l = s < sides ? side_labels[idx[s]] : diag_labels[idx[s]];
                arcs.push_back({slots[s].first, slots[s].second, l});
            }
            out.emplace_back(magma, n, std::move(arcs));
            if (out.size() > limit) throw std::length_error("enumeration exceeds the configured limit");
            std::size_t s = 0;
            for (; s < slots.size(); ++s) {
                const std::size_t cap = s < sides ? side_labels.size() : diag_labels.size();
                if (++idx[s] < cap) break;
                idx[s] = 0;
            }
            if (s == slots.size()) break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Noncrossing M-cliques of arity n in increasing order of their sorted arc lists.
inline std::vector<Clique> enumerate_noncrossing(const MagmaPtr& magma, int n,
                                                 std::size_t limit = kDefaultEnumerationLimit) {
    magma->require_finite("enumerate_noncrossing");
    return enumerate_labeled(magma, n, magma->elements(), magma->non_unit_elements(), limit);
}

} // namespace ncm

template <>
struct std::hash<ncm::Clique> {
    std::size_t operator()(const ncm::Clique& c) const { return c.hash(); }
};

#endif // NCM_CLIQUE_HPP
