#ifndef NCM_LINALG_HPP
#define NCM_LINALG_HPP

#include "ncm/numeric.hpp"

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

namespace ncm {

// Sparse integer row: (column, nonzero coefficient) sorted by column.
using SparseRow = std::vector<std::pair<std::size_t, BigInt>>;

inline SparseRow make_row(std::map<std::size_t, BigInt> entries) {
    SparseRow r;
    for (auto& [c, v] : entries)
        if (v != 0) r.emplace_back(c, std::move(v));
    return r;
}

// a*x + b*y, dropping zeros.
inline SparseRow combine(const BigInt& a, const SparseRow& x, const BigInt& b, const SparseRow& y) {
    SparseRow out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            out.emplace_back(x[i].first, a * x[i].second);
            ++i;
        } else if (i == x.size() || y[j].first < x[i].first) {
            out.emplace_back(y[j].first, b * y[j].second);
            ++j;
        } else {
            BigInt v = a * x[i].second + b * y[j].second;
            if (v != 0) out.emplace_back(x[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

// Divide by the content and make the leading coefficient positive.
inline void normalize(SparseRow& r) {
    if (r.empty()) return;
    BigInt g = 0;
    for (const auto& e : r) {
        g = boost::multiprecision::gcd(g, e.second);
        if (g == 1) break;
    }
    if (r.front().second < 0) g = -g;
    if (g != 1)
        for (auto& e : r) e.second /= g;
}

// Fraction-free row echelon form over the integers, kept sparse and indexed by
// leading column.
class Echelon {
public:
    // Reduces r against the stored pivots; returns the residue (empty if r is in the span).
    SparseRow reduce(SparseRow r) const {
        normalize(r);
        while (!r.empty()) {
            auto it = pivots_.find(r.front().first);
            if (it == pivots_.end()) break;
            const SparseRow& p = it->second;
            BigInt a = p.front().second;
            BigInt b = r.front().second;
            BigInt g = boost::multiprecision::gcd(a, b);
            r = combine(a / g, r, -(b / g), p);
            normalize(r);
        }
        return r;
    }

    bool insert(SparseRow r) {
        r = reduce(std::move(r));
        if (r.empty()) return false;
        pivots_.emplace(r.front().first, std::move(r));
        return true;
    }

    bool contains(const SparseRow& r) const { return reduce(r).empty(); }
    std::size_t rank() const { return pivots_.size(); }
    const std::map<std::size_t, SparseRow>& pivots() const { return pivots_; }

    // Reduced echelon form: every pivot column is zero in every other pivot row.
    void make_reduced() {
        for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
            const std::size_t col = it->first;
            const SparseRow& p = it->second;
            for (auto& [c, row] : pivots_) {
                if (c >= col) break;
                auto e = std::lower_bound(row.begin(), row.end(), col,
                                          [](const auto& x, std::size_t k) { return x.first < k; });
                if (e == row.end() || e->first != col) continue;
                BigInt a = p.front().second;
                BigInt b = e->second;
                BigInt g = boost::multiprecision::gcd(a, b);
                row = combine(a / g, row, -(b / g), p);
                normalize(row);
            }
        }
    }

    // Integer basis of {x : row . x = 0 for all rows}, columns in [0, ncols).
    std::vector<SparseRow> nullspace(std::size_t ncols) {
        make_reduced();
        std::vector<SparseRow> basis;
        for (std::size_t f = 0; f < ncols; ++f) {
            if (pivots_.count(f)) continue;
            std::map<std::size_t, Rational> x;
            x[f] = 1;
            for (const auto& [c, row] : pivots_) {
                if (c > f) break;
                auto e = std::lower_bound(row.begin(), row.end(), f,
                                          [](const auto& y, std::size_t k) { return y.first < k; });
                if (e == row.end() || e->first != f) continue;
                x[c] = Rational(-e->second, row.front().second);
            }
            BigInt l = 1;
            for (const auto& [c, v] : x) {
                BigInt d = boost::multiprecision::denominator(v);
                l = l / boost::multiprecision::gcd(l, d) * d;
            }
            SparseRow r;
            for (const auto& [c, v] : x) {
                Rational s = v * l;
                r.emplace_back(c, boost::multiprecision::numerator(s));
            }
            normalize(r);
            basis.push_back(std::move(r));
        }
        return basis;
    }

private:
    std::map<std::size_t, SparseRow> pivots_;
};

inline std::size_t rank_of(const std::vector<SparseRow>& rows) {
    Echelon e;
    for (const auto& r : rows) e.insert(r);
    return e.rank();
}

// True iff every row of b lies in the span of a.
inline bool span_contains(const std::vector<SparseRow>& a, const std::vector<SparseRow>& b) {
    Echelon e;
    for (const auto& r : a) e.insert(r);
    for (const auto& r : b)
        if (!e.contains(r)) return false;
    return true;
}

} // namespace ncm

#endif // NCM_LINALG_HPP
