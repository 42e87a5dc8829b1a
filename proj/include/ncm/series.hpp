#ifndef NCM_SERIES_HPP
#define NCM_SERIES_HPP

#include "ncm/numeric.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncm {

inline BigInt narayana(int n, int k) {
    if (n < 2 || k < 0 || k > n - 2) return 0;
    const auto a = static_cast<unsigned>(n - 1);
    return binomial(a, static_cast<unsigned>(k)) * binomial(a, static_cast<unsigned>(k + 1)) / a;
}

inline BigInt dim_ncm(const BigInt& m, int n) {
    if (n < 1) throw std::invalid_argument("dim_ncm: arity must be >= 1");
    if (n == 1) return 1;
    BigInt s = 0;
    for (int k = 0; k <= n - 2; ++k)
        s += ipow(m, static_cast<unsigned>(n + k + 1)) * ipow(m - 1, static_cast<unsigned>(n - k - 2)) *
             narayana(n, k);
    return s;
}

inline BigInt dim_ncm_dual(const BigInt& m, int n) {
    if (n < 1) throw std::invalid_argument("dim_ncm_dual: arity must be >= 1");
    if (n == 1) return 1;
    const BigInt solid = m * (m - 1);
    BigInt s = 0;
    for (int k = 0; k <= n - 2; ++k)
        s += ipow(m, static_cast<unsigned>(n + 1)) * ipow(solid + 1, static_cast<unsigned>(k)) *
             ipow(solid, static_cast<unsigned>(n - k - 2)) * narayana(n, k);
    return s;
}

inline BigInt dim_relations(const BigInt& m) {
    return 2 * ipow(m, 6) - 2 * ipow(m, 5) + ipow(m, 4);
}
inline BigInt dim_relations_dual(const BigInt& m) { return 2 * ipow(m, 5) - ipow(m, 4); }

// Truncated power series c_0 + c_1 t + ... + c_N t^N.
struct RatSeries {
    std::vector<Rational> c;

    explicit RatSeries(std::size_t order = 0) : c(order + 1, Rational(0)) {}
    std::size_t order() const { return c.size() - 1; }
    Rational& operator[](std::size_t k) { return c[k]; }
    const Rational& operator[](std::size_t k) const { return c[k]; }

    static RatSeries variable(std::size_t order) {
        RatSeries t(order);
        if (order >= 1) t[1] = 1;
        return t;
    }

    friend RatSeries operator+(const RatSeries& a, const RatSeries& b) {
        RatSeries r(std::min(a.order(), b.order()));
        for (std::size_t k = 0; k <= r.order(); ++k) r[k] = a[k] + b[k];
        return r;
    }
    friend RatSeries operator*(const RatSeries& a, const RatSeries& b) {
        RatSeries r(std::min(a.order(), b.order()));
        for (std::size_t i = 0; i <= r.order(); ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; i + j <= r.order(); ++j) r[i + j] += a[i] * b[j];
        }
        return r;
    }
    friend RatSeries operator*(const Rational& s, const RatSeries& a) {
        RatSeries r = a;
        for (auto& x : r.c) x *= s;
        return r;
    }
    bool operator==(const RatSeries& o) const { return c == o.c; }
};

// f(g(t)) for g(0) = 0, by Horner's scheme.
inline RatSeries compose(const RatSeries& f, const RatSeries& g) {
    if (g[0] != 0) throw std::invalid_argument("compose: inner series must vanish at 0");
    const std::size_t n = std::min(f.order(), g.order());
    RatSeries r(n);
    for (std::size_t k = f.order() + 1; k-- > 0;) {
        r = r * g;
        r[0] += f[k];
    }
    return r;
}

// f(-t)
inline RatSeries negate_argument(const RatSeries& f) {
    RatSeries r = f;
    for (std::size_t k = 1; k <= r.order(); k += 2) r[k] = -r[k];
    return r;
}

// P(t, H) = sum_{i,j} coef[j][i] t^i H^j with integer coefficients.
struct AlgebraicEquation {
    std::vector<std::vector<BigInt>> coef;

    AlgebraicEquation& add(unsigned t_power, unsigned h_power, const BigInt& value) {
        if (coef.size() <= h_power) coef.resize(h_power + 1);
        auto& row = coef[h_power];
        if (row.size() <= t_power) row.resize(t_power + 1, BigInt(0));
        row[t_power] += value;
        return *this;
    }
    BigInt at(unsigned t_power, unsigned h_power) const {
        if (h_power >= coef.size() || t_power >= coef[h_power].size()) return 0;
        return coef[h_power][t_power];
    }

    // P(t, h) truncated at the order of h.
    RatSeries evaluate(const RatSeries& h) const {
        const std::size_t n = h.order();
        RatSeries total(n);
        RatSeries power(n);
        power[0] = 1;
        for (std::size_t j = 0; j < coef.size(); ++j) {
            if (j > 0) power = power * h;
            for (std::size_t i = 0; i < coef[j].size() && i <= n; ++i) {
                if (coef[j][i] == 0) continue;
                for (std::size_t k = 0; i + k <= n; ++k) total[i + k] += Rational(coef[j][i]) * power[k];
            }
        }
        return total;
    }
};

// The power-series root H with H(0) = 0 of P(t, H) = 0, up to t^N. Each new
// coefficient appears linearly with factor [t^0 H^1] P, which must be nonzero.
inline RatSeries solve_algebraic_series(const AlgebraicEquation& p, std::size_t order) {
    const BigInt lin = p.at(0, 1);
    if (p.at(0, 0) != 0) throw std::invalid_argument("solve_algebraic_series: P(0, 0) != 0");
    if (lin == 0) throw std::invalid_argument("solve_algebraic_series: [t^0 H^1] P is not invertible");
    RatSeries h(order);
    for (std::size_t k = 1; k <= order; ++k) {
        RatSeries partial(k);
        for (std::size_t i = 0; i < k; ++i) partial[i] = h[i];
        const RatSeries r = p.evaluate(partial);
        h[k] = -r[k] / Rational(lin);
    }
    const RatSeries check = p.evaluate(h);
    for (std::size_t k = 0; k <= order; ++k)
        if (check[k] != 0) throw std::logic_error("solve_algebraic_series: residual is nonzero");
    return h;
}

namespace equations {

inline AlgebraicEquation ncm(const BigInt& m) {
    AlgebraicEquation p;
    p.add(1, 0, 1).add(2, 0, m * m * m - 2 * m * m + 2 * m - 1);
    p.add(1, 1, 2 * m * m - 3 * m + 2).add(0, 1, -1);
    p.add(0, 2, m - 1);
    return p;
}

inline AlgebraicEquation ncm_dual(const BigInt& m) {
    AlgebraicEquation p;
    p.add(1, 0, 1).add(2, 0, m - 1);
    p.add(1, 1, 2 * m * m - 3 * m + 2).add(0, 1, -1);
    p.add(0, 2, m * m * m - 2 * m * m + 2 * m - 1);
    return p;
}

inline AlgebraicEquation motzkin() {
    AlgebraicEquation p;
    return p.add(1, 0, 1).add(1, 1, 1).add(0, 1, -1).add(1, 2, 1);
}

inline AlgebraicEquation nct() {
    AlgebraicEquation p;
    return p.add(1, 0, 1).add(0, 1, -1).add(0, 2, 2).add(0, 3, -1);
}

inline AlgebraicEquation ff4() {
    AlgebraicEquation p;
    return p.add(1, 0, 1).add(1, 1, 2).add(0, 1, -1).add(0, 2, 2);
}

inline AlgebraicEquation cubic_e2() {
    AlgebraicEquation p;
    return p.add(1, 0, 1).add(1, 1, 1).add(0, 1, -1).add(1, 2, 2).add(0, 2, 1);
}

} // namespace equations

struct KoszulSeriesCertificate {
    RatSeries h;
    RatSeries h_dual;
    RatSeries composed;
    bool identity_holds = false;
    bool h_matches_formula = false;
    bool dual_matches_formula = false;
    bool passed() const { return identity_holds && h_matches_formula && dual_matches_formula; }
};

// Checks H(-H!(-t)) = t mod t^{N+1} and both coefficient lists against the closed forms.
inline KoszulSeriesCertificate koszul_series_check(const BigInt& m, std::size_t order) {
    if (m < 2) throw std::invalid_argument("koszul_series_check: needs #M >= 2");
    KoszulSeriesCertificate cert;
    cert.h = solve_algebraic_series(equations::ncm(m), order);
    cert.h_dual = solve_algebraic_series(equations::ncm_dual(m), order);
    const RatSeries inner = Rational(-1) * negate_argument(cert.h_dual);
    cert.composed = compose(cert.h, inner);
    cert.identity_holds = cert.composed == RatSeries::variable(order);
    cert.h_matches_formula = cert.dual_matches_formula = true;
    for (std::size_t n = 1; n <= order; ++n) {
        if (cert.h[n] != Rational(dim_ncm(m, static_cast<int>(n)))) cert.h_matches_formula = false;
        if (cert.h_dual[n] != Rational(dim_ncm_dual(m, static_cast<int>(n)))) cert.dual_matches_formula = false;
    }
    return cert;
}

} // namespace ncm

#endif // NCM_SERIES_HPP
