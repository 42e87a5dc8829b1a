// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include "ncm/ncm.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace ncm;

namespace {

struct Outcome {
    bool ok = true;
    std::ostringstream detail;
    void require(bool cond, const std::string& what) {
        if (!cond) {
            if (ok) detail << "failed: ";
            else detail << "; ";
            detail << what;
            ok = false;
        }
    }
};

bool run(int id, const char* title, double budget_s, const std::function<void(Outcome&)>& body) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(secs < budget_s, "runtime over budget");
    std::printf("%s criterion %d: %s (%.2fs, budget %.0fs)", o.ok ? "PASS" : "FAIL", id, title, secs, budget_s);
    const std::string d = o.detail.str();
    if (!d.empty()) std::printf(" -- %s", d.c_str());
    std::printf("\n");
    std::fflush(stdout);
    return o.ok;
}

std::vector<std::array<WordPolynomial, 3>> word_samples(std::size_t k, Label lo, Label hi, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::array<WordPolynomial, 3>> out;
    for (std::size_t i = 0; i < k; ++i)
        out.push_back({random_polynomial(rng, lo, hi), random_polynomial(rng, lo, hi), random_polynomial(rng, lo, hi)});
    return out;
}

} // namespace

int main() {
    bool all = true;

    all &= run(1, "dimension tables by enumeration", 60, [](Outcome& o) {
        const std::vector<long> m2{1, 8, 48, 352, 2880, 25216};
        const std::vector<long> m3{1, 27, 405, 7533};
        for (int n = 1; n <= 6; ++n) {
            const auto c = enumerate_noncrossing(cyclic(2), n).size();
            o.require(static_cast<long>(c) == m2[static_cast<std::size_t>(n - 1)], "m=2 n=" + std::to_string(n));
            o.require(dim_ncm(2, n) == c, "formula m=2 n=" + std::to_string(n));
        }
        for (int n = 1; n <= 4; ++n) {
            const auto c = enumerate_noncrossing(cyclic(3), n).size();
            o.require(static_cast<long>(c) == m3[static_cast<std::size_t>(n - 1)], "m=3 n=" + std::to_string(n));
            o.require(dim_ncm(3, n) == c, "formula m=3 n=" + std::to_string(n));
        }
        o.require(dim_ncm(4, 8) == BigInt("201889939456"), "formula-level m=4 n=8");
    });

    all &= run(2, "relation-space ranks", 30, [](Outcome& o) {
        o.require(rank_of(relation_space(cyclic(2)), cyclic(2)) == 80, "dim r, m=2");
        o.require(rank_of(relation_space(cyclic(3)), cyclic(3)) == 1053, "dim r, m=3");
        o.require(rank_of(dual_relation_space(cyclic(2)), cyclic(2)) == 48, "dim r!, m=2");
        for (int m = 1; m <= 3; ++m) {
            const auto c = koszul_certificate(cyclic(m));
            o.require(c.passed(), "dim r + dim r! = 2m^6, m=" + std::to_string(m));
        }
    });

    all &= run(3, "Koszul orthogonality", 10, [](Outcome& o) {
        for (int m = 1; m <= 2; ++m) {
            const auto r = relation_space(cyclic(m));
            const auto d = dual_relation_space(cyclic(m));
            std::size_t bad = 0;
            for (const auto& a : r)
                for (const auto& b : d)
                    if (pairing(a, b) != 0) ++bad;
            o.require(bad == 0, std::to_string(bad) + " non-orthogonal pairs, m=" + std::to_string(m));
        }
    });

    all &= run(4, "convergence certificate", 120, [](Outcome& o) {
        for (int m = 1; m <= 2; ++m) {
            const auto c = confluence_report(cyclic(m), 4);
            o.require(c.passed(), "m=" + std::to_string(m) + (c.violations.empty() ? "" : ": " + c.violations.front()));
        }
    });

    all &= run(5, "PBW bijection", 30, [](Outcome& o) {
        auto m = cyclic(2);
        for (int n = 1; n <= 4; ++n) {
            std::vector<Clique> images;
            for (const auto& t : enumerate_syntax_trees(m, n))
                if (is_normal_form(t, *m)) images.push_back(ev(t, m));
            std::sort(images.begin(), images.end());
            const bool injective = std::adjacent_find(images.begin(), images.end()) == images.end();
            o.require(injective && images == enumerate_noncrossing(m, n), "arity " + std::to_string(n));
        }
    });

    all &= run(6, "Koszul series identity", 30, [](Outcome& o) {
        for (int m = 2; m <= 3; ++m) {
            const auto c = koszul_series_check(m, 8);
            o.require(c.identity_holds, "H(-H!(-t)) = t, m=" + std::to_string(m));
            o.require(c.h_matches_formula && c.dual_matches_formula, "coefficients, m=" + std::to_string(m));
            for (int n = 1; n <= 4; ++n)
                o.require(BigInt(enumerate_dual_cliques(cyclic(m), n).size()) == dim_ncm_dual(m, n),
                          "dual cliques m=" + std::to_string(m) + " n=" + std::to_string(n));
        }
    });

    all &= run(7, "named constructions", 120, [](Outcome& o) {
        const std::map<std::string, std::vector<std::size_t>> expected{{"NCT", {1, 2, 7, 30, 143}},
                                                                       {"FF4", {1, 4, 24, 176}},
                                                                       {"BNC", {1, 8, 80}},
                                                                       {"MOTZKIN", {1, 1, 2, 4, 9, 21}},
                                                                       {"CUBIC_E2", {1, 2, 8, 36, 180}}};
        for (const auto& [name, dims] : expected) {
            auto nc = named_construction(name);
            auto c = suboperad_closure(nc.magma, nc.generators, static_cast<int>(dims.size()));
            o.require(!c.partial && c.dims() == dims, name + " dims");
            for (const auto& r : nc.relations) o.require(relation_verify(nc.magma, r.lhs, r.rhs), name + " " + r.name);
        }
        auto e2c = named_construction("CUBIC_E2");
        o.require(relation_scan(e2c.magma, e2c.generators, 2).rank == 0, "cubic E2 quadratic scan");
    });

    all &= run(8, "algebra actions", 20, [](Outcome& o) {
        auto n4 = cyclic(4);
        auto word = [](Word w) { return WordPolynomial::word(std::move(w)); };
        o.require(triangle_op_words(*n4, {1, 2, 0}, word({0, 2, 1, 1}), word({3, 1, 2})) ==
                      word({3, 1, 0, 0, 0, 2, 3}),
                  "N4 word identity");
        auto s3 = subsets(3);
        auto set = [&](const char* n) { return s3->parse_label(n); };
        Clique p(s3, 8,
                 {{1, 7, set("{1}")}, {2, 3, set("{1}")}, {2, 4, set("{1}")}, {3, 4, set("{2}")},
                  {4, 6, set("{1,2}")}, {4, 5, set("{2}")}, {6, 7, set("{3}")}, {7, 9, set("{1,2}")}});
        const auto f = word({1}) + word({2}) + word({3});
        o.require(clique_action(p, std::vector<WordPolynomial>(8, f), selected_concatenation(s3)) ==
                      f * word({1, 2, 2, 1, 3}) * (word({1, 2}) + word({2, 1})),
                  "S3 action example");
        auto r1 = relations_check(monoid_words(n4), word_samples(100, 0, 3, 1));
        o.require(r1.passed() && r1.samples == 100, "monoid words over N4");
        auto r2 = relations_check(constant_term(d0()), word_samples(100, 1, 3, 2));
        o.require(r2.passed() && r2.samples == 100, "constant term over D0");
        auto r3 = relations_check(selected_concatenation(s3), word_samples(100, 1, 3, 3), 2000);
        o.require(r3.passed() && r3.samples == 100, "selected concatenation over S3");
    });

    all &= run(9, "structural properties", 60, [](Outcome& o) {
        auto m = cyclic(2);
        std::vector<std::vector<Clique>> by(6);
        for (int n = 1; n <= 5; ++n) by[static_cast<std::size_t>(n)] = enumerate_noncrossing(m, n);
        std::size_t seq = 0, par = 0, unit = 0, crossing = 0;
        const Clique u = Clique::unit(m);
        for (int n = 1; n <= 5; ++n)
            for (const auto& x : by[static_cast<std::size_t>(n)]) {
                if (!(partial_compose(u, 1, x) == x)) ++unit;
                for (int i = 1; i <= n; ++i)
                    if (!(partial_compose(x, i, u) == x)) ++unit;
            }
        for (int a = 2; a <= 5; ++a)
            for (int b = 2; a + b - 1 <= 6; ++b)
                for (int c = 2; a + b + c - 2 <= 6; ++c)
                    for (const auto& x : by[static_cast<std::size_t>(a)])
                        for (const auto& y : by[static_cast<std::size_t>(b)]) {
                            std::vector<Clique> xy(static_cast<std::size_t>(a) + 1);
                            for (int i = 1; i <= a; ++i) {
                                xy[static_cast<std::size_t>(i)] = partial_compose(x, i, y);
                                if (!crossing_free(xy[static_cast<std::size_t>(i)])) ++crossing;
                            }
                            for (const auto& z : by[static_cast<std::size_t>(c)]) {
                                for (int i = 1; i <= a; ++i) {
                                    const Clique& l = xy[static_cast<std::size_t>(i)];
                                    for (int j = 1; j <= b; ++j)
                                        if (!(partial_compose(l, i + j - 1, z) ==
                                              partial_compose(x, i, partial_compose(y, j, z))))
                                            ++seq;
                                    for (int j = i + 1; j <= a; ++j)
                                        if (!(partial_compose(l, j + b - 1, z) ==
                                              partial_compose(partial_compose(x, j, z), i, y)))
                                            ++par;
                                }
                            }
                        }
        o.require(unit == 0, "unit axiom");
        o.require(seq == 0, "sequential associativity");
        o.require(par == 0, "parallel associativity");
        o.require(crossing == 0, "noncrossing closure");
        std::size_t trips = 0;
        for (int n = 1; n <= 5; ++n)
            for (const auto& p : by[static_cast<std::size_t>(n)]) {
                if (!(ev(bt(p), m) == p)) ++trips;
                if (!(from_schroder(to_schroder(p), m) == p)) ++trips;
            }
        o.require(trips == 0, "bt/Schroder round trips");
    });

    return all ? 0 : 1;
}
