#include "ncm/clique.hpp"
#include "ncm/series.hpp"

#include <catch_amalgamated.hpp>

#include <map>
#include <set>

using namespace ncm;

namespace {

// Composition computed arc by arc on the result polygon.
Clique oracle_compose(const Clique& p, int i, const Clique& q) {
    const int n = p.arity(), m = q.arity(), total = n + m - 1;
    auto back = [&](int v) { return v <= i ? v : v - m + 1; };
    std::vector<ArcLabel> arcs;
    for (int u = 1; u <= total + 1; ++u)
        for (int v = u + 1; v <= total + 1; ++v) {
            const bool u_in = u >= i && u <= i + m, v_in = v >= i && v <= i + m;
            const bool u_inner = u > i && u < i + m, v_inner = v > i && v < i + m;
            Label l = p.magma()->unit();
            if (u == i && v == i + m)
                l = p.magma()->op(p.edge(i), q.base());
            else if (u_in && v_in)
                l = q.label(u - i + 1, v - i + 1);
            else if (!u_inner && !v_inner)
                l = p.label(back(u), back(v));
            arcs.push_back({u, v, l});
        }
    return Clique(p.magma(), total, arcs);
}

// Counts noncrossing diagonal sets with k elements by scanning all subsets.
std::map<int, long> support_counts(int n) {
    std::vector<std::pair<int, int>> d;
    for (int i = 1; i <= n + 1; ++i)
        for (int j = i + 2; j <= n + 1; ++j)
            if (!(i == 1 && j == n + 1)) d.push_back({i, j});
    std::map<int, long> out;
    for (unsigned long s = 0; s < (1UL << d.size()); ++s) {
        bool ok = true;
        for (std::size_t a = 0; a < d.size() && ok; ++a)
            for (std::size_t b = a + 1; b < d.size() && ok; ++b)
                if ((s >> a & 1) && (s >> b & 1) && crossing(d[a].first, d[a].second, d[b].first, d[b].second))
                    ok = false;
        if (ok) ++out[__builtin_popcountl(s)];
    }
    return out;
}

} // namespace

TEST_CASE("arcs are canonical: units dropped, sorted") {
    auto m = cyclic(3);
    Clique a(m, 3, {{2, 3, 1}, {1, 2, 0}, {1, 3, 2}});
    Clique b(m, 3, {{1, 3, 2}, {2, 3, 1}});
    CHECK(a == b);
    CHECK(a.arcs().size() == 2);
    CHECK(a.label(1, 2) == 0);
    CHECK_FALSE(a.solid(1, 2));
    CHECK_THROWS(Clique(m, 3, {{1, 5, 1}}));
    CHECK_THROWS(Clique(m, 3, {{1, 2, 9}}));
    CHECK_THROWS(Clique(m, 3, {{1, 2, 1}, {1, 2, 2}}));
}

TEST_CASE("partial composition of two triangles over N2") {
    auto m = cyclic(2);
    auto p = Clique::triangle(m, 1, 1, 0);
    auto q = Clique::triangle(m, 1, 0, 1);
    // merged arc (1,3) gets 1+1 = 0 and vanishes
    auto r = partial_compose(p, 1, q);
    CHECK(r == Clique(m, 3, {{1, 4, 1}, {2, 3, 1}}));
    auto s = partial_compose(p, 2, q);
    CHECK(s == Clique(m, 3, {{1, 4, 1}, {1, 2, 1}, {2, 4, 1}, {3, 4, 1}}));
}

TEST_CASE("partial composition with the unit clique") {
    auto m = cyclic(3);
    auto u = Clique::unit(m);
    for (const auto& p : enumerate_noncrossing(m, 3)) {
        for (int i = 1; i <= 3; ++i) CHECK(partial_compose(p, i, u) == p);
        CHECK(partial_compose(u, 1, p) == p);
    }
}

TEST_CASE("partial composition agrees with the arc-by-arc oracle") {
    auto m = cyclic(2);
    for (int a = 2; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            for (const auto& p : enumerate_noncrossing(m, a))
                for (const auto& q : enumerate_noncrossing(m, b))
                    for (int i = 1; i <= a; ++i) {
                        auto r = partial_compose(p, i, q);
                        REQUIRE(r == oracle_compose(p, i, q));
                        CHECK(crossing_free(r));
                    }
}

TEST_CASE("crossing detection") {
    auto m = cyclic(2);
    Clique x(m, 4, {{1, 3, 1}, {2, 4, 1}});
    CHECK_FALSE(crossing_free(x));
    Clique y(m, 4, {{1, 3, 1}, {3, 5, 1}});
    CHECK(crossing_free(y));
    // a crossing pair where one diagonal is unlabeled does not count
    Clique z(m, 4, {{1, 3, 1}, {2, 4, 0}});
    CHECK(crossing_free(z));
}

TEST_CASE("noncrossing supports against subset scan") {
    for (int n = 2; n <= 6; ++n) {
        auto counts = support_counts(n);
        std::map<int, long> got;
        for (const auto& s : noncrossing_supports(n)) ++got[static_cast<int>(s.size())];
        CHECK(got == counts);
    }
}

TEST_CASE("enumeration counts equal the closed formula and the support count") {
    for (int m : {2, 3}) {
        auto mg = cyclic(m);
        for (int n = 1; n <= (m == 2 ? 5 : 4); ++n) {
            const auto list = enumerate_noncrossing(mg, n);
            CHECK(BigInt(list.size()) == dim_ncm(m, n));
            if (n >= 2) {
                BigInt s = 0;
                for (auto [k, c] : support_counts(n))
                    s += BigInt(c) * ipow(m, static_cast<unsigned>(n + 1)) * ipow(m - 1, static_cast<unsigned>(k));
                CHECK(s == BigInt(list.size()));
            }
            CHECK(std::is_sorted(list.begin(), list.end()));
        }
    }
}

TEST_CASE("published dimension lists") {
    const std::vector<long> n2{1, 8, 48, 352, 2880, 25216};
    for (int n = 1; n <= 6; ++n) CHECK(dim_ncm(2, n) == n2[static_cast<std::size_t>(n - 1)]);
    const std::vector<long> n3{1, 27, 405, 7533};
    for (int n = 1; n <= 4; ++n) CHECK(dim_ncm(3, n) == n3[static_cast<std::size_t>(n - 1)]);
    CHECK(dim_ncm(4, 8) == BigInt("201889939456"));
}

TEST_CASE("enumeration guard") {
    CHECK_THROWS_AS(enumerate_noncrossing(cyclic(3), 5, 1000), std::length_error);
    CHECK_THROWS(enumerate_noncrossing(Magma::integers(), 3));
}

TEST_CASE("border and bubbles") {
    auto d = d0();
    const Label one = d->unit(), zero = d->parse_label("0");
    auto s = Clique::bubble(d, one, {one, zero, one});
    CHECK(s.is_bubble());
    CHECK(border(s) == std::vector<Label>{one, zero, one});
    CHECK(border(Clique::unit(d)).empty());
}

TEST_CASE("label maps commute with composition for the BNC complement") {
    auto m = bnc();
    const Label a = m->parse_label("a"), b = m->parse_label("b");
    auto theta = [&](Label x) { return x == a ? b : x == b ? a : x; };
    for (int x = 1; x <= 2; ++x)
        for (int y = 1; x + y - 1 <= 3; ++y)
            for (const auto& p : enumerate_noncrossing(m, x))
                for (const auto& q : enumerate_noncrossing(m, y))
                    for (int i = 1; i <= x; ++i)
                        REQUIRE(map_labels(partial_compose(p, i, q), theta) ==
                                partial_compose(map_labels(p, theta), i, map_labels(q, theta)));
}

TEST_CASE("composition over Z") {
    auto z = Magma::integers();
    auto l = Clique::triangle(z, 0, -1, 0);
    auto r = Clique::triangle(z, 0, 0, -1);
    CHECK(partial_compose(r, 1, l) == partial_compose(l, 2, r));
    CHECK(partial_compose(r, 1, l) == Clique(z, 3, {{1, 2, -1}, {3, 4, -1}}));
}

TEST_CASE("right cancelability controls injectivity of q -> p o_i q") {
    for (auto m : {cyclic(2), d0()}) {
        bool injective = true;
        for (int a = 2; a <= 3; ++a)
            for (int b = 2; a + b - 1 <= 4; ++b)
                for (const auto& p : enumerate_noncrossing(m, a))
                    for (int i = 1; i <= a; ++i) {
                        std::set<Clique> images;
                        const auto qs = enumerate_noncrossing(m, b);
                        for (const auto& q : qs) images.insert(partial_compose(p, i, q));
                        if (images.size() != qs.size()) injective = false;
                    }
        CHECK(injective == right_cancelable(*m));
    }
}
