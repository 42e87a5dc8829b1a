#include "ncm/freeop.hpp"
#include "ncm/series.hpp"

#include <catch_amalgamated.hpp>

#include <set>

using namespace ncm;

namespace {
int left_internal(const SyntaxTree& t) {
    if (t.is_leaf()) return 0;
    return (t.child(1).is_leaf() ? 0 : 1) + left_internal(t.child(1)) + left_internal(t.child(2));
}
} // namespace

TEST_CASE("Narayana numbers by counting binary trees") {
    auto m = cyclic(1);
    const auto ph = Clique::triangle(m, 0, 0, 0);
    for (int n = 2; n <= 8; ++n) {
        std::map<int, long> counts;
        for (const auto& t : binary_shapes(n, ph)) ++counts[left_internal(t)];
        for (int k = 0; k <= n - 2; ++k) CHECK(narayana(n, k) == counts[k]);
        CHECK(BigInt(binary_shapes(n, ph).size()) == catalan(static_cast<unsigned>(n - 1)));
    }
}

TEST_CASE("syntax tree enumeration") {
    auto m = cyclic(2);
    for (int n = 1; n <= 4; ++n) {
        const auto trees = enumerate_syntax_trees(m, n);
        CHECK(BigInt(trees.size()) == count_syntax_trees(2, n));
        std::set<std::string> keys;
        for (const auto& t : trees) {
            CHECK(t.arity() == n);
            keys.insert(encode(t));
        }
        CHECK(keys.size() == trees.size());
    }
    CHECK(enumerate_syntax_trees(m, 3).size() == 128);
    CHECK_THROWS_AS(enumerate_syntax_trees(cyclic(4), 6, 1000), std::length_error);
}

TEST_CASE("evaluation is onto the noncrossing cliques") {
    for (auto m : {cyclic(2), d0(), cyclic(3)}) {
        const int top = m->size() == 3 ? 3 : 4;
        for (int n = 1; n <= top; ++n) {
            std::set<Clique> images;
            for (const auto& t : enumerate_syntax_trees(m, n)) images.insert(ev(t, m));
            const auto all = enumerate_noncrossing(m, n);
            CHECK(std::vector<Clique>(images.begin(), images.end()) == all);
        }
    }
}

TEST_CASE("grafting and evaluation commute") {
    auto m = cyclic(2);
    const auto t2 = enumerate_syntax_trees(m, 2);
    const auto t3 = enumerate_syntax_trees(m, 3);
    for (const auto& x : t3)
        for (const auto& y : t2)
            for (int i = 1; i <= 3; ++i) REQUIRE(ev(graft(x, i, y), m) == partial_compose(ev(x, m), i, ev(y, m)));
}

TEST_CASE("operad axioms on cliques up to combined arity 5") {
    auto m = cyclic(2);
    std::vector<std::vector<Clique>> by(5);
    for (int n = 1; n <= 4; ++n) by[static_cast<std::size_t>(n)] = enumerate_noncrossing(m, n);
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; a + b - 1 <= 5; ++b)
            for (int c = 1; a + b + c - 2 <= 5; ++c) {
                if (a + b + c - 2 > 4 && (a == 1 || b == 1 || c == 1)) continue;
                for (const auto& x : by[static_cast<std::size_t>(a)])
                    for (const auto& y : by[static_cast<std::size_t>(b)])
                        for (const auto& z : by[static_cast<std::size_t>(c)]) {
                            for (int i = 1; i <= a; ++i)
                                for (int j = 1; j <= b; ++j)
                                    REQUIRE(partial_compose(partial_compose(x, i, y), i + j - 1, z) ==
                                            partial_compose(x, i, partial_compose(y, j, z)));
                            for (int i = 1; i <= a; ++i)
                                for (int j = i + 1; j <= a; ++j)
                                    REQUIRE(partial_compose(partial_compose(x, i, y), j + b - 1, z) ==
                                            partial_compose(partial_compose(x, j, z), i, y));
                        }
            }
}

TEST_CASE("linear combinations") {
    auto m = cyclic(2);
    auto a = compose_tree(Clique::triangle(m, 0, 1, 0), 1, Clique::triangle(m, 1, 0, 0));
    auto b = compose_tree(Clique::triangle(m, 0, 1, 0), 2, Clique::triangle(m, 1, 0, 0));
    LinComb f = LinComb(a) + Rational(1, 2) * LinComb(b);
    LinComb g = f - LinComb(a);
    CHECK(g.size() == 1);
    CHECK(g.terms().begin()->second == Rational(1, 2));
    CHECK((f - f).empty());
}

TEST_CASE("arity-3 basis indexing") {
    for (auto m : {cyclic(2), d0()}) {
        Arity3Basis basis{m->size()};
        CHECK(basis.dimension() == 2 * 64);
        std::set<std::size_t> seen;
        for (const auto& t : enumerate_syntax_trees(m, 3)) {
            const auto idx = basis.index(t);
            CHECK(basis.tree(idx, m) == t);
            seen.insert(idx);
        }
        CHECK(seen.size() == basis.dimension());
    }
}
