#include "ncm/io.hpp"
#include "ncm/rewrite.hpp"

#include <catch_amalgamated.hpp>

using namespace ncm;

TEST_CASE("cliques round trip through JSON text") {
    for (auto m : {cyclic(2), subsets(2), bnc()})
        for (int n = 1; n <= 3; ++n)
            for (const auto& p : enumerate_noncrossing(m, n)) {
                const std::string text = to_json(p).dump();
                REQUIRE(clique_from_json(Json::parse(text), m) == p);
                REQUIRE(to_json(clique_from_json(Json::parse(text), m)).dump() == text);
            }
    auto z = Magma::integers();
    Clique p(z, 3, {{1, 2, -4}, {2, 4, 7}});
    CHECK(clique_from_json(to_json(p), z) == p);
    CHECK_THROWS(clique_from_json(to_json(p), cyclic(2)));
}

TEST_CASE("syntax trees and linear combinations round trip") {
    auto m = cyclic(2);
    for (const auto& t : enumerate_syntax_trees(m, 3)) REQUIRE(tree_from_json(to_json(t), m) == t);
    for (const auto& r : relation_space(m)) {
        LinComb f = Rational(3, 7) * r;
        REQUIRE(lincomb_from_json(Json::parse(to_json(f).dump()), m) == f);
    }
    auto bubble = SyntaxTree::corolla(Clique::bubble(m, 1, {0, 1, 1}));
    CHECK(tree_from_json(to_json(bubble), m) == bubble);
}

TEST_CASE("Schroder trees and polynomials round trip") {
    auto m = cyclic(3);
    for (const auto& p : enumerate_noncrossing(m, 3)) {
        auto s = to_schroder(p);
        REQUIRE(schroder_from_json(to_json(s, *m), *m) == s);
    }
    WordPolynomial f = WordPolynomial::word({1, 2}, Rational(-5, 3)) + WordPolynomial::word({}, 2);
    CHECK(polynomial_from_json(Json::parse(to_json(f).dump())) == f);
    CHECK_THROWS(coefficient_from_json(Json{{"num", "1"}, {"den", "0"}}));
}

TEST_CASE("magma JSON") {
    auto j = to_json(*bnc());
    CHECK(j["elements"] == Json::array({"1", "a", "b"}));
    CHECK(j["table"][1][2] == "1");
    CHECK(to_json(*Magma::integers())["finite"] == false);
}
