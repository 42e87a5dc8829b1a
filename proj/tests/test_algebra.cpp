#include "ncm/algebra.hpp"

#include <catch_amalgamated.hpp>

using namespace ncm;

namespace {
WordPolynomial w(std::initializer_list<Label> letters) { return WordPolynomial::word(Word(letters)); }

std::vector<std::array<WordPolynomial, 3>> samples(std::size_t k, Label lo, Label hi, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::array<WordPolynomial, 3>> out;
    for (std::size_t i = 0; i < k; ++i)
        out.push_back({random_polynomial(rng, lo, hi), random_polynomial(rng, lo, hi), random_polynomial(rng, lo, hi)});
    return out;
}
} // namespace

TEST_CASE("shift action") {
    auto n4 = cyclic(4);
    CHECK(shift_action(*n4, 2, Word{0, 2, 1, 1}) == Word{2, 0, 3, 3});
    CHECK(shift_action(*n4, 0, Word{3, 1}) == Word{3, 1});
    CHECK(shift_action(*n4, 3, Word{}).empty());
}

TEST_CASE("triangle operation on words in N4") {
    auto n4 = cyclic(4);
    CHECK(triangle_op_words(*n4, {1, 2, 0}, w({0, 2, 1, 1}), w({3, 1, 2})) == w({3, 1, 0, 0, 0, 2, 3}));
    CHECK(triangle_op_words(*n4, {0, 0, 0}, w({1, 2}), w({3})) == w({1, 2, 3}));
}

TEST_CASE("constant-term carrier") {
    auto d = d0();
    auto om = constant_term(d);
    const Label one = d->unit(), zero = d->parse_label("0");
    std::mt19937_64 rng(7);
    for (int k = 0; k < 20; ++k) {
        auto f1 = random_polynomial(rng, 1, 3), f2 = random_polynomial(rng, 1, 3);
        CHECK(triangle_op(om, {one, zero, one}, f1, f2) == f1.constant_term() * f2);
        f1.add({}, 1 - f1.constant_term());
        f2.add({}, 1 - f2.constant_term());
        CHECK(triangle_op(om, {one, zero, one}, f1, f2) + triangle_op(om, {one, one, zero}, f1, f2) == f1 + f2);
    }
}

TEST_CASE("action of an arity-8 S3-clique") {
    auto s3 = subsets(3);
    auto om = selected_concatenation(s3);
    auto set = [&](const char* name) { return s3->parse_label(name); };
    Clique p(s3, 8,
             {{1, 7, set("{1}")}, {2, 3, set("{1}")}, {2, 4, set("{1}")}, {3, 4, set("{2}")}, {4, 6, set("{1,2}")},
              {4, 5, set("{2}")}, {6, 7, set("{3}")}, {7, 9, set("{1,2}")}});
    REQUIRE(crossing_free(p));
    const WordPolynomial f = w({1}) + w({2}) + w({3});
    const std::vector<WordPolynomial> args(8, f);
    const WordPolynomial expected = f * w({1, 2, 2, 1, 3}) * (w({1, 2}) + w({2, 1}));
    CHECK(clique_action(p, args, om) == expected);
}

TEST_CASE("unit clique acts as the identity") {
    auto om = monoid_words(cyclic(3));
    CHECK(clique_action(Clique::unit(cyclic(3)), {w({1, 2})}, om) == w({1, 2}));
    CHECK_THROWS(clique_action(Clique::unit(cyclic(3)), {w({1}), w({2})}, om));
}

TEST_CASE("triangle action matches the triangle operation") {
    auto m = cyclic(3);
    auto om = monoid_words(m);
    std::mt19937_64 rng(11);
    for (const auto& t : all_triangles(m)) {
        auto a = random_polynomial(rng, 0, 2), b = random_polynomial(rng, 0, 2);
        CHECK(clique_action(t, {a, b}, om) == triangle_op_words(*m, triangle_labels(t), a, b));
    }
}

TEST_CASE("action is compatible with partial composition") {
    auto m = cyclic(2);
    auto om = monoid_words(m);
    std::mt19937_64 rng(3);
    std::vector<Clique> small;
    for (int n = 2; n <= 3; ++n)
        for (const auto& p : enumerate_noncrossing(m, n)) small.push_back(p);
    for (const auto& p : all_triangles(m))
        for (const auto& q : small)
            for (int i = 1; i <= 2; ++i) {
                std::vector<WordPolynomial> args;
                for (int k = 0; k < q.arity() + 1; ++k) args.push_back(random_polynomial(rng, 0, 1));
                std::vector<WordPolynomial> inner(args.begin() + i - 1, args.begin() + i - 1 + q.arity());
                std::vector<WordPolynomial> outer(args.begin(), args.begin() + i - 1);
                outer.push_back(clique_action(q, inner, om));
                outer.insert(outer.end(), args.begin() + i - 1 + q.arity(), args.end());
                REQUIRE(clique_action(partial_compose(p, i, q), args, om) == clique_action(p, outer, om));
            }
}

TEST_CASE("algebra relations hold for the shipped carriers") {
    auto n4 = cyclic(4);
    auto r1 = relations_check(monoid_words(n4), samples(10, 0, 3, 1));
    CHECK(r1.passed());
    CHECK(r1.exhaustive);
    auto r2 = relations_check(constant_term(d0()), samples(20, 1, 3, 2));
    CHECK(r2.passed());
    auto r3 = relations_check(selected_concatenation(subsets(3)), samples(20, 1, 3, 3), 5000);
    CHECK(r3.passed());
    CHECK_FALSE(r3.exhaustive);
}

TEST_CASE("a broken omega family is caught") {
    auto m = cyclic(2);
    WordOmega broken = monoid_words(m);
    broken.omega = [m](Label x, const WordPolynomial& f) {
        auto g = shift_action(*m, x, f);
        return x == 1 ? Rational(2) * g : g;
    };
    auto rep = relations_check(broken, samples(5, 0, 1, 4));
    CHECK_FALSE(rep.passed());
    CHECK_FALSE(rep.violations.empty());
}

TEST_CASE("monoid words need an associative magma") { CHECK_THROWS(monoid_words(e2())); }

TEST_CASE("free algebra product on Schroder trees") {
    auto m = cyclic(2);
    std::vector<Clique> small;
    for (int n = 1; n <= 2; ++n)
        for (const auto& p : enumerate_noncrossing(m, n)) small.push_back(p);
    for (const auto& t : all_triangles(m))
        for (const auto& q : small)
            for (const auto& r : small) {
                if (q.arity() + r.arity() > 3) continue;
                auto prod = free_algebra_product(triangle_labels(t), to_schroder(q), to_schroder(r), *m);
                REQUIRE(from_schroder(prod, m) == partial_compose(partial_compose(t, 2, r), 1, q));
            }
}
