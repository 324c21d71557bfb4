#include <catch_amalgamated.hpp>

#include <random>

#include "gkmflow/polyring.hpp"

using namespace gkmflow;

namespace {

Root rt(std::vector<int> c) { return Root(std::move(c)); }

Polynomial var(int nvars, int j) { return Polynomial::variable(nvars, j); }

Polynomial random_poly(std::mt19937& rng, int nvars, int terms, int max_deg) {
    std::uniform_int_distribution<int> coef(-4, 4);
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<int> pick(0, nvars - 1);
    Polynomial p(nvars);
    for (int t = 0; t < terms; ++t) {
        std::vector<int> e(static_cast<size_t>(nvars), 0);
        int d = deg(rng);
        for (int j = 0; j < d; ++j) e[static_cast<size_t>(pick(rng))] += 1;
        p += Polynomial::from_terms(nvars, {{e, Rational(coef(rng))}});
    }
    return p;
}

} // namespace

TEST_CASE("ring operations: identities and binomial", "[polyring]") {
    Polynomial a1 = var(2, 0), a2 = var(2, 1);
    CHECK(a1 * a2 + Polynomial::zero(2) == a1 * a2);
    Polynomial sum = a1 + a2;
    Polynomial sq = sum * sum;
    Polynomial expect = Polynomial::from_terms(
        2, {{{2, 0}, Rational(1)}, {{1, 1}, Rational(2)}, {{0, 2}, Rational(1)}});
    CHECK(sq == expect);
    CHECK((a1 * a2 - a2 * a1).is_zero());
}

TEST_CASE("ring operations: random associativity and distributivity", "[polyring]") {
    std::mt19937 rng(11);
    for (int t = 0; t < 20; ++t) {
        Polynomial p = random_poly(rng, 3, 4, 3), q = random_poly(rng, 3, 4, 3), r = random_poly(rng, 3, 3, 2);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK(p + q == q + p);
        CHECK((p - p).is_zero());
    }
}

TEST_CASE("linear_form", "[polyring]") {
    CHECK(linear_form(rt({1, 1})) == var(2, 0) + var(2, 1));
    CHECK(linear_form(rt({0, -1})) == Polynomial::zero(2) - var(2, 1));
    CHECK(linear_form(rt({1, 0, 0})) == var(3, 0));
}

TEST_CASE("divide_exact worked values", "[polyring]") {
    Polynomial a1 = var(2, 0), a2 = var(2, 1);
    auto q = divide_exact(a1 * a1 + a1 * a2, a1);
    REQUIRE(q);
    CHECK(*q == a1 + a2);
    CHECK(!divide_exact(a1 * a2, a1 + a2));
    auto z = divide_exact(Polynomial::zero(2), a1 + a2);
    REQUIRE(z);
    CHECK(z->is_zero());
    CHECK_THROWS_AS(divide_exact(a1, Polynomial::zero(2)), Error);
    CHECK_THROWS_AS(divide_exact(a1, a1 * a1), Error);
}

TEST_CASE("divide_exact round-trip over all roots", "[polyring]") {
    std::mt19937 rng(13);
    for (const char* name : {"A2", "A3"}) {
        RootSystem rs = build_root_system(CartanType::parse(name));
        for (int trial = 0; trial < 5; ++trial) {
            Polynomial p = random_poly(rng, rs.rank(), 5, 4);
            for (int r = 0; r < rs.num_roots(); ++r) {
                Polynomial l = linear_form(rs.root(r));
                auto q = divide_exact(p * l, l);
                REQUIRE(q);
                CHECK(*q == p);
            }
        }
    }
}

TEST_CASE("in_ideal worked values", "[polyring]") {
    Polynomial a1 = var(2, 0), a2 = var(2, 1);
    CHECK(in_ideal(a2 * a2 + a1 * a2, rt({0, 1})));
    CHECK(!in_ideal(a1, rt({0, 1})));
    CHECK(in_ideal(linear_form(rt({1, 1})) - a1, rt({0, 1})));
}

TEST_CASE("degree and homogeneity", "[polyring]") {
    Polynomial a1 = var(2, 0), a2 = var(2, 1);
    CHECK(*(a1 * a2).homogeneous_degree() == 2);
    CHECK(!(a1 + a1 * a2).homogeneous_degree());
    CHECK(*Polynomial::constant(2, 5).homogeneous_degree() == 0);
    Polynomial z = Polynomial::zero(2);
    CHECK(z.is_zero());
    CHECK(z.is_homogeneous());
    CHECK(!z.homogeneous_degree()); // the distinguished zero answer
    CHECK(!z.total_degree());
}

TEST_CASE("canonical rendering", "[polyring]") {
    Polynomial a1 = var(2, 0), a2 = var(2, 1);
    CHECK(Polynomial::zero(2).to_string() == "0");
    CHECK((a1 * a1 - Rational(2) * (a1 * a2) + a2 * a2).to_string() == "a1^2 - 2*a1*a2 + a2^2");
    CHECK((Rational(1) / 2 * a1).to_string() == "1/2*a1");
    CHECK((Polynomial::constant(2, -5) + a2).to_string() == "a2 - 5");
    CHECK((Polynomial::zero(2) - a1 * a1).to_string() == "-a1^2");
    Polynomial cubed = (a1 + a2) * (a1 + a2) * (a1 + a2);
    CHECK(cubed.to_string() == "a1^3 + 3*a1^2*a2 + 3*a1*a2^2 + a2^3");
}

TEST_CASE("parse round-trip on random polynomials", "[polyring]") {
    std::mt19937 rng(17);
    auto names = Polynomial::default_names(3);
    for (int t = 0; t < 30; ++t) {
        Polynomial p = random_poly(rng, 3, 6, 4);
        CHECK(parse_polynomial(p.to_string(names), names) == p);
    }
    CHECK(parse_polynomial("0", names).is_zero());
    CHECK(parse_polynomial("-3/2", names) == Polynomial::constant(3, Rational(-3, 2)));
    CHECK_THROWS_AS(parse_polynomial("a1 + + a2", names), Error);
    CHECK_THROWS_AS(parse_polynomial("b7", names), Error);
}

TEST_CASE("substitute is a ring homomorphism", "[polyring]") {
    std::mt19937 rng(19);
    std::vector<Polynomial> images = {var(2, 0) + var(2, 1), var(2, 0) - var(2, 1),
                                      Polynomial::constant(2, 2)};
    for (int t = 0; t < 10; ++t) {
        Polynomial p = random_poly(rng, 3, 4, 3), q = random_poly(rng, 3, 4, 3);
        CHECK((p * q).substitute(images, 2) == p.substitute(images, 2) * q.substitute(images, 2));
        CHECK((p + q).substitute(images, 2) == p.substitute(images, 2) + q.substitute(images, 2));
    }
}

TEST_CASE("fused_addmul agrees with the separated operations", "[polyring]") {
    std::mt19937 rng(23);
    for (int t = 0; t < 20; ++t) {
        Polynomial acc = random_poly(rng, 3, 5, 4);
        Polynomial a = random_poly(rng, 3, 4, 3), b = random_poly(rng, 3, 4, 3);
        Polynomial expect = acc - a * b;
        acc.fused_addmul(a, b, true);
        CHECK(acc == expect);
    }
}
