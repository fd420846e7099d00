#include <doctest.h>

#include <random>

#include "lpa/poly.hpp"
#include "oracles.hpp"

using namespace lpa;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F5 = FieldSpec::prime(5);

Poly P(const FieldSpec& k, const char* text) { return Poly::parse(k, text); }

}  // namespace

TEST_CASE("canonicalize strips unit content") {
    CHECK(Poly(Q, {Rational(0), Rational(-1), Rational(0), Rational(1)}) == P(Q, "x^2 - 1"));
    CHECK(Poly(Q, {Rational(2), Rational(2)}) == P(Q, "x + 1"));
    // 3x^5 over F5 generates the whole ring
    Poly unit(F5, {Rational(0), Rational(0), Rational(0), Rational(0), Rational(0), Rational(3)});
    CHECK(unit.is_unit());
    CHECK_THROWS_AS(Poly(Q, {Rational(0), Rational(0)}), std::invalid_argument);
}

TEST_CASE("canonicalize is idempotent") {
    std::mt19937 rng(7);
    for (int i = 0; i < 50; ++i) {
        Poly f = oracle::random_poly(rng, i % 2 ? Q : F5, 6);
        Poly again(f.field(), std::vector<Rational>(f.coeffs().begin(), f.coeffs().end()));
        CHECK(f == again);
    }
}

TEST_CASE("mul") {
    CHECK(mul(P(Q, "x - 1"), P(Q, "x + 1")) == P(Q, "x^2 - 1"));
    Poly f = P(Q, "x^3 + 2*x + 1");
    CHECK(mul(f, Poly::unit(Q)) == f);
    CHECK(mul(P(F5, "x + 2"), P(F5, "x + 3")) == P(F5, "x^2 + 1"));
    CHECK_THROWS_AS(mul(P(Q, "x"), P(F5, "x")), std::invalid_argument);
}

TEST_CASE("mul is associative and commutative on canonical forms") {
    std::mt19937 rng(11);
    for (int i = 0; i < 40; ++i) {
        FieldSpec k = i % 2 ? Q : F5;
        Poly a = oracle::random_poly(rng, k, 4);
        Poly b = oracle::random_poly(rng, k, 4);
        Poly c = oracle::random_poly(rng, k, 4);
        CHECK(mul(a, b) == mul(b, a));
        CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
    }
}

TEST_CASE("gcd and lcm") {
    Poly f = P(Q, "x^3 - 2*x^2 + x - 2");
    CHECK(poly_gcd(f, f) == f);
    CHECK(poly_gcd(P(Q, "x^2 - 1"), P(Q, "x^2 - 2*x + 1")) == P(Q, "x - 1"));
    CHECK(poly_lcm(P(Q, "x - 1"), P(Q, "x + 1")) == P(Q, "x^2 - 1"));
}

TEST_CASE("gcd times lcm is the product") {
    std::mt19937 rng(13);
    for (int i = 0; i < 60; ++i) {
        FieldSpec k = i % 2 ? Q : F5;
        Poly a = oracle::random_poly(rng, k, 5);
        Poly b = oracle::random_poly(rng, k, 5);
        CHECK(mul(poly_gcd(a, b), poly_lcm(a, b)) == mul(a, b));
    }
}

TEST_CASE("factor") {
    auto fs = factor(P(Q, "x^2 - 1"));
    REQUIRE(fs.size() == 2);
    CHECK(fs[0] == std::pair(P(Q, "x - 1"), 1));
    CHECK(fs[1] == std::pair(P(Q, "x + 1"), 1));
    // 1 - x^2 has the same canonical form and is reducible
    CHECK_FALSE(is_irreducible(Poly(Q, {Rational(1), Rational(0), Rational(-1)})));
    auto f5 = factor(P(F5, "x^2 + 1"));
    REQUIRE(f5.size() == 2);
    CHECK(f5[0] == std::pair(P(F5, "x + 2"), 1));
    CHECK(f5[1] == std::pair(P(F5, "x + 3"), 1));
}

TEST_CASE("is_irreducible") {
    CHECK(is_irreducible(P(Q, "x - 1")));
    CHECK(is_irreducible(P(Q, "x^2 + 1")));
    CHECK_FALSE(is_irreducible(P(F5, "x^2 + 1")));
}

TEST_CASE("repeated factors carry exponents") {
    Poly cube = poly_pow(P(Q, "x - 1"), 3);
    auto fs = factor(cube);
    REQUIRE(fs.size() == 1);
    CHECK(fs[0] == std::pair(P(Q, "x - 1"), 3));
}

TEST_CASE("factor products multiply back") {
    std::mt19937 rng(17);
    for (int i = 0; i < 80; ++i) {
        FieldSpec k = i % 2 ? Q : F5;
        Poly f = oracle::random_poly(rng, k, 6);
        Poly back = Poly::unit(k);
        for (const auto& [p, e] : factor(f)) back = mul(back, poly_pow(p, e));
        CHECK(back == f);
    }
}

TEST_CASE("factor agrees with trial division over F5") {
    std::mt19937 rng(19);
    for (int i = 0; i < 60; ++i) {
        Poly f = oracle::random_poly(rng, F5, 6);
        CHECK(factor(f) == oracle::poly_factor(f));
    }
}

TEST_CASE("factor agrees with the rational divisor oracle up to degree 4") {
    std::mt19937 rng(23);
    for (int i = 0; i < 60; ++i) {
        Poly f = oracle::random_poly(rng, Q, 4);
        CHECK(factor(f) == oracle::poly_factor(f));
    }
}

TEST_CASE("distinct irreducible powers are coprime") {
    std::mt19937 rng(29);
    for (int i = 0; i < 40; ++i) {
        FieldSpec k = i % 2 ? Q : F5;
        Poly p = oracle::random_poly(rng, k, 3);
        Poly q = oracle::random_poly(rng, k, 3);
        if (!is_irreducible(p) || !is_irreducible(q) || p == q) continue;
        CHECK(poly_gcd(poly_pow(p, 2), poly_pow(q, 3)).is_unit());
    }
}

TEST_CASE("parse and print round-trip") {
    for (const char* s : {"x^2 - 3*x + 1", "x + 1", "x^4 - 1/2*x^2 + 3", "x^3 - 2"}) {
        Poly f = P(Q, s);
        CHECK(Poly::parse(Q, f.str()) == f);
    }
    Poly f = P(F5, "x^2 + 4*x + 3");
    CHECK(Poly::parse(F5, f.str()) == f);
    CHECK_THROWS_AS(P(Q, "x +"), std::invalid_argument);
    CHECK_THROWS_AS(P(Q, ""), std::invalid_argument);
    CHECK_THROWS_AS(P(Q, "y + 1"), std::invalid_argument);
}

TEST_CASE("non-integer rational coefficients factor correctly") {
    // x^2 - 1/4 = (x - 1/2)(x + 1/2)
    Poly f = P(Q, "x^2 - 1/4");
    auto fs = factor(f);
    REQUIRE(fs.size() == 2);
    Poly back = Poly::unit(Q);
    for (const auto& [p, e] : fs) back = mul(back, poly_pow(p, e));
    CHECK(back == f);
}

TEST_CASE("field specs") {
    CHECK(FieldSpec::parse("Q") == Q);
    CHECK(FieldSpec::parse("F5") == F5);
    CHECK_THROWS_AS(FieldSpec::parse("F4"), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec::parse("Z"), std::invalid_argument);
    CHECK(F5.name() == "F5");
}

TEST_CASE("characteristic 2 uses the trace-map split") {
    const FieldSpec F2 = FieldSpec::prime(2);
    Poly f = mul(P(F2, "x + 1"), mul(P(F2, "x^2 + x + 1"), P(F2, "x + 1")));
    auto fs = factor(f);
    REQUIRE(fs.size() == 2);
    CHECK(fs[0] == std::pair(P(F2, "x + 1"), 2));
    CHECK(fs[1] == std::pair(P(F2, "x^2 + x + 1"), 1));
    std::mt19937 rng(97);
    for (int i = 0; i < 30; ++i) {
        Poly g = oracle::random_poly(rng, F2, 7);
        Poly back = Poly::unit(F2);
        for (const auto& [p, e] : factor(g)) back = mul(back, poly_pow(p, e));
        CHECK(back == g);
    }
}

TEST_CASE("large prime moduli stay exact") {
    const FieldSpec big = FieldSpec::prime(2147483647);
    Poly f = mul(P(big, "x + 2147483646"), P(big, "x + 5"));  // (x - 1)(x + 5)
    auto fs = factor(f);
    REQUIRE(fs.size() == 2);
    Poly back = mul(fs[0].first, fs[1].first);
    CHECK(back == f);
    CHECK(poly_gcd(f, P(big, "x + 5")) == P(big, "x + 5"));
}
