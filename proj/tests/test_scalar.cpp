#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bialg/scalar.hpp"

using namespace bialg;

TEST_CASE("rationals are canonical") {
    Rational a(2, 4);
    CHECK(a == Rational(1, 2));
    CHECK(a.str() == "1/2");
    CHECK(Rational(3, -6).str() == "-1/2"); // positive denominator
    CHECK(Rational(0, 7).str() == "0");
    CHECK((Rational(1, 3) + Rational(1, 6)).str() == "1/2");
    CHECK((Rational(1, 2) * Rational(2, 3)).str() == "1/3");
    CHECK((Rational(1) / Rational(3)).str() == "1/3");
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational parsing") {
    Rational::Field Q{};
    CHECK(Rational::parse(Q, "-6/4") == Rational(-3, 2));
    CHECK(Rational::parse(Q, "17") == Rational(17));
    CHECK_THROWS_AS(Rational::parse(Q, "x"), ParseError);
    CHECK_THROWS_AS(Rational::parse(Q, "1/0"), ParseError);
}

TEST_CASE("big values stay exact") {
    Rational x(1);
    for (int i = 0; i < 40; ++i) x *= Rational(10);
    Rational y = x + Rational(1, 3);
    CHECK((y - x).str() == "1/3");
}

TEST_CASE("prime field arithmetic") {
    Fp::Field F5{5};
    Fp a(F5, 3), b(F5, 4);
    CHECK((a + b).residue() == 2);
    CHECK((a * b).residue() == 2);
    CHECK((a - b).residue() == 4);
    CHECK((-b).residue() == 1);
    CHECK((Fp::one(F5) / a).residue() == 2); // 3 * 2 = 6 = 1 mod 5
    CHECK(Fp(F5, -2).residue() == 3);
    CHECK_THROWS_AS(a / Fp::zero(F5), std::domain_error);
}

TEST_CASE("moduli never mix") {
    Fp a(Fp::Field{5}, 1), b(Fp::Field{7}, 1);
    CHECK_THROWS_AS(a + b, FieldMismatch);
    CHECK_THROWS_AS(Fp(Fp::Field{4}, 1), std::domain_error); // modulus must be prime
    CHECK_THROWS_AS(Fp(Fp::Field{1}, 0), std::domain_error);
}

TEST_CASE("rational reduction mod p") {
    Fp::Field F7{7};
    CHECK(Fp::from_rational(F7, Rational(-2)).residue() == 5);
    CHECK(Fp::from_rational(F7, Rational(1, 2)).residue() == 4); // 2*4 = 1 mod 7
    CHECK_THROWS_AS(Fp::from_rational(F7, Rational(1, 7)), std::domain_error);
    CHECK(Fp::parse(F7, "3/2").residue() == 5);
}
