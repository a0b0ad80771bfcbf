#include <doctest.h>

#include <stdexcept>

#include <univ/rational.hpp>

#include "support.hpp"

using univ::BigInt;
using univ::Rational;

TEST_CASE("rational values are kept in lowest terms")
{
    const Rational r(6, -4);
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 2);
    CHECK(r == Rational(-3, 2));
    CHECK(r.str() == "-3/2");
    CHECK(Rational(10, 5).str() == "2");
    CHECK(Rational(0, 7).denominator() == 1);
}

TEST_CASE("rational arithmetic is exact")
{
    CHECK(Rational(1, 12) + Rational(1, 12) == Rational(1, 6));
    CHECK(Rational(-1, 24) * 24 == Rational(-1));
    CHECK(Rational(1, 3) / Rational(2, 3) == Rational(1, 2));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS_AS((void)Rational(0).reciprocal(), std::domain_error);
}

TEST_CASE("to_int64 rejects fractions and overflow")
{
    CHECK(Rational(-42).to_int64() == -42);
    CHECK_THROWS_AS((void)Rational(1, 2).to_int64(), std::domain_error);
    const Rational huge(BigInt("123456789012345678901234567890"));
    CHECK_THROWS_AS((void)huge.to_int64(), std::domain_error);
}

TEST_CASE("parse accepts n and n/d only")
{
    CHECK(Rational::parse("-7/21") == Rational(-1, 3));
    CHECK(Rational::parse("12") == Rational(12));
    CHECK(Rational::parse("4/2").str() == "2");
    for (const char *bad : {"", "/", "1/", "/2", "1/-2", "1.5", "a", "1/2/3", " 1"}) {
        CHECK_THROWS_AS(Rational::parse(bad), std::invalid_argument);
    }
    CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
}

TEST_CASE("serialization round trip is lossless")
{
    univ::test::Rng rng(11);
    for (int i = 0; i < 500; ++i) {
        Rational r = univ::test::random_rational(rng, 1000000, 1000000);
        // Push into big-integer territory.
        r *= Rational(BigInt("98765432109876543210"), BigInt("3"));
        CHECK(Rational::parse(r.str()) == r);
    }
}
