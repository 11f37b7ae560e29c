#include <doctest.h>

#include "riddle/errors.hpp"
#include "riddle/quantity.hpp"
#include "riddle/rational.hpp"
#include "support/generators.hpp"

using riddle::BigInt;
using riddle::Rational;

TEST_CASE("normalize reduces to lowest terms with a positive denominator") {
    CHECK(Rational::normalize(100, 75) == Rational::normalize(4, 3));
    CHECK(Rational::normalize(100, 75).num() == 4);
    CHECK(Rational::normalize(100, 75).den() == 3);

    const Rational zero = Rational::normalize(0, 5);
    CHECK(zero.num() == 0);
    CHECK(zero.den() == 1);

    const Rational r = Rational::normalize(-6, -4);
    CHECK(r.num() == 3);
    CHECK(r.den() == 2);

    CHECK(Rational::normalize(3, -9).to_string() == "-1/3");
}

TEST_CASE("zero denominator is an error") {
    CHECK_THROWS_AS(Rational::normalize(1, 0), riddle::ZeroDenominator);
    CHECK_THROWS_AS(Rational(1) / Rational(0), riddle::ZeroDenominator);
}

TEST_CASE("fraction chain stays exact") {
    // 40/3 * 1/120 = 1/9, then 1/9 * 30 = 10/3
    const Rational per_minute = Rational::normalize(40, 3) * Rational::normalize(1, 120);
    CHECK(per_minute == Rational::normalize(1, 9));
    CHECK(per_minute * 30 == Rational::normalize(10, 3));
    CHECK(Rational(100) / Rational::normalize(10, 3) == Rational(30));
}

TEST_CASE("floor and ceil") {
    CHECK(Rational::normalize(10, 3).ceil() == 4);
    CHECK(Rational::normalize(10, 3).floor() == 3);
    CHECK(Rational::normalize(-10, 3).ceil() == -3);
    CHECK(Rational::normalize(-10, 3).floor() == -4);
    CHECK(Rational(12).ceil() == 12);
}

TEST_CASE("parse accepts p/q and bare integers") {
    CHECK(Rational::parse("6000/75") == Rational(80));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK_THROWS(Rational::parse("1/-2"));
    CHECK_THROWS(Rational::parse("abc"));
    CHECK_THROWS(Rational::parse(""));
    CHECK_THROWS_AS(Rational::parse("3/0"), riddle::ZeroDenominator);
}

TEST_CASE("values far beyond 64 bits do not overflow") {
    Rational big(BigInt(1) << 100);
    Rational r = big * big / big;
    CHECK(r == big);
    CHECK((Rational(1) / big).den() == (BigInt(1) << 100));
}

TEST_CASE("property: addition matches cross-multiplied sum, text round-trips") {
    riddle::testing::Gen gen(0x5eed);
    for (int i = 0; i < 500; ++i) {
        const std::int64_t a = gen.between(-1000000, 1000000), b = gen.between(1, 1000000);
        const std::int64_t c = gen.between(-1000000, 1000000), d = gen.between(1, 1000000);
        const Rational sum = Rational::normalize(a, b) + Rational::normalize(c, d);
        CHECK(sum == Rational(BigInt(a) * d + BigInt(c) * b, BigInt(b) * d));
        CHECK(Rational::parse(sum.to_string()) == sum);
        CHECK(boost::multiprecision::gcd(sum.num(), sum.den()) == 1);
        CHECK(sum.den() > 0);
    }
}

TEST_CASE("quantities") {
    CHECK(riddle::Quantity::hours(1) == riddle::Quantity::minutes(60));
    CHECK(riddle::Quantity::hours(Rational::normalize(1, 2)).magnitude == Rational(30));
    CHECK_THROWS_AS(riddle::Quantity::count(-1), riddle::InvalidInstance);
    CHECK(riddle::Quantity::count(3, "cats").label == "cats");
}
