#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <limits>

#include "octapet/ivec.hpp"
#include "octapet/rational.hpp"

using namespace octapet;

TEST_CASE("rational construction normalizes") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, 4) == Rational(-1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(6, 3).is_integer());
    CHECK(Rational(5, 3).den() == 3);
    CHECK(Rational(5, 3).num() == 5);
    CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("rational parsing") {
    CHECK(Rational::parse("3/7") == Rational(3, 7));
    CHECK(Rational::parse("-3/7") == Rational(-3, 7));
    CHECK(Rational::parse("12") == Rational(12));
    CHECK(Rational::parse("4/2") == Rational(2));
    CHECK_THROWS_AS(Rational::parse("1/0"), Error);
    CHECK_THROWS_AS(Rational::parse("abc"), Error);
    CHECK_THROWS_AS(Rational::parse(""), Error);
}

TEST_CASE("rational arithmetic is exact") {
    Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(-a == Rational(-1, 3));
    // A sum that would lose precision in floating point.
    Rational c(1, 1000000007), d(1, 1000000009);
    CHECK((c + d) * Rational(1000000007) * Rational(1000000009) ==
          Rational(1000000007) + Rational(1000000009));
}

TEST_CASE("rational ordering, floor, reciprocal") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(7, 3).floor() == Rational(2));
    CHECK(Rational(-7, 3).floor() == Rational(-3));
    CHECK(Rational(5).floor() == Rational(5));
    CHECK(Rational(3, 7).reciprocal() == Rational(7, 3));
    CHECK_THROWS_AS(Rational(0).reciprocal(), Error);
    CHECK(Rational(-5, 7).abs() == Rational(5, 7));
    CHECK(Rational(3, 7).str() == "3/7");
}

TEST_CASE("point2 exact operations") {
    Point2 p{Rational(1, 2), Rational(-1, 3)};
    Point2 q{Rational(1, 3), Rational(1, 2)};
    CHECK(p + q == Point2{Rational(5, 6), Rational(1, 6)});
    CHECK(cross(p, q) == Rational(1, 4) + Rational(1, 9));
    CHECK(dot(p, q) == Rational(1, 6) - Rational(1, 6));
    CHECK(p.norm2() == Rational(1, 4) + Rational(1, 9));
    CHECK(Rational(2) * p == Point2{Rational(1), Rational(-2, 3)});
}

TEST_CASE("checked int64 arithmetic traps overflow") {
    constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();
    CHECK(checked_add(2, 3) == 5);
    CHECK(checked_mul(-4, 5) == -20);
    CHECK_THROWS_AS(checked_add(kMax, 1), OverflowError);
    CHECK_THROWS_AS(checked_sub(-2, kMax), OverflowError);
    CHECK_THROWS_AS(checked_mul(kMax / 2, 3), OverflowError);
}

TEST_CASE("exact integer division") {
    CHECK(divide_exact(84, 7) == 12);
    CHECK(divide_exact(-84, 7) == -12);
    CHECK_THROWS_AS(divide_exact(85, 7), Error);
    CHECK_THROWS_AS(divide_exact(1, 0), Error);
}

TEST_CASE("ivec3 vector algebra") {
    IVec3 a{1, 2, 3}, b{4, 5, 6};
    CHECK(a + b == IVec3{5, 7, 9});
    CHECK(b - a == IVec3{3, 3, 3});
    CHECK(2 * a == IVec3{2, 4, 6});
    CHECK(dot(a, b) == 32);
    CHECK(cross(a, b) == IVec3{-3, 6, -3});
    CHECK(dot(cross(a, b), a) == 0);
    CHECK(dot(cross(a, b), b) == 0);
    CHECK(divide_exact(IVec3{2, 4, 6}, 2) == a);
}

TEST_CASE("ivec3 cross product guards its inputs") {
    constexpr std::int64_t big = std::int64_t{1} << 30;
    CHECK_THROWS_AS(cross(IVec3{big, 0, 0}, IVec3{0, 1, 0}), OverflowError);
    CHECK_NOTHROW(cross(IVec3{big - 1, big - 1, big - 1}, IVec3{-(big - 1), big - 1, 0}));
}

TEST_CASE("gcd64") {
    CHECK(gcd64(84, 35) == 7);
    CHECK(gcd64(-84, 35) == 7);
    CHECK(gcd64(0, 5) == 5);
    CHECK(gcd64(0, 0) == 0);
}
