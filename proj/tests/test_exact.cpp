#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nevdiff/bigint.hpp"
#include "nevdiff/ratpoly.hpp"
#include "nevdiff/rational.hpp"

using namespace nevdiff;

TEST_CASE("bigint basics") {
    CHECK(BigInt(0).is_zero());
    CHECK(BigInt(-7).to_string() == "-7");
    CHECK((BigInt(1234567890123456789LL) * BigInt(987654321)).to_string() ==
          "1219326311248285321112635269");
    CHECK(BigInt::from_string("123456789012345678901234567890").to_string() ==
          "123456789012345678901234567890");
    CHECK((BigInt::from_string("-99999999999999999999") + BigInt(1)).to_string() ==
          "-99999999999999999998");
}

TEST_CASE("bigint divmod truncates toward zero") {
    auto [q, r] = BigInt::divmod(BigInt(17), BigInt(5));
    CHECK(q == BigInt(3));
    CHECK(r == BigInt(2));
    auto [q2, r2] = BigInt::divmod(BigInt(-17), BigInt(5));
    CHECK(q2 == BigInt(-3));
    CHECK(r2 == BigInt(-2));
    BigInt a = BigInt::from_string("340282366920938463463374607431768211456");  // 2^128
    auto [q3, r3] = BigInt::divmod(a, BigInt::from_string("18446744073709551616"));
    CHECK(q3.to_string() == "18446744073709551616");
    CHECK(r3.is_zero());
}

TEST_CASE("bigint gcd, binomial, factorial") {
    CHECK(BigInt::gcd(BigInt(48), BigInt(-36)) == BigInt(12));
    CHECK(binomial_big(40, 20).to_string() == "137846528820");
    CHECK(factorial_big(30).to_string() == "265252859812191058636308480000000");
    // Pascal identity at a width that would overflow 64-bit arithmetic
    CHECK(binomial_big(80, 40) == binomial_big(79, 39) + binomial_big(79, 40));
}

TEST_CASE("rational arithmetic stays reduced") {
    Rational a(1, 3), b(1, 6);
    CHECK((a + b).to_string() == "1/2");
    CHECK((a - b).to_string() == "1/6");
    CHECK((a * b).to_string() == "1/18");
    CHECK((a / b).to_string() == "2");
    CHECK(Rational(-4, -8).to_string() == "1/2");
    CHECK(Rational(4, -8).to_string() == "-1/2");
    CHECK(Rational::from_string("21/14") == Rational(3, 2));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(7, 2).to_double() == doctest::Approx(3.5));
}

TEST_CASE("ratpoly algebra and shift") {
    // p = z^2 - 3/2 z + 1
    RatPoly p({Rational(1), Rational(-3, 2), Rational(1)});
    CHECK(p.degree() == 2);
    CHECK(p.eval(Rational(2)) == Rational(2));
    RatPoly q = p.shifted(Rational(1));  // p(z+1) = z^2 + 1/2 z + 1/2
    CHECK(q.coeff(0) == Rational(1, 2));
    CHECK(q.coeff(1) == Rational(1, 2));
    CHECK(q.coeff(2) == Rational(1));
    // shifting back is exact
    CHECK(q.shifted(Rational(-1)) == p);
    CHECK(p.difference(Rational(1)).degree() == 1);
    CHECK(RatPoly().degree() == -1);
    CHECK((p - p).is_zero());
    CHECK(p.to_string() == "z^2 - 3/2*z + 1");
}

TEST_CASE("ratpoly multiplication against evaluation") {
    RatPoly a({Rational(2), Rational(0), Rational(5)});
    RatPoly b({Rational(-1), Rational(7)});
    RatPoly c = a * b;
    for (long x : {-3, -1, 0, 2, 9}) {
        CHECK(c.eval(Rational(x)) == a.eval(Rational(x)) * b.eval(Rational(x)));
    }
}
