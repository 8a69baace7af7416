#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "nevdiff/eqparse.hpp"
#include "nevdiff/errors.hpp"
#include "nevdiff/funcspec.hpp"

using namespace nevdiff;

TEST_CASE("function spec: combined exponential product") {
    auto f = parse_function_spec("exp(z^2)*prod(lambda=0.5)");
    CHECK(*f.known_order() == doctest::Approx(2.0));
    CHECK(*f.product_lambda() == doctest::Approx(0.5));
    CHECK(*f.exp_poly_degree() == 2);
    // whitespace-insensitive
    auto g = parse_function_spec("  exp( z ^ 2 ) * prod( lambda = 0.5 )  ");
    CHECK(std::abs(f.evaluate(Complex(1.5, 0)) - g.evaluate(Complex(1.5, 0))) < 1e-14);
}

TEST_CASE("function spec: atoms") {
    CHECK(parse_function_spec("cossqrt").describe() == "cossqrt");
    auto p = parse_function_spec("poly(1,0,2)");
    CHECK(std::abs(p.evaluate(Complex(3, 0)) - Complex(19, 0)) < 1e-13);
    auto r = parse_function_spec("rat(zeros=[1, 2+1i]; poles=[3]; scale=2)");
    // 2 (z-1)(z-2-i)/(z-3) at z=0: 2*(-1)(-2-i)/(-3)
    Complex expect = 2.0 * (Complex(0, 0) - Complex(1, 0)) * (Complex(0, 0) - Complex(2, 1)) /
                     (Complex(0, 0) - Complex(3, 0));
    CHECK(std::abs(r.evaluate(Complex(0, 0)) - expect) < 1e-13);
    auto s = parse_function_spec("series(exp)");
    CHECK(std::abs(s.evaluate(Complex(1, 0)) - Complex(std::exp(1.0), 0)) < 1e-12);
}

TEST_CASE("function spec: quotient") {
    auto q = parse_function_spec("rat(zeros=[2])/rat(zeros=[3])");
    CHECK(std::abs(q.evaluate(Complex(1, 0)) - Complex(0.5, 0)) < 1e-13);
}

TEST_CASE("function spec: trailing comma is a parse error with position") {
    try {
        (void)parse_function_spec("poly(1,0,)");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position == 9);
        CHECK(std::string(e.what()).find("expected") != std::string::npos);
    }
}

TEST_CASE("function spec: unknown atom error") {
    CHECK_THROWS_AS((void)parse_function_spec("gamma(z)"), ParseError);
    CHECK_THROWS_AS((void)parse_function_spec("prod(lambda=1.5)"), Error);
    CHECK_THROWS_AS((void)parse_function_spec("cossqrt cossqrt"), ParseError);
}

TEST_CASE("complex literals") {
    CHECK(parse_complex("3") == Complex(3, 0));
    CHECK(parse_complex("-2.5") == Complex(-2.5, 0));
    CHECK(parse_complex("3+4i") == Complex(3, 4));
    CHECK(parse_complex("3-4i") == Complex(3, -4));
    CHECK(parse_complex("4i") == Complex(0, 4));
    CHECK(parse_complex("i") == Complex(0, 1));
    CHECK(parse_complex("-i") == Complex(0, -1));
    CHECK(parse_complex("1e2+0.5i") == Complex(100, 0.5));
}

TEST_CASE("equation text: expression difference form") {
    auto eq = parse_equation("(z)*D2 + (1-z)*D0");
    CHECK(eq.form == EqForm::Difference);
    REQUIRE(eq.coeffs.size() == 3);
    CHECK(eq.coeffs[2] == RatPoly({Rational(0), Rational(1)}));
    CHECK(eq.coeffs[1].is_zero());
    CHECK(eq.coeffs[0] == RatPoly({Rational(1), Rational(-1)}));
}

TEST_CASE("equation text: expression shift form with rationals") {
    auto eq = parse_equation("3/2*S1 - z^2*S0 = 0");
    CHECK(eq.form == EqForm::Shift);
    REQUIRE(eq.coeffs.size() == 2);
    CHECK(eq.coeffs[1] == RatPoly::constant(Rational(3, 2)));
    CHECK(eq.coeffs[0] == RatPoly({Rational(0), Rational(0), Rational(-1)}));
}

TEST_CASE("equation text: line style") {
    auto eq = parse_equation("P[2] = z\nP[0] = -1\n");
    CHECK(eq.form == EqForm::Difference);
    REQUIRE(eq.coeffs.size() == 3);
    CHECK(eq.coeffs[2] == RatPoly({Rational(0), Rational(1)}));
    CHECK(eq.coeffs[0] == RatPoly::constant(Rational(-1)));

    auto sq = parse_equation("# factorial recurrence\nQ1 = 1\nQ0 = -z\n");
    CHECK(sq.form == EqForm::Shift);
    CHECK(sq.coeffs[0] == RatPoly({Rational(0), Rational(-1)}));
}

TEST_CASE("equation text: rejects mixed markers and missing operators") {
    CHECK_THROWS_AS((void)parse_equation("D1 + S0"), ParseError);
    CHECK_THROWS_AS((void)parse_equation("z + D1"), ParseError);
    CHECK_THROWS_AS((void)parse_equation("(z)*D2 = 1"), ParseError);
    CHECK_THROWS_AS((void)parse_equation("1.5*D1 + D0"), ParseError);
}

TEST_CASE("ratpoly text") {
    auto p = parse_ratpoly("(1-z)^2 * 3/4 + z^3 - 2");
    CHECK(p.coeff(3) == Rational(1));
    CHECK(p.coeff(2) == Rational(3, 4));
    CHECK(p.coeff(1) == Rational(-3, 2));
    CHECK(p.coeff(0) == Rational(-5, 4));
    CHECK_THROWS_AS((void)parse_ratpoly("z +"), ParseError);
}

TEST_CASE("equation round trip through text") {
    auto eq = parse_equation("(z)*D2 + (1-z)*D0");
    auto text = equation_to_string(eq);
    auto back = parse_equation(text);
    REQUIRE(back.coeffs.size() == eq.coeffs.size());
    for (std::size_t i = 0; i < eq.coeffs.size(); ++i) CHECK(back.coeffs[i] == eq.coeffs[i]);
}
