#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nevdiff/eqparse.hpp"
#include "nevdiff/errors.hpp"
#include "nevdiff/polygon.hpp"

using namespace nevdiff;

namespace {

LinearDifferenceEquation eq_of(const std::string& text) { return parse_equation(text); }

}  // namespace

TEST_CASE("polygon: z D2 - 1 has the single gradient 1/2") {
    auto oc = order_candidates(eq_of("(z)*D2 - 1*D0"));
    CHECK(oc.gate == OrderGate::Candidates);
    REQUIRE(oc.candidates_below_one.size() == 1);
    CHECK(oc.candidates_below_one[0] == Rational(1, 2));
    REQUIRE(oc.polygon.points.size() == 2);
    CHECK(oc.polygon.points[0].j == 0);
    CHECK(oc.polygon.points[0].hj == 0);
    CHECK(oc.polygon.points[1].j == 2);
    CHECK(oc.polygon.points[1].hj == -1);
}

TEST_CASE("polygon: D1 + (1-z) D0 gates order at least one") {
    auto oc = order_candidates(eq_of("D1 + (1-z)*D0"));
    CHECK(oc.gate == OrderGate::OrderAtLeastOne);
    REQUIRE(oc.polygon.gradients.size() == 1);
    CHECK(oc.polygon.gradients[0] == Rational(2));
    CHECK(oc.candidates_below_one.empty());
}

TEST_CASE("polygon: constant-coefficient equation is collinear") {
    auto np = build_polygon(eq_of("D2 + D1 + D0"));
    REQUIRE(np.gradients.size() == 1);
    CHECK(np.gradients[0] == Rational(1));
    CHECK(np.hull.size() == 2);  // collinear middle point merged
    CHECK(np.points.size() == 3);
}

TEST_CASE("polygon: factorial recurrence given in shift form") {
    auto oc = order_candidates(eq_of("S1 - z*S0"));
    CHECK(oc.gate == OrderGate::OrderAtLeastOne);
}

TEST_CASE("gate matches the strictly-maximal-degree shift criterion") {
    // strictly dominant deg Q_0 forces the difference-form gate
    auto oc = order_candidates(eq_of("2*S2 + S1 + (z^3)*S0"));
    CHECK(oc.gate == OrderGate::OrderAtLeastOne);
}

TEST_CASE("gradients are invariant under scaling and z^m multiplication") {
    auto base = eq_of("(z)*D2 - 1*D0");
    auto scaled = eq_of("(3*z)*D2 - 3*D0");
    auto shifted = eq_of("(z^3)*D2 - (z^2)*D0");
    auto g0 = build_polygon(base).gradients;
    auto g1 = build_polygon(scaled).gradients;
    auto g2 = build_polygon(shifted).gradients;
    REQUIRE(g0.size() == g1.size());
    REQUIRE(g0.size() == g2.size());
    for (std::size_t i = 0; i < g0.size(); ++i) {
        CHECK(g0[i] == g1[i]);
        CHECK(g0[i] == g2[i]);
    }
}

TEST_CASE("every gradient is realized by a hull pair") {
    auto np = build_polygon(eq_of("(z^4)*D3 + (z^2)*D2 + z*D1 + (z^5)*D0"));
    for (const auto& chi : np.gradients) {
        bool realized = false;
        for (std::size_t i = 0; i < np.hull.size(); ++i)
            for (std::size_t k = i + 1; k < np.hull.size(); ++k) {
                Rational g(BigInt(np.hull[i].hj - np.hull[k].hj),
                           BigInt(np.hull[k].j - np.hull[i].j));
                realized = realized || g == chi;
            }
        CHECK(realized);
    }
}

TEST_CASE("conversion invariance: shift input equals converted difference input") {
    auto shift = eq_of("S1 - z*S0");
    auto diff = shift_to_difference(shift);
    auto a = order_candidates(shift);
    auto b = order_candidates(diff);
    CHECK(a.gate == b.gate);
    REQUIRE(a.polygon.gradients.size() == b.polygon.gradients.size());
    for (std::size_t i = 0; i < a.polygon.gradients.size(); ++i)
        CHECK(a.polygon.gradients[i] == b.polygon.gradients[i]);
}

TEST_CASE("degenerate equations are rejected") {
    CHECK_THROWS_AS((void)build_polygon(eq_of("D2")), DegenerateEquation);
}

TEST_CASE("json report shape") {
    auto oc = order_candidates(eq_of("(z)*D2 - 1*D0"));
    std::string j = order_candidates_json(oc);
    CHECK(j.find("\"gate\": \"candidates\"") != std::string::npos);
    CHECK(j.find("\"exact\": \"1/2\"") != std::string::npos);
    CHECK(j.find("\"hull\"") != std::string::npos);
}
