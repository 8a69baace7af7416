#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "nevdiff/errors.hpp"
#include "nevdiff/growth.hpp"

using namespace nevdiff;

namespace {

// direct scan oracle with the same greatest-argmax tie rule
long scan_argmax(const PowerSeries& s, double r, long nmax) {
    double best = -std::numeric_limits<double>::infinity();
    long nu = 0;
    for (long n = 0; n <= nmax; ++n) {
        double lt = s.log_abs_coeff(n) + (double)n * std::log(r);
        if (lt == -std::numeric_limits<double>::infinity()) continue;
        if (lt >= best - 1e-9 * std::max(1.0, std::fabs(best))) {
            if (lt > best) best = lt;
            nu = n;
        }
    }
    return nu;
}

}  // namespace

TEST_CASE("maximal term tie-break picks the greatest index") {
    auto s = named_series("exp");
    // 5^5/5! = 5^4/4!: indices 4 and 5 tie, greatest wins
    CHECK(maximal_term(s, 5.0).nu == 5);
    CHECK(maximal_term(s, 5.0).nu == scan_argmax(s, 5.0, 100));
}

TEST_CASE("maximal term of a polynomial at large r") {
    auto p = FunctionModel::polynomial(
        {Complex(4, 0), Complex(1, 0), Complex(2, 0), Complex(1, 0)});
    auto s = *p.power_series();
    auto mt = maximal_term(s, 1e6);
    CHECK(mt.nu == 3);
}

TEST_CASE("maximal term of sum z^n/(n!)^2 matches the scan oracle") {
    auto s = named_series("invfactsq");
    auto mt = maximal_term(s, 100.0);
    long oracle = scan_argmax(s, 100.0, 1000);
    CHECK(mt.nu == oracle);
    CHECK((mt.nu == 9 || mt.nu == 10));
}

TEST_CASE("max modulus examples") {
    auto e1 = FunctionModel::exp_poly(1);
    CHECK(max_modulus(e1, 10.0) == doctest::Approx(std::exp(10.0)).epsilon(1e-6));

    auto cs = FunctionModel::cos_sqrt();
    double m = max_modulus(cs, 100.0);
    CHECK(m == doctest::Approx(std::cosh(10.0)).epsilon(1e-4));
    // dense-scan oracle
    double best = 0;
    for (int i = 0; i < 100000; ++i) {
        double phi = 2 * std::numbers::pi * i / 100000;
        best = std::max(best, std::abs(cs.evaluate(std::polar(100.0, phi))));
    }
    CHECK(m == doctest::Approx(best).epsilon(1e-6));

    auto z2 = FunctionModel::polynomial({Complex(0, 0), Complex(0, 0), Complex(1, 0)});
    CHECK(max_modulus(z2, 3.0) == doctest::Approx(9.0).epsilon(1e-9));
}

TEST_CASE("central index is non-decreasing and scale invariant") {
    auto s = named_series("cossqrt");
    auto grid = geometric_grid(1.0, 1e5, 40);
    long prev = -1;
    for (double r : grid) {
        long nu = maximal_term(s, r).nu;
        CHECK(nu >= prev);
        prev = nu;
    }
    // scaling coefficients by c leaves the argmax alone
    PowerSeries scaled = s;
    scaled.coeff = [base = s.coeff](long n) { return 7.25 * base(n); };
    scaled.log_abs_coeff = [base = s.log_abs_coeff](long n) {
        return std::log(7.25) + base(n);
    };
    for (double r : {2.0, 47.0, 9000.0}) {
        CHECK(maximal_term(s, r).nu == maximal_term(scaled, r).nu);
    }
}

TEST_CASE("log mu never exceeds log max modulus") {
    for (auto f : {FunctionModel::exp_poly(1), FunctionModel::cos_sqrt(),
                   FunctionModel::polynomial({Complex(1, 0), Complex(0, 0), Complex(0, 0),
                                              Complex(1, 0)})}) {
        auto samples = growth_samples(f, geometric_grid(10, 1e4, 16));
        for (const auto& s : samples) {
            CHECK(s.log_mu <= s.log_max_mod + 1e-6);
        }
    }
}

TEST_CASE("order estimates for the standard families") {
    auto ord = [](const FunctionModel& f, double rmin, double rmax) {
        return estimate_order(growth_samples(f, geometric_grid(rmin, rmax, 48)));
    };
    CHECK(ord(FunctionModel::exp_poly(1), 10, 1e6) == doctest::Approx(1.0).epsilon(0.05));
    CHECK(ord(FunctionModel::cos_sqrt(), 10, 1e6) == doctest::Approx(0.5).epsilon(0.1));
    CHECK(ord(FunctionModel::exp_poly(2), 0.2, 2000) == doctest::Approx(2.0).epsilon(0.05));
    auto poly = FunctionModel::polynomial({Complex(1, 0), Complex(0, 0), Complex(0, 0),
                                           Complex(1, 0)});
    CHECK(ord(poly, 10, 1e6) == 0.0);
}

TEST_CASE("estimate_order preconditions") {
    auto f = FunctionModel::exp_poly(1);
    auto few = growth_samples(f, geometric_grid(10, 1e6, 5));
    CHECK_THROWS_AS((void)estimate_order(few), InsufficientSamples);
    auto narrow = growth_samples(f, geometric_grid(10, 100, 20));
    CHECK_THROWS_AS((void)estimate_order(narrow), InsufficientSamples);
}

TEST_CASE("maximal term error paths") {
    CHECK_THROWS_AS((void)maximal_term(named_series("exp"), -1.0), Error);
    // nu of exp(z^2) at r = 1e6 sits near 2e12, far past the scan cap
    CHECK_THROWS_AS((void)maximal_term(named_series("expz2"), 1e6), NonConvergence);
}
