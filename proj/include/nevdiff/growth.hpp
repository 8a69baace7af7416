#ifndef NEVDIFF_GROWTH_HPP
#define NEVDIFF_GROWTH_HPP

#include <vector>

#include "nevdiff/funcmodel.hpp"

namespace nevdiff {

// Maximal term mu(r) = max_n |a_n| r^n and central index nu(r), the greatest
// maximizing index. mu is exp(log_mu) and may overflow to +inf at large r;
// the log form is the one growth work should use.
struct MaximalTerm {
    double mu;
    double log_mu;
    long nu;
};

MaximalTerm maximal_term(const PowerSeries& s, double r);

struct GrowthSample {
    double r;
    double log_mu;
    long nu;
    double log_max_mod;  // log M(r, f)
};

// log M(r,f) on |z| = r: 1024-node coarse scan plus golden-section refinement.
double max_log_modulus(const FunctionModel& f, double r);
// exp of the above; overflows to +inf once M(r) leaves double range.
double max_modulus(const FunctionModel& f, double r);

std::vector<double> geometric_grid(double rmin, double rmax, int n);

// One sample per grid point; requires f.power_series().
std::vector<GrowthSample> growth_samples(const FunctionModel& f, const std::vector<double>& grid);

// Order estimate from central-index samples: upper-envelope fit of
// log nu against log r over a slope grid (a limsup surrogate; a plain
// regression underestimates on oscillating nu).
// Needs >= 10 samples spanning >= 4 decades.
double estimate_order(const std::vector<GrowthSample>& samples);

}  // namespace nevdiff

#endif
