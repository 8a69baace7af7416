#ifndef NEVDIFF_NEVANLINNA_HPP
#define NEVDIFF_NEVANLINNA_HPP

#include <vector>

#include "nevdiff/funcmodel.hpp"
#include "nevdiff/intervalset.hpp"

namespace nevdiff {

enum class Target { Zeros, Poles };

// n(r): zeros or poles with |a| <= r, with multiplicity (closed disk;
// circle-grazing points are pulled in by a relative 1e-9 nudge).
long counting(const FunctionModel& f, double r, Target target);

// N(r) = sum_{0<|a|<=r} log(r/|a|) + n(0) log r
double integrated_counting(const FunctionModel& f, double r, Target target);

// m(r,f) = (1/2pi) int log+ |f(r e^{i phi})| d phi
double proximity(const FunctionModel& f, double r);

// (1/2pi) int log |f(R e^{i phi})| d phi   (plain log, used by Jensen checks)
double circle_mean_log_abs(const FunctionModel& f, double r);

struct NevanlinnaSample {
    double r;
    long n_poles;
    double N_poles;
    double m_f;
    double T_f;  // m + N
};

NevanlinnaSample characteristic(const FunctionModel& f, double r);

// log|f(z)| reconstructed from the circle integral plus zero/pole sums on |w| < R.
double poisson_jensen(const FunctionModel& f, Complex z, double R);

struct LogDifferenceResult {
    Complex q;      // 2 pi i n + log(f(z+eta)/f(z)) - eta f'(z)/f(z)
    long branch_n;  // the chosen branch integer
};

// Principal-branch logarithmic difference minus eta f'/f, with the branch
// integer chosen to minimize |q|.
LogDifferenceResult log_difference_error(const FunctionModel& f, Complex z, Complex eta);

struct Disk {
    Complex center;
    double radius;
};

// Boutroux-Cartan exclusion disks: at most p closed disks with radii summing
// to exactly 2B such that any z outside them has sorted distances
// d_1 <= ... <= d_p to the points with d_l > B l / p.
std::vector<Disk> cartan_disks(const std::vector<Complex>& points, double B);

}  // namespace nevdiff

#endif
