#ifndef NEVDIFF_POWERSERIES_HPP
#define NEVDIFF_POWERSERIES_HPP

#include <complex>
#include <functional>
#include <limits>

namespace nevdiff {

using Complex = std::complex<double>;

// Coefficient stream a_n of a power series sum a_n z^n.
//
// coeff must be pure: repeated calls agree exactly. log_abs_coeff returns
// log|a_n| (-inf for a_n = 0) and must stay finite where |a_n| itself would
// underflow or overflow a double; growth functionals work in log space only.
struct PowerSeries {
    std::function<Complex(long)> coeff;
    std::function<double(long)> log_abs_coeff;
    double radius = std::numeric_limits<double>::infinity();
    // when >= 0, every coefficient beyond this index is zero
    long max_index = -1;

    static PowerSeries from_coeff(std::function<Complex(long)> c, long max_index = -1);
};

}  // namespace nevdiff

#endif
