#ifndef NEVDIFF_DIFFOPS_HPP
#define NEVDIFF_DIFFOPS_HPP

#include <vector>

#include "nevdiff/funcmodel.hpp"
#include "nevdiff/ratpoly.hpp"

namespace nevdiff {

// Delta^k f(z) = sum_{j=0..k} (-1)^{k-j} C(k,j) f(z + j eta); k = 0 gives f(z).
// Closed binomial form, one evaluation per stencil point.
Complex delta_k(const FunctionModel& f, Complex z, Complex eta, int k);

// Delta^k f(z) / Delta^j f(z) with shared stencil evaluations.
Complex delta_quotient(const FunctionModel& f, Complex z, Complex eta, int k, int j);

// Exact difference of a rational-coefficient polynomial.
RatPoly delta_poly(const RatPoly& p, const Rational& eta, int k);

enum class EqForm { Shift, Difference };

// Linear equation sum_j coeffs[j] * (shift or difference of order j) y = 0,
// exact rational coefficients. The binomial transforms below identify unit
// shifts with the eta = 1 difference operator, so equation work keeps eta = 1.
struct LinearDifferenceEquation {
    EqForm form = EqForm::Difference;
    std::vector<RatPoly> coeffs;  // index j = shift amount / difference order
    Rational eta = Rational(1);
    int order() const { return (int)coeffs.size() - 1; }
    int nonzero_count() const;
    void validate() const;  // top coefficient must be non-zero
};

// y(z+L) = sum_j C(L,j) Delta^j y(z):   P_j = sum_{L>=j} C(L,j) Q_L
LinearDifferenceEquation shift_to_difference(const LinearDifferenceEquation& eq);
// Delta^j y(z) = sum_L (-1)^{j-L} C(j,L) y(z+L):   Q_L = sum_{j>=L} (-1)^{j-L} C(j,L) P_j
LinearDifferenceEquation difference_to_shift(const LinearDifferenceEquation& eq);

// Coefficients c_m of (e^x - 1)^k truncated at x^M: Delta^k = sum c_m eta^m D^m.
// c_m = 0 for m < k and c_k = 1.
struct OperatorSeries {
    int k = 0;
    int order = 0;  // M
    std::vector<Rational> coeff;  // c_0..c_M
};

// Truncated-series multiplication path.
OperatorSeries operator_series(int k, int M);
// Stirling-number path: c_m = k! S(m,k) / m!. Must agree exactly with the above.
OperatorSeries operator_series_stirling(int k, int M);

// sum_{m=k}^{M} c_m eta^m f^(m)(z); heuristic cross-check of delta_k for
// entire f of small order, never an acceptance gate by itself.
Complex apply_operator_series(const OperatorSeries& s, const FunctionModel& f, Complex z,
                              Complex eta);

// Coefficient stream of Delta f built from the stream of f:
// b_n = sum_{m>n} C(m,n) eta^{m-n} a_m. Intended for modest r work only.
PowerSeries difference_series(const PowerSeries& s, double eta);

}  // namespace nevdiff

#endif
