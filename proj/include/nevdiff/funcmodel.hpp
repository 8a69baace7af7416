#ifndef NEVDIFF_FUNCMODEL_HPP
#define NEVDIFF_FUNCMODEL_HPP

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nevdiff/powerseries.hpp"

namespace nevdiff {

namespace detail {
struct FnImpl;
}

// Evaluatable entire/meromorphic function with known zero/pole structure,
// closed-form derivatives where the kind admits them, and (when known)
// order sigma and exponents of convergence (lambda', lambda'').
//
// Values are immutable after construction; all operations are pure and safe
// to call concurrently.
class FunctionModel {
  public:
    static FunctionModel polynomial(std::vector<Complex> coeffs);
    static FunctionModel rational(std::vector<Complex> zeros, std::vector<Complex> poles,
                                  Complex scale = Complex(1, 0));
    // exp(z^k); k = 0 degenerates to the constant e
    static FunctionModel exp_poly(int k);
    // prod_{n>=1} (1 - z / n^{1/lambda}), 0 < lambda < 1
    static FunctionModel canonical_product(double lambda);
    // exp(z^k) * prod_{n>=1} (1 - z / n^{1/lambda}); k >= 0
    static FunctionModel exp_poly_product(int k, double lambda);
    // cos(sqrt(z)), entire of order 1/2, zeros ((n+1/2)pi)^2
    static FunctionModel cos_sqrt();
    static FunctionModel from_series(PowerSeries s, std::string name = "series");
    static FunctionModel product(std::vector<FunctionModel> factors);
    // rejects shared zeros of num and den (no hidden cancellation)
    static FunctionModel quotient(FunctionModel num, FunctionModel den);

    Complex evaluate(Complex z) const;
    // log|f(z)|; -inf at zeros of f. Stable at radii where |f| itself
    // over/underflows a double.
    double log_abs(Complex z) const;
    // k-th derivative; closed form where available, otherwise Cauchy-circle
    // quadrature (k <= 6 on the quadrature path).
    Complex derivative(int k, Complex z) const;
    // f'(z)/f(z); product kinds sum factor logarithmic derivatives.
    Complex log_derivative(Complex z) const;

    std::optional<double> known_order() const;
    std::optional<std::pair<double, double>> known_lambda() const;
    bool entire() const;

    bool has_zero_list() const;
    bool has_pole_list() const;
    // all zeros/poles with |a| <= r, repeated per multiplicity
    std::vector<Complex> zeros_up_to(double r) const;
    std::vector<Complex> poles_up_to(double r) const;
    long count_zeros(double r) const;  // closed disk
    long count_poles(double r) const;

    std::optional<PowerSeries> power_series() const;
    // lambda of the canonical-product factor, when the model has exactly one
    std::optional<double> product_lambda() const;
    // k of the exp(z^k) factor, when the model is one (or has exactly one)
    std::optional<int> exp_poly_degree() const;
    std::string describe() const;

  private:
    explicit FunctionModel(std::shared_ptr<const detail::FnImpl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const detail::FnImpl> impl_;
};

// Named coefficient streams for the series(...) spec atom:
// exp, cossqrt, expz2, invfactsq.
PowerSeries named_series(const std::string& name);

}  // namespace nevdiff

#endif
