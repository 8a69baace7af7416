#ifndef NEVDIFF_RATPOLY_HPP
#define NEVDIFF_RATPOLY_HPP

#include <string>
#include <vector>

#include "nevdiff/rational.hpp"

namespace nevdiff {

// Polynomial in z with exact rational coefficients, index = power.
// degree() is -1 for the zero polynomial.
class RatPoly {
  public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    static RatPoly constant(Rational v) { return RatPoly(std::vector<Rational>{std::move(v)}); }
    static RatPoly monomial(Rational v, int power);

    int degree() const { return (int)c_.size() - 1; }
    bool is_zero() const { return c_.empty(); }
    Rational coeff(int i) const { return i >= 0 && i < (int)c_.size() ? c_[i] : Rational(0); }
    Rational leading() const { return is_zero() ? Rational(0) : c_.back(); }
    const std::vector<Rational>& coeffs() const { return c_; }

    friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
    RatPoly operator-() const;
    friend bool operator==(const RatPoly& a, const RatPoly& b);

    RatPoly scaled(const Rational& s) const;
    Rational eval(const Rational& x) const;
    double eval(double x) const;

    // p(z + eta), exact
    RatPoly shifted(const Rational& eta) const;
    // p(z + eta) - p(z), exact
    RatPoly difference(const Rational& eta) const { return shifted(eta) - *this; }

    std::string to_string() const;

  private:
    std::vector<Rational> c_;
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
};

}  // namespace nevdiff

#endif
