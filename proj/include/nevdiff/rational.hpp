#ifndef NEVDIFF_RATIONAL_HPP
#define NEVDIFF_RATIONAL_HPP

#include <string>
#include <string_view>

#include "nevdiff/bigint.hpp"

namespace nevdiff {

// Exact rational, always reduced, denominator > 0.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d);
    Rational(BigInt n, BigInt d);
    static Rational from_string(std::string_view s);  // "p", "-p", "p/q"

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_.is_one(); }
    int sign() const { return num_.sign(); }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const;

    static int cmp(const Rational& a, const Rational& b);
    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a, b) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a, b) != 0; }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a, b) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a, b) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a, b) >= 0; }

    std::string to_string() const;  // "p" or "p/q"
    double to_double() const { return num_.to_double() / den_.to_double(); }

  private:
    BigInt num_, den_;
    void reduce();
};

}  // namespace nevdiff

#endif
