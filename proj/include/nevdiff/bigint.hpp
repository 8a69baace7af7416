#ifndef NEVDIFF_BIGINT_HPP
#define NEVDIFF_BIGINT_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nevdiff {

// Arbitrary-precision signed integer, little-endian base 2^32 magnitude.
// Sized for exact binomial/Stirling work (a few hundred bits), not for crypto.
class BigInt {
  public:
    BigInt() = default;
    BigInt(long long v);
    static BigInt from_string(std::string_view digits);

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }
    bool is_one() const;

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);
    BigInt operator-() const;

    // Truncated toward zero, like built-in integer division. b must be non-zero.
    static std::pair<BigInt, BigInt> divmod(const BigInt& a, const BigInt& b);
    friend BigInt operator/(const BigInt& a, const BigInt& b) { return divmod(a, b).first; }
    friend BigInt operator%(const BigInt& a, const BigInt& b) { return divmod(a, b).second; }

    static int cmp(const BigInt& a, const BigInt& b);
    friend bool operator==(const BigInt& a, const BigInt& b) { return cmp(a, b) == 0; }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return cmp(a, b) != 0; }
    friend bool operator<(const BigInt& a, const BigInt& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return cmp(a, b) <= 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return cmp(a, b) > 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return cmp(a, b) >= 0; }

    BigInt abs() const;
    static BigInt gcd(BigInt a, BigInt b);

    std::string to_string() const;
    double to_double() const;

  private:
    int sign_ = 0;
    std::vector<std::uint32_t> mag_;

    void trim();
    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    std::uint32_t divmod_small(std::uint32_t d);  // in place, returns remainder
    void shl_bit();
    std::size_t bit_length() const;
    bool bit(std::size_t i) const;
};

BigInt binomial_big(unsigned n, unsigned k);
BigInt factorial_big(unsigned n);

}  // namespace nevdiff

#endif
