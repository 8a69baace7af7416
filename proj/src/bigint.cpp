#include "nevdiff/bigint.hpp"

#include <cmath>
#include <stdexcept>

namespace nevdiff {

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v > 0 ? 1 : -1;
    unsigned long long m = v > 0 ? (unsigned long long)v : 0ULL - (unsigned long long)v;
    while (m) {
        mag_.push_back((std::uint32_t)(m & 0xffffffffu));
        m >>= 32;
    }
}

BigInt BigInt::from_string(std::string_view digits) {
    BigInt r;
    bool neg = false;
    std::size_t i = 0;
    if (i < digits.size() && (digits[i] == '+' || digits[i] == '-')) {
        neg = digits[i] == '-';
        ++i;
    }
    if (i == digits.size()) throw std::invalid_argument("BigInt: empty digit string");
    for (; i < digits.size(); ++i) {
        char c = digits[i];
        if (c < '0' || c > '9') throw std::invalid_argument("BigInt: bad digit");
        // r = r*10 + c
        std::uint64_t carry = (std::uint64_t)(c - '0');
        for (std::size_t j = 0; j < r.mag_.size(); ++j) {
            std::uint64_t t = (std::uint64_t)r.mag_[j] * 10u + carry;
            r.mag_[j] = (std::uint32_t)t;
            carry = t >> 32;
        }
        if (carry) r.mag_.push_back((std::uint32_t)carry);
    }
    r.sign_ = 1;
    r.trim();
    if (neg && r.sign_) r.sign_ = -1;
    return r;
}

bool BigInt::is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    const auto &lo = a.size() < b.size() ? a : b, &hi = a.size() < b.size() ? b : a;
    std::vector<std::uint32_t> r(hi.size());
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < hi.size(); ++i) {
        std::uint64_t t = carry + hi[i] + (i < lo.size() ? lo[i] : 0u);
        r[i] = (std::uint32_t)t;
        carry = t >> 32;
    }
    if (carry) r.push_back((std::uint32_t)carry);
    return r;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r(a.size());
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t t = (std::int64_t)a[i] - borrow - (i < b.size() ? (std::int64_t)b[i] : 0);
        if (t < 0) {
            t += ((std::int64_t)1 << 32);
            borrow = 1;
        } else {
            borrow = 0;
        }
        r[i] = (std::uint32_t)t;
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

int BigInt::cmp(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
    int c = cmp_mag(a.mag_, b.mag_);
    return a.sign_ >= 0 ? c : -c;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    BigInt r;
    if (a.sign_ == b.sign_) {
        r.mag_ = BigInt::add_mag(a.mag_, b.mag_);
        r.sign_ = a.sign_;
    } else {
        int c = BigInt::cmp_mag(a.mag_, b.mag_);
        if (c == 0) return BigInt();
        const BigInt &hi = c > 0 ? a : b, &lo = c > 0 ? b : a;
        r.mag_ = BigInt::sub_mag(hi.mag_, lo.mag_);
        r.sign_ = hi.sign_;
    }
    r.trim();
    return r;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
    BigInt r;
    r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
    for (std::size_t i = 0; i < a.mag_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < b.mag_.size(); ++j) {
            std::uint64_t t = (std::uint64_t)a.mag_[i] * b.mag_[j] + r.mag_[i + j] + carry;
            r.mag_[i + j] = (std::uint32_t)t;
            carry = t >> 32;
        }
        std::size_t k = i + b.mag_.size();
        while (carry) {
            std::uint64_t t = (std::uint64_t)r.mag_[k] + carry;
            r.mag_[k] = (std::uint32_t)t;
            carry = t >> 32;
            ++k;
        }
    }
    r.sign_ = a.sign_ * b.sign_;
    r.trim();
    return r;
}

std::size_t BigInt::bit_length() const {
    if (mag_.empty()) return 0;
    std::uint32_t top = mag_.back();
    std::size_t n = (mag_.size() - 1) * 32;
    while (top) {
        ++n;
        top >>= 1;
    }
    return n;
}

bool BigInt::bit(std::size_t i) const {
    std::size_t w = i / 32;
    if (w >= mag_.size()) return false;
    return (mag_[w] >> (i % 32)) & 1u;
}

void BigInt::shl_bit() {
    std::uint32_t carry = 0;
    for (auto& w : mag_) {
        std::uint32_t nc = w >> 31;
        w = (w << 1) | carry;
        carry = nc;
    }
    if (carry) mag_.push_back(carry);
}

std::pair<BigInt, BigInt> BigInt::divmod(const BigInt& a, const BigInt& b) {
    if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
    BigInt q, r;
    // schoolbook bit-by-bit on magnitudes, signs applied after
    std::size_t n = a.bit_length();
    q.mag_.assign(a.mag_.size(), 0);
    for (std::size_t i = n; i-- > 0;) {
        r.shl_bit();
        if (r.mag_.empty() && a.bit(i))
            r.mag_.push_back(1);
        else if (a.bit(i))
            r.mag_[0] |= 1u;
        if (cmp_mag(r.mag_, b.mag_) >= 0) {
            r.mag_ = sub_mag(r.mag_, b.mag_);
            q.mag_[i / 32] |= (1u << (i % 32));
        }
    }
    q.sign_ = 1;
    q.trim();
    r.sign_ = 1;
    r.trim();
    // truncate toward zero: sign of q = sign(a)*sign(b), sign of r = sign(a)
    if (!q.is_zero()) q.sign_ = a.sign_ * b.sign_;
    if (!r.is_zero()) r.sign_ = a.sign_;
    return {q, r};
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
        BigInt r = a % b;
        a = b;
        b = r;
    }
    return a;
}

std::uint32_t BigInt::divmod_small(std::uint32_t d) {
    std::uint64_t rem = 0;
    for (std::size_t i = mag_.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | mag_[i];
        mag_[i] = (std::uint32_t)(cur / d);
        rem = cur % d;
    }
    trim();
    return (std::uint32_t)rem;
}

std::string BigInt::to_string() const {
    if (sign_ == 0) return "0";
    BigInt t = *this;
    std::string out;
    while (!t.mag_.empty()) {
        std::uint32_t r = t.divmod_small(1000000000u);
        std::string chunk = std::to_string(r);
        if (t.mag_.empty()) {
            out = chunk + out;
        } else {
            out = std::string(9 - chunk.size(), '0') + chunk + out;
        }
    }
    if (sign_ < 0) out = "-" + out;
    return out;
}

double BigInt::to_double() const {
    double v = 0;
    for (std::size_t i = mag_.size(); i-- > 0;) v = v * 4294967296.0 + (double)mag_[i];
    return sign_ < 0 ? -v : v;
}

BigInt binomial_big(unsigned n, unsigned k) {
    if (k > n) return BigInt(0);
    if (k > n - k) k = n - k;
    BigInt r(1);
    for (unsigned i = 1; i <= k; ++i) r = r * BigInt((long long)(n - k + i)) / BigInt((long long)i);
    return r;
}

BigInt factorial_big(unsigned n) {
    BigInt r(1);
    for (unsigned i = 2; i <= n; ++i) r = r * BigInt((long long)i);
    return r;
}

}  // namespace nevdiff
