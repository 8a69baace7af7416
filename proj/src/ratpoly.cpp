#include "nevdiff/ratpoly.hpp"

#include <algorithm>

namespace nevdiff {

RatPoly RatPoly::monomial(Rational v, int power) {
    std::vector<Rational> c(power + 1, Rational(0));
    c[power] = std::move(v);
    return RatPoly(std::move(c));
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i < a.c_.size()) c[i] = c[i] + a.c_[i];
        if (i < b.c_.size()) c[i] = c[i] + b.c_[i];
    }
    return RatPoly(std::move(c));
}

RatPoly RatPoly::operator-() const {
    std::vector<Rational> c;
    c.reserve(c_.size());
    for (const auto& v : c_) c.push_back(-v);
    return RatPoly(std::move(c));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) { return a + (-b); }

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return RatPoly();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    return RatPoly(std::move(c));
}

bool operator==(const RatPoly& a, const RatPoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        if (a.c_[i] != b.c_[i]) return false;
    return true;
}

RatPoly RatPoly::scaled(const Rational& s) const {
    std::vector<Rational> c;
    c.reserve(c_.size());
    for (const auto& v : c_) c.push_back(v * s);
    return RatPoly(std::move(c));
}

Rational RatPoly::eval(const Rational& x) const {
    Rational r(0);
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

double RatPoly::eval(double x) const {
    double r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i].to_double();
    return r;
}

RatPoly RatPoly::shifted(const Rational& eta) const {
    // Horner in (z + eta)
    RatPoly r;
    RatPoly lin(std::vector<Rational>{eta, Rational(1)});
    for (std::size_t i = c_.size(); i-- > 0;) r = r * lin + RatPoly::constant(c_[i]);
    return r;
}

std::string RatPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        Rational v = c_[i];
        if (out.empty()) {
            if (v.sign() < 0) {
                out += "-";
                v = -v;
            }
        } else {
            out += v.sign() < 0 ? " - " : " + ";
            if (v.sign() < 0) v = -v;
        }
        bool unit = v == Rational(1);
        if (i == 0) {
            out += v.to_string();
        } else {
            if (!unit) out += v.to_string() + "*";
            out += i == 1 ? "z" : "z^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace nevdiff
