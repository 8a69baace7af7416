#include "nevdiff/diffops.hpp"

#include <cmath>

#include "nevdiff/errors.hpp"

namespace nevdiff {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<double> binomial_row(int k) {
    std::vector<double> c(k + 1);
    c[0] = 1;
    for (int j = 1; j <= k; ++j) c[j] = c[j - 1] * (double)(k - j + 1) / (double)j;
    return c;
}

}  // namespace

Complex delta_k(const FunctionModel& f, Complex z, Complex eta, int k) {
    if (k < 0) throw Error("delta_k: negative order");
    if (k > 60) throw Error("delta_k: order too large");
    if (k == 0) return f.evaluate(z);
    auto c = binomial_row(k);
    Complex s(0, 0);
    for (int j = 0; j <= k; ++j) {
        double sgn = ((k - j) % 2) ? -1.0 : 1.0;
        s += sgn * c[j] * f.evaluate(z + (double)j * eta);
    }
    return s;
}

Complex delta_quotient(const FunctionModel& f, Complex z, Complex eta, int k, int j) {
    int top = std::max(k, j);
    std::vector<Complex> vals(top + 1);
    for (int i = 0; i <= top; ++i) vals[i] = f.evaluate(z + (double)i * eta);
    auto diff = [&](int ord) {
        if (ord == 0) return vals[0];
        auto c = binomial_row(ord);
        Complex s(0, 0);
        for (int i = 0; i <= ord; ++i) {
            double sgn = ((ord - i) % 2) ? -1.0 : 1.0;
            s += sgn * c[i] * vals[i];
        }
        return s;
    };
    Complex den = diff(j);
    if (std::abs(den) < 1e-300) throw ZeroHit("delta_quotient: denominator difference vanishes");
    return diff(k) / den;
}

RatPoly delta_poly(const RatPoly& p, const Rational& eta, int k) {
    RatPoly r = p;
    for (int i = 0; i < k; ++i) r = r.difference(eta);
    return r;
}

int LinearDifferenceEquation::nonzero_count() const {
    int n = 0;
    for (const auto& c : coeffs)
        if (!c.is_zero()) ++n;
    return n;
}

void LinearDifferenceEquation::validate() const {
    if (coeffs.empty() || coeffs.back().is_zero())
        throw DegenerateEquation("equation: top coefficient must be non-zero");
}

LinearDifferenceEquation shift_to_difference(const LinearDifferenceEquation& eq) {
    if (eq.form != EqForm::Shift) throw Error("shift_to_difference: expected shift form");
    eq.validate();
    int n = eq.order();
    LinearDifferenceEquation out;
    out.form = EqForm::Difference;
    out.coeffs.assign(n + 1, RatPoly());
    for (int j = 0; j <= n; ++j) {
        RatPoly pj;
        for (int L = j; L <= n; ++L) {
            if (eq.coeffs[L].is_zero()) continue;
            Rational c(binomial_big((unsigned)L, (unsigned)j), BigInt(1));
            pj = pj + eq.coeffs[L].scaled(c);
        }
        out.coeffs[j] = pj;
    }
    while (out.coeffs.size() > 1 && out.coeffs.back().is_zero()) out.coeffs.pop_back();
    return out;
}

LinearDifferenceEquation difference_to_shift(const LinearDifferenceEquation& eq) {
    if (eq.form != EqForm::Difference) throw Error("difference_to_shift: expected difference form");
    eq.validate();
    int n = eq.order();
    LinearDifferenceEquation out;
    out.form = EqForm::Shift;
    out.coeffs.assign(n + 1, RatPoly());
    for (int L = 0; L <= n; ++L) {
        RatPoly qL;
        for (int j = L; j <= n; ++j) {
            if (eq.coeffs[j].is_zero()) continue;
            Rational c(binomial_big((unsigned)j, (unsigned)L), BigInt(1));
            if ((j - L) % 2) c = -c;
            qL = qL + eq.coeffs[j].scaled(c);
        }
        out.coeffs[L] = qL;
    }
    while (out.coeffs.size() > 1 && out.coeffs.back().is_zero()) out.coeffs.pop_back();
    return out;
}

OperatorSeries operator_series(int k, int M) {
    if (k < 1) throw Error("operator_series: k must be positive");
    if (M < k || M > 64) throw Error("operator_series: need k <= M <= 64");
    // (e^x - 1) truncated, then raised to the k-th power
    std::vector<Rational> base(M + 1, Rational(0));
    for (int m = 1; m <= M; ++m) base[m] = Rational(BigInt(1), factorial_big((unsigned)m));
    std::vector<Rational> acc = base;
    for (int rep = 1; rep < k; ++rep) {
        std::vector<Rational> next(M + 1, Rational(0));
        for (int i = 0; i <= M; ++i) {
            if (acc[i].is_zero()) continue;
            for (int j = 1; i + j <= M; ++j) next[i + j] = next[i + j] + acc[i] * base[j];
        }
        acc = std::move(next);
    }
    return {k, M, std::move(acc)};
}

OperatorSeries operator_series_stirling(int k, int M) {
    if (k < 1) throw Error("operator_series_stirling: k must be positive");
    if (M < k || M > 64) throw Error("operator_series_stirling: need k <= M <= 64");
    // S(m,k): S(0,0)=1, S(m,k) = k S(m-1,k) + S(m-1,k-1)
    std::vector<std::vector<BigInt>> S(M + 1, std::vector<BigInt>(k + 1, BigInt(0)));
    S[0][0] = BigInt(1);
    for (int m = 1; m <= M; ++m)
        for (int j = 1; j <= k && j <= m; ++j)
            S[m][j] = BigInt(j) * S[m - 1][j] + S[m - 1][j - 1];
    BigInt kfac = factorial_big((unsigned)k);
    std::vector<Rational> c(M + 1, Rational(0));
    for (int m = k; m <= M; ++m)
        c[m] = Rational(kfac * S[m][k], factorial_big((unsigned)m));
    return {k, M, std::move(c)};
}

Complex apply_operator_series(const OperatorSeries& s, const FunctionModel& f, Complex z,
                              Complex eta) {
    Complex sum(0, 0), ep(1, 0);
    for (int m = 0; m <= s.order; ++m) {
        if (!s.coeff[m].is_zero()) sum += s.coeff[m].to_double() * ep * f.derivative(m, z);
        ep *= eta;
    }
    return sum;
}

PowerSeries difference_series(const PowerSeries& s, double eta) {
    PowerSeries src = s;
    double leta = std::log(std::fabs(eta));
    // b_n = sum_{m>n} C(m,n) eta^{m-n} a_m, accumulated in scaled space so the
    // log magnitude survives past double underflow. Once a source coefficient
    // has underflowed its phase defaults to +1; deep in the tail only the log
    // magnitude is ever consumed.
    auto compute = [src, eta, leta](long n) -> std::pair<Complex, double> {
        long cap = src.max_index >= 0 ? src.max_index : n + 4000;
        double base = -kInf;
        Complex acc(0, 0);
        int quiet = 0;
        for (long m = n + 1; m <= cap; ++m) {
            double la = src.log_abs_coeff(m);
            if (la == -kInf) continue;
            double lc = std::lgamma((double)m + 1) - std::lgamma((double)n + 1) -
                        std::lgamma((double)(m - n) + 1) + (double)(m - n) * leta;
            double lt = lc + la;
            Complex a = src.coeff(m);
            Complex phase = std::abs(a) > 0 ? a / std::abs(a) : Complex(1, 0);
            if (eta < 0 && ((m - n) % 2)) phase = -phase;
            if (base == -kInf) {
                base = lt;
                acc = phase;
            } else {
                acc += phase * std::exp(lt - base);
            }
            double cur = base + std::log(std::max(std::abs(acc), 1e-300));
            if (lt < cur - 40.0) {
                if (++quiet >= 6) break;
            } else {
                quiet = 0;
            }
        }
        double mag = std::abs(acc);
        if (base == -kInf || mag == 0.0) return {Complex(0, 0), -kInf};
        double lb = base + std::log(mag);
        Complex val = lb < 700.0 ? acc / mag * std::exp(lb) : Complex(kInf, 0);
        return {val, lb};
    };
    PowerSeries out;
    out.coeff = [compute](long n) { return compute(n).first; };
    out.log_abs_coeff = [compute](long n) { return compute(n).second; };
    if (src.max_index >= 0) out.max_index = std::max(0L, src.max_index - 1);
    return out;
}

}  // namespace nevdiff
