#include "nevdiff/funcmodel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "nevdiff/errors.hpp"

namespace nevdiff {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = std::numbers::pi;

double log_abs_c(Complex v) { return std::log(std::abs(v)); }

// ---- small complex-coefficient polynomial helpers ----

using CPoly = std::vector<Complex>;  // index = power

void cp_trim(CPoly& p) {
    while (!p.empty() && std::abs(p.back()) == 0.0) p.pop_back();
}

Complex cp_eval(const CPoly& p, Complex z) {
    Complex r = 0;
    for (std::size_t i = p.size(); i-- > 0;) r = r * z + p[i];
    return r;
}

CPoly cp_derive(const CPoly& p) {
    if (p.size() <= 1) return {};
    CPoly r(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * Complex((double)i, 0);
    return r;
}

CPoly cp_mul(const CPoly& a, const CPoly& b) {
    if (a.empty() || b.empty()) return {};
    CPoly r(a.size() + b.size() - 1, Complex(0, 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

CPoly cp_add(const CPoly& a, const CPoly& b) {
    CPoly r(std::max(a.size(), b.size()), Complex(0, 0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    cp_trim(r);
    return r;
}

CPoly cp_sub(const CPoly& a, const CPoly& b) {
    CPoly r(std::max(a.size(), b.size()), Complex(0, 0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    cp_trim(r);
    return r;
}

CPoly cp_from_roots(const std::vector<Complex>& roots, Complex scale) {
    CPoly p{scale};
    for (Complex a : roots) {
        CPoly q(p.size() + 1, Complex(0, 0));
        for (std::size_t i = 0; i < p.size(); ++i) {
            q[i + 1] += p[i];
            q[i] -= a * p[i];
        }
        p = std::move(q);
    }
    return p;
}

// Durand-Kerner; adequate for the small test polynomials fed through here.
std::vector<Complex> polynomial_roots(CPoly p) {
    cp_trim(p);
    if (p.size() <= 1) return {};
    int deg = (int)p.size() - 1;
    if (deg > 60) throw Unsupported("polynomial_roots: degree > 60");
    Complex lead = p.back();
    for (auto& c : p) c /= lead;
    std::vector<Complex> w(deg);
    Complex seed(0.4, 0.9), acc(1, 0);
    for (int i = 0; i < deg; ++i) {
        acc *= seed;
        w[i] = acc;
    }
    for (int it = 0; it < 1000; ++it) {
        double worst = 0;
        for (int i = 0; i < deg; ++i) {
            Complex den(1, 0);
            for (int j = 0; j < deg; ++j)
                if (j != i) den *= (w[i] - w[j]);
            if (std::abs(den) == 0.0) continue;
            Complex dw = cp_eval(p, w[i]) / den;
            w[i] -= dw;
            worst = std::max(worst, std::abs(dw) / (1.0 + std::abs(w[i])));
        }
        if (worst < 1e-14) break;
    }
    return w;
}

// Sum_{n>N} n^{-s} by Euler-Maclaurin; needs N >= ~32 and s > 1.
double zeta_tail(double s, double N) {
    double t0 = std::pow(N, 1.0 - s) / (s - 1.0);
    double g = std::pow(N, -s);
    return t0 - 0.5 * g + s * g / (12.0 * N) -
           s * (s + 1) * (s + 2) * g / (720.0 * N * N * N) +
           s * (s + 1) * (s + 2) * (s + 3) * (s + 4) * g / (30240.0 * std::pow(N, 5));
}

}  // namespace

namespace detail {

struct FnImpl {
    virtual ~FnImpl() = default;
    virtual Complex evaluate(Complex z) const = 0;
    virtual double log_abs(Complex z) const { return log_abs_c(evaluate(z)); }
    virtual bool closed_derivative() const { return false; }
    virtual Complex derivative(int, Complex) const {
        throw Unsupported("no closed-form derivative for this kind");
    }
    virtual Complex log_derivative(Complex z) const {
        Complex f = evaluate(z);
        if (std::abs(f) < 1e-300) throw ZeroHit("log_derivative: |f(z)| below underflow guard");
        return derivative(1, z) / f;
    }
    virtual std::optional<double> order() const { return std::nullopt; }
    virtual std::optional<std::pair<double, double>> lambda() const { return std::nullopt; }
    virtual bool is_entire() const { return true; }
    virtual bool has_zeros() const { return false; }
    virtual bool has_poles() const { return false; }
    virtual std::vector<Complex> zeros_up_to(double) const { return {}; }
    virtual std::vector<Complex> poles_up_to(double) const { return {}; }
    virtual long count_zeros(double r) const { return (long)zeros_up_to(r).size(); }
    virtual long count_poles(double r) const { return (long)poles_up_to(r).size(); }
    virtual std::optional<PowerSeries> series() const { return std::nullopt; }
    virtual std::optional<double> prod_lambda() const { return std::nullopt; }
    virtual std::optional<int> exp_k() const { return std::nullopt; }
    virtual std::string describe() const = 0;
};

}  // namespace detail

namespace {

using detail::FnImpl;

bool in_closed_disk(Complex a, double r) { return std::abs(a) <= r * (1 + 1e-12) + 1e-12; }

// ---------------------------------------------------------------- Polynomial

struct PolynomialFn : FnImpl {
    CPoly c;
    std::vector<Complex> roots;

    explicit PolynomialFn(CPoly coeffs) : c(std::move(coeffs)) {
        cp_trim(c);
        if (c.size() >= 2) roots = polynomial_roots(c);
    }
    Complex evaluate(Complex z) const override { return c.empty() ? Complex(0, 0) : cp_eval(c, z); }
    bool closed_derivative() const override { return true; }
    Complex derivative(int k, Complex z) const override {
        CPoly p = c;
        for (int i = 0; i < k && !p.empty(); ++i) p = cp_derive(p);
        return p.empty() ? Complex(0, 0) : cp_eval(p, z);
    }
    Complex log_derivative(Complex z) const override {
        Complex f = cp_eval(c, z);
        if (std::abs(f) < 1e-300) throw ZeroHit("log_derivative at a zero of the polynomial");
        return cp_eval(cp_derive(c), z) / f;
    }
    std::optional<double> order() const override { return 0.0; }
    std::optional<std::pair<double, double>> lambda() const override {
        return std::make_pair(0.0, 0.0);
    }
    bool has_zeros() const override { return true; }
    std::vector<Complex> zeros_up_to(double r) const override {
        std::vector<Complex> out;
        for (Complex w : roots)
            if (in_closed_disk(w, r)) out.push_back(w);
        return out;
    }
    std::optional<PowerSeries> series() const override {
        CPoly cc = c;
        PowerSeries s;
        s.coeff = [cc](long n) { return n >= 0 && n < (long)cc.size() ? cc[n] : Complex(0, 0); };
        s.log_abs_coeff = [cc](long n) {
            return n >= 0 && n < (long)cc.size() ? log_abs_c(cc[n]) : -kInf;
        };
        s.max_index = (long)cc.size() - 1;
        return s;
    }
    std::string describe() const override {
        return "poly(deg " + std::to_string((int)c.size() - 1) + ")";
    }
};

// ------------------------------------------------------------------ Rational

struct RationalFn : FnImpl {
    std::vector<Complex> zs, ps;
    Complex scale;
    CPoly num, den;

    RationalFn(std::vector<Complex> zeros, std::vector<Complex> poles, Complex s)
        : zs(std::move(zeros)), ps(std::move(poles)), scale(s) {
        for (Complex a : zs)
            for (Complex b : ps)
                if (std::abs(a - b) < 1e-9)
                    throw Error("rational: shared zero and pole are not allowed");
        num = cp_from_roots(zs, scale);
        den = cp_from_roots(ps, Complex(1, 0));
    }
    void pole_guard(Complex z) const {
        for (Complex b : ps)
            if (std::abs(z - b) < 1e-12 * (1 + std::abs(b)))
                throw PoleHit("rational: evaluation at a pole");
    }
    Complex evaluate(Complex z) const override {
        pole_guard(z);
        return cp_eval(num, z) / cp_eval(den, z);
    }
    double log_abs(Complex z) const override {
        double s = std::log(std::abs(scale));
        for (Complex a : zs) s += std::log(std::abs(z - a));
        for (Complex b : ps) s -= std::log(std::abs(z - b));
        return s;
    }
    bool closed_derivative() const override { return true; }
    Complex derivative(int k, Complex z) const override {
        pole_guard(z);
        // f^(k) = N_k / den^(k+1) with N_{j+1} = N_j' den - (j+1) N_j den'
        CPoly nk = num;
        CPoly dd = cp_derive(den);
        for (int j = 0; j < k; ++j) {
            CPoly t = cp_mul(cp_derive(nk), den);
            CPoly u = cp_mul(nk, dd);
            for (auto& v : u) v *= Complex(j + 1, 0);
            nk = cp_sub(t, u);
        }
        Complex d = cp_eval(den, z), dp(1, 0);
        for (int j = 0; j <= k; ++j) dp *= d;
        return cp_eval(nk, z) / dp;
    }
    Complex log_derivative(Complex z) const override {
        pole_guard(z);
        Complex s = 0;
        for (Complex a : zs) {
            if (std::abs(z - a) < 1e-300) throw ZeroHit("log_derivative at a zero");
            s += 1.0 / (z - a);
        }
        for (Complex b : ps) s -= 1.0 / (z - b);
        return s;
    }
    std::optional<double> order() const override { return 0.0; }
    std::optional<std::pair<double, double>> lambda() const override {
        return std::make_pair(0.0, 0.0);
    }
    bool is_entire() const override { return ps.empty(); }
    bool has_zeros() const override { return true; }
    bool has_poles() const override { return true; }
    std::vector<Complex> zeros_up_to(double r) const override {
        std::vector<Complex> out;
        for (Complex a : zs)
            if (in_closed_disk(a, r)) out.push_back(a);
        return out;
    }
    std::vector<Complex> poles_up_to(double r) const override {
        std::vector<Complex> out;
        for (Complex b : ps)
            if (in_closed_disk(b, r)) out.push_back(b);
        return out;
    }
    std::string describe() const override {
        return "rat(" + std::to_string(zs.size()) + " zeros, " + std::to_string(ps.size()) +
               " poles)";
    }
};

// ------------------------------------------------------------------- ExpPoly
// exp(z^k); k = 0 degenerates to the constant e.

struct ExpPolyFn : FnImpl {
    int k;
    CPoly mult;  // k z^{k-1}

    explicit ExpPolyFn(int kk) : k(kk) {
        if (k < 0) throw Error("exp_poly: k must be >= 0");
        if (k >= 1) {
            mult.assign(k, Complex(0, 0));
            mult[k - 1] = Complex(k, 0);
        }
    }
    Complex zk(Complex z) const {
        Complex p(1, 0);
        for (int i = 0; i < k; ++i) p *= z;
        return p;
    }
    Complex evaluate(Complex z) const override { return std::exp(zk(z)); }
    double log_abs(Complex z) const override { return zk(z).real(); }
    bool closed_derivative() const override { return true; }
    Complex derivative(int n, Complex z) const override {
        // f^(j) = P_j(z) f with P_{j+1} = P_j' + P_j * k z^{k-1}
        CPoly p{Complex(1, 0)};
        for (int j = 0; j < n; ++j) p = cp_add(cp_derive(p), cp_mul(p, mult));
        if (p.empty()) return Complex(0, 0);
        return cp_eval(p, z) * std::exp(zk(z));
    }
    Complex log_derivative(Complex z) const override {
        return mult.empty() ? Complex(0, 0) : cp_eval(mult, z);
    }
    std::optional<double> order() const override { return (double)k; }
    std::optional<std::pair<double, double>> lambda() const override {
        return std::make_pair(0.0, 0.0);
    }
    bool has_zeros() const override { return true; }  // empty list, but enumerable
    std::optional<PowerSeries> series() const override {
        int kk = k;
        PowerSeries s;
        if (kk == 0) {
            s.coeff = [](long n) { return n == 0 ? Complex(std::exp(1.0), 0) : Complex(0, 0); };
            s.log_abs_coeff = [](long n) { return n == 0 ? 1.0 : -kInf; };
            s.max_index = 0;
            return s;
        }
        s.coeff = [kk](long n) {
            if (n < 0 || n % kk) return Complex(0, 0);
            return Complex(std::exp(-std::lgamma((double)(n / kk) + 1.0)), 0);
        };
        s.log_abs_coeff = [kk](long n) {
            if (n < 0 || n % kk) return -kInf;
            return -std::lgamma((double)(n / kk) + 1.0);
        };
        return s;
    }
    std::optional<int> exp_k() const override { return k; }
    std::string describe() const override { return "exp(z^" + std::to_string(k) + ")"; }
};

// ------------------------------------------------------------------- CosSqrt
// cos(sqrt(z)) = sum (-1)^n z^n / (2n)!; entire, order 1/2, zeros ((n+1/2)pi)^2.

struct CosSqrtFn : FnImpl {
    static Complex series_value(Complex z) {
        Complex term(1, 0), sum(1, 0);
        for (int n = 1; n < 80; ++n) {
            term *= -z / Complex((2.0 * n - 1.0) * (2.0 * n), 0);
            sum += term;
            if (std::abs(term) < 1e-18 * (1.0 + std::abs(sum)) && n > 4) break;
        }
        return sum;
    }
    Complex evaluate(Complex z) const override {
        if (std::abs(z) < 25.0) return series_value(z);
        return std::cos(std::sqrt(z));
    }
    double log_abs(Complex z) const override {
        if (std::abs(z) < 25.0) return log_abs_c(series_value(z));
        Complex w = std::sqrt(z);
        double y = std::abs(w.imag());
        double s = std::sin(w.real());
        // |cos w|^2 = cosh^2 y - sin^2 x
        if (y < 300.0) {
            double ch = std::cosh(y);
            return 0.5 * std::log(ch * ch - s * s);
        }
        return y - std::numbers::ln2;  // e^{-2y} corrections are below double precision
    }
    bool closed_derivative() const override { return true; }
    Complex derivative(int k, Complex z) const override {
        if (k == 0) return evaluate(z);
        if (std::abs(z) < 25.0) {
            // termwise: sum_{n>=k} (-1)^n n!/(n-k)! z^{n-k} / (2n)!
            Complex sum(0, 0);
            Complex zp(1, 0);
            for (int n = k; n < 120; ++n) {
                double lc = std::lgamma(n + 1.0) - std::lgamma(n - k + 1.0) -
                            std::lgamma(2.0 * n + 1.0);
                double sgn = (n % 2) ? -1.0 : 1.0;
                Complex term = sgn * std::exp(lc) * zp;
                sum += term;
                zp *= z;
                if (n > k + 6 && std::abs(term) < 1e-18 * (1.0 + std::abs(sum))) break;
            }
            return sum;
        }
        // f^{(k)} = A(v) cos w + B(v) sin w, w = sqrt z, v = 1/w;
        // d/dz: v^m -> -(m/2) v^{m+2}, cos' = -(v/2) sin, sin' = (v/2) cos
        std::vector<double> A{1.0}, B;
        auto dz = [](const std::vector<double>& P) {
            std::vector<double> r(P.size() + 2, 0.0);
            for (std::size_t m = 0; m < P.size(); ++m) r[m + 2] = -0.5 * (double)m * P[m];
            return r;
        };
        auto half_v = [](const std::vector<double>& P) {
            std::vector<double> r(P.size() + 1, 0.0);
            for (std::size_t m = 0; m < P.size(); ++m) r[m + 1] = 0.5 * P[m];
            return r;
        };
        auto add = [](std::vector<double> a, const std::vector<double>& b, double s) {
            if (b.size() > a.size()) a.resize(b.size(), 0.0);
            for (std::size_t i = 0; i < b.size(); ++i) a[i] += s * b[i];
            return a;
        };
        for (int j = 0; j < k; ++j) {
            auto An = add(dz(A), half_v(B), 1.0);
            auto Bn = add(dz(B), half_v(A), -1.0);
            A = std::move(An);
            B = std::move(Bn);
        }
        Complex w = std::sqrt(z), v = 1.0 / w;
        auto ev = [&](const std::vector<double>& P) {
            Complex r(0, 0);
            for (std::size_t m = P.size(); m-- > 0;) r = r * v + P[m];
            return r;
        };
        return ev(A) * std::cos(w) + ev(B) * std::sin(w);
    }
    Complex log_derivative(Complex z) const override {
        if (std::abs(z) < 1e-6) {
            Complex f = series_value(z);
            if (std::abs(f) < 1e-300) throw ZeroHit("log_derivative at a zero");
            return derivative(1, z) / f;
        }
        Complex w = std::sqrt(z);
        Complex c = std::cos(w);
        if (std::abs(c) < 1e-300) throw ZeroHit("log_derivative at a zero of cos(sqrt z)");
        return -std::sin(w) / (2.0 * w * c);
    }
    std::optional<double> order() const override { return 0.5; }
    std::optional<std::pair<double, double>> lambda() const override {
        return std::make_pair(0.5, 0.0);
    }
    bool has_zeros() const override { return true; }
    static double zero_at(long n) {
        double t = (n + 0.5) * kPi;
        return t * t;
    }
    long count_zeros(double r) const override {
        if (r < zero_at(0)) return 0;
        long m = (long)std::floor(std::sqrt(std::max(r, 0.0)) / kPi + 0.5);
        while (m >= 1 && zero_at(m - 1) > r * (1 + 1e-12)) --m;
        while (zero_at(m) <= r * (1 + 1e-12)) ++m;
        return m;
    }
    std::vector<Complex> zeros_up_to(double r) const override {
        std::vector<Complex> out;
        long m = count_zeros(r);
        for (long n = 0; n < m; ++n) out.emplace_back(zero_at(n), 0.0);
        return out;
    }
    std::optional<PowerSeries> series() const override {
        PowerSeries s;
        s.coeff = [](long n) {
            double sgn = (n % 2) ? -1.0 : 1.0;
            return Complex(sgn * std::exp(-std::lgamma(2.0 * n + 1.0)), 0);
        };
        s.log_abs_coeff = [](long n) { return -std::lgamma(2.0 * n + 1.0); };
        return s;
    }
    std::string describe() const override { return "cossqrt"; }
};

// --------------------------------------------------------- CanonicalProduct
// prod_{n>=1} (1 - z / n^{1/lambda}), 0 < lambda < 1; zeros exactly n^{1/lambda}.
//
// Evaluated as a partial product over n <= N0 plus the asymptotic tail
// sum_{n>N0} log(1 - z/a_n) = -sum_j (z^j/j) ztail(j/lambda, N0), with N0
// chosen so |z/a_n| <= 1/4 beyond it. The remainder after the j-loop is
// bounded through |log(1+w)| <= 2|w| and stays far below 1e-12.

struct CanonicalProductFn : FnImpl {
    double lam;
    explicit CanonicalProductFn(double lambda) : lam(lambda) {
        if (!(lambda > 0.0 && lambda < 1.0))
            throw Error("canonical_product: lambda must lie in (0,1)");
    }
    double zero_at(double n) const { return std::pow(n, 1.0 / lam); }
    long head_count(double az) const {
        double n0 = std::pow(4.0 * az + 4.0, lam) + 8.0;
        long n = (long)std::ceil(std::max(64.0, n0));
        if (n > 100000000L) throw TruncationFailure("canonical_product: head too long");
        return n;
    }
    // sum over n > N0 of log(1 - z/a_n)
    Complex tail_log(Complex z, long N0) const {
        Complex sum(0, 0), zj(1, 0);
        for (int j = 1; j <= 120; ++j) {
            zj *= z;
            Complex term = -zj / (double)j * zeta_tail((double)j / lam, (double)N0);
            sum += term;
            if (j > 3 && std::abs(term) < 1e-19 * (1.0 + std::abs(sum))) return sum;
        }
        throw TruncationFailure("canonical_product: tail series did not converge");
    }
    Complex evaluate(Complex z) const override {
        long N0 = head_count(std::abs(z));
        if (z.imag() == 0.0) {
            double x = z.real();
            double s = 0.0;
            long neg = 0;
            for (long n = 1; n <= N0; ++n) {
                double f = 1.0 - x / zero_at((double)n);
                if (f == 0.0) return Complex(0, 0);
                if (f < 0) ++neg;
                s += std::log(std::fabs(f));
            }
            s += tail_log(z, N0).real();
            double v = std::exp(s);
            return Complex((neg % 2) ? -v : v, 0.0);
        }
        Complex s(0, 0);
        for (long n = 1; n <= N0; ++n) {
            Complex f = 1.0 - z / zero_at((double)n);
            if (std::abs(f) == 0.0) return Complex(0, 0);
            s += std::log(f);
        }
        s += tail_log(z, N0);
        return std::exp(s);
    }
    double log_abs(Complex z) const override {
        long N0 = head_count(std::abs(z));
        double s = 0.0;
        for (long n = 1; n <= N0; ++n) s += std::log(std::abs(1.0 - z / zero_at((double)n)));
        return s + tail_log(z, N0).real();
    }
    Complex log_derivative(Complex z) const override {
        long N0 = head_count(std::abs(z));
        Complex s(0, 0);
        for (long n = 1; n <= N0; ++n) {
            Complex d = z - zero_at((double)n);
            if (std::abs(d) < 1e-300) throw ZeroHit("log_derivative at a product zero");
            s += 1.0 / d;
        }
        // sum over n > N0 of 1/(z - a_n) = -sum_j z^j ztail((j+1)/lambda, N0)
        Complex zj(1, 0), tail(0, 0);
        for (int j = 0; j <= 120; ++j) {
            Complex term = -zj * zeta_tail((double)(j + 1) / lam, (double)N0);
            tail += term;
            if (j > 3 && std::abs(term) < 1e-19 * (1.0 + std::abs(tail))) break;
            zj *= z;
        }
        return s + tail;
    }
    std::optional<double> order() const override { return lam; }
    std::optional<std::pair<double, double>> lambda() const override {
        return std::make_pair(lam, 0.0);
    }
    bool has_zeros() const override { return true; }
    long count_zeros(double r) const override {
        if (r < 1.0) return 0;
        long m = (long)std::floor(std::pow(r, lam));
        while (m >= 1 && zero_at((double)m) > r * (1 + 1e-12)) --m;
        while (zero_at((double)(m + 1)) <= r * (1 + 1e-12)) ++m;
        return m;
    }
    std::vector<Complex> zeros_up_to(double r) const override {
        std::vector<Complex> out;
        long m = count_zeros(r);
        for (long n = 1; n <= m; ++n) out.emplace_back(zero_at((double)n), 0.0);
        return out;
    }
    std::optional<double> prod_lambda() const override { return lam; }
    std::string describe() const override { return "prod(lambda=" + std::to_string(lam) + ")"; }
};

// -------------------------------------------------------------------- Series

struct SeriesFn : FnImpl {
    PowerSeries s;
    std::string name;
    SeriesFn(PowerSeries ps, std::string nm) : s(std::move(ps)), name(std::move(nm)) {}

    Complex evaluate(Complex z) const override {
        if (std::abs(z) >= s.radius) throw TruncationFailure("series: |z| outside radius");
        Complex sum(0, 0), zp(1, 0);
        int quiet = 0;
        long cap = s.max_index >= 0 ? s.max_index : 200000;
        for (long n = 0; n <= cap; ++n) {
            Complex term = s.coeff(n) * zp;
            sum += term;
            zp *= z;
            if (n > 8) {
                if (std::abs(term) < 1e-17 * (1.0 + std::abs(sum)))
                    ++quiet;
                else
                    quiet = 0;
                if (quiet >= 8) return sum;
            }
        }
        if (s.max_index >= 0) return sum;
        throw TruncationFailure("series evaluation did not converge");
    }
    bool closed_derivative() const override { return true; }
    Complex derivative(int k, Complex z) const override {
        if (k == 0) return evaluate(z);
        if (k > 8) throw Unsupported("series derivative order > 8");
        Complex sum(0, 0), zp(1, 0);
        int quiet = 0;
        long cap = s.max_index >= 0 ? s.max_index : 200000;
        for (long n = k; n <= cap; ++n) {
            double fall = 1.0;
            for (int i = 0; i < k; ++i) fall *= (double)(n - i);
            Complex term = s.coeff(n) * fall * zp;
            sum += term;
            zp *= z;
            if (n > k + 8) {
                if (std::abs(term) < 1e-17 * (1.0 + std::abs(sum)))
                    ++quiet;
                else
                    quiet = 0;
                if (quiet >= 8) return sum;
            }
        }
        if (s.max_index >= 0) return sum;
        throw TruncationFailure("series derivative did not converge");
    }
    std::optional<PowerSeries> series() const override { return s; }
    std::string describe() const override { return "series(" + name + ")"; }
};

// ------------------------------------------------------------------- Product

struct ProductFn : FnImpl {
    std::vector<std::shared_ptr<const FnImpl>> fs;
    explicit ProductFn(std::vector<std::shared_ptr<const FnImpl>> factors)
        : fs(std::move(factors)) {}

    Complex evaluate(Complex z) const override {
        Complex p(1, 0);
        for (const auto& f : fs) p *= f->evaluate(z);
        return p;
    }
    double log_abs(Complex z) const override {
        double s = 0;
        for (const auto& f : fs) s += f->log_abs(z);
        return s;
    }
    bool closed_derivative() const override {
        for (const auto& f : fs)
            if (!f->closed_derivative()) return false;
        return true;
    }
    Complex derivative_list(std::size_t from, int k, Complex z) const {
        if (from + 1 == fs.size()) return k == 0 ? fs[from]->evaluate(z) : fs[from]->derivative(k, z);
        // Leibniz split: first factor vs rest
        Complex sum(0, 0);
        double binom = 1.0;
        for (int j = 0; j <= k; ++j) {
            Complex a = j == 0 ? fs[from]->evaluate(z) : fs[from]->derivative(j, z);
            Complex b = derivative_list(from + 1, k - j, z);
            sum += binom * a * b;
            binom = binom * (double)(k - j) / (double)(j + 1);
        }
        return sum;
    }
    Complex derivative(int k, Complex z) const override { return derivative_list(0, k, z); }
    Complex log_derivative(Complex z) const override {
        Complex s(0, 0);
        for (const auto& f : fs) s += f->log_derivative(z);
        return s;
    }
    std::optional<double> order() const override {
        double m = 0;
        for (const auto& f : fs) {
            auto o = f->order();
            if (!o) return std::nullopt;
            m = std::max(m, *o);
        }
        return m;
    }
    std::optional<std::pair<double, double>> lambda() const override {
        double lz = 0, lp = 0;
        for (const auto& f : fs) {
            auto l = f->lambda();
            if (!l) return std::nullopt;
            lz = std::max(lz, l->first);
            lp = std::max(lp, l->second);
        }
        return std::make_pair(lz, lp);
    }
    bool is_entire() const override {
        for (const auto& f : fs)
            if (!f->is_entire()) return false;
        return true;
    }
    bool has_zeros() const override {
        for (const auto& f : fs)
            if (!f->has_zeros()) return false;
        return true;
    }
    bool has_poles() const override {
        for (const auto& f : fs)
            if (!f->is_entire() && !f->has_poles()) return false;
        return true;
    }
    std::vector<Complex> zeros_up_to(double r) const override {
        std::vector<Complex> out;
        for (const auto& f : fs) {
            auto v = f->zeros_up_to(r);
            out.insert(out.end(), v.begin(), v.end());
        }
        return out;
    }
    std::vector<Complex> poles_up_to(double r) const override {
        std::vector<Complex> out;
        for (const auto& f : fs) {
            auto v = f->poles_up_to(r);
            out.insert(out.end(), v.begin(), v.end());
        }
        return out;
    }
    long count_zeros(double r) const override {
        long n = 0;
        for (const auto& f : fs) n += f->count_zeros(r);
        return n;
    }
    long count_poles(double r) const override {
        long n = 0;
        for (const auto& f : fs) n += f->count_poles(r);
        return n;
    }
    std::optional<double> prod_lambda() const override {
        std::optional<double> found;
        for (const auto& f : fs) {
            auto l = f->prod_lambda();
            if (l) {
                if (found) return std::nullopt;
                found = l;
            }
        }
        return found;
    }
    std::optional<int> exp_k() const override {
        std::optional<int> found;
        for (const auto& f : fs) {
            auto l = f->exp_k();
            if (l) {
                if (found) return std::nullopt;
                found = l;
            }
        }
        return found;
    }
    std::string describe() const override {
        std::string s;
        for (const auto& f : fs) {
            if (!s.empty()) s += "*";
            s += f->describe();
        }
        return s;
    }
};

// ------------------------------------------------------------------ Quotient

struct QuotientFn : FnImpl {
    std::shared_ptr<const FnImpl> num, den;
    QuotientFn(std::shared_ptr<const FnImpl> n, std::shared_ptr<const FnImpl> d)
        : num(std::move(n)), den(std::move(d)) {
        if (num->has_zeros() && den->has_zeros()) {
            auto a = num->zeros_up_to(50.0);
            auto b = den->zeros_up_to(50.0);
            for (Complex x : a)
                for (Complex y : b)
                    if (std::abs(x - y) < 1e-9)
                        throw Error("quotient: numerator and denominator share a zero");
        }
    }
    void pole_guard(Complex z) const {
        for (Complex b : den->zeros_up_to(std::abs(z) + 1.0))
            if (std::abs(z - b) < 1e-12 * (1 + std::abs(b)))
                throw PoleHit("quotient: evaluation at a pole");
    }
    Complex evaluate(Complex z) const override {
        pole_guard(z);
        Complex d = den->evaluate(z);
        if (std::abs(d) == 0.0) throw PoleHit("quotient: denominator vanishes");
        return num->evaluate(z) / d;
    }
    double log_abs(Complex z) const override { return num->log_abs(z) - den->log_abs(z); }
    bool closed_derivative() const override {
        return num->closed_derivative() && den->closed_derivative();
    }
    Complex derivative(int k, Complex z) const override {
        pole_guard(z);
        // num^(k) = sum_j C(k,j) f^(k-j) den^(j), solved for f^(k)
        Complex d0 = den->evaluate(z);
        if (std::abs(d0) == 0.0) throw PoleHit("quotient: denominator vanishes");
        std::vector<Complex> f(k + 1);
        f[0] = num->evaluate(z) / d0;
        for (int m = 1; m <= k; ++m) {
            Complex s = num->derivative(m, z);
            double binom = 1.0;
            for (int j = 1; j <= m; ++j) {
                binom = binom * (double)(m - j + 1) / (double)j;
                s -= binom * den->derivative(j, z) * f[m - j];
            }
            f[m] = s / d0;
        }
        return f[k];
    }
    Complex log_derivative(Complex z) const override {
        pole_guard(z);
        return num->log_derivative(z) - den->log_derivative(z);
    }
    std::optional<double> order() const override {
        auto a = num->order(), b = den->order();
        if (!a || !b) return std::nullopt;
        return std::max(*a, *b);
    }
    std::optional<std::pair<double, double>> lambda() const override {
        // zeros of num stay zeros; zeros of den become poles
        auto a = num->lambda(), b = den->lambda();
        if (!a || !b) return std::nullopt;
        return std::make_pair(std::max(a->first, b->second),
                              std::max(a->second, b->first));
    }
    bool is_entire() const override { return false; }
    bool has_zeros() const override { return num->has_zeros(); }
    bool has_poles() const override {
        return den->has_zeros() && (num->is_entire() || num->has_poles());
    }
    std::vector<Complex> zeros_up_to(double r) const override { return num->zeros_up_to(r); }
    std::vector<Complex> poles_up_to(double r) const override {
        auto out = den->zeros_up_to(r);
        auto extra = num->poles_up_to(r);
        out.insert(out.end(), extra.begin(), extra.end());
        return out;
    }
    long count_zeros(double r) const override { return num->count_zeros(r); }
    long count_poles(double r) const override {
        return den->count_zeros(r) + num->count_poles(r);
    }
    std::string describe() const override {
        return "(" + num->describe() + ")/(" + den->describe() + ")";
    }
};

// ------------------------------------------------- generic Cauchy derivative

double nearest_singular_distance(const FnImpl& f, Complex z) {
    double best = kInf;
    double reach = std::abs(z) + 2.5;
    if (f.has_zeros())
        for (Complex a : f.zeros_up_to(reach)) best = std::min(best, std::abs(z - a));
    for (Complex b : f.poles_up_to(reach)) best = std::min(best, std::abs(z - b));
    return best;
}

Complex cauchy_derivative(const FnImpl& f, int k, Complex z) {
    if (k > 6) throw Unsupported("quadrature derivative limited to order 6");
    double d = nearest_singular_distance(f, z);
    double rho = std::min(1.0, std::isfinite(d) ? d / 2.0 : 1.0);
    if (rho < 1e-8) rho = 1e-8;
    double kfac = 1.0;
    for (int i = 2; i <= k; ++i) kfac *= i;
    Complex prev(std::nan(""), 0);
    for (int m = 64; m <= 1 << 15; m *= 2) {
        Complex s(0, 0);
        for (int j = 0; j < m; ++j) {
            double th = 2.0 * kPi * j / m;
            Complex w = std::polar(rho, th);
            s += f.evaluate(z + w) * std::polar(1.0, -k * th);
        }
        Complex cur = s * (kfac / (m * std::pow(rho, k)));
        if (std::isfinite(prev.real()) &&
            std::abs(cur - prev) <= 1e-10 * std::max(1.0, std::abs(cur)))
            return cur;
        prev = cur;
    }
    throw QuadratureNonConvergence("derivative quadrature did not settle");
}

}  // namespace

// ------------------------------------------------------- FunctionModel glue

FunctionModel FunctionModel::polynomial(std::vector<Complex> coeffs) {
    return FunctionModel(std::make_shared<PolynomialFn>(std::move(coeffs)));
}
FunctionModel FunctionModel::rational(std::vector<Complex> zeros, std::vector<Complex> poles,
                                      Complex scale) {
    return FunctionModel(std::make_shared<RationalFn>(std::move(zeros), std::move(poles), scale));
}
FunctionModel FunctionModel::exp_poly(int k) {
    return FunctionModel(std::make_shared<ExpPolyFn>(k));
}
FunctionModel FunctionModel::canonical_product(double lambda) {
    return FunctionModel(std::make_shared<CanonicalProductFn>(lambda));
}
FunctionModel FunctionModel::exp_poly_product(int k, double lambda) {
    std::vector<std::shared_ptr<const detail::FnImpl>> fs;
    fs.push_back(std::make_shared<ExpPolyFn>(k));
    fs.push_back(std::make_shared<CanonicalProductFn>(lambda));
    return FunctionModel(std::make_shared<ProductFn>(std::move(fs)));
}
FunctionModel FunctionModel::cos_sqrt() { return FunctionModel(std::make_shared<CosSqrtFn>()); }
FunctionModel FunctionModel::from_series(PowerSeries s, std::string name) {
    return FunctionModel(std::make_shared<SeriesFn>(std::move(s), std::move(name)));
}
FunctionModel FunctionModel::product(std::vector<FunctionModel> factors) {
    std::vector<std::shared_ptr<const detail::FnImpl>> fs;
    fs.reserve(factors.size());
    for (auto& f : factors) fs.push_back(f.impl_);
    return FunctionModel(std::make_shared<ProductFn>(std::move(fs)));
}
FunctionModel FunctionModel::quotient(FunctionModel num, FunctionModel den) {
    return FunctionModel(std::make_shared<QuotientFn>(num.impl_, den.impl_));
}

Complex FunctionModel::evaluate(Complex z) const { return impl_->evaluate(z); }
double FunctionModel::log_abs(Complex z) const { return impl_->log_abs(z); }

Complex FunctionModel::derivative(int k, Complex z) const {
    if (k < 0) throw Error("derivative: negative order");
    if (k == 0) return impl_->evaluate(z);
    if (impl_->closed_derivative()) return impl_->derivative(k, z);
    return cauchy_derivative(*impl_, k, z);
}

Complex FunctionModel::log_derivative(Complex z) const {
    Complex v = impl_->log_derivative(z);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw ZeroHit("log_derivative singular at z");
    return v;
}

std::optional<double> FunctionModel::known_order() const { return impl_->order(); }
std::optional<std::pair<double, double>> FunctionModel::known_lambda() const {
    return impl_->lambda();
}
bool FunctionModel::entire() const { return impl_->is_entire(); }
bool FunctionModel::has_zero_list() const { return impl_->has_zeros(); }
bool FunctionModel::has_pole_list() const { return impl_->is_entire() || impl_->has_poles(); }
std::vector<Complex> FunctionModel::zeros_up_to(double r) const { return impl_->zeros_up_to(r); }
std::vector<Complex> FunctionModel::poles_up_to(double r) const { return impl_->poles_up_to(r); }
long FunctionModel::count_zeros(double r) const { return impl_->count_zeros(r); }
long FunctionModel::count_poles(double r) const { return impl_->count_poles(r); }
std::optional<PowerSeries> FunctionModel::power_series() const { return impl_->series(); }
std::optional<double> FunctionModel::product_lambda() const { return impl_->prod_lambda(); }
std::optional<int> FunctionModel::exp_poly_degree() const { return impl_->exp_k(); }
std::string FunctionModel::describe() const { return impl_->describe(); }

PowerSeries PowerSeries::from_coeff(std::function<Complex(long)> c, long max_index) {
    PowerSeries s;
    s.coeff = c;
    s.log_abs_coeff = [c](long n) { return log_abs_c(c(n)); };
    s.max_index = max_index;
    return s;
}

PowerSeries named_series(const std::string& name) {
    PowerSeries s;
    if (name == "exp") {
        s.coeff = [](long n) { return Complex(std::exp(-std::lgamma(n + 1.0)), 0); };
        s.log_abs_coeff = [](long n) { return -std::lgamma(n + 1.0); };
    } else if (name == "cossqrt") {
        s.coeff = [](long n) {
            double sgn = (n % 2) ? -1.0 : 1.0;
            return Complex(sgn * std::exp(-std::lgamma(2.0 * n + 1.0)), 0);
        };
        s.log_abs_coeff = [](long n) { return -std::lgamma(2.0 * n + 1.0); };
    } else if (name == "expz2") {
        s.coeff = [](long n) {
            if (n % 2) return Complex(0, 0);
            return Complex(std::exp(-std::lgamma(n / 2 + 1.0)), 0);
        };
        s.log_abs_coeff = [](long n) { return n % 2 ? -kInf : -std::lgamma(n / 2 + 1.0); };
    } else if (name == "invfactsq") {
        s.coeff = [](long n) { return Complex(std::exp(-2.0 * std::lgamma(n + 1.0)), 0); };
        s.log_abs_coeff = [](long n) { return -2.0 * std::lgamma(n + 1.0); };
    } else {
        throw Error("unknown series name: " + name);
    }
    return s;
}

}  // namespace nevdiff
