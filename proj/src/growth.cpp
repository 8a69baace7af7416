#include "nevdiff/growth.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "nevdiff/errors.hpp"

namespace nevdiff {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr long kScanCap = 10000000L;

struct Ols {
    double slope = 0, intercept = 0;
    int n = 0;
};

Ols fit_ols(const std::vector<std::pair<double, double>>& pts) {
    Ols o;
    o.n = (int)pts.size();
    if (o.n < 2) return o;
    double sx = 0, sy = 0;
    for (auto& p : pts) {
        sx += p.first;
        sy += p.second;
    }
    double mx = sx / o.n, my = sy / o.n;
    double sxx = 0, sxy = 0;
    for (auto& p : pts) {
        sxx += (p.first - mx) * (p.first - mx);
        sxy += (p.first - mx) * (p.second - my);
    }
    o.slope = sxx > 0 ? sxy / sxx : 0.0;
    o.intercept = my - o.slope * mx;
    return o;
}

}  // namespace

MaximalTerm maximal_term(const PowerSeries& s, double r) {
    if (!(r > 0)) throw Error("maximal_term: r must be positive");
    double logr = std::log(r);
    double best = -kInf;
    long nu = 0;
    // stop once 50 consecutive nonzero terms sit 50 below the peak and decrease
    int window = 0;
    double prev = kInf;
    long cap = s.max_index >= 0 ? s.max_index : kScanCap;
    for (long n = 0; n <= cap; ++n) {
        double lt = s.log_abs_coeff(n) + (double)n * logr;
        if (lt == -kInf) continue;  // zero coefficients are transparent
        double tol = 1e-9 * std::max(1.0, std::fabs(best));
        if (lt >= best - tol) {
            if (lt > best) best = lt;
            nu = n;  // tie-break: greatest maximizing index
        }
        if (lt < best - 50.0 && lt < prev) {
            if (++window >= 50) {
                return {std::exp(best), best, nu};
            }
        } else {
            window = 0;
        }
        prev = lt;
    }
    if (s.max_index >= 0) return {std::exp(best), best, nu};
    throw NonConvergence("maximal_term: term scan cap reached");
}

double max_log_modulus(const FunctionModel& f, double r) {
    constexpr int kCoarse = 1024;
    double best = -kInf;
    int besti = 0;
    for (int i = 0; i < kCoarse; ++i) {
        double phi = 2.0 * std::numbers::pi * i / kCoarse;
        double v = f.log_abs(std::polar(r, phi));
        if (v > best) {
            best = v;
            besti = i;
        }
    }
    // golden-section refinement around the best node
    double a = 2.0 * std::numbers::pi * (besti - 1) / kCoarse;
    double b = 2.0 * std::numbers::pi * (besti + 1) / kCoarse;
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = f.log_abs(std::polar(r, x1)), f2 = f.log_abs(std::polar(r, x2));
    for (int it = 0; it < 70 && (b - a) > 1e-13; ++it) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (b - a);
            f2 = f.log_abs(std::polar(r, x2));
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - gr * (b - a);
            f1 = f.log_abs(std::polar(r, x1));
        }
    }
    return std::max({best, f1, f2});
}

double max_modulus(const FunctionModel& f, double r) { return std::exp(max_log_modulus(f, r)); }

std::vector<double> geometric_grid(double rmin, double rmax, int n) {
    if (!(rmin > 0 && rmax > rmin && n >= 2)) throw Error("geometric_grid: bad parameters");
    std::vector<double> g(n);
    double l0 = std::log(rmin), l1 = std::log(rmax);
    for (int i = 0; i < n; ++i) g[i] = std::exp(l0 + (l1 - l0) * i / (n - 1));
    return g;
}

std::vector<GrowthSample> growth_samples(const FunctionModel& f, const std::vector<double>& grid) {
    auto s = f.power_series();
    if (!s) throw Unsupported("growth_samples: no power series for this kind");
    std::vector<GrowthSample> out;
    out.reserve(grid.size());
    for (double r : grid) {
        MaximalTerm mt = maximal_term(*s, r);
        out.push_back({r, mt.log_mu, mt.nu, max_log_modulus(f, r)});
    }
    return out;
}

double estimate_order(const std::vector<GrowthSample>& samples) {
    if (samples.size() < 10) throw InsufficientSamples("estimate_order: need >= 10 samples");
    double rmin = kInf, rmax = 0;
    for (auto& s : samples) {
        rmin = std::min(rmin, s.r);
        rmax = std::max(rmax, s.r);
    }
    if (std::log10(rmax / rmin) < 4.0 - 1e-9)
        throw InsufficientSamples("estimate_order: need >= 4 decades of r");

    std::vector<std::pair<double, double>> pts;  // (log r, log nu), nu >= 1 only
    long nu_min = samples.front().nu, nu_max = samples.front().nu;
    for (auto& s : samples) {
        nu_min = std::min(nu_min, s.nu);
        nu_max = std::max(nu_max, s.nu);
        if (s.nu >= 1) pts.emplace_back(std::log(s.r), std::log((double)s.nu));
    }
    if (nu_min == nu_max) return 0.0;  // constant central index: polynomial growth
    if (pts.size() < 5) throw InsufficientSamples("estimate_order: too few nonzero nu");
    std::sort(pts.begin(), pts.end());

    // For each trial slope s, fit through the running maxima of log nu - s log r
    // and keep the self-consistent slope. Record sets that cover only a sliver
    // of the grid are discarded: jumps between tiny nu values otherwise fake
    // arbitrarily steep self-consistent slopes.
    double span = pts.back().first - pts.front().first;
    double best_slope = 0, best_gap = kInf;
    for (int si = 0; si <= 400; ++si) {
        double s = si * 0.01;
        std::vector<std::pair<double, double>> rec;
        double run = -kInf;
        for (auto& p : pts) {
            double t = p.second - s * p.first;
            if (t >= run - 1e-9) {
                run = std::max(run, t);
                rec.push_back(p);
            }
        }
        if (rec.size() < std::max<std::size_t>(3, pts.size() / 10)) continue;
        if (rec.back().first - rec.front().first < 0.5 * span) continue;
        Ols o = fit_ols(rec);
        double gap = std::fabs(o.slope - s);
        if (gap < best_gap) {
            best_gap = gap;
            best_slope = o.slope;
        }
    }
    if (best_gap == kInf) return fit_ols(pts).slope;  // fallback: plain regression
    return best_slope;
}

}  // namespace nevdiff
