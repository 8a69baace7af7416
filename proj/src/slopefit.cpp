#include "nevdiff/slopefit.hpp"

#include <algorithm>
#include <cmath>

#include "nevdiff/errors.hpp"

namespace nevdiff {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

struct Ols {
    double slope = 0, intercept = 0, sxx = 0, sigma = 0;
    int n = 0;
};

Ols fit(const std::vector<std::pair<double, double>>& pts, const std::vector<char>& skip) {
    Ols o;
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (skip[i]) continue;
        sx += pts[i].first;
        sy += pts[i].second;
        ++o.n;
    }
    if (o.n < 2) return o;
    double mx = sx / o.n, my = sy / o.n;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (skip[i]) continue;
        sxx += (pts[i].first - mx) * (pts[i].first - mx);
        sxy += (pts[i].first - mx) * (pts[i].second - my);
    }
    o.sxx = sxx;
    o.slope = sxx > 0 ? sxy / sxx : 0;
    o.intercept = my - o.slope * mx;
    double ss = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (skip[i]) continue;
        double e = pts[i].second - (o.intercept + o.slope * pts[i].first);
        ss += e * e;
    }
    o.sigma = o.n > 2 ? std::sqrt(ss / (o.n - 2)) : 0;
    return o;
}

}  // namespace

SlopeFit estimate_slope(const std::vector<std::pair<double, double>>& pairs, double mask_budget) {
    const std::size_t n = pairs.size();
    if (n < 20) throw InsufficientSamples("estimate_slope: need >= 20 pairs");

    // geometric cell of each point, from neighbor gaps in sorted log r
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return pairs[a].first < pairs[b].first; });
    std::vector<std::pair<double, double>> cell(n);  // log-space cell bounds
    for (std::size_t k = 0; k < n; ++k) {
        double x = pairs[order[k]].first;
        double gl = k > 0 ? x - pairs[order[k - 1]].first : 0;
        double gr = k + 1 < n ? pairs[order[k + 1]].first - x : 0;
        if (gl == 0) gl = gr;
        if (gr == 0) gr = gl;
        cell[order[k]] = {x - 0.5 * gl, x + 0.5 * gr};
    }

    SlopeFit out;
    out.masked.assign(n, 0);
    double ymin = kInf, ymax = -kInf;
    std::size_t degenerate = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(pairs[i].second)) {
            out.masked[i] = 1;  // zero or failed values carry no slope information
            out.masked_set.add(std::exp(cell[i].first), std::exp(cell[i].second));
            ++degenerate;
            continue;
        }
        ymin = std::min(ymin, pairs[i].second);
        ymax = std::max(ymax, pairs[i].second);
    }
    const std::size_t max_masked = n / 5;
    std::size_t masked_count = degenerate;
    const double floor_resid = 1e-9 * (ymax - ymin + 1.0);

    for (;;) {
        Ols o = fit(pairs, out.masked);
        if (o.n < 3) break;
        double worst = -kInf;
        std::size_t wi = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (out.masked[i]) continue;
            double e = pairs[i].second - (o.intercept + o.slope * pairs[i].first);
            if (e > worst) {
                worst = e;
                wi = i;
            }
        }
        if (wi == n || worst <= 2.5 * o.sigma || worst <= floor_resid) break;
        if (masked_count + 1 > max_masked) break;
        IntervalSet trial = out.masked_set;
        trial.add(std::exp(cell[wi].first), std::exp(cell[wi].second));
        if (trial.log_measure() > mask_budget) break;
        out.masked[wi] = 1;
        out.masked_set = std::move(trial);
        ++masked_count;
    }

    Ols o = fit(pairs, out.masked);
    out.slope = o.slope;
    out.intercept = o.intercept;
    out.used = o.n;
    out.slope_stderr = o.sxx > 0 ? o.sigma / std::sqrt(o.sxx) : 0;
    return out;
}

}  // namespace nevdiff
