#include "nevdiff/nevanlinna.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <numbers>

#include "nevdiff/errors.hpp"

namespace nevdiff {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Periodic trapezoid with node doubling. The integrand callback receives the
// angle and the current node spacing (for nudging off singular nodes).
template <class G>
double circle_quadrature(G g, double rel_tol, long max_nodes) {
    long m = 256;
    double spacing = kTwoPi / m;
    double sum = 0;
    for (long j = 0; j < m; ++j) sum += g(j * spacing, spacing);
    double prev = sum / m;
    int stable = 0;
    while (m < max_nodes) {
        m *= 2;
        spacing = kTwoPi / m;
        for (long j = 1; j < m; j += 2) sum += g(j * spacing, spacing);
        double cur = sum / m;
        if (std::fabs(cur - prev) <= rel_tol * std::max(1.0, std::fabs(cur))) {
            if (++stable >= 2) return cur;
        } else {
            stable = 0;
        }
        prev = cur;
    }
    throw QuadratureNonConvergence("circle quadrature did not settle");
}

double finite_log_abs(const FunctionModel& f, double r, double phi, double spacing) {
    double la = f.log_abs(std::polar(r, phi));
    for (int tries = 0; !std::isfinite(la) && tries < 4; ++tries) {
        phi += 0.5 * spacing;  // nudge off a zero/pole sitting on the node
        la = f.log_abs(std::polar(r, phi));
    }
    if (!std::isfinite(la)) throw QuadratureNonConvergence("persistent singular node");
    return la;
}

}  // namespace

long counting(const FunctionModel& f, double r, Target target) {
    bool zeros = target == Target::Zeros;
    if (zeros && !f.has_zero_list())
        throw Unsupported("counting: no enumerable zero list for " + f.describe());
    if (!zeros && !f.has_pole_list())
        throw Unsupported("counting: no enumerable pole list for " + f.describe());
    long lo = zeros ? f.count_zeros(r * (1 - 1e-9)) : f.count_poles(r * (1 - 1e-9));
    long hi = zeros ? f.count_zeros(r * (1 + 1e-9)) : f.count_poles(r * (1 + 1e-9));
    if (lo != hi)
        std::clog << "counting: circle-grazing point near r=" << r << ", nudged outward\n";
    return hi;
}

double integrated_counting(const FunctionModel& f, double r, Target target) {
    bool zeros = target == Target::Zeros;
    if (zeros && !f.has_zero_list())
        throw Unsupported("integrated_counting: no zero list for " + f.describe());
    if (!zeros && !f.has_pole_list())
        throw Unsupported("integrated_counting: no pole list for " + f.describe());
    auto pts = zeros ? f.zeros_up_to(r * (1 + 1e-9)) : f.poles_up_to(r * (1 + 1e-9));
    double s = 0;
    long at_origin = 0;
    for (Complex a : pts) {
        double m = std::abs(a);
        if (m < 1e-300) {
            ++at_origin;
        } else if (m <= r) {
            s += std::log(r / m);
        }
    }
    return s + (double)at_origin * std::log(r);
}

double proximity(const FunctionModel& f, double r) {
    auto g = [&](double phi, double spacing) {
        double la = f.log_abs(std::polar(r, phi));
        if (la == -kInf) return 0.0;  // log+ clips zeros
        if (!std::isfinite(la)) la = finite_log_abs(f, r, phi + 0.5 * spacing, spacing);
        return la > 0 ? la : 0.0;
    };
    return circle_quadrature(g, 1e-7, 1L << 21);
}

double circle_mean_log_abs(const FunctionModel& f, double r) {
    auto g = [&](double phi, double spacing) { return finite_log_abs(f, r, phi, spacing); };
    return circle_quadrature(g, 1e-8, 1L << 21);
}

NevanlinnaSample characteristic(const FunctionModel& f, double r) {
    NevanlinnaSample s{};
    s.r = r;
    s.m_f = proximity(f, r);
    if (f.entire()) {
        s.n_poles = 0;
        s.N_poles = 0;
    } else {
        s.n_poles = counting(f, r, Target::Poles);
        s.N_poles = integrated_counting(f, r, Target::Poles);
    }
    s.T_f = s.m_f + s.N_poles;
    return s;
}

double poisson_jensen(const FunctionModel& f, Complex z, double R) {
    if (!(std::abs(z) < R)) throw Error("poisson_jensen: need |z| < R");
    if (!f.has_zero_list() || !f.has_pole_list())
        throw Unsupported("poisson_jensen: zero/pole lists required");
    double la_z = f.log_abs(z);
    if (la_z == -kInf) throw ZeroHit("poisson_jensen: f(z) = 0");

    double r2 = R * R, z2 = std::norm(z);
    auto g = [&](double phi, double spacing) {
        double la = f.log_abs(std::polar(R, phi));
        if (!std::isfinite(la)) {
            phi += 0.5 * spacing;
            la = finite_log_abs(f, R, phi, spacing);
        }
        Complex w = std::polar(R, phi);
        return la * (r2 - z2) / std::norm(w - z);
    };
    double integral = circle_quadrature(g, 1e-9, 1L << 20);

    double corr = 0;
    for (Complex a : f.zeros_up_to(R * (1 - 1e-12))) {
        if (std::abs(a) >= R) continue;
        corr -= std::log(std::abs((r2 - std::conj(a) * z) / (R * (z - a))));
    }
    for (Complex b : f.poles_up_to(R * (1 - 1e-12))) {
        if (std::abs(b) >= R) continue;
        corr += std::log(std::abs((r2 - std::conj(b) * z) / (R * (z - b))));
    }
    return integral + corr;
}

LogDifferenceResult log_difference_error(const FunctionModel& f, Complex z, Complex eta) {
    Complex fz = f.evaluate(z);
    Complex fzh = f.evaluate(z + eta);
    if (std::abs(fz) < 1e-300) throw ZeroHit("log_difference_error: f(z) = 0");
    if (std::abs(fzh) < 1e-300) throw ZeroHit("log_difference_error: f(z+eta) = 0");
    Complex L = std::log(fzh / fz);  // principal branch
    Complex base = L - eta * f.log_derivative(z);
    long n0 = (long)std::llround(-base.imag() / kTwoPi);
    LogDifferenceResult best{base + Complex(0, kTwoPi) * (double)n0, n0};
    for (long n = n0 - 2; n <= n0 + 2; ++n) {
        Complex q = base + Complex(0, kTwoPi) * (double)n;
        if (std::abs(q) < std::abs(best.q)) best = {q, n};
    }
    return best;
}

std::vector<Disk> cartan_disks(const std::vector<Complex>& points, double B) {
    if (points.empty()) throw Error("cartan_disks: empty point set");
    if (!(B > 0)) throw Error("cartan_disks: B must be positive");
    const long p = (long)points.size();
    const double lam = B / (double)p;
    std::vector<Complex> active = points;
    std::vector<Disk> disks;
    long kprev = p;

    // one k-full disk search; returns cover count and center
    auto find_cover = [&](long k, Complex& center_out) -> long {
        double rho = (double)k * lam;
        double rho_tol = rho * (1 + 1e-9) + 1e-300;
        auto count_at = [&](Complex c) {
            long n = 0;
            for (Complex q : active)
                if (std::abs(q - c) <= rho_tol) ++n;
            return n;
        };
        for (Complex c : active) {
            long n = count_at(c);
            if (n >= k) {
                center_out = c;
                return n;
            }
        }
        for (std::size_t i = 0; i < active.size(); ++i) {
            for (std::size_t j = i + 1; j < active.size(); ++j) {
                Complex d = active[j] - active[i];
                double dist = std::abs(d);
                if (dist > 2 * rho || dist == 0.0) continue;
                Complex mid = (active[i] + active[j]) * 0.5;
                double h = std::sqrt(std::max(0.0, rho * rho - 0.25 * dist * dist));
                Complex perp = Complex(0, 1) * (d / dist) * h;
                for (Complex c : {mid + perp, mid - perp}) {
                    long n = count_at(c);
                    if (n >= k) {
                        center_out = c;
                        return n;
                    }
                }
            }
        }
        return 0;
    };

    while (!active.empty()) {
        long kmax = std::min<long>(kprev, (long)active.size());
        Complex center;
        long k = kmax;
        for (; k >= 1; --k) {
            if (find_cover(k, center) >= k) break;
        }
        // k >= 1 always succeeds: a point covers itself
        double rho_tol = (double)k * lam * (1 + 1e-9) + 1e-300;
        long removed = 0;
        std::vector<Complex> keep;
        keep.reserve(active.size());
        for (Complex q : active) {
            if (std::abs(q - center) <= rho_tol) {
                ++removed;
            } else {
                keep.push_back(q);
            }
        }
        active = std::move(keep);
        disks.push_back({center, 2.0 * (double)removed * lam});
        kprev = k;
    }
    return disks;
}

}  // namespace nevdiff
