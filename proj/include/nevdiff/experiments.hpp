#ifndef NEVDIFF_EXPERIMENTS_HPP
#define NEVDIFF_EXPERIMENTS_HPP

#include <string>
#include <vector>

#include "nevdiff/funcmodel.hpp"
#include "nevdiff/intervalset.hpp"

namespace nevdiff {

// Verification experiments:
//   E1  sign and size of q(x) = log f(x+1)/f(x) - f'(x)/f(x) for the
//       exp-polynomial canonical product, at midpoints of the gap set F
//   E2  decay slope of |Delta f/f - eta f'/f| for cos(sqrt z), bound 2s-2
//   E3  lower bound 16x |Delta f/f - f'/f| >= 0.9 at x = (2 pi n)^2
//   E4  decay slope of |Delta^k f/f - eta^k f^(k)/f|, bound (k+1)(s-1)
//   E5  difference Wiman-Valiron ratio at the max-modulus point
struct ExperimentConfig {
    std::string id;
    std::string function_spec;
    Complex eta{1, 0};
    int k = 1;
    double rmin = 100.0, rmax = 1e6;
    int points = 240;
    int nmin = 10, nmax = 50;
    std::vector<double> r_values{1e3, 1e4, 1e5};
    double mask_budget = 2.0;
    unsigned long seed = 12345;

    static ExperimentConfig defaults(const std::string& id);
    void apply_kv(const std::string& key, const std::string& value);
    void apply_file(const std::string& path);
};

struct ExperimentReport {
    std::string id;
    std::string function_spec;
    // parallel columns; first one is the grid variable
    std::vector<std::string> column_names;
    std::vector<std::vector<double>> columns;
    std::vector<char> mask;
    IntervalSet masked_set;
    bool has_slope = false;
    double slope = 0, slope_halfwidth = 0, bound = 0;
    bool fail_mask = false;
    bool pass = false;
    std::string detail;

    std::string csv() const;
    std::string json() const;
};

ExperimentReport run_experiment(const ExperimentConfig& cfg);

}  // namespace nevdiff

#endif
