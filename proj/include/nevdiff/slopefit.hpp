#ifndef NEVDIFF_SLOPEFIT_HPP
#define NEVDIFF_SLOPEFIT_HPP

#include <utility>
#include <vector>

#include "nevdiff/intervalset.hpp"

namespace nevdiff {

struct SlopeFit {
    double slope = 0;
    double intercept = 0;
    double slope_stderr = 0;
    int used = 0;                // points in the final fit
    std::vector<char> masked;    // per input point
    IntervalSet masked_set;      // r-intervals covering the masked points
};

// Least squares through (log r, log v) after iteratively shedding the largest
// positive residuals: at most 20% of the points and at most mask_budget of
// logarithmic measure. Masked points occupy their geometric grid cell.
// Deterministic given input order. Needs >= 20 points.
SlopeFit estimate_slope(const std::vector<std::pair<double, double>>& pairs, double mask_budget);

}  // namespace nevdiff

#endif
