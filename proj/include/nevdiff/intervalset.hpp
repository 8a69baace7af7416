#ifndef NEVDIFF_INTERVALSET_HPP
#define NEVDIFF_INTERVALSET_HPP

#include <utility>
#include <vector>

namespace nevdiff {

// Finite union of disjoint closed intervals on the positive real axis,
// kept sorted and merged. Carries the logarithmic measure
// lm(E) = integral over E intersect (1, inf) of dr/r.
class IntervalSet {
  public:
    IntervalSet() = default;
    explicit IntervalSet(std::vector<std::pair<double, double>> intervals);

    void add(double a, double b);
    const std::vector<std::pair<double, double>>& intervals() const { return iv_; }
    bool empty() const { return iv_.empty(); }
    bool contains(double x) const;
    double log_measure() const;
    double total_length() const;

    static IntervalSet unite(const IntervalSet& a, const IntervalSet& b);

  private:
    std::vector<std::pair<double, double>> iv_;
    void normalize();
};

double log_measure(const IntervalSet& e);

}  // namespace nevdiff

#endif
