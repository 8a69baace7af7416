#include "nevdiff/intervalset.hpp"

#include <algorithm>
#include <cmath>

namespace nevdiff {

IntervalSet::IntervalSet(std::vector<std::pair<double, double>> intervals)
    : iv_(std::move(intervals)) {
    normalize();
}

void IntervalSet::add(double a, double b) {
    iv_.emplace_back(a, b);
    normalize();
}

void IntervalSet::normalize() {
    std::vector<std::pair<double, double>> keep;
    for (auto [a, b] : iv_) {
        a = std::max(a, 0.0);
        if (b > a) keep.emplace_back(a, b);
    }
    std::sort(keep.begin(), keep.end());
    iv_.clear();
    for (auto [a, b] : keep) {
        if (!iv_.empty() && a <= iv_.back().second) {
            iv_.back().second = std::max(iv_.back().second, b);
        } else {
            iv_.emplace_back(a, b);
        }
    }
}

bool IntervalSet::contains(double x) const {
    for (auto [a, b] : iv_)
        if (x >= a && x <= b) return true;
    return false;
}

double IntervalSet::log_measure() const {
    double s = 0;
    for (auto [a, b] : iv_)
        if (b > 1.0) s += std::log(b / std::max(a, 1.0));
    return s;
}

double IntervalSet::total_length() const {
    double s = 0;
    for (auto [a, b] : iv_) s += b - a;
    return s;
}

IntervalSet IntervalSet::unite(const IntervalSet& a, const IntervalSet& b) {
    auto iv = a.iv_;
    iv.insert(iv.end(), b.iv_.begin(), b.iv_.end());
    return IntervalSet(std::move(iv));
}

double log_measure(const IntervalSet& e) { return e.log_measure(); }

}  // namespace nevdiff
