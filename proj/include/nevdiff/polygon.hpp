#ifndef NEVDIFF_POLYGON_HPP
#define NEVDIFF_POLYGON_HPP

#include <string>
#include <vector>

#include "nevdiff/diffops.hpp"
#include "nevdiff/rational.hpp"

namespace nevdiff {

struct PolygonPoint {
    int j;    // difference order
    long hj;  // deg a_j - j
};

// Diagram over the points (j, deg a_j - j) of a difference-form equation.
// Candidate gradients chi = (h_j - h_k)/(k - j) come from the segments of
// the boundary where a two-term dominant balance nu^{k-j} ~ r^{h_j - h_k}
// can hold against all other terms (the lower convex hull in (j, -h_j)).
struct NewtonPolygon {
    std::vector<PolygonPoint> points;  // ascending j, zero coefficients omitted
    std::vector<PolygonPoint> hull;    // boundary vertices, ascending j
    std::vector<Rational> gradients;   // all segment gradients, ascending, deduped
};

NewtonPolygon build_polygon(const LinearDifferenceEquation& eq);

enum class OrderGate {
    // max_{1<=j<=n} deg P_j <= deg P_0: every meromorphic solution has order >= 1
    OrderAtLeastOne,
    // otherwise: a transcendental entire solution of order < 1 must have order
    // equal to one of the gradients in (0,1); an empty candidate list rules
    // such solutions out (order 0 is excluded as well)
    Candidates,
};

struct OrderCandidates {
    OrderGate gate = OrderGate::Candidates;
    std::vector<Rational> candidates_below_one;  // gradients in the open interval (0,1)
    NewtonPolygon polygon;
};

// Accepts either form; shift-form input is converted through the single
// shift_to_difference path first.
OrderCandidates order_candidates(const LinearDifferenceEquation& eq);

std::string order_candidates_json(const OrderCandidates& oc);

}  // namespace nevdiff

#endif
