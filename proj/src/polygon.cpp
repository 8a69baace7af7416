#include "nevdiff/polygon.hpp"

#include <algorithm>

#include "nevdiff/errors.hpp"

#include <nlohmann/json.hpp>

namespace nevdiff {

NewtonPolygon build_polygon(const LinearDifferenceEquation& eq) {
    if (eq.form != EqForm::Difference) throw Error("build_polygon: expected difference form");
    NewtonPolygon np;
    for (int j = 0; j < (int)eq.coeffs.size(); ++j) {
        if (eq.coeffs[j].is_zero()) continue;
        np.points.push_back({j, (long)eq.coeffs[j].degree() - j});
    }
    if (np.points.size() < 2)
        throw DegenerateEquation("build_polygon: need at least two non-zero coefficients");

    // lower convex hull of (j, -h_j), monotone chain over ascending j
    std::vector<PolygonPoint> hull;
    auto cross_ok = [](const PolygonPoint& a, const PolygonPoint& b, const PolygonPoint& c) {
        // keep b only on a strict left turn in (j, -h): segment slopes increase,
        // collinear middles merge into one segment
        long x1 = b.j - a.j, y1 = -(b.hj - a.hj);
        long x2 = c.j - a.j, y2 = -(c.hj - a.hj);
        return x1 * y2 - x2 * y1 > 0;
    };
    for (const auto& p : np.points) {
        while (hull.size() >= 2 && !cross_ok(hull[hull.size() - 2], hull.back(), p))
            hull.pop_back();
        hull.push_back(p);
    }
    np.hull = hull;

    for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
        // chi = (h_j - h_k)/(k - j) for consecutive hull vertices j < k
        Rational chi(BigInt(hull[i].hj - hull[i + 1].hj), BigInt(hull[i + 1].j - hull[i].j));
        np.gradients.push_back(chi);
    }
    std::sort(np.gradients.begin(), np.gradients.end(),
              [](const Rational& a, const Rational& b) { return a < b; });
    np.gradients.erase(std::unique(np.gradients.begin(), np.gradients.end()),
                       np.gradients.end());
    return np;
}

OrderCandidates order_candidates(const LinearDifferenceEquation& eq) {
    LinearDifferenceEquation deq = eq.form == EqForm::Shift ? shift_to_difference(eq) : eq;
    deq.validate();
    OrderCandidates oc;

    int deg0 = deq.coeffs.empty() ? -1 : deq.coeffs[0].degree();
    int degmax = -1;
    for (int j = 1; j < (int)deq.coeffs.size(); ++j)
        degmax = std::max(degmax, deq.coeffs[j].degree());
    if (deg0 >= 0 && degmax <= deg0) {
        oc.gate = OrderGate::OrderAtLeastOne;
    } else {
        oc.gate = OrderGate::Candidates;
    }

    oc.polygon = build_polygon(deq);
    const Rational zero(0), one(1);
    for (const auto& chi : oc.polygon.gradients)
        if (zero < chi && chi < one) oc.candidates_below_one.push_back(chi);
    return oc;
}

std::string order_candidates_json(const OrderCandidates& oc) {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    auto pts = nlohmann::ordered_json::array();
    for (const auto& p : oc.polygon.points) pts.push_back({p.j, p.hj});
    j["points"] = pts;
    auto hl = nlohmann::ordered_json::array();
    for (const auto& p : oc.polygon.hull) hl.push_back({p.j, p.hj});
    j["hull"] = hl;
    auto gr = nlohmann::ordered_json::array();
    for (const auto& g : oc.polygon.gradients)
        gr.push_back({{"exact", g.to_string()}, {"value", g.to_double()}});
    j["gradients"] = gr;
    auto cb = nlohmann::ordered_json::array();
    for (const auto& g : oc.candidates_below_one)
        cb.push_back({{"exact", g.to_string()}, {"value", g.to_double()}});
    j["candidates_below_one"] = cb;
    j["gate"] = oc.gate == OrderGate::OrderAtLeastOne ? "order_at_least_one" : "candidates";
    return j.dump(2);
}

}  // namespace nevdiff
