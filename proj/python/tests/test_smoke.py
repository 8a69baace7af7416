"""Smoke tests for the python bindings."""

import json
import math

import nevdiff


def close(a, b, tol):
    return abs(a - b) <= tol * max(1.0, abs(b))


def main():
    f = nevdiff.FunctionModel.parse("cossqrt")
    assert close(f.evaluate(0), 1.0, 1e-14)
    assert abs(f.evaluate((math.pi / 2) ** 2)) < 1e-12
    assert close(f.log_derivative(100.0).real,
                 -math.sin(10.0) / (20.0 * math.cos(10.0)), 1e-12)
    assert f.known_order() == 0.5
    assert f.count_zeros(30.0) == 2

    log_mu, nu = nevdiff.maximal_term("series(exp)", 5.0)
    assert nu == 5, nu

    order = nevdiff.estimate_order("cossqrt", 10, 1e6, 48)
    assert abs(order - 0.5) < 0.05, order

    coeffs = nevdiff.operator_series(2, 6)
    assert coeffs[2] == "1" and coeffs[3] == "1" and coeffs[4] == "7/12", coeffs

    q, branch = nevdiff.log_difference_error("exp(z^1)", 3 + 2j, 1.0)
    assert abs(q) < 1e-12, q

    d = nevdiff.delta_k("poly(0,0,1)", 7.0, 1.0, 2)
    assert close(d.real, 2.0, 1e-12), d

    report = json.loads(nevdiff.analyze_equation("(z)*D2 - 1*D0"))
    assert report["gate"] == "candidates"
    assert report["candidates_below_one"][0]["exact"] == "1/2"

    report = json.loads(nevdiff.analyze_equation("S1 - z*S0"))
    assert report["gate"] == "order_at_least_one"

    ok, rep = nevdiff.run_experiment("E3", {"nmax": "20"})
    assert ok, rep
    parsed = json.loads(rep)
    assert parsed["pass"] is True

    t = nevdiff.characteristic("exp(z^1)", 10.0)
    assert close(t["T"], 10.0 / math.pi, 1e-4), t

    pj = nevdiff.poisson_jensen("rat(zeros=[2];poles=[3])", 1 + 0j, 10.0)
    assert close(pj, math.log(0.5), 1e-6), pj

    disks = nevdiff.cartan_disks([0j], 1.0)
    assert len(disks) == 1 and close(disks[0][1], 2.0, 1e-12)

    try:
        nevdiff.FunctionModel.parse("poly(1,0,)")
        raise AssertionError("expected a parse error")
    except ValueError:
        pass

    print("python smoke tests passed")


if __name__ == "__main__":
    main()
