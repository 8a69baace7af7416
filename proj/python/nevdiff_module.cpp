#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nevdiff/diffops.hpp"
#include "nevdiff/eqparse.hpp"
#include "nevdiff/errors.hpp"
#include "nevdiff/experiments.hpp"
#include "nevdiff/funcspec.hpp"
#include "nevdiff/growth.hpp"
#include "nevdiff/nevanlinna.hpp"
#include "nevdiff/polygon.hpp"

namespace py = pybind11;
using namespace nevdiff;

PYBIND11_MODULE(_nevdiff, m) {
    m.doc() = "growth of difference quotients and logarithmic derivatives";

    // translators run newest-first: the derived ParseError must come last
    py::register_exception<Error>(m, "NevdiffError", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "NevdiffParseError", PyExc_ValueError);

    py::class_<FunctionModel>(m, "FunctionModel")
        .def_static("parse", &parse_function_spec, py::arg("spec"))
        .def("evaluate", &FunctionModel::evaluate, py::arg("z"))
        .def("log_abs", &FunctionModel::log_abs, py::arg("z"))
        .def("derivative", &FunctionModel::derivative, py::arg("k"), py::arg("z"))
        .def("log_derivative", &FunctionModel::log_derivative, py::arg("z"))
        .def("known_order",
             [](const FunctionModel& f) { return f.known_order(); })
        .def("count_zeros", &FunctionModel::count_zeros, py::arg("r"))
        .def("count_poles", &FunctionModel::count_poles, py::arg("r"))
        .def("describe", &FunctionModel::describe)
        .def("__repr__",
             [](const FunctionModel& f) { return "<FunctionModel " + f.describe() + ">"; });

    m.def(
        "maximal_term",
        [](const std::string& spec, double r) {
            auto f = parse_function_spec(spec);
            auto s = f.power_series();
            if (!s) throw Unsupported("no power series for " + spec);
            auto mt = maximal_term(*s, r);
            return py::make_tuple(mt.log_mu, mt.nu);
        },
        py::arg("spec"), py::arg("r"), "returns (log_mu, nu)");

    m.def(
        "estimate_order",
        [](const std::string& spec, double rmin, double rmax, int points) {
            auto f = parse_function_spec(spec);
            return estimate_order(growth_samples(f, geometric_grid(rmin, rmax, points)));
        },
        py::arg("spec"), py::arg("rmin") = 10.0, py::arg("rmax") = 1e6, py::arg("points") = 48);

    m.def(
        "max_log_modulus",
        [](const std::string& spec, double r) {
            return max_log_modulus(parse_function_spec(spec), r);
        },
        py::arg("spec"), py::arg("r"));

    m.def(
        "characteristic",
        [](const std::string& spec, double r) {
            auto s = characteristic(parse_function_spec(spec), r);
            py::dict d;
            d["r"] = s.r;
            d["m"] = s.m_f;
            d["n_poles"] = s.n_poles;
            d["N_poles"] = s.N_poles;
            d["T"] = s.T_f;
            return d;
        },
        py::arg("spec"), py::arg("r"));

    m.def(
        "poisson_jensen",
        [](const std::string& spec, Complex z, double R) {
            return poisson_jensen(parse_function_spec(spec), z, R);
        },
        py::arg("spec"), py::arg("z"), py::arg("R"));

    m.def(
        "log_difference_error",
        [](const std::string& spec, Complex z, Complex eta) {
            auto r = log_difference_error(parse_function_spec(spec), z, eta);
            return py::make_tuple(r.q, r.branch_n);
        },
        py::arg("spec"), py::arg("z"), py::arg("eta") = Complex(1, 0),
        "returns (q, branch_n)");

    m.def(
        "delta_k",
        [](const std::string& spec, Complex z, Complex eta, int k) {
            return delta_k(parse_function_spec(spec), z, eta, k);
        },
        py::arg("spec"), py::arg("z"), py::arg("eta") = Complex(1, 0), py::arg("k") = 1);

    m.def(
        "operator_series",
        [](int k, int M) {
            auto s = operator_series(k, M);
            std::vector<std::string> out;
            for (const auto& c : s.coeff) out.push_back(c.to_string());
            return out;
        },
        py::arg("k"), py::arg("order"), "exact coefficients of (e^x - 1)^k as strings");

    m.def(
        "cartan_disks",
        [](const std::vector<Complex>& pts, double B) {
            std::vector<std::pair<Complex, double>> out;
            for (const auto& d : cartan_disks(pts, B)) out.emplace_back(d.center, d.radius);
            return out;
        },
        py::arg("points"), py::arg("B"));

    m.def(
        "analyze_equation",
        [](const std::string& text) { return order_candidates_json(order_candidates(parse_equation(text))); },
        py::arg("text"), "Newton-Puiseux report as a JSON string");

    m.def(
        "run_experiment",
        [](const std::string& id, const std::map<std::string, std::string>& overrides) {
            auto cfg = ExperimentConfig::defaults(id);
            for (const auto& [k, v] : overrides) cfg.apply_kv(k, v);
            auto rep = run_experiment(cfg);
            return py::make_tuple(rep.pass, rep.json());
        },
        py::arg("id"), py::arg("overrides") = std::map<std::string, std::string>{},
        "returns (pass, json_report)");
}
