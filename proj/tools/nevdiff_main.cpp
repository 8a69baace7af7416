// nevdiff command-line harness: growth functionals, Nevanlinna functionals,
// verification experiments, Newton-Puiseux diagrams, operator series and
// difference quotients. Exit codes: 0 all pass, 1 any FAIL, 2 usage/parse error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "nevdiff/diffops.hpp"
#include "nevdiff/eqparse.hpp"
#include "nevdiff/errors.hpp"
#include "nevdiff/experiments.hpp"
#include "nevdiff/funcspec.hpp"
#include "nevdiff/growth.hpp"
#include "nevdiff/nevanlinna.hpp"
#include "nevdiff/polygon.hpp"

using namespace nevdiff;

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw ConfigError("cannot open output file: " + out_path);
    out << text;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int cmd_growth(const std::string& spec, double rmin, double rmax, int points,
               const std::string& format, const std::string& out) {
    FunctionModel f = parse_function_spec(spec);
    auto samples = growth_samples(f, geometric_grid(rmin, rmax, points));
    // the order estimate needs a wide grid; the samples stand on their own
    bool have_order = false;
    double order = 0;
    std::string order_note;
    try {
        order = estimate_order(samples);
        have_order = true;
    } catch (const Error& e) {
        order_note = e.what();
    }
    if (format == "json") {
        nlohmann::ordered_json j;
        j["schema_version"] = 1;
        j["function"] = spec;
        auto arr = nlohmann::ordered_json::array();
        for (const auto& s : samples)
            arr.push_back({{"r", s.r},
                           {"log_mu", s.log_mu},
                           {"nu", s.nu},
                           {"log_max_modulus", s.log_max_mod}});
        j["samples"] = arr;
        if (have_order)
            j["estimated_order"] = order;
        else
            j["estimated_order_unavailable"] = order_note;
        emit(j.dump(2), out);
    } else {
        std::string text = "r,log_mu,nu,log_max_modulus\n";
        for (const auto& s : samples)
            text += fmt(s.r) + "," + fmt(s.log_mu) + "," + std::to_string(s.nu) + "," +
                    fmt(s.log_max_mod) + "\n";
        emit(text, out);
        if (have_order)
            std::cerr << "estimated order: " << fmt(order) << "\n";
        else
            std::cerr << "estimated order unavailable: " << order_note << "\n";
    }
    return 0;
}

int cmd_nevanlinna(const std::string& spec, double r, const std::string& format,
                   const std::string& out) {
    FunctionModel f = parse_function_spec(spec);
    NevanlinnaSample s = characteristic(f, r);
    long nz = f.has_zero_list() ? counting(f, r, Target::Zeros) : -1;
    double Nz = f.has_zero_list() ? integrated_counting(f, r, Target::Zeros) : 0;
    if (format == "json") {
        nlohmann::ordered_json j;
        j["schema_version"] = 1;
        j["function"] = spec;
        j["r"] = s.r;
        j["m"] = s.m_f;
        j["n_poles"] = s.n_poles;
        j["N_poles"] = s.N_poles;
        j["T"] = s.T_f;
        if (nz >= 0) {
            j["n_zeros"] = nz;
            j["N_zeros"] = Nz;
        }
        emit(j.dump(2), out);
    } else {
        std::string text = "quantity,value\nm," + fmt(s.m_f) + "\nn_poles," +
                           std::to_string(s.n_poles) + "\nN_poles," + fmt(s.N_poles) + "\nT," +
                           fmt(s.T_f) + "\n";
        if (nz >= 0) text += "n_zeros," + std::to_string(nz) + "\nN_zeros," + fmt(Nz) + "\n";
        emit(text, out);
    }
    return 0;
}

int cmd_verify(std::vector<std::string> ids, const std::string& config,
               const std::vector<std::string>& sets, const std::string& format,
               const std::string& out) {
    if (ids.size() == 1 && ids[0] == "all") ids = {"E1", "E2", "E3", "E4", "E5"};
    bool all_pass = true;
    std::string text;
    auto jall = nlohmann::ordered_json::array();
    for (const auto& id : ids) {
        ExperimentConfig cfg = ExperimentConfig::defaults(id);
        if (!config.empty()) cfg.apply_file(config);
        for (const auto& kv : sets) {
            auto eq = kv.find('=');
            if (eq == std::string::npos) throw ConfigError("--set expects key=value");
            cfg.apply_kv(kv.substr(0, eq), kv.substr(eq + 1));
        }
        ExperimentReport rep = run_experiment(cfg);
        all_pass = all_pass && rep.pass;
        std::cerr << (rep.pass ? "PASS " : "FAIL ") << id << ": " << rep.detail << "\n";
        if (format == "json") {
            jall.push_back(nlohmann::ordered_json::parse(rep.json()));
        } else {
            text += "# " + id + " " + (rep.pass ? "PASS" : "FAIL") + " " + rep.detail + "\n";
            text += rep.csv();
        }
    }
    if (format == "json") {
        emit(nlohmann::ordered_json(jall).dump(2), out);
    } else {
        emit(text, out);
    }
    return all_pass ? 0 : 1;
}

int cmd_polygon(const std::string& path, const std::string& form, const std::string& format,
                const std::string& out) {
    LinearDifferenceEquation eq = parse_equation(read_file(path));
    if (form == "shift" && eq.form != EqForm::Shift)
        throw ConfigError("equation text is not in shift form");
    if (form == "difference" && eq.form != EqForm::Difference)
        throw ConfigError("equation text is not in difference form");
    OrderCandidates oc = order_candidates(eq);
    if (format == "csv") {
        std::string text = "j,hj,on_hull\n";
        for (const auto& p : oc.polygon.points) {
            bool on = false;
            for (const auto& h : oc.polygon.hull) on = on || (h.j == p.j && h.hj == p.hj);
            text += std::to_string(p.j) + "," + std::to_string(p.hj) + "," + (on ? "1" : "0") +
                    "\n";
        }
        emit(text, out);
        std::cerr << (oc.gate == OrderGate::OrderAtLeastOne ? "gate: order_at_least_one\n"
                                                            : "gate: candidates\n");
    } else {
        emit(order_candidates_json(oc), out);
    }
    return 0;
}

int cmd_opseries(int k, int M, const std::string& format, const std::string& out) {
    OperatorSeries s = operator_series(k, M);
    OperatorSeries s2 = operator_series_stirling(k, M);
    for (int m = 0; m <= M; ++m)
        if (s.coeff[m] != s2.coeff[m]) throw Error("operator series paths disagree");
    if (format == "json") {
        nlohmann::ordered_json j;
        j["schema_version"] = 1;
        j["k"] = k;
        j["order"] = M;
        auto arr = nlohmann::ordered_json::array();
        for (int m = 0; m <= M; ++m)
            arr.push_back(
                {{"m", m}, {"exact", s.coeff[m].to_string()}, {"value", s.coeff[m].to_double()}});
        j["coefficients"] = arr;
        emit(j.dump(2), out);
    } else {
        std::string text = "m,coefficient\n";
        for (int m = 0; m <= M; ++m)
            text += std::to_string(m) + "," + s.coeff[m].to_string() + "\n";
        emit(text, out);
    }
    return 0;
}

int cmd_delta(const std::string& spec, const std::string& z_str, const std::string& eta_str,
              int k, const std::string& format, const std::string& out) {
    FunctionModel f = parse_function_spec(spec);
    Complex z = parse_complex(z_str), eta = parse_complex(eta_str);
    Complex d = delta_k(f, z, eta, k);
    Complex fz = f.evaluate(z);
    if (format == "json") {
        nlohmann::ordered_json j;
        j["schema_version"] = 1;
        j["function"] = spec;
        j["k"] = k;
        j["z"] = {z.real(), z.imag()};
        j["eta"] = {eta.real(), eta.imag()};
        j["delta_k"] = {d.real(), d.imag()};
        j["delta_k_over_f"] = {(d / fz).real(), (d / fz).imag()};
        emit(j.dump(2), out);
    } else {
        std::string text = "quantity,re,im\ndelta_k," + fmt(d.real()) + "," + fmt(d.imag()) +
                           "\ndelta_k_over_f," + fmt((d / fz).real()) + "," +
                           fmt((d / fz).imag()) + "\n";
        emit(text, out);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"difference-quotient and logarithmic-derivative growth toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // --format/--out may follow the subcommand

    std::string format = "csv", out_path;
    app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", out_path, "write report to file instead of stdout");

    auto* g = app.add_subcommand("growth", "maximal term, central index, log max modulus");
    std::string g_spec;
    double g_rmin = 10, g_rmax = 1e6;
    int g_points = 48;
    g->add_option("spec", g_spec, "function spec")->required();
    g->add_option("--rmin", g_rmin, "smallest radius");
    g->add_option("--rmax", g_rmax, "largest radius");
    g->add_option("--points", g_points, "grid size");

    auto* nv = app.add_subcommand("nevanlinna", "counting, proximity and characteristic at r");
    std::string n_spec;
    double n_r = 10;
    nv->add_option("spec", n_spec, "function spec")->required();
    nv->add_option("--r", n_r, "radius")->required();

    auto* vf = app.add_subcommand("verify", "run verification experiments E1..E5");
    std::vector<std::string> v_ids;
    std::string v_config;
    std::vector<std::string> v_sets;
    vf->add_option("experiments", v_ids, "E1..E5 or 'all'")->required();
    vf->add_option("--config", v_config, "key=value config file");
    vf->add_option("--set", v_sets, "inline key=value override (repeatable)");

    auto* pg = app.add_subcommand("polygon", "Newton-Puiseux diagram of an equation file");
    std::string p_path, p_form = "auto";
    pg->add_option("equation-file", p_path)->required();
    pg->add_option("--form", p_form, "shift or difference")
        ->check(CLI::IsMember({"auto", "shift", "difference"}));

    auto* os = app.add_subcommand("opseries", "coefficients of the k-th difference in powers of D");
    int o_k = 1, o_M = 8;
    os->add_option("--k", o_k, "difference order")->required();
    os->add_option("--order", o_M, "truncation order M")->required();

    auto* dl = app.add_subcommand("delta", "evaluate Delta^k f at a point");
    std::string d_spec, d_z = "0", d_eta = "1";
    int d_k = 1;
    dl->add_option("spec", d_spec, "function spec")->required();
    dl->add_option("--z", d_z, "evaluation point")->required();
    dl->add_option("--eta", d_eta, "step");
    dl->add_option("--k", d_k, "difference order");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*g) return cmd_growth(g_spec, g_rmin, g_rmax, g_points, format, out_path);
        if (*nv) return cmd_nevanlinna(n_spec, n_r, format, out_path);
        if (*vf) return cmd_verify(v_ids, v_config, v_sets, format, out_path);
        if (*pg) return cmd_polygon(p_path, p_form == "auto" ? "" : p_form, format, out_path);
        if (*os) return cmd_opseries(o_k, o_M, format, out_path);
        if (*dl) return cmd_delta(d_spec, d_z, d_eta, d_k, format, out_path);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
