#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "spincirc/analysis.hpp"
#include "spincirc/errors.hpp"
#include "spincirc/io.hpp"
#include "spincirc/oracle.hpp"
#include "spincirc/params.hpp"
#include "spincirc/validate.hpp"

namespace {

using nlohmann::json;
using namespace spincirc;

constexpr const char* kUnitNote =
    "All frequencies, rates and detunings are angular frequencies in rad/s. "
    "Figure-style labels kHz/MHz are read as 1e3/1e6 rad/s with no 2*pi factor.";

// Resolved parameter source: preset or config file.
struct Source {
    ReducedParams reduced;
    double sweep_min = -8e6;
    double sweep_max = 8e6;
    bool single_resonator = false;
    std::string label;
};

Source resolve(const std::string& preset_name, const std::string& config_path) {
    const bool has_preset = !preset_name.empty();
    const bool has_config = !config_path.empty();
    if (has_preset == has_config)
        throw invalid_parameter("exactly one of --preset or --config is required");
    Source s;
    if (has_preset) {
        const Preset& p = load_preset(preset_name);
        s.reduced = p.reduced();
        s.sweep_min = p.sweep_min;
        s.sweep_max = p.sweep_max;
        s.single_resonator = p.single_resonator;
        s.label = p.name;
    } else {
        std::ifstream in(config_path);
        if (!in) throw invalid_parameter("cannot open config file: " + config_path);
        std::stringstream buf;
        buf << in.rdbuf();
        const ConfigBundle b = parse_config(buf.str());
        s.reduced = b.reduced;
        s.label = config_path;
    }
    return s;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << text;
    if (!out) throw std::runtime_error("failed writing: " + out_path);
}

json smatrix_json(const SMatrix& s) {
    const Eigen::Matrix4d t = transmission(s);
    json js = json::object();
    js["delta_rad_s"] = s.delta;
    json amp = json::array();
    json prob = json::array();
    for (int i = 0; i < 4; ++i) {  // input port i+1
        json arow = json::array();
        json prow = json::array();
        for (int j = 0; j < 4; ++j) {  // output port j+1
            arow.push_back({{"re", s.entries(j, i).real()},
                            {"im", s.entries(j, i).imag()}});
            prow.push_back(t(j, i));
        }
        amp.push_back(arow);
        prob.push_back(prow);
    }
    js["t_amplitude"] = amp;  // [input-1][output-1]
    js["t_probability"] = prob;
    return js;
}

json point_json(const CirculatorPoint& p) {
    return {{"delta_rad_s", p.delta},
            {"direction", direction_name(p.direction)},
            {"cycle", p.cycle},
            {"fidelity", p.fidelity},
            {"mean_fidelity", p.mean_fidelity}};
}

SweepResult run_sweep(const Source& src, double dmin, double dmax, int steps) {
    if (src.single_resonator) {
        const auto& rp = src.reduced;
        return sweep_single(rp.gamma_a, rp.gamma_b, rp.delta_f1, rp.chi_1, dmin,
                            dmax, steps);
    }
    return sweep(src.reduced, dmin, dmax, steps);
}

int cmd_spectrum(const Source& src, std::optional<double> dmin,
                 std::optional<double> dmax, int steps, const std::string& format,
                 const std::string& out) {
    const double lo = dmin.value_or(src.sweep_min);
    const double hi = dmax.value_or(src.sweep_max);
    const SweepResult r = run_sweep(src, lo, hi, steps);
    if (format == "csv") {
        std::ostringstream sink;
        write_csv(r, sink);
        emit(sink.str(), out);
    } else {
        json js = json::array();
        for (std::size_t k = 0; k < r.deltas.size(); ++k) {
            json row = {{"delta_rad_s", r.deltas[k]}, {"t", json::array()}};
            for (int i = 0; i < 4; ++i) {
                json prow = json::array();
                for (int j = 0; j < 4; ++j) prow.push_back(r.tables[k](j, i));
                row["t"].push_back(prow);
            }
            js.push_back(row);
        }
        emit(js.dump(2) + "\n", out);
    }
    return 0;
}

int cmd_smatrix(const Source& src, double delta, const std::string& out) {
    SMatrix s;
    if (src.single_resonator) {
        const auto& rp = src.reduced;
        s = single_resonator_smatrix(rp.gamma_a, rp.gamma_b, rp.delta_f1, rp.chi_1,
                                     delta);
    } else {
        s = smatrix(src.reduced, delta);
    }
    emit(smatrix_json(s).dump(2) + "\n", out);
    return 0;
}

int cmd_points(const Source& src, std::optional<double> dmin,
               std::optional<double> dmax, double threshold,
               const std::string& out) {
    if (src.single_resonator)
        throw invalid_parameter("points requires a two-resonator parameter set");
    const double lo = dmin.value_or(src.sweep_min);
    const double hi = dmax.value_or(src.sweep_max);
    const auto points = find_circulator_points(src.reduced, lo, hi, threshold);

    json js;
    js["threshold"] = threshold;
    js["points"] = json::array();
    for (const auto& p : points) js["points"].push_back(point_json(p));
    js["closed_form_candidates"] = json::array();
    if (src.reduced.chi_1 == 0.0 && src.reduced.chi_2 == 0.0) {
        for (const auto& c : closed_form_points(src.reduced))
            js["closed_form_candidates"].push_back(
                {{"delta_rad_s", c.delta}, {"direction", direction_name(c.direction)}});
    } else {
        js["note"] = "closed-form candidates exist only without backscattering";
    }
    emit(js.dump(2) + "\n", out);
    return 0;
}

int cmd_routing(const Source& src, const std::string& out) {
    if (src.single_resonator)
        throw invalid_parameter("routing requires a two-resonator parameter set");
    const RoutingResult r = find_complete_routing(src.reduced);
    const char* matched = r.matched == RoutingFormula::minus  ? "sqrt(J^2 - Ga*Gb)"
                          : r.matched == RoutingFormula::plus ? "sqrt(J^2 + Ga*Gb)"
                                                              : "none";
    json js = {{"delta_star_rad_s", r.delta_star},
               {"shift_star_rad_s", r.shift_star},
               {"min_cross", r.min_cross},
               {"matched_formula", matched},
               {"candidate_plus_rad_s", r.candidate_plus},
               {"candidate_minus_rad_s", r.candidate_minus}};
    emit(js.dump(2) + "\n", out);
    return 0;
}

int cmd_robustness(const std::string& scenario_file, std::optional<double> dmin,
                   std::optional<double> dmax, const std::string& out) {
    std::ifstream in(scenario_file);
    if (!in) throw invalid_parameter("cannot open scenario file: " + scenario_file);
    std::stringstream buf;
    buf << in.rdbuf();
    json doc;
    try {
        doc = json::parse(buf.str());
    } catch (const json::parse_error& e) {
        throw invalid_parameter(std::string("scenario file parse error: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("scenarios") ||
        !doc.at("scenarios").is_array())
        throw invalid_parameter("scenario file needs a \"scenarios\" array");

    std::vector<std::pair<std::string, ReducedParams>> scenarios;
    for (const auto& sc : doc.at("scenarios")) {
        if (!sc.is_object() || !sc.contains("label"))
            throw invalid_parameter("each scenario needs a \"label\"");
        const std::string label = sc.at("label").get<std::string>();
        if (sc.contains("preset") == sc.contains("config"))
            throw invalid_parameter("scenario \"" + label +
                                    "\" needs exactly one of preset/config");
        if (sc.contains("preset")) {
            scenarios.emplace_back(
                label, load_preset(sc.at("preset").get<std::string>()).reduced());
        } else {
            scenarios.emplace_back(label,
                                   parse_config(sc.at("config").dump()).reduced);
        }
    }
    const double lo = dmin.value_or(
        doc.contains("delta_min") ? doc.at("delta_min").get<double>() : -8e6);
    const double hi = dmax.value_or(
        doc.contains("delta_max") ? doc.at("delta_max").get<double>() : 8e6);

    json js = json::array();
    for (const auto& r : backscatter_report(scenarios, lo, hi))
        js.push_back({{"label", r.label},
                      {"peak_t13", r.peak},
                      {"peak_delta_rad_s", r.location}});
    emit(js.dump(2) + "\n", out);
    return 0;
}

json preset_json(const Preset& p) {
    const ReducedParams rp = p.reduced();
    return {{"name", p.name},
            {"label", p.label},
            {"single_resonator", p.single_resonator},
            {"sweep_min_rad_s", p.sweep_min},
            {"sweep_max_rad_s", p.sweep_max},
            {"physical",
             {{"radius_m", p.physical.radius},
              {"index", p.physical.index},
              {"dn_dlambda", p.physical.dn_dlambda},
              {"wavelength_m", p.physical.wavelength},
              {"quality", p.physical.quality},
              {"speed_light_mps", p.physical.speed_light},
              {"group_velocity_mps", p.physical.group_velocity},
              {"coupling_a", p.physical.coupling_a},
              {"coupling_b", p.physical.coupling_b},
              {"j_rad_s", p.physical.inter_coupling}}},
            {"spin",
             {{"omega1_rad_s", p.spin.omega_1},
              {"omega2_rad_s", p.spin.omega_2},
              {"chi1_rad_s", p.spin.chi_1},
              {"chi2_rad_s", p.spin.chi_2}}},
            {"reduced",
             {{"gamma_a", rp.gamma_a},
              {"gamma_b", rp.gamma_b},
              {"j", rp.j},
              {"delta_f1", rp.delta_f1},
              {"delta_f2", rp.delta_f2},
              {"chi_1", rp.chi_1},
              {"chi_2", rp.chi_2}}}};
}

int cmd_preset(bool list, const std::string& show, const std::string& out) {
    if (list == !show.empty())
        throw invalid_parameter("preset: use exactly one of --list or --show NAME");
    if (list) {
        std::ostringstream sink;
        for (const auto& name : preset_names())
            sink << name << "  -  " << load_preset(name).label << "\n";
        emit(sink.str(), out);
    } else {
        emit(preset_json(load_preset(show)).dump(2) + "\n", out);
    }
    return 0;
}

int cmd_validate(int samples, std::uint64_t seed, const std::string& out) {
    const auto results = run_validation(samples, seed);
    std::ostringstream sink;
    sink << "validation suites (" << samples << " samples, seed " << seed << ")\n";
    for (const auto& r : results) {
        sink << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << "  max_error "
             << format_double(r.max_error) << "  tolerance "
             << format_double(r.tolerance) << "\n";
    }
    const bool ok = all_passed(results);
    sink << (ok ? "all suites passed\n" : "SUITE FAILURES PRESENT\n");
    emit(sink.str(), out);
    return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{std::string("spincirc - single-photon transport through two "
                             "spinning resonators coupled to two waveguides.\n") +
                 kUnitNote};
    app.require_subcommand(1);

    std::string preset_name, config_path, out_path, format = "csv", show_name;
    std::string scenario_file;
    std::optional<double> dmin, dmax;
    int steps = 2001;
    double delta = 0.0, threshold = 0.9;
    int samples = 1000;
    std::uint64_t seed = 42;
    bool list_presets = false;

    auto add_source = [&](CLI::App* cmd) {
        cmd->add_option("--preset", preset_name, "named parameter set (see `preset --list`)");
        cmd->add_option("--config", config_path, "JSON configuration file");
        cmd->add_option("--out", out_path, "output file (default: stdout)");
    };
    auto add_window = [&](CLI::App* cmd) {
        cmd->add_option("--delta-min", dmin, "sweep start, rad/s");
        cmd->add_option("--delta-max", dmax, "sweep end, rad/s");
    };

    auto* sp = app.add_subcommand("spectrum", "transmission tables over a detuning grid");
    add_source(sp);
    add_window(sp);
    sp->add_option("--steps", steps, "grid points (>= 2)")->capture_default_str();
    sp->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();

    auto* sm = app.add_subcommand("smatrix", "full complex S and T at one detuning");
    add_source(sm);
    sm->add_option("--delta", delta, "detuning, rad/s")->required();
    sm->add_option("--format", format, "json")->check(CLI::IsMember({"json"}));

    auto* pt = app.add_subcommand("points", "detect circulator operating points");
    add_source(pt);
    add_window(pt);
    pt->add_option("--threshold", threshold, "minimum circulation fidelity")
        ->check(CLI::Range(1e-9, 1.0))
        ->capture_default_str();

    auto* rt = app.add_subcommand("routing", "complete-routing search report");
    add_source(rt);

    auto* rb = app.add_subcommand("robustness", "peak T13 per backscattering scenario");
    rb->add_option("--scenario-file", scenario_file, "JSON scenario list")->required();
    rb->add_option("--out", out_path, "output file (default: stdout)");
    add_window(rb);

    auto* pr = app.add_subcommand("preset", "catalog dump");
    pr->add_flag("--list", list_presets, "list preset names");
    pr->add_option("--show", show_name, "show one preset as JSON");
    pr->add_option("--out", out_path, "output file (default: stdout)");

    auto* vd = app.add_subcommand("validate", "run the randomized invariant suites");
    vd->add_option("--samples", samples, "samples per suite")->capture_default_str();
    vd->add_option("--seed", seed, "RNG seed")->capture_default_str();
    vd->add_option("--out", out_path, "output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (sp->parsed())
            return cmd_spectrum(resolve(preset_name, config_path), dmin, dmax,
                                steps, format, out_path);
        if (sm->parsed())
            return cmd_smatrix(resolve(preset_name, config_path), delta, out_path);
        if (pt->parsed())
            return cmd_points(resolve(preset_name, config_path), dmin, dmax,
                              threshold, out_path);
        if (rt->parsed())
            return cmd_routing(resolve(preset_name, config_path), out_path);
        if (rb->parsed()) return cmd_robustness(scenario_file, dmin, dmax, out_path);
        if (pr->parsed()) return cmd_preset(list_presets, show_name, out_path);
        if (vd->parsed()) return cmd_validate(samples, seed, out_path);
    } catch (const invalid_parameter& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const singular_resolvent& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 2;
    } catch (const non_convergence& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
