#include "spincirc/io.hpp"

#include <cstdio>
#include <ostream>
#include <set>

#include <json.hpp>

#include "spincirc/errors.hpp"

namespace spincirc {

namespace {

using nlohmann::json;

void check_keys(const json& obj, const std::string& where,
                const std::set<std::string>& allowed) {
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!allowed.count(it.key()))
            throw invalid_parameter("unknown key \"" + it.key() + "\" in \"" +
                                    where + "\"");
}

double get_num(const json& obj, const std::string& where, const std::string& key) {
    if (!obj.contains(key))
        throw invalid_parameter("missing key \"" + key + "\" in \"" + where + "\"");
    const auto& v = obj.at(key);
    if (!v.is_number())
        throw invalid_parameter("key \"" + key + "\" in \"" + where +
                                "\" must be a number");
    return v.get<double>();
}

double get_num_or(const json& obj, const std::string& where,
                  const std::string& key, double fallback) {
    return obj.contains(key) ? get_num(obj, where, key) : fallback;
}

}  // namespace

ConfigBundle parse_config(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw invalid_parameter(std::string("config parse error: ") + e.what());
    }
    if (!doc.is_object())
        throw invalid_parameter("config root must be a JSON object");
    check_keys(doc, "config", {"physical", "spin", "reduced"});
    if (!doc.contains("physical") || !doc.contains("spin"))
        throw invalid_parameter("config requires \"physical\" and \"spin\" objects");

    const json& phys = doc.at("physical");
    check_keys(phys, "physical",
               {"radius_m", "index", "dn_dlambda", "wavelength_m", "quality",
                "speed_light_mps", "group_velocity_mps", "coupling_a",
                "coupling_b", "j_rad_s"});
    ConfigBundle b;
    b.physical.radius = get_num(phys, "physical", "radius_m");
    b.physical.index = get_num(phys, "physical", "index");
    b.physical.dn_dlambda = get_num_or(phys, "physical", "dn_dlambda", 0.0);
    b.physical.wavelength = get_num(phys, "physical", "wavelength_m");
    b.physical.quality = get_num(phys, "physical", "quality");
    b.physical.speed_light = get_num_or(phys, "physical", "speed_light_mps", 3e8);
    b.physical.group_velocity = get_num(phys, "physical", "group_velocity_mps");
    b.physical.coupling_a = get_num(phys, "physical", "coupling_a");
    b.physical.coupling_b = get_num(phys, "physical", "coupling_b");
    b.physical.inter_coupling = get_num(phys, "physical", "j_rad_s");

    const json& spin = doc.at("spin");
    check_keys(spin, "spin",
               {"omega1_rad_s", "omega2_rad_s", "chi1_rad_s", "chi2_rad_s"});
    b.spin.omega_1 = get_num(spin, "spin", "omega1_rad_s");
    b.spin.omega_2 = get_num(spin, "spin", "omega2_rad_s");
    b.spin.chi_1 = get_num(spin, "spin", "chi1_rad_s");
    b.spin.chi_2 = get_num(spin, "spin", "chi2_rad_s");

    b.physical.validate();
    b.spin.validate();
    b.reduced = to_reduced(b.physical, b.spin);

    if (doc.contains("reduced")) {
        b.has_override = true;
        const json& red = doc.at("reduced");
        check_keys(red, "reduced",
                   {"gamma_a", "gamma_b", "j", "delta_f1", "delta_f2", "chi_1",
                    "chi_2"});
        b.reduced.gamma_a = get_num_or(red, "reduced", "gamma_a", b.reduced.gamma_a);
        b.reduced.gamma_b = get_num_or(red, "reduced", "gamma_b", b.reduced.gamma_b);
        b.reduced.j = get_num_or(red, "reduced", "j", b.reduced.j);
        b.reduced.delta_f1 = get_num_or(red, "reduced", "delta_f1", b.reduced.delta_f1);
        b.reduced.delta_f2 = get_num_or(red, "reduced", "delta_f2", b.reduced.delta_f2);
        b.reduced.chi_1 = get_num_or(red, "reduced", "chi_1", b.reduced.chi_1);
        b.reduced.chi_2 = get_num_or(red, "reduced", "chi_2", b.reduced.chi_2);
        b.reduced.validate();
    }
    return b;
}

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void write_csv(const SweepResult& result, std::ostream& sink) {
    sink << "delta";
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j) sink << ",T" << i << j;
    sink << '\n';
    for (std::size_t k = 0; k < result.deltas.size(); ++k) {
        sink << format_double(result.deltas[k]);
        const auto& t = result.tables[k];
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) sink << ',' << format_double(t(j, i));
        sink << '\n';
    }
    if (!sink) throw std::runtime_error("failed writing CSV output");
}

}  // namespace spincirc
