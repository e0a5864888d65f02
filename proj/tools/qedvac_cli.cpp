// qedvac — command-line front end for the vacuum-screening calculation
// library. Subcommands: running, landau, vacuum, sum-charges, schwinger,
// focal, blackbody, particles.
//
// Exit codes: 0 success; 2 input/validation problems (bad flags, bad files,
// out-of-domain arguments); 3 numeric conditions (momentum past the pair
// threshold, the zero-volume divergence).
//
// Every output is wrapped in an envelope {command, inputs_echo, results,
// warnings}; inputs_echo carries all resolved inputs in SI units so a result
// can be reproduced from its own header. Payloads contain no timestamps; the
// version banner goes to standard error and --no-banner silences it.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qedvac/qedvac.hpp"

using nlohmann::ordered_json;
using namespace qedvac;

namespace {

constexpr const char* kVersion = "0.1.0";

#ifndef QEDVAC_DATA_DIR
#define QEDVAC_DATA_DIR "data"
#endif

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

struct GlobalOpts {
    std::string constants_path;
    std::string particles_path;
    std::string set_label = "SM-with-W";
    std::string format = "table";
    bool no_banner = false;
};

std::string resolve_constants_path(const GlobalOpts& g) {
    if (!g.constants_path.empty())
        return g.constants_path;
    return std::string(QEDVAC_DATA_DIR) + "/codata2018.txt";
}

ParticleSet resolve_particles(const GlobalOpts& g) {
    if (!g.particles_path.empty())
        return load_particles(g.particles_path);
    std::string file;
    if (g.set_label == "SM-with-W")
        file = "sm_with_w.csv";
    else if (g.set_label == "SM-fermions")
        file = "sm_fermions.csv";
    else
        throw ValidationError("unknown particle set '" + g.set_label +
                              "'; bundled sets: SM-fermions, SM-with-W");
    return load_particles(std::string(QEDVAC_DATA_DIR) + "/particles/" + file,
                          g.set_label);
}

const Particle& find_particle(const ParticleSet& set, const std::string& name) {
    const Particle* p = set.find(name);
    if (!p)
        throw ValidationError("particle '" + name + "' not in set '" +
                              set.label() + "'");
    return *p;
}

// Strict unit-suffixed momentum: "<number>GeV/c", "<number>GeV" or
// "<number>/m" (wavenumber). No locale, no whitespace.
double parse_momentum_to_wavenumber(const std::string& text,
                                    const PhysicalConstants& c) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &pos);
    } catch (const std::exception&) {
        throw ValidationError("momentum '" + text + "': unparsable number");
    }
    const std::string unit = text.substr(pos);
    if (unit == "GeV/c" || unit == "GeV")
        return wavenumber_from_gev(v, c);
    if (unit == "/m") {
        if (v < 0.0)
            throw DomainError("momentum '" + text + "': must be nonnegative");
        return v;
    }
    throw ValidationError("momentum '" + text +
                          "': unit must be GeV/c, GeV or /m");
}

// Strict unit-suffixed volume: "<number>um3" or "<number>m3".
double parse_volume_m3(const std::string& text) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &pos);
    } catch (const std::exception&) {
        throw ValidationError("volume '" + text + "': unparsable number");
    }
    const std::string unit = text.substr(pos);
    if (unit == "um3")
        return v * 1e-18;
    if (unit == "m3")
        return v;
    throw ValidationError("volume '" + text + "': unit must be um3 or m3");
}

struct Tabular {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

void flatten_into(const ordered_json& j, const std::string& prefix,
                  std::vector<std::pair<std::string, std::string>>& out) {
    if (j.is_object()) {
        for (const auto& item : j.items())
            flatten_into(item.value(),
                         prefix.empty() ? item.key() : prefix + "." + item.key(),
                         out);
    } else if (j.is_array()) {
        int i = 0;
        for (const auto& el : j)
            flatten_into(el, prefix + "[" + std::to_string(i++) + "]", out);
    } else if (j.is_string()) {
        out.emplace_back(prefix, j.get<std::string>());
    } else {
        out.emplace_back(prefix, j.dump());
    }
}

void emit(const GlobalOpts& g, const std::string& command,
          const ordered_json& inputs, const ordered_json& results,
          const std::vector<std::string>& warnings,
          const Tabular* table = nullptr) {
    if (g.format == "json") {
        ordered_json env;
        env["command"] = command;
        env["inputs_echo"] = inputs;
        env["results"] = results;
        env["warnings"] = warnings;
        std::cout << env.dump(2) << "\n";
        return;
    }
    for (const auto& w : warnings)
        std::cerr << "warning: " << w << "\n";
    if (g.format == "csv") {
        if (table) {
            for (std::size_t i = 0; i < table->header.size(); ++i)
                std::cout << (i ? "," : "") << table->header[i];
            std::cout << "\n";
            for (const auto& row : table->rows) {
                for (std::size_t i = 0; i < row.size(); ++i)
                    std::cout << (i ? "," : "") << row[i];
                std::cout << "\n";
            }
        } else {
            std::vector<std::pair<std::string, std::string>> kv;
            flatten_into(results, "", kv);
            std::cout << "key,value\n";
            for (const auto& [k, v] : kv)
                std::cout << k << "," << v << "\n";
        }
        return;
    }
    // table format
    if (table) {
        std::vector<std::size_t> width(table->header.size());
        for (std::size_t i = 0; i < table->header.size(); ++i)
            width[i] = table->header[i].size();
        for (const auto& row : table->rows)
            for (std::size_t i = 0; i < row.size(); ++i)
                width[i] = std::max(width[i], row[i].size());
        auto line = [&](const std::vector<std::string>& cells) {
            for (std::size_t i = 0; i < cells.size(); ++i) {
                std::cout << cells[i];
                if (i + 1 < cells.size())
                    std::cout << std::string(width[i] - cells[i].size() + 2,
                                             ' ');
            }
            std::cout << "\n";
        };
        line(table->header);
        for (const auto& row : table->rows)
            line(row);
    } else {
        std::vector<std::pair<std::string, std::string>> kv;
        flatten_into(results, "", kv);
        std::size_t w = 0;
        for (const auto& [k, v] : kv)
            w = std::max(w, k.size());
        for (const auto& [k, v] : kv)
            std::cout << k << std::string(w - k.size() + 2, ' ') << v << "\n";
    }
}

ordered_json base_inputs(const GlobalOpts& g, bool with_particles) {
    ordered_json in;
    in["constants_path"] = resolve_constants_path(g);
    if (with_particles) {
        if (!g.particles_path.empty())
            in["particles_path"] = g.particles_path;
        else
            in["set"] = g.set_label;
    }
    in["format"] = g.format;
    return in;
}

std::string charge_display(const Particle& p) {
    if (p.charge_fraction) {
        if (p.charge_fraction->den == 1)
            return std::to_string(p.charge_fraction->num);
        return std::to_string(p.charge_fraction->num) + "/" +
               std::to_string(p.charge_fraction->den);
    }
    return fmt(p.charge_ratio);
}

// ---------------------------------------------------------------- running

struct RunningArgs {
    std::string k_text;
    std::string sweep_text;
    std::string mode_text = "consistent";
};

RunningMode parse_mode(const std::string& text) {
    return text == "paper-literal" ? RunningMode::paper_literal
                                   : RunningMode::consistent;
}

void run_running(const GlobalOpts& g, const RunningArgs& a) {
    const auto consts = load_constants(resolve_constants_path(g));
    const auto set = resolve_particles(g);
    if (a.k_text.empty() == a.sweep_text.empty())
        throw ValidationError("running: give exactly one of --k or --sweep");
    const RunningMode mode = parse_mode(a.mode_text);

    std::vector<double> ks;
    ordered_json inputs = base_inputs(g, true);
    inputs["mode"] = to_string(mode);
    if (!a.k_text.empty()) {
        ks.push_back(parse_momentum_to_wavenumber(a.k_text, consts));
        inputs["k_inv_m"] = ks.front();
    } else {
        const auto comma = a.sweep_text.find(',');
        if (comma == std::string::npos)
            throw ValidationError("running: sweep must be "
                                  "start:stop:points,log|lin");
        const std::string head = a.sweep_text.substr(0, comma);
        const std::string scale = a.sweep_text.substr(comma + 1);
        const auto c1 = head.find(':');
        const auto c2 = head.rfind(':');
        if (c1 == std::string::npos || c2 == c1)
            throw ValidationError("running: sweep must be "
                                  "start:stop:points,log|lin");
        SweepSpec spec{};
        spec.start = parse_momentum_to_wavenumber(head.substr(0, c1), consts);
        spec.stop =
            parse_momentum_to_wavenumber(head.substr(c1 + 1, c2 - c1 - 1),
                                         consts);
        try {
            std::size_t pos = 0;
            const std::string pts = head.substr(c2 + 1);
            spec.points = std::stoi(pts, &pos);
            if (pos != pts.size())
                throw ValidationError("");
        } catch (const std::exception&) {
            throw ValidationError("running: malformed sweep point count");
        }
        if (spec.points < 1)
            throw ValidationError("running: sweep points must be >= 1");
        if (scale == "log")
            spec.logarithmic = true;
        else if (scale == "lin")
            spec.logarithmic = false;
        else
            throw ValidationError("running: sweep scale must be log or lin");
        if (spec.logarithmic && !(spec.start > 0.0))
            throw ValidationError("running: log sweep needs positive start");
        ks = make_grid(spec);
        inputs["sweep"] = {{"start_inv_m", spec.start},
                           {"stop_inv_m", spec.stop},
                           {"points", spec.points},
                           {"scale", scale}};
    }

    std::vector<std::string> warnings;
    if (mode == RunningMode::paper_literal)
        warnings.push_back(
            "paper-literal mode: prefactor 1/(3 pi) on the integral does not "
            "reproduce the leading-log pole condition");

    Tabular tab;
    tab.header = {"k_inv_m", "k_gev_per_c"};
    for (const auto& p : set.particles())
        tab.header.push_back("z_" + p.name);
    for (const auto& p : set.particles())
        tab.header.push_back("shift_" + p.name);
    tab.header.push_back("alpha_inverse");
    tab.header.push_back("alpha");

    ordered_json rows = ordered_json::array();
    for (double k : ks) {
        const auto r = alpha_inverse_at(set, k, consts, mode);
        ordered_json row;
        row["k_inv_m"] = k;
        row["k_gev_per_c"] = gev_from_wavenumber(k, consts);
        ordered_json zj, sj;
        std::vector<std::string> cells = {fmt(k),
                                          fmt(gev_from_wavenumber(k, consts))};
        for (const auto& s : r.per_species_shift) {
            zj[s.name] = s.z;
            cells.push_back(fmt(s.z));
        }
        for (const auto& s : r.per_species_shift)
            sj[s.name] = s.shift;
        for (const auto& s : r.per_species_shift)
            cells.push_back(fmt(s.shift));
        row["per_species_z"] = zj;
        row["per_species_shift"] = sj;
        row["alpha_inverse"] = r.alpha_inverse;
        row["alpha"] = 1.0 / r.alpha_inverse;
        cells.push_back(fmt(r.alpha_inverse));
        cells.push_back(fmt(1.0 / r.alpha_inverse));
        rows.push_back(row);
        tab.rows.push_back(cells);
    }

    ordered_json results;
    results["mode"] = to_string(mode);
    results["alpha_inverse_zero"] = consts.alpha_inverse_exp;
    results["rows"] = rows;
    emit(g, "running", inputs, results, warnings, &tab);
}

// ----------------------------------------------------------------- landau

struct LandauArgs {
    std::string mode_text = "consistent";
    int zeldovich_nu = 0;  // 0 = off
    bool planck = false;
};

void run_landau(const GlobalOpts& g, const LandauArgs& a) {
    const auto consts = load_constants(resolve_constants_path(g));
    const auto set = resolve_particles(g);
    const RunningMode mode = parse_mode(a.mode_text);

    std::vector<std::string> warnings;
    if (mode == RunningMode::paper_literal)
        warnings.push_back(
            "pole condition uses the leading-log asymptotic form; the mode "
            "flag affects only the integral-form running");

    const double t = landau_pole(set, consts);
    const double m_ref = lightest_mass(set);
    const double residual =
        std::abs(landau_forward(set, consts, t) - consts.alpha_inverse_exp);
    // ln(Lambda) in GeV/c without ever forming e^t: Lambda = m_ref c e^t.
    const double log10_gev =
        (t + std::log(m_ref * consts.c_rel /
                      (1e9 * consts.elementary_charge / consts.c_rel))) /
        std::numbers::ln10;
    const double expo = std::floor(log10_gev);
    char lambda_str[64];
    std::snprintf(lambda_str, sizeof(lambda_str), "%.6ge%+03d GeV/c",
                  std::pow(10.0, log10_gev - expo), static_cast<int>(expo));

    ordered_json inputs = base_inputs(g, true);
    inputs["mode"] = to_string(mode);

    ordered_json results;
    results["set"] = set.label();
    results["m_ref_kg"] = m_ref;
    results["log_lambda_over_mc_ref"] = t;
    results["log10_lambda_gev_per_c"] = log10_gev;
    results["lambda_gev_per_c"] = lambda_str;
    results["residual"] = residual;

    if (a.zeldovich_nu > 0) {
        double t_z = t;
        ordered_json zj;
        zj["nu_types"] = a.zeldovich_nu;
        if (a.planck) {
            const double p_pl = planck_momentum(consts);
            t_z = std::log(p_pl / (m_ref * consts.c_rel));
            zj["planck_momentum_kg_m_s"] = p_pl;
        }
        zj["log_lambda_over_mc"] = t_z;
        zj["alpha_inverse"] = zeldovich_alpha_inverse(a.zeldovich_nu, t_z);
        results["zeldovich"] = zj;
    } else if (a.planck) {
        throw ValidationError("landau: --planck requires --zeldovich <nu>");
    }
    emit(g, "landau", inputs, results, warnings);
}

// ----------------------------------------------------------------- vacuum

struct VacuumArgs {
    int option = 0;
    std::string show = "all";
};

void run_vacuum(const GlobalOpts& g, const VacuumArgs& a) {
    const auto consts = load_constants(resolve_constants_path(g));
    const auto set = resolve_particles(g);
    const VolumeOption option = volume_option_from_id(a.option);

    ordered_json inputs = base_inputs(g, true);
    inputs["option"] = a.option;
    inputs["show"] = a.show;

    const auto r = evaluate_vacuum_model(set, option, consts);

    ordered_json results;
    results["option"] = to_id(r.option);
    results["option_label"] = option_label(r.option);
    results["kappa"] = kappa(r.option);
    results["set"] = r.set_label;
    results["charge_sum"] = charge_sum(set);
    const bool all = a.show == "all";
    if (all || a.show == "eps0") {
        results["epsilon0_model"] = r.epsilon0_model;
        results["epsilon0_exp"] = consts.epsilon0_exp;
    }
    if (all || a.show == "mu0")
        results["mu0_model"] = r.mu0_model;
    if (all || a.show == "c") {
        results["c_model"] = r.c_model;
        results["c_rel"] = consts.c_rel;
    }
    if (all || a.show == "alpha") {
        results["alpha_inverse_model"] = r.alpha_inverse_model;
        results["alpha_inverse_exp"] = consts.alpha_inverse_exp;
    }
    emit(g, "vacuum", inputs, results, {});
}

// ------------------------------------------------------------ sum-charges

void run_sum_charges(const GlobalOpts& g, double alpha_inverse,
                     bool have_alpha) {
    const auto consts = load_constants(resolve_constants_path(g));
    const double a_inv = have_alpha ? alpha_inverse : consts.alpha_inverse_exp;

    ordered_json inputs = base_inputs(g, false);
    inputs["alpha_inverse"] = a_inv;

    const auto inv = invert_charge_sum(a_inv);
    ordered_json results;
    results["s_opt4"] = inv.s_opt4;
    results["s_opt5"] = inv.s_opt5;
    results["center"] = inv.center;
    results["halfspread"] = inv.halfspread;
    results["display"] = format_center_spread_tenths(inv);
    emit(g, "sum-charges", inputs, results, {});
}

// -------------------------------------------------------------- schwinger

struct SchwingerArgs {
    std::string particle = "electron";
    std::string variant_text = "model";
    bool intensity = false;
};

void run_schwinger(const GlobalOpts& g, const SchwingerArgs& a) {
    const auto consts = load_constants(resolve_constants_path(g));
    const auto set = resolve_particles(g);
    const Particle& p = find_particle(set, a.particle);
    const FieldVariant variant = a.variant_text == "sauter-bohr"
                                     ? FieldVariant::sauter_bohr
                                     : FieldVariant::model;

    ordered_json inputs = base_inputs(g, true);
    inputs["particle"] = p.name;
    inputs["mass_kg"] = p.mass;
    inputs["variant"] = to_string(variant);
    inputs["intensity"] = a.intensity;

    const auto r = limiting_field(p.mass, variant, consts);
    ordered_json results;
    results["variant"] = to_string(r.variant);
    results["factor"] = variant_factor(variant);
    results["field_v_per_m"] = r.field;
    results["conventional_field_v_per_m"] =
        conventional_field_scale(p.mass, consts);
    if (a.intensity)
        results["intensity_equiv_w_per_m2"] = r.intensity_equiv;
    emit(g, "schwinger", inputs, results, {});
}

// ------------------------------------------------------------------ focal

struct FocalArgs {
    std::string volume_text;
    double p = -1.0;
    std::string particle = "electron";
};

void run_focal(const GlobalOpts& g, const FocalArgs& a) {
    const auto consts = load_constants(resolve_constants_path(g));
    const auto set = resolve_particles(g);
    const Particle& part = find_particle(set, a.particle);
    if (a.volume_text.empty())
        throw ValidationError("focal: --volume is required");
    const double volume = parse_volume_m3(a.volume_text);

    ordered_json inputs = base_inputs(g, true);
    inputs["particle"] = part.name;
    inputs["mass_kg"] = part.mass;
    inputs["focal_volume_m3"] = volume;
    inputs["per_cell_probability"] = a.p;

    const auto r = focal_volume_relaxation(volume, a.p, part.mass, consts);
    ordered_json results;
    results["focal_volume_m3"] = r.focal_volume;
    results["cell_volume_m3"] = r.cell_volume;
    results["n_cells"] = r.n_cells;
    results["per_cell_probability"] = r.per_cell_probability;
    results["total_probability"] = r.total_probability;
    emit(g, "focal", inputs, results, {});
}

// -------------------------------------------------------------- blackbody

struct BlackbodyArgs {
    std::string law_text;
    double T = 0.0;
    std::optional<double> nu;
    std::string sweep_text;
    bool integrate = false;
    double nu_max = 0.0;
};

void run_blackbody(const GlobalOpts& g, const BlackbodyArgs& a) {
    const auto consts = load_constants(resolve_constants_path(g));
    SpectralLaw law;
    if (a.law_text == "rj")
        law = SpectralLaw::rj;
    else if (a.law_text == "planck1")
        law = SpectralLaw::planck1;
    else if (a.law_text == "planck2")
        law = SpectralLaw::planck2;
    else
        throw ValidationError("blackbody: law must be rj, planck1 or planck2");

    const int modes = (a.nu.has_value() ? 1 : 0) +
                      (!a.sweep_text.empty() ? 1 : 0) + (a.integrate ? 1 : 0);
    if (modes != 1)
        throw ValidationError(
            "blackbody: give exactly one of --nu, --sweep or --integrate");

    ordered_json inputs = base_inputs(g, false);
    inputs["law"] = to_string(law);
    inputs["temperature_k"] = a.T;

    if (a.integrate) {
        if (!(a.nu_max > 0.0))
            throw ValidationError(
                "blackbody: --integrate requires --nu-max > 0");
        inputs["nu_max_hz"] = a.nu_max;
        const auto q = spectral_integral(law, a.T, a.nu_max, consts);
        std::vector<std::string> warnings;
        if (!q.converged)
            warnings.push_back("quadrature did not reach tolerance; achieved "
                               "error estimate " +
                               fmt(q.error_estimate));
        ordered_json results;
        results["energy_density_j_per_m3"] = q.value;
        results["error_estimate"] = q.error_estimate;
        results["converged"] = q.converged;
        emit(g, "blackbody", inputs, results, warnings);
        return;
    }

    std::vector<double> nus;
    if (a.nu.has_value()) {
        if (*a.nu < 0.0)
            throw DomainError("blackbody: --nu must be nonnegative");
        nus.push_back(*a.nu);
        inputs["nu_hz"] = *a.nu;
    } else {
        const auto spec = parse_sweep(a.sweep_text);
        nus = make_grid(spec);
        inputs["sweep"] = {{"start_hz", spec.start},
                           {"stop_hz", spec.stop},
                           {"points", spec.points},
                           {"scale", spec.logarithmic ? "log" : "lin"}};
    }

    Tabular tab;
    tab.header = {"nu_hz", "temperature_k", "density_j_s_per_m3"};
    ordered_json rows = ordered_json::array();
    for (double nu : nus) {
        const double d = spectral_density(law, nu, a.T, consts);
        rows.push_back({{"nu_hz", nu},
                        {"temperature_k", a.T},
                        {"density_j_s_per_m3", d}});
        tab.rows.push_back({fmt(nu), fmt(a.T), fmt(d)});
    }
    ordered_json results;
    results["law"] = to_string(law);
    results["rows"] = rows;
    emit(g, "blackbody", inputs, results, {}, &tab);
}

// -------------------------------------------------------------- particles

void run_particles(const GlobalOpts& g) {
    const auto set = resolve_particles(g);

    ordered_json inputs = base_inputs(g, true);

    Tabular tab;
    tab.header = {"name", "charge_ratio", "mass_kg", "degeneracy", "kind"};
    ordered_json rows = ordered_json::array();
    for (const auto& p : set.particles()) {
        rows.push_back({{"name", p.name},
                        {"charge_ratio", p.charge_ratio},
                        {"charge", charge_display(p)},
                        {"mass_kg", p.mass},
                        {"degeneracy", p.degeneracy},
                        {"kind", to_string(p.kind)}});
        tab.rows.push_back({p.name, charge_display(p), fmt(p.mass),
                            std::to_string(p.degeneracy), to_string(p.kind)});
    }
    ordered_json results;
    results["set"] = set.label();
    results["count"] = static_cast<int>(set.size());
    results["charge_sum"] = charge_sum(set);
    results["rows"] = rows;
    emit(g, "particles", inputs, results, {}, &tab);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"vacuum-screening calculations: running coupling, "
                 "Landau pole, oscillator vacuum model, critical fields, "
                 "blackbody spectra"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts g;
    app.add_option("--constants", g.constants_path,
                   "constants fixture path (overrides bundled CODATA file)")
        ->envname("QEDVAC_CONSTANTS");
    app.add_option("--particles", g.particles_path,
                   "particle table path (overrides bundled sets)");
    app.add_option("--set", g.set_label,
                   "bundled particle set: SM-fermions or SM-with-W");
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "table"}));
    app.add_flag("--no-banner", g.no_banner, "suppress the version banner");

    RunningArgs run_args;
    auto* sc_running = app.add_subcommand(
        "running", "one-loop running coupling at a momentum scale");
    sc_running->add_option("--k", run_args.k_text,
                           "momentum: <value>GeV/c, <value>GeV or <value>/m");
    sc_running->add_option("--sweep", run_args.sweep_text,
                           "momentum sweep start:stop:points,log|lin "
                           "(unit suffix on start and stop)");
    sc_running->add_option("--mode", run_args.mode_text, "prefactor mode")
        ->check(CLI::IsMember({"consistent", "paper-literal"}));

    LandauArgs landau_args;
    auto* sc_landau =
        app.add_subcommand("landau", "pole scale of the inverse coupling");
    sc_landau->add_option("--mode", landau_args.mode_text, "prefactor mode")
        ->check(CLI::IsMember({"consistent", "paper-literal"}));
    sc_landau->add_option("--zeldovich", landau_args.zeldovich_nu,
                          "also report the equal-species closed form for "
                          "<nu> unit-charge types")
        ->check(CLI::PositiveNumber);
    sc_landau->add_flag("--planck", landau_args.planck,
                        "evaluate the closed form at the Planck momentum "
                        "(needs gravitational_constant in the fixture)");

    VacuumArgs vacuum_args;
    auto* sc_vacuum = app.add_subcommand(
        "vacuum", "oscillator model of the vacuum: eps0, mu0, c, alpha");
    sc_vacuum->add_option("--option", vacuum_args.option,
                          "volume-per-pair prescription 1..5")
        ->required()
        ->check(CLI::Range(1, 5));
    sc_vacuum->add_option("--show", vacuum_args.show, "which quantity")
        ->check(CLI::IsMember({"eps0", "mu0", "c", "alpha", "all"}));

    double sum_alpha_inverse = 0.0;
    auto* sc_sum = app.add_subcommand(
        "sum-charges", "invert the coupling relation for the charge sum");
    auto* sum_alpha_opt = sc_sum->add_option(
        "--alpha-inverse", sum_alpha_inverse,
        "inverse coupling to invert (default: fixture value)");

    SchwingerArgs schwinger_args;
    auto* sc_schwinger =
        app.add_subcommand("schwinger", "limiting-field estimate");
    sc_schwinger->add_option("--particle", schwinger_args.particle,
                             "particle name from the active set");
    sc_schwinger
        ->add_option("--variant", schwinger_args.variant_text, "field variant")
        ->check(CLI::IsMember({"model", "sauter-bohr"}));
    sc_schwinger->add_flag("--intensity", schwinger_args.intensity,
                           "include the plane-wave intensity equivalent");

    FocalArgs focal_args;
    auto* sc_focal = app.add_subcommand(
        "focal", "pair-creation probability over a focal volume");
    sc_focal
        ->add_option("--volume", focal_args.volume_text,
                     "focal volume: <value>um3 or <value>m3")
        ->required();
    sc_focal
        ->add_option("--p", focal_args.p,
                     "per-cell pair-creation probability in [0,1]")
        ->required();
    sc_focal->add_option("--particle", focal_args.particle,
                         "particle defining the cell size");

    BlackbodyArgs bb_args;
    auto* sc_bb =
        app.add_subcommand("blackbody", "spectral energy densities");
    sc_bb->add_option("--law", bb_args.law_text, "rj, planck1 or planck2")
        ->required()
        ->check(CLI::IsMember({"rj", "planck1", "planck2"}));
    sc_bb->add_option("--T", bb_args.T, "temperature [K]")->required();
    double bb_nu = 0.0;
    auto* bb_nu_opt = sc_bb->add_option("--nu", bb_nu, "frequency [Hz]");
    sc_bb->add_option("--sweep", bb_args.sweep_text,
                      "frequency sweep start:stop:points,log|lin [Hz]");
    sc_bb->add_flag("--integrate", bb_args.integrate,
                    "integrate the law from 0 to --nu-max");
    sc_bb->add_option("--nu-max", bb_args.nu_max,
                      "integration cutoff [Hz], used with --integrate");

    auto* sc_particles =
        app.add_subcommand("particles", "list the active particle set");

    try {
        app.parse(argc, argv);

        if (!g.no_banner)
            std::cerr << "qedvac " << kVersion << "\n";

        if (sc_running->parsed())
            run_running(g, run_args);
        else if (sc_landau->parsed())
            run_landau(g, landau_args);
        else if (sc_vacuum->parsed())
            run_vacuum(g, vacuum_args);
        else if (sc_sum->parsed())
            run_sum_charges(g, sum_alpha_inverse, sum_alpha_opt->count() > 0);
        else if (sc_schwinger->parsed())
            run_schwinger(g, schwinger_args);
        else if (sc_focal->parsed())
            run_focal(g, focal_args);
        else if (sc_bb->parsed()) {
            if (bb_nu_opt->count() > 0)
                bb_args.nu = bb_nu;
            run_blackbody(g, bb_args);
        } else if (sc_particles->parsed()) {
            run_particles(g);
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NumericError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
