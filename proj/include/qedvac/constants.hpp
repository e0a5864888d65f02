#ifndef QEDVAC_CONSTANTS_HPP
#define QEDVAC_CONSTANTS_HPP

// Physical constants loaded from a flat "name = value" fixture (SI values).
// Everything downstream reads constants exclusively through this struct; the
// struct is immutable after load and safe to share across threads.
//
// Fixture layout, one entry per line, '#' starts a comment:
//
//     elementary_charge  = 1.602176634e-19      # C
//     hbar               = 1.0545718176461565e-34
//     planck_h           = 6.62607015e-34
//     c_rel              = 299792458
//     boltzmann_k        = 1.380649e-23
//     epsilon0_exp       = 8.8541878128e-12
//     alpha_inverse_exp  = 137.035999084
//     gravitational_constant = 6.67430e-11      # optional
//
// c_rel is the limiting speed entering E = m c_rel^2, kept under its own name
// because the model-derived light speed is computed elsewhere and compared
// against it. Two consistency checks run at load time:
//     alpha_inverse_exp = 4 pi epsilon0_exp hbar c_rel / e^2   (1e-9 rel)
//     planck_h          = 2 pi hbar                            (1e-12 rel)

#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include "qedvac/detail/text.hpp"
#include "qedvac/errors.hpp"

namespace qedvac {

struct PhysicalConstants {
    double elementary_charge;  // C
    double hbar;               // J s
    double planck_h;           // J s
    double c_rel;              // m/s
    double boltzmann_k;        // J/K
    double epsilon0_exp;       // F/m
    double alpha_inverse_exp;  // dimensionless
    std::optional<double> gravitational_constant;  // m^3/(kg s^2)
};

// 4 pi epsilon0 hbar c / e^2 recomputed from the other fields.
inline double alpha_inverse_from_fields(const PhysicalConstants& c) {
    return 4.0 * std::numbers::pi * c.epsilon0_exp * c.hbar * c.c_rel /
           (c.elementary_charge * c.elementary_charge);
}

namespace detail {

inline double parse_positive(const std::map<std::string, double>& kv,
                             const std::string& key) {
    const auto it = kv.find(key);
    if (it == kv.end())
        throw SchemaError("constants fixture: missing field '" + key + "'");
    if (!(it->second > 0.0) || !std::isfinite(it->second))
        throw IntegrityError("constants fixture: field '" + key +
                             "' must be positive and finite");
    return it->second;
}

}  // namespace detail

inline PhysicalConstants load_constants(std::istream& in,
                                        const std::string& origin = "<stream>") {
    static const char* kKnown[] = {
        "elementary_charge", "hbar",         "planck_h",
        "c_rel",             "boltzmann_k",  "epsilon0_exp",
        "alpha_inverse_exp", "gravitational_constant"};

    std::map<std::string, double> kv;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        line = detail::trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw SchemaError(origin + ":" + std::to_string(lineno) +
                              ": expected 'name = value'");
        const std::string key = detail::trim(line.substr(0, eq));
        const std::string val = detail::trim(line.substr(eq + 1));
        bool known = false;
        for (const char* k : kKnown)
            known = known || key == k;
        if (!known)
            throw SchemaError(origin + ":" + std::to_string(lineno) +
                              ": unknown field '" + key + "'");
        if (kv.count(key))
            throw SchemaError(origin + ":" + std::to_string(lineno) +
                              ": duplicate field '" + key + "'");
        std::size_t pos = 0;
        double parsed = 0.0;
        try {
            parsed = std::stod(val, &pos);
        } catch (const std::exception&) {
            throw SchemaError(origin + ":" + std::to_string(lineno) +
                              ": unparsable value '" + val + "'");
        }
        if (pos != val.size())
            throw SchemaError(origin + ":" + std::to_string(lineno) +
                              ": trailing characters in value '" + val + "'");
        kv[key] = parsed;
    }

    PhysicalConstants c{};
    c.elementary_charge = detail::parse_positive(kv, "elementary_charge");
    c.hbar = detail::parse_positive(kv, "hbar");
    c.planck_h = detail::parse_positive(kv, "planck_h");
    c.c_rel = detail::parse_positive(kv, "c_rel");
    c.boltzmann_k = detail::parse_positive(kv, "boltzmann_k");
    c.epsilon0_exp = detail::parse_positive(kv, "epsilon0_exp");
    c.alpha_inverse_exp = detail::parse_positive(kv, "alpha_inverse_exp");
    if (kv.count("gravitational_constant"))
        c.gravitational_constant =
            detail::parse_positive(kv, "gravitational_constant");

    const double alpha_inv = alpha_inverse_from_fields(c);
    if (std::abs(alpha_inv - c.alpha_inverse_exp) >
        1e-9 * c.alpha_inverse_exp)
        throw IntegrityError(
            origin + ": alpha_inverse_exp inconsistent with "
            "4 pi epsilon0 hbar c / e^2 (got " +
            std::to_string(alpha_inv) + ")");
    if (std::abs(2.0 * std::numbers::pi * c.hbar - c.planck_h) >
        1e-12 * c.planck_h)
        throw IntegrityError(origin + ": planck_h is not 2 pi hbar");
    return c;
}

inline PhysicalConstants load_constants(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw SchemaError("constants fixture: cannot open '" + path + "'");
    return load_constants(in, path);
}

// Reduced Compton wavelength hbar/(m c); the length scale every volume
// prescription is built from.
inline double compton_length(double mass_kg, const PhysicalConstants& c) {
    if (!(mass_kg > 0.0))
        throw DomainError("compton_length: mass must be positive");
    return c.hbar / (mass_kg * c.c_rel);
}

// sqrt(hbar c^3 / G), in kg m/s. Requires the optional fixture entry.
inline double planck_momentum(const PhysicalConstants& c) {
    if (!c.gravitational_constant)
        throw SchemaError(
            "planck_momentum: fixture has no gravitational_constant entry");
    return std::sqrt(c.hbar * c.c_rel * c.c_rel * c.c_rel /
                     *c.gravitational_constant);
}

}  // namespace qedvac

#endif  // QEDVAC_CONSTANTS_HPP
