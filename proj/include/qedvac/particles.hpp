#ifndef QEDVAC_PARTICLES_HPP
#define QEDVAC_PARTICLES_HPP

// Table of charged elementary particles and the degeneracy-weighted sum of
// squared charges it carries. Quark color enters as a degeneracy field, never
// as triplicated rows, so the sum stays auditable against the table.
//
// Table format: UTF-8 CSV with header
//     name,charge_ratio,mass_kg,degeneracy,kind
// charge_ratio accepts decimals ("-0.5") or integer fractions ("2/3", "-1").
// Fractions are kept exactly; when every row has one, charge_sum is evaluated
// in integer arithmetic over the common denominator, which is what makes the
// standard-model sums come out as exact 8 and 9 rather than 7.999... .

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <istream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qedvac/detail/text.hpp"
#include "qedvac/errors.hpp"

namespace qedvac {

enum class ParticleKind { lepton, quark, boson };

inline const char* to_string(ParticleKind k) {
    switch (k) {
        case ParticleKind::lepton: return "lepton";
        case ParticleKind::quark: return "quark";
        case ParticleKind::boson: return "boson";
    }
    return "?";
}

struct ChargeFraction {
    std::int64_t num;
    std::int64_t den;  // > 0
};

struct Particle {
    std::string name;
    double charge_ratio;  // q/e, signed
    double mass;          // kg
    int degeneracy;       // color multiplicity: 3 for quarks, 1 otherwise
    ParticleKind kind;
    std::optional<ChargeFraction> charge_fraction;  // set when parsed as n/d
};

class ParticleSet {
  public:
    ParticleSet() = default;
    ParticleSet(std::vector<Particle> particles, std::string label)
        : particles_(std::move(particles)), label_(std::move(label)) {
        for (std::size_t i = 0; i < particles_.size(); ++i)
            for (std::size_t j = i + 1; j < particles_.size(); ++j)
                if (particles_[i].name == particles_[j].name)
                    throw ValidationError("particle set '" + label_ +
                                          "': duplicate name '" +
                                          particles_[i].name + "'");
    }

    const std::vector<Particle>& particles() const { return particles_; }
    const std::string& label() const { return label_; }
    bool empty() const { return particles_.empty(); }
    std::size_t size() const { return particles_.size(); }

    const Particle* find(const std::string& name) const {
        for (const auto& p : particles_)
            if (p.name == name)
                return &p;
        return nullptr;
    }

  private:
    std::vector<Particle> particles_;
    std::string label_;
};

namespace detail {

inline std::vector<std::string> split_csv_row(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ','))
        out.push_back(trim(field));
    if (!line.empty() && line.back() == ',')
        out.push_back("");
    return out;
}

inline bool parse_fraction(const std::string& s, ChargeFraction& out) {
    const auto slash = s.find('/');
    try {
        std::size_t pos = 0;
        if (slash == std::string::npos) {
            out.num = std::stoll(s, &pos);
            out.den = 1;
            return pos == s.size();
        }
        out.num = std::stoll(s.substr(0, slash), &pos);
        if (pos != slash)
            return false;
        out.den = std::stoll(s.substr(slash + 1), &pos);
        if (pos != s.size() - slash - 1 || out.den <= 0)
            return false;
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

}  // namespace detail

inline ParticleSet load_particles(std::istream& in, const std::string& label,
                                  const std::string& origin = "<stream>") {
    std::string line;
    if (!std::getline(in, line))
        return ParticleSet({}, label);  // empty file -> empty set
    auto header = detail::split_csv_row(line);
    const std::vector<std::string> expected = {"name", "charge_ratio",
                                               "mass_kg", "degeneracy", "kind"};
    if (std::vector<std::string>(header.begin(), header.end()) != expected)
        throw SchemaError(origin +
                          ": header must be name,charge_ratio,mass_kg,"
                          "degeneracy,kind");

    std::vector<Particle> rows;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string trimmed = detail::trim(line);
        if (trimmed.empty() || trimmed[0] == '#')
            continue;
        const auto fields = detail::split_csv_row(trimmed);
        const std::string where = origin + ": row " + std::to_string(lineno);
        if (fields.size() != 5)
            throw ValidationError(where + ": expected 5 fields, got " +
                                  std::to_string(fields.size()));
        Particle p;
        p.name = fields[0];
        if (p.name.empty())
            throw ValidationError(where + ": empty name");

        ChargeFraction frac{};
        if (detail::parse_fraction(fields[1], frac)) {
            p.charge_fraction = frac;
            p.charge_ratio =
                static_cast<double>(frac.num) / static_cast<double>(frac.den);
        } else {
            try {
                std::size_t pos = 0;
                p.charge_ratio = std::stod(fields[1], &pos);
                if (pos != fields[1].size())
                    throw ValidationError(where + ": bad charge_ratio '" +
                                          fields[1] + "'");
            } catch (const ValidationError&) {
                throw;
            } catch (const std::exception&) {
                throw ValidationError(where + ": bad charge_ratio '" +
                                      fields[1] + "'");
            }
        }
        if (p.charge_ratio == 0.0)
            throw ValidationError(where + " ('" + p.name +
                                  "'): charge_ratio must be nonzero; only "
                                  "charged particles belong in the table");

        try {
            std::size_t pos = 0;
            p.mass = std::stod(fields[2], &pos);
            if (pos != fields[2].size())
                throw ValidationError(where + ": bad mass_kg");
        } catch (const ValidationError&) {
            throw;
        } catch (const std::exception&) {
            throw ValidationError(where + ": bad mass_kg '" + fields[2] + "'");
        }
        if (!(p.mass > 0.0) || !std::isfinite(p.mass))
            throw ValidationError(where + " ('" + p.name +
                                  "'): mass_kg must be positive");

        try {
            p.degeneracy = std::stoi(fields[3]);
        } catch (const std::exception&) {
            throw ValidationError(where + ": bad degeneracy '" + fields[3] +
                                  "'");
        }
        if (p.degeneracy < 1)
            throw ValidationError(where + " ('" + p.name +
                                  "'): degeneracy must be >= 1");

        if (fields[4] == "lepton")
            p.kind = ParticleKind::lepton;
        else if (fields[4] == "quark")
            p.kind = ParticleKind::quark;
        else if (fields[4] == "boson")
            p.kind = ParticleKind::boson;
        else
            throw ValidationError(where + ": kind must be lepton, quark or "
                                  "boson, got '" + fields[4] + "'");
        rows.push_back(std::move(p));
    }
    return ParticleSet(std::move(rows), label);
}

inline ParticleSet load_particles(const std::string& path,
                                  std::string label = "") {
    std::ifstream in(path);
    if (!in)
        throw SchemaError("particle table: cannot open '" + path + "'");
    if (label.empty()) {
        label = path;
        const auto slash = label.find_last_of('/');
        if (slash != std::string::npos)
            label = label.substr(slash + 1);
        const auto dot = label.find_last_of('.');
        if (dot != std::string::npos)
            label = label.substr(0, dot);
    }
    return load_particles(in, label, path);
}

// Sum_i degeneracy_i * (q_i/e)^2. Exact integer arithmetic when every charge
// was given as a fraction; falls back to left-to-right float accumulation
// otherwise. Empty set -> 0.
inline double charge_sum(const ParticleSet& set) {
    bool all_exact = true;
    for (const auto& p : set.particles())
        all_exact = all_exact && p.charge_fraction.has_value();

    if (all_exact && !set.empty()) {
        std::int64_t lcm = 1;
        bool overflow = false;
        for (const auto& p : set.particles()) {
            lcm = std::lcm(lcm, p.charge_fraction->den);
            if (lcm > 1000000) {
                overflow = true;
                break;
            }
        }
        if (!overflow) {
            std::int64_t total = 0;  // in units of 1/lcm^2
            for (const auto& p : set.particles()) {
                const auto& f = *p.charge_fraction;
                const std::int64_t scaled = f.num * (lcm / f.den);
                const std::int64_t term = p.degeneracy * scaled * scaled;
                if (term > (std::int64_t{1} << 52) - total) {
                    overflow = true;
                    break;
                }
                total += term;
            }
            if (!overflow)
                return static_cast<double>(total) /
                       static_cast<double>(lcm * lcm);
        }
    }

    double total = 0.0;
    for (const auto& p : set.particles())
        total += p.degeneracy * p.charge_ratio * p.charge_ratio;
    return total;
}

// Mass of the lightest member; the reference scale for pole extraction.
inline double lightest_mass(const ParticleSet& set) {
    if (set.empty())
        throw DomainError("lightest_mass: empty particle set");
    double m = set.particles().front().mass;
    for (const auto& p : set.particles())
        m = std::min(m, p.mass);
    return m;
}

}  // namespace qedvac

#endif  // QEDVAC_PARTICLES_HPP
