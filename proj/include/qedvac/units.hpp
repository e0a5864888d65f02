#ifndef QEDVAC_UNITS_HPP
#define QEDVAC_UNITS_HPP

// Unit-system presentation helpers. All internal computation is SI; the
// natural-eV presentation exists only at the output boundary. Each conversion
// is a single multiply or divide by the same factor, so round trips are
// exact to within one ulp per direction.

#include <cmath>

#include "qedvac/constants.hpp"
#include "qedvac/errors.hpp"

namespace qedvac {

enum class UnitSystem { si, natural_ev };

// Energy: J <-> eV.
inline double energy_si_to_natural(double joule, const PhysicalConstants& c) {
    return joule / c.elementary_charge;
}
inline double energy_natural_to_si(double ev, const PhysicalConstants& c) {
    return ev * c.elementary_charge;
}

// Mass: kg <-> eV/c^2.
inline double mass_si_to_natural(double kg, const PhysicalConstants& c) {
    return kg * (c.c_rel * c.c_rel) / c.elementary_charge;
}
inline double mass_natural_to_si(double ev, const PhysicalConstants& c) {
    return ev * c.elementary_charge / (c.c_rel * c.c_rel);
}

// Momentum: kg m/s <-> eV/c.
inline double momentum_si_to_natural(double kgms, const PhysicalConstants& c) {
    return kgms * c.c_rel / c.elementary_charge;
}
inline double momentum_natural_to_si(double ev, const PhysicalConstants& c) {
    return ev * c.elementary_charge / c.c_rel;
}

// Electric field: V/m <-> eV^2, via the hbar*c/e factor (eV m).
inline double field_si_to_natural(double vpm, const PhysicalConstants& c) {
    return vpm * (c.hbar * c.c_rel / c.elementary_charge);
}
inline double field_natural_to_si(double ev2, const PhysicalConstants& c) {
    return ev2 / (c.hbar * c.c_rel / c.elementary_charge);
}

// Wavenumber |k| [1/m] for a momentum hbar*k given in GeV/c.
inline double wavenumber_from_gev(double gev, const PhysicalConstants& c) {
    if (gev < 0.0)
        throw DomainError("momentum magnitude must be nonnegative");
    return gev * 1e9 * c.elementary_charge / (c.c_rel * c.hbar);
}

// The same in GeV/c for a wavenumber in 1/m.
inline double gev_from_wavenumber(double k_inv_m, const PhysicalConstants& c) {
    return k_inv_m * c.c_rel * c.hbar / (1e9 * c.elementary_charge);
}

}  // namespace qedvac

#endif  // QEDVAC_UNITS_HPP
