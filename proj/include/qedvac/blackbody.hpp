#ifndef QEDVAC_BLACKBODY_HPP
#define QEDVAC_BLACKBODY_HPP

// Blackbody spectral energy densities [J s / m^3] (energy per volume per
// frequency interval) and their cutoff-parameterized integrals.
//
//   rj      : (8 pi nu^2 / c^3) k T              — grows as nu^2 forever
//   planck1 : (8 pi nu^2 / c^3) h nu/(e^x - 1)   — thermal, integrable
//   planck2 : planck1 + (8 pi nu^2 / c^3) h nu/2 — adds the zero-point term
//
// with x = h nu / (k T). Divergent totals are exposed only through an
// explicit nu_max cutoff: the rj integral grows as nu_max^3 and the
// zero-point part of planck2 as nu_max^4, which is the demonstrable form of
// the ultraviolet catastrophe.

#include <array>
#include <cmath>
#include <numbers>

#include "qedvac/constants.hpp"
#include "qedvac/errors.hpp"
#include "qedvac/quadrature.hpp"

namespace qedvac {

enum class SpectralLaw { rj, planck1, planck2 };

inline const char* to_string(SpectralLaw law) {
    switch (law) {
        case SpectralLaw::rj: return "rj";
        case SpectralLaw::planck1: return "planck1";
        case SpectralLaw::planck2: return "planck2";
    }
    return "?";
}

struct SpectralSample {
    double frequency;    // Hz
    double temperature;  // K
    double density;      // J s / m^3
};

namespace detail {

inline void check_nu_T(double nu, double T, const char* who) {
    if (!(T > 0.0))
        throw DomainError(std::string(who) + ": temperature must be positive");
    if (!(nu >= 0.0))
        throw DomainError(std::string(who) + ": frequency must be nonnegative");
}

// 8 pi nu^2 / c^3, the mode density factor.
inline double mode_density(double nu, const PhysicalConstants& c) {
    return 8.0 * std::numbers::pi * nu * nu / (c.c_rel * c.c_rel * c.c_rel);
}

}  // namespace detail

inline double rayleigh_jeans(double nu, double T, const PhysicalConstants& c) {
    detail::check_nu_T(nu, T, "rayleigh_jeans");
    return detail::mode_density(nu, c) * c.boltzmann_k * T;
}

// Thermal Planck form. expm1 keeps the x -> 0 end exact: the naive e^x - 1
// loses every significant digit below x ~ 1e-8 and with it the
// Rayleigh-Jeans limit.
inline double planck_first(double nu, double T, const PhysicalConstants& c) {
    detail::check_nu_T(nu, T, "planck_first");
    if (nu == 0.0)
        return 0.0;
    const double x = c.planck_h * nu / (c.boltzmann_k * T);
    return detail::mode_density(nu, c) * c.planck_h * nu / std::expm1(x);
}

// Temperature-independent zero-point term (8 pi nu^2/c^3)(h nu / 2).
inline double zero_point_density(double nu, const PhysicalConstants& c) {
    if (!(nu >= 0.0))
        throw DomainError("zero_point_density: frequency must be nonnegative");
    return detail::mode_density(nu, c) * 0.5 * c.planck_h * nu;
}

inline double planck_second(double nu, double T, const PhysicalConstants& c) {
    detail::check_nu_T(nu, T, "planck_second");
    return planck_first(nu, T, c) + zero_point_density(nu, c);
}

inline double spectral_density(SpectralLaw law, double nu, double T,
                               const PhysicalConstants& c) {
    switch (law) {
        case SpectralLaw::rj: return rayleigh_jeans(nu, T, c);
        case SpectralLaw::planck1: return planck_first(nu, T, c);
        case SpectralLaw::planck2: return planck_second(nu, T, c);
    }
    throw ValidationError("invalid spectral law");
}

// Integral of the chosen law over [0, nu_max]. Nonconvergence is reported
// through the converged flag and error estimate, never as an exception. The
// interval is pre-split at nu_max/100 and nu_max/10 so the thermal knee is
// never astride one giant panel when nu_max sits far above k T / h.
inline QuadratureResult spectral_integral(SpectralLaw law, double T,
                                          double nu_max,
                                          const PhysicalConstants& c) {
    if (!(T > 0.0))
        throw DomainError("spectral_integral: temperature must be positive");
    if (!(nu_max > 0.0))
        throw DomainError("spectral_integral: nu_max must be positive");
    const auto f = [&](double nu) { return spectral_density(law, nu, T, c); };
    const std::array<double, 4> pts = {0.0, 0.01 * nu_max, 0.1 * nu_max,
                                       nu_max};
    return integrate_adaptive_segmented(f, pts, 0.0, 1e-12, 48);
}

// Radiation constant a = 8 pi^5 k^4 / (15 c^3 h^3); the planck1 integral
// converges to a T^4 as nu_max -> infinity.
inline double radiation_constant(const PhysicalConstants& c) {
    const double pi = std::numbers::pi;
    const double k = c.boltzmann_k;
    const double ch = c.c_rel * c.planck_h;
    return 8.0 * pi * pi * pi * pi * pi * k * k * k * k /
           (15.0 * ch * ch * ch);
}

// Closed forms of the divergent pieces, used as growth-law oracles.
inline double rj_integral_closed_form(double T, double nu_max,
                                      const PhysicalConstants& c) {
    return 8.0 * std::numbers::pi * c.boltzmann_k * T * nu_max * nu_max *
           nu_max / (3.0 * c.c_rel * c.c_rel * c.c_rel);
}

inline double zero_point_integral_closed_form(double nu_max,
                                              const PhysicalConstants& c) {
    const double n2 = nu_max * nu_max;
    return std::numbers::pi * c.planck_h * n2 * n2 /
           (c.c_rel * c.c_rel * c.c_rel);
}

}  // namespace qedvac

#endif  // QEDVAC_BLACKBODY_HPP
