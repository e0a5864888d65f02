#ifndef QEDVAC_RUNNING_HPP
#define QEDVAC_RUNNING_HPP

// One-loop running of the electromagnetic coupling.
//
// The kernel is the Feynman-parameter integral
//     I(z) = Int_0^1 dx x(1-x) ln(1 + x(1-x) z),   z = (hbar k / (m c))^2,
// evaluated by adaptive quadrature. Two prefactor conventions are carried
// side by side:
//   * consistent    — per-species shift (2/pi) deg q^2 I(z). Its large-z
//                     limit reproduces the leading-log pole condition below
//                     and the textbook one-loop result.
//   * paper_literal — per-species shift (1/3pi) deg q^2 I(z), the prefactor
//                     printed on the integral form. It is a factor 6 short of
//                     matching the leading-log form; both are provided so the
//                     discrepancy is visible rather than silently repaired.
//
// The pole condition is evaluated exactly in its printed leading-log form,
//     alpha_inv(0) = (1/3pi) Sum_i deg_i q_i^2 ln(Lambda^2 / m_i^2 c^2),
// and is solved entirely in log space, t = ln(Lambda/(m_ref c)) with m_ref
// the lightest species: e^t at the root overflows every float format.

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "qedvac/constants.hpp"
#include "qedvac/errors.hpp"
#include "qedvac/particles.hpp"
#include "qedvac/quadrature.hpp"
#include "qedvac/root_finding.hpp"

namespace qedvac {

enum class RunningMode { consistent, paper_literal };

inline const char* to_string(RunningMode m) {
    return m == RunningMode::consistent ? "consistent" : "paper-literal";
}

// Dimensionless momentum-scale parameter for one species. Spacelike exchange
// maps to z > 0; anything at or below the pair threshold z = -4 has no
// real-valued kernel and is rejected.
struct MomentumScaleZ {
    double z;
};

inline MomentumScaleZ make_momentum_scale_z(double z) {
    if (!(z > -4.0))
        throw ThresholdError(
            "z = " + std::to_string(z) +
            ": timelike above pair threshold; real-valued result undefined");
    return MomentumScaleZ{z};
}

inline MomentumScaleZ momentum_scale_z(double k_inv_m, double mass,
                                       const PhysicalConstants& c) {
    if (!(mass > 0.0))
        throw DomainError("momentum_scale_z: mass must be positive");
    const double r = c.hbar * k_inv_m / (mass * c.c_rel);
    return MomentumScaleZ{r * r};
}

inline double species_prefactor(RunningMode mode) {
    return mode == RunningMode::consistent
               ? 2.0 / std::numbers::pi
               : 1.0 / (3.0 * std::numbers::pi);
}

// I(z) by adaptive quadrature. The integrand is symmetric about x = 1/2, so
// only [0, 1/2] is integrated and the result doubled; that also keeps the
// refinement focused on the x -> 0 end where the logarithm bends hardest for
// large z. Absolute accuracy is held below 1e-10.
inline double feynman_integral(double z) {
    if (!(z > -4.0))
        throw ThresholdError(
            "feynman_integral: z = " + std::to_string(z) +
            " <= -4: timelike above pair threshold; real-valued result "
            "undefined");
    if (z == 0.0)
        return 0.0;
    const auto f = [z](double x) {
        const double w = x * (1.0 - x);
        return w * std::log1p(w * z);
    };
    const auto half = integrate_adaptive(f, 0.0, 0.5, 0.5e-12, 1e-13, 52);
    const double value = 2.0 * half.value;
    const double err = 2.0 * half.error_estimate;
    if (!half.converged && err > 1e-10)
        throw NumericError("feynman_integral: quadrature error estimate " +
                           std::to_string(err) + " exceeds 1e-10 at z = " +
                           std::to_string(z));
    return value;
}

inline double feynman_integral(const MomentumScaleZ& s) {
    return feynman_integral(s.z);
}

// Leading terms of the z -> 0 series: Int x^2(1-x)^2 dx = 1/30.
inline double feynman_integral_small_z(double z) { return z / 30.0; }

// z -> inf asymptote: (1/6)(ln z - 5/3); the -5/3 collects
// Int x(1-x) ln(x(1-x)) dx = -5/18 against the 1/6 in front.
inline double feynman_integral_large_z(double z) {
    if (!(z > 0.0))
        throw DomainError("feynman_integral_large_z: requires z > 0");
    return (std::log(z) - 5.0 / 3.0) / 6.0;
}

struct SpeciesShift {
    std::string name;
    double z;      // dimensionless momentum-scale parameter
    double shift;  // contribution to alpha_inverse(0) - alpha_inverse(k)
};

struct RunningResult {
    double alpha_inverse_zero;
    double alpha_inverse;                    // at the requested scale
    std::vector<SpeciesShift> per_species_shift;  // in set order
    RunningMode mode;
    double k_inv_m;  // requested |k| when given; NaN for direct-z evaluation
};

namespace detail {

inline RunningResult run_shifts(const ParticleSet& set,
                                const PhysicalConstants& c, RunningMode mode,
                                double k_inv_m, bool direct_z, double z_direct) {
    RunningResult out;
    out.alpha_inverse_zero = c.alpha_inverse_exp;
    out.mode = mode;
    out.k_inv_m = direct_z ? std::numeric_limits<double>::quiet_NaN() : k_inv_m;
    const double pref = species_prefactor(mode);
    double total = 0.0;
    for (const auto& p : set.particles()) {
        const double z =
            direct_z ? make_momentum_scale_z(z_direct).z
                     : momentum_scale_z(k_inv_m, p.mass, c).z;
        const double shift = pref * p.degeneracy * p.charge_ratio *
                             p.charge_ratio * feynman_integral(z);
        out.per_species_shift.push_back({p.name, z, shift});
        total += shift;
    }
    out.alpha_inverse = out.alpha_inverse_zero - total;
    return out;
}

}  // namespace detail

// Running coupling at wavenumber |k| [1/m]; per-species z from each mass.
// Empty set: no screening, alpha_inverse(0) returned unchanged.
inline RunningResult alpha_inverse_at(const ParticleSet& set, double k_inv_m,
                                      const PhysicalConstants& c,
                                      RunningMode mode = RunningMode::consistent) {
    if (!(k_inv_m >= 0.0))
        throw DomainError("alpha_inverse_at: |k| must be nonnegative");
    return detail::run_shifts(set, c, mode, k_inv_m, false, 0.0);
}

// Same with one z applied to every species (equal-mass idealizations).
inline RunningResult alpha_inverse_at_z(const ParticleSet& set, double z,
                                        const PhysicalConstants& c,
                                        RunningMode mode = RunningMode::consistent) {
    return detail::run_shifts(set, c, mode, 0.0, true, z);
}

// Forward evaluation of the printed leading-log pole condition at
// t = ln(Lambda/(m_ref c)):
//     (2/3pi) Sum_i deg_i q_i^2 [ t + ln(m_ref/m_i) ].
inline double landau_forward(const ParticleSet& set,
                             const PhysicalConstants& c, double t) {
    (void)c;
    if (set.empty())
        throw DomainError("landau_forward: empty particle set");
    const double m_ref = lightest_mass(set);
    double acc = 0.0;
    for (const auto& p : set.particles())
        acc += p.degeneracy * p.charge_ratio * p.charge_ratio *
               (t + std::log(m_ref / p.mass));
    return acc * 2.0 / (3.0 * std::numbers::pi);
}

// Solves the pole condition for t = ln(Lambda/(m_ref c)), m_ref the lightest
// species. The left side is linear and strictly increasing in t, so the
// bracketed root is unique; it is still located by the bracketing solver so
// the same code path serves any monotone variant.
inline double landau_pole(const ParticleSet& set, const PhysicalConstants& c) {
    if (set.empty())
        throw DomainError("landau_pole: empty particle set");
    const double s = charge_sum(set);
    if (!(s > 0.0))
        throw DomainError("landau_pole: charge_sum must be positive");
    const auto g = [&](double t) {
        return landau_forward(set, c, t) - c.alpha_inverse_exp;
    };
    return find_root_expanding(g, 0.0, 64.0, 1e-13, 1e-14);
}

// Equal-species closed form: alpha_inverse(0) = (2/3pi) nu t with
// t = ln(Lambda/(m c)).
inline double zeldovich_alpha_inverse(int nu_types,
                                      double log_lambda_over_mc) {
    if (nu_types < 1)
        throw DomainError("zeldovich_alpha_inverse: nu_types must be >= 1");
    return 2.0 * nu_types * log_lambda_over_mc / (3.0 * std::numbers::pi);
}

}  // namespace qedvac

#endif  // QEDVAC_RUNNING_HPP
