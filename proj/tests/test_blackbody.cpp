#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <vector>

#include "helpers.hpp"
#include "qedvac/blackbody.hpp"
#include "qedvac/errors.hpp"

using namespace qedvac;
using Catch::Approx;

TEST_CASE("rayleigh-jeans density") {
    const auto& c = testutil::fixture_constants();
    CHECK(rayleigh_jeans(0.0, 300.0, c) == 0.0);
    CHECK(rayleigh_jeans(1e14, 300.0, c) == Approx(3.8635122e-17).epsilon(1e-7));
    // (2 nu, 2 T) multiplies the density by exactly eight
    CHECK(rayleigh_jeans(2e14, 600.0, c) == 8.0 * rayleigh_jeans(1e14, 300.0, c));
    CHECK_THROWS_AS(rayleigh_jeans(1e14, 0.0, c), DomainError);
    CHECK_THROWS_AS(rayleigh_jeans(1e14, -1.0, c), DomainError);
    CHECK_THROWS_AS(rayleigh_jeans(-1e14, 300.0, c), DomainError);
}

TEST_CASE("thermal density meets the classical limit at low frequency") {
    const auto& c = testutil::fixture_constants();
    const double T = 300.0;
    const double nu = 1e-8 * c.boltzmann_k * T / c.planck_h;  // x = 1e-8
    // defect from the classical value is x/2 = 5e-9; expm1 keeps it resolvable
    CHECK(planck_first(nu, T, c) ==
          Approx(rayleigh_jeans(nu, T, c)).epsilon(1e-7));
    CHECK(planck_first(nu, T, c) < rayleigh_jeans(nu, T, c));
}

TEST_CASE("thermal density sits strictly below the classical one") {
    const auto& c = testutil::fixture_constants();
    for (int i = 0; i <= 20; ++i) {
        const double nu = 1e10 * std::pow(10.0, 0.25 * i);
        CHECK(planck_first(nu, 300.0, c) < rayleigh_jeans(nu, 300.0, c));
    }
}

TEST_CASE("thermal density is unimodal") {
    const auto& c = testutil::fixture_constants();
    std::vector<double> vals;
    for (int i = 0; i <= 50; ++i)
        vals.push_back(planck_first(1e10 * std::pow(10.0, 0.1 * i), 300.0, c));
    int direction_changes = 0;
    for (std::size_t i = 2; i < vals.size(); ++i) {
        const bool was_up = vals[i - 1] > vals[i - 2];
        const bool is_up = vals[i] > vals[i - 1];
        if (was_up != is_up)
            ++direction_changes;
    }
    CHECK(direction_changes == 1);
    CHECK(planck_first(0.0, 300.0, c) == 0.0);
    // far beyond the peak the thermal density is exponentially gone
    const double nu50 = 50.0 * c.boltzmann_k * 300.0 / c.planck_h;
    CHECK(planck_first(nu50, 300.0, c) / rayleigh_jeans(nu50, 300.0, c) <
          1e-18);
}

TEST_CASE("second form adds exactly the zero-point density") {
    const auto& c = testutil::fixture_constants();
    const double eps = std::numeric_limits<double>::epsilon();
    CHECK(zero_point_density(0.0, c) == 0.0);
    CHECK_THROWS_AS(zero_point_density(-1.0, c), DomainError);
    for (double T : {3.0, 300.0, 30000.0})
        for (double nu : {1e12, 1e14, 1e15}) {
            const double p1 = planck_first(nu, T, c);
            const double p2 = planck_second(nu, T, c);
            const double zp = zero_point_density(nu, c);
            // one rounded addition separates the two forms
            CHECK(std::fabs((p2 - p1) - zp) <= 4.0 * eps * p2);
        }
    // the difference carries no temperature: compare across three decades
    const double nu = 1e14;
    const double d_cold = planck_second(nu, 3.0, c) - planck_first(nu, 3.0, c);
    const double d_warm =
        planck_second(nu, 300.0, c) - planck_first(nu, 300.0, c);
    const double d_hot =
        planck_second(nu, 30000.0, c) - planck_first(nu, 30000.0, c);
    const double scale = planck_second(nu, 30000.0, c);
    CHECK(std::fabs(d_cold - d_warm) <= 8.0 * eps * scale);
    CHECK(std::fabs(d_cold - d_hot) <= 8.0 * eps * scale);
}

TEST_CASE("dispatcher selects the right law") {
    const auto& c = testutil::fixture_constants();
    CHECK(spectral_density(SpectralLaw::rj, 1e14, 300.0, c) ==
          rayleigh_jeans(1e14, 300.0, c));
    CHECK(spectral_density(SpectralLaw::planck1, 1e14, 300.0, c) ==
          planck_first(1e14, 300.0, c));
    CHECK(spectral_density(SpectralLaw::planck2, 1e14, 300.0, c) ==
          planck_second(1e14, 300.0, c));
    CHECK(std::string(to_string(SpectralLaw::rj)) == "rj");
    CHECK(std::string(to_string(SpectralLaw::planck1)) == "planck1");
    CHECK(std::string(to_string(SpectralLaw::planck2)) == "planck2");
}

TEST_CASE("thermal integral reproduces the radiation constant") {
    const auto& c = testutil::fixture_constants();
    const double a = radiation_constant(c);
    CHECK(a == Approx(7.565733250e-16).epsilon(1e-8));
    CHECK(a == Approx(7.566e-16).epsilon(1e-4));
    const double T = 1000.0;
    const double nu_max = 100.0 * c.boltzmann_k * T / c.planck_h;
    const auto r = spectral_integral(SpectralLaw::planck1, T, nu_max, c);
    CHECK(r.converged);
    CHECK(r.value == Approx(a * T * T * T * T).epsilon(1e-6));
}

TEST_CASE("classical integral follows its cubic closed form") {
    const auto& c = testutil::fixture_constants();
    const auto r = spectral_integral(SpectralLaw::rj, 300.0, 1e15, c);
    CHECK(r.converged);
    CHECK(r.value == Approx(rj_integral_closed_form(300.0, 1e15, c))
                         .epsilon(1e-10));
    CHECK(rj_integral_closed_form(300.0, 1e15, c) ==
          Approx(1.287837401).epsilon(1e-8));
    // doubling the cutoff scales the closed form by exactly eight
    CHECK(rj_integral_closed_form(300.0, 2e15, c) ==
          8.0 * rj_integral_closed_form(300.0, 1e15, c));
}

TEST_CASE("zero-point part of the integral grows as the fourth power") {
    const auto& c = testutil::fixture_constants();
    const double T = 300.0;
    const auto p2_hi = spectral_integral(SpectralLaw::planck2, T, 1e15, c);
    const auto p1_hi = spectral_integral(SpectralLaw::planck1, T, 1e15, c);
    CHECK(p2_hi.converged);
    CHECK(p1_hi.converged);
    const double zp_hi = p2_hi.value - p1_hi.value;
    CHECK(zp_hi == Approx(zero_point_integral_closed_form(1e15, c))
                       .epsilon(1e-8));
    CHECK(zero_point_integral_closed_form(1e15, c) ==
          Approx(77.25805908).epsilon(1e-8));
    // a decade down in cutoff, the zero-point part drops four decades
    const auto p2_lo = spectral_integral(SpectralLaw::planck2, T, 1e14, c);
    const auto p1_lo = spectral_integral(SpectralLaw::planck1, T, 1e14, c);
    const double zp_lo = p2_lo.value - p1_lo.value;
    CHECK(zp_hi / zp_lo == Approx(1e4).epsilon(1e-2));
    // exact sixteenfold growth of the closed form under cutoff doubling
    CHECK(zero_point_integral_closed_form(2e15, c) ==
          16.0 * zero_point_integral_closed_form(1e15, c));
}

TEST_CASE("integral preconditions") {
    const auto& c = testutil::fixture_constants();
    CHECK_THROWS_AS(spectral_integral(SpectralLaw::planck1, 0.0, 1e15, c),
                    DomainError);
    CHECK_THROWS_AS(spectral_integral(SpectralLaw::planck1, -300.0, 1e15, c),
                    DomainError);
    CHECK_THROWS_AS(spectral_integral(SpectralLaw::planck1, 300.0, 0.0, c),
                    DomainError);
    CHECK_THROWS_AS(spectral_integral(SpectralLaw::planck1, 300.0, -1e15, c),
                    DomainError);
}
