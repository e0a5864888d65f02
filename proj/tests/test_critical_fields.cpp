#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "helpers.hpp"
#include "qedvac/critical_fields.hpp"
#include "qedvac/errors.hpp"
#include "qedvac/vacuum_model.hpp"

using namespace qedvac;
using Catch::Approx;

namespace {
constexpr double kElectronMass = 9.109383702e-31;
constexpr double kMuonMass = 1.883531627e-28;
}  // namespace

TEST_CASE("limiting field for the electron") {
    const auto& c = testutil::fixture_constants();
    const auto model = limiting_field(kElectronMass, FieldVariant::model, c);
    CHECK(model.field == Approx(5.2931419e18).epsilon(1e-7));
    CHECK(model.field == Approx(5.29e18).epsilon(1e-3));
    const auto sb = limiting_field(kElectronMass, FieldVariant::sauter_bohr, c);
    CHECK(sb.field == model.field / 2.0);  // exact by construction
    CHECK(sb.field == Approx(2.6465709e18).epsilon(1e-7));
    const double conv = conventional_field_scale(kElectronMass, c);
    CHECK(conv == Approx(1.3232855e18).epsilon(1e-7));
    CHECK(model.field == 4.0 * conv);
    CHECK(sb.field == 2.0 * conv);
}

TEST_CASE("limiting field scales with the squared mass") {
    const auto& c = testutil::fixture_constants();
    const double ratio =
        limiting_field(kMuonMass, FieldVariant::model, c).field /
        limiting_field(kElectronMass, FieldVariant::model, c).field;
    CHECK(ratio == Approx(42753.123).epsilon(1e-6));
    CHECK_THROWS_AS(limiting_field(0.0, FieldVariant::model, c), DomainError);
    CHECK_THROWS_AS(conventional_field_scale(-1.0, c), DomainError);
}

TEST_CASE("plane-wave intensity equivalent") {
    const auto& c = testutil::fixture_constants();
    CHECK(intensity_for_field(0.0, c) == 0.0);
    const auto model = limiting_field(kElectronMass, FieldVariant::model, c);
    CHECK(model.intensity_equiv == Approx(3.7184891e34).epsilon(1e-7));
    CHECK(model.intensity_equiv == intensity_for_field(model.field, c));
    // halving the field quarters the intensity, exactly
    CHECK(intensity_for_field(model.field / 2.0, c) ==
          model.intensity_equiv / 4.0);
    CHECK_THROWS_AS(intensity_for_field(-1.0, c), DomainError);
}

TEST_CASE("focal-volume relaxation, reference point") {
    const auto& c = testutil::fixture_constants();
    const auto r = focal_volume_relaxation(1e-18, 1e-20, kElectronMass, c);
    CHECK(r.cell_volume == Approx(5.7583676e-38).epsilon(1e-7));
    // the cell is the option-1 pair volume of the oscillator model
    CHECK(r.cell_volume == pair_volume(VolumeOption::opt1, kElectronMass, c));
    CHECK(r.n_cells == Approx(1.7366033e19).epsilon(1e-7));
    CHECK(r.total_probability == Approx(0.159417627).epsilon(1e-8));
    CHECK(r.per_cell_probability == 1e-20);
    CHECK(r.focal_volume == 1e-18);
}

TEST_CASE("focal-volume relaxation, edge probabilities") {
    const auto& c = testutil::fixture_constants();
    CHECK(focal_volume_relaxation(1e-18, 0.0, kElectronMass, c)
              .total_probability == 0.0);
    CHECK(focal_volume_relaxation(1e-18, 1.0, kElectronMass, c)
              .total_probability == 1.0);
    CHECK_THROWS_AS(focal_volume_relaxation(1e-18, -0.1, kElectronMass, c),
                    DomainError);
    CHECK_THROWS_AS(focal_volume_relaxation(1e-18, 2.0, kElectronMass, c),
                    DomainError);
    CHECK_THROWS_AS(focal_volume_relaxation(0.0, 0.5, kElectronMass, c),
                    DomainError);
    CHECK_THROWS_AS(focal_volume_relaxation(-1e-18, 0.5, kElectronMass, c),
                    DomainError);
}

TEST_CASE("focal-volume relaxation is monotone") {
    const auto& c = testutil::fixture_constants();
    double prev = -1.0;
    for (double p : {1e-22, 1e-21, 1e-20, 1e-19, 1e-18}) {
        const double tot = focal_volume_relaxation(1e-18, p, kElectronMass, c)
                               .total_probability;
        CHECK(tot > prev);
        prev = tot;
    }
    prev = -1.0;
    for (double v : {1e-21, 1e-20, 1e-19, 1e-18, 1e-17}) {
        const double tot = focal_volume_relaxation(v, 1e-20, kElectronMass, c)
                               .total_probability;
        CHECK(tot > prev);
        prev = tot;
    }
}

TEST_CASE("log-space total matches the naive power where both work") {
    const auto& c = testutil::fixture_constants();
    const double cell = pair_volume(VolumeOption::opt1, kElectronMass, c);
    const double volume = 1e4 * cell;  // about ten thousand cells
    const double p = 1e-8;
    const auto r = focal_volume_relaxation(volume, p, kElectronMass, c);
    const double naive = 1.0 - std::pow(1.0 - p, r.n_cells);
    // quantizing 1-p costs the naive route ~1e-8 relative on the exponent
    CHECK(r.total_probability == Approx(naive).epsilon(1e-7));
}

TEST_CASE("focal-volume relaxation stays finite and in range") {
    const auto& c = testutil::fixture_constants();
    for (double p : {0.0, 1e-300, 1e-30, 1e-8, 0.5, 1.0 - 1e-12, 1.0})
        for (double v : {1e-30, 1e-18, 1.0, 1e12}) {
            const auto r = focal_volume_relaxation(v, p, kElectronMass, c);
            CHECK(std::isfinite(r.total_probability));
            CHECK(r.total_probability >= 0.0);
            CHECK(r.total_probability <= 1.0);
        }
}

TEST_CASE("variant names") {
    CHECK(std::string(to_string(FieldVariant::model)) == "model");
    CHECK(std::string(to_string(FieldVariant::sauter_bohr)) == "sauter-bohr");
    CHECK(variant_factor(FieldVariant::model) == 4.0);
    CHECK(variant_factor(FieldVariant::sauter_bohr) == 2.0);
}
