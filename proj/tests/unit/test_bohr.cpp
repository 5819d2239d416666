#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "photonbox/bohr.hpp"
#include "photonbox/random.hpp"

using photonbox::PhysicalConstants;
using photonbox::WeighingScenario;

namespace {

WeighingScenario natural_scenario(double delta_x = 1.0, double delta_p = 1.0,
                                  double t = 1.0, double t0 = 1.0) {
    return WeighingScenario(PhysicalConstants::natural(), t, t0, delta_x,
                            delta_p, 1.0);
}

}  // namespace

TEST_CASE("shutter energy bound scales inversely with the opening") {
    CHECK(photonbox::photon_energy_lower_bound(
              1.0, PhysicalConstants::natural()) == 1.0);

    const PhysicalConstants si;
    CHECK(photonbox::photon_energy_lower_bound(1e-9, si) ==
          doctest::Approx(1.0545718e-25).epsilon(1e-4));

    SUBCASE("doubling the opening exactly halves the bound") {
        const double narrow = photonbox::photon_energy_lower_bound(0.5, si);
        const double wide = photonbox::photon_energy_lower_bound(1.0, si);
        CHECK(narrow == 2.0 * wide);
    }

    SUBCASE("nonpositive openings are rejected") {
        CHECK_THROWS_AS(
            photonbox::photon_energy_lower_bound(0.0, si),
            std::invalid_argument);
        CHECK_THROWS_AS(
            photonbox::photon_energy_lower_bound(-1.0, si),
            std::invalid_argument);
    }
}

TEST_CASE("weighing precision follows delta_p c^2 / (g t)") {
    const PhysicalConstants si;
    const WeighingScenario scenario(si, 1.0, 1.0, 1e-6, 1e-30, 1.0);
    CHECK(photonbox::weighing_energy_precision(1e-30, scenario) ==
          doctest::Approx(9.164e-15).epsilon(1e-3));

    SUBCASE("the precision is linear in the momentum spread") {
        const double one = photonbox::weighing_energy_precision(1e-30,
                                                                scenario);
        const double ten = photonbox::weighing_energy_precision(1e-29,
                                                                scenario);
        CHECK(ten == doctest::Approx(10.0 * one).epsilon(1e-15));
        // Power-of-two scalings commute with every rounding step, so this
        // form of linearity is a bit-exact identity.
        CHECK(photonbox::weighing_energy_precision(8e-30, scenario) ==
              8.0 * one);
    }
}

TEST_CASE("clock readings redshift with height") {
    const PhysicalConstants si;
    CHECK(photonbox::gravitational_time_lapse(0.0, 1.0, si) == 1.0);

    // One meter of lift on a one-second interval.
    const double lapse = photonbox::gravitational_time_lapse(1.0, 1.0, si);
    CHECK(lapse - 1.0 == doctest::Approx(1.091e-16).epsilon(1e-3));

    SUBCASE("the weak-field guard rejects strong potentials") {
        const PhysicalConstants strong{1.0, 1.0, 1.0};
        CHECK_NOTHROW(
            photonbox::gravitational_time_lapse(0.005, 1.0, strong));
        CHECK_THROWS_AS(
            photonbox::gravitational_time_lapse(0.02, 1.0, strong),
            std::invalid_argument);
    }
}

TEST_CASE("emission time spread tracks the pointer position spread") {
    const PhysicalConstants si;
    const WeighingScenario scenario(si, 1.0, 1.0, 1e-6, 1e-30, 1.0);
    CHECK(photonbox::emission_time_uncertainty(1e-6, scenario) ==
          doctest::Approx(1.091e-22).epsilon(1e-3));

    SUBCASE("the spread is linear in the position spread") {
        const double one = photonbox::emission_time_uncertainty(1e-6,
                                                                scenario);
        const double ten = photonbox::emission_time_uncertainty(1e-5,
                                                                scenario);
        CHECK(ten == doctest::Approx(10.0 * one).epsilon(1e-15));
        CHECK(photonbox::emission_time_uncertainty(8e-6, scenario) ==
              8.0 * one);
    }
}

TEST_CASE("the chained product collapses to the pointer product") {
    SUBCASE("a pointer at the quantum limit gives exactly hbar") {
        const auto product = photonbox::bohr_product(natural_scenario());
        CHECK(product.px_product == 1.0);
        CHECK(product.et_product == 1.0);
        CHECK(product.ratio_t0_over_t == 1.0);
        CHECK(product.bound_satisfied_if_px_bound);
    }

    SUBCASE("a pointer below the limit is flagged") {
        const auto product =
            photonbox::bohr_product(natural_scenario(1.0, 0.5));
        CHECK(product.et_product == 0.5);
        CHECK_FALSE(product.bound_satisfied_if_px_bound);
    }

    SUBCASE("si pointer with delta_x = hbar / delta_p") {
        const PhysicalConstants si;
        const double delta_p = 1e-30;
        const double delta_x = si.hbar / delta_p;
        const WeighingScenario scenario(si, 1.0, 1.000001, delta_x, delta_p,
                                        1.0);
        const auto product = photonbox::bohr_product(scenario);
        CHECK(product.et_product / si.hbar ==
              doctest::Approx(1.000001).epsilon(1e-9));
        CHECK(product.bound_satisfied_if_px_bound);
    }

    SUBCASE("the reduced form equals the two-leg product identically") {
        photonbox::SeededGenerator gen(555);
        const PhysicalConstants si;
        for (int i = 0; i < 1000; ++i) {
            const double t = 0.5 + 4.0 * gen.uniform();
            const double t0 = t * (0.9 + 0.2 * gen.uniform());
            const double delta_x = std::exp(4.0 * gen.uniform() - 12.0);
            const double delta_p = std::exp(4.0 * gen.uniform() - 32.0);
            const WeighingScenario scenario(si, t, t0, delta_x, delta_p, 1.0);
            const auto product = photonbox::bohr_product(scenario);
            const double legs =
                photonbox::weighing_energy_precision(delta_p, scenario) *
                photonbox::emission_time_uncertainty(delta_x, scenario);
            CHECK(product.et_product ==
                  doctest::Approx(legs).epsilon(1e-12));
        }
    }
}

TEST_CASE("scenario parameters are validated") {
    const PhysicalConstants si;
    CHECK_THROWS_AS(WeighingScenario(si, 0.0, 1.0, 1e-6, 1e-30, 1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(WeighingScenario(si, 1.0, -1.0, 1e-6, 1e-30, 1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(WeighingScenario(si, 1.0, 1.0, 0.0, 1e-30, 1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(WeighingScenario(si, 1.0, 1.0, 1e-6, 1e-30, 0.0),
                    std::invalid_argument);

    SUBCASE("laboratory and proper durations must stay comparable") {
        CHECK_THROWS_AS(WeighingScenario(si, 1.0, 2.0, 1e-6, 1e-30, 1.0),
                        std::invalid_argument);
        CHECK_NOTHROW(WeighingScenario(si, 1.0, 2.0, 1e-6, 1e-30, 1.0,
                                       /*enforce_ratio_band=*/false));
    }
}
