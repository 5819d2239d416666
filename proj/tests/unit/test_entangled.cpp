#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "photonbox/entangled.hpp"
#include "photonbox/spectral.hpp"
#include "photonbox/stats.hpp"
#include "support/oracles.hpp"

using photonbox::cdouble;
using photonbox::FrequencyGrid;
using photonbox::JointEnergyState;
using photonbox::SpectralAmplitude;

namespace {

SpectralAmplitude standard_prior(std::size_t count = 4097) {
    const FrequencyGrid grid = FrequencyGrid::over_span(0.0, 20.0, count);
    return photonbox::make_gaussian(10.0, 1.0, grid);
}

SpectralAmplitude double_hump_prior() {
    const FrequencyGrid grid = FrequencyGrid::over_span(0.0, 20.0, 4097);
    std::vector<cdouble> values(grid.count);
    for (std::size_t k = 0; k < grid.count; ++k) {
        const double w = grid.omega(k);
        const double a = (w - 8.0) / 0.5;
        const double b = (w - 12.0) / 0.5;
        values[k] = std::exp(-0.25 * a * a) + std::exp(-0.25 * b * b);
    }
    return SpectralAmplitude(grid, std::move(values));
}

}  // namespace

TEST_CASE("photon box construction enforces positive box energies") {
    CHECK_NOTHROW(photonbox::make_photon_box(100.0, standard_prior()));
    CHECK_THROWS_AS(photonbox::make_photon_box(5.0, standard_prior()),
                    std::invalid_argument);
    CHECK_THROWS_AS(photonbox::make_photon_box(20.0, standard_prior()),
                    std::invalid_argument);
}

TEST_CASE("total energy of the pair carries no spread") {
    const JointEnergyState state =
        photonbox::make_photon_box(100.0, standard_prior());
    CHECK(photonbox::total_energy_uncertainty(state) == 0.0);

    const auto outcome = photonbox::measure_box_energy(state, 0.01, 7);
    CHECK(photonbox::total_energy_uncertainty(outcome.state) == 0.0);

    const FrequencyGrid grid = FrequencyGrid::over_span(8.0, 12.0, 1025);
    const JointEnergyState rect_state = photonbox::make_photon_box(
        100.0, photonbox::make_rect(10.0, 1.0, grid));
    CHECK(photonbox::total_energy_uncertainty(rect_state) == 0.0);
}

TEST_CASE("marginals mirror each other around the rest frequency") {
    SUBCASE("gaussian prior") {
        const JointEnergyState state =
            photonbox::make_photon_box(100.0, standard_prior());
        const auto marginals = photonbox::marginal_uncertainties(state);
        CHECK(marginals.photon.sigma == doctest::Approx(1.0).epsilon(1e-4));
        CHECK(marginals.box.sigma == marginals.photon.sigma);
        CHECK(marginals.box.mean == doctest::Approx(90.0).epsilon(1e-6));
        CHECK(marginals.photon.mean == doctest::Approx(10.0).epsilon(1e-6));
    }

    SUBCASE("rect prior") {
        const FrequencyGrid grid = FrequencyGrid::over_span(8.0, 12.0, 1025);
        const JointEnergyState state = photonbox::make_photon_box(
            100.0, photonbox::make_rect(10.0, 1.0, grid));
        const auto marginals = photonbox::marginal_uncertainties(state);
        CHECK(marginals.photon.sigma ==
              doctest::Approx(1.0 / std::sqrt(12.0)).epsilon(1e-4));
        CHECK(marginals.box.sigma == marginals.photon.sigma);
    }

    SUBCASE("after collapse both spreads shrink to the pointer scale") {
        const JointEnergyState state =
            photonbox::make_photon_box(100.0, standard_prior());
        const auto outcome = photonbox::measure_box_energy(state, 0.01, 11);
        const auto marginals =
            photonbox::marginal_uncertainties(outcome.state);
        CHECK(marginals.photon.sigma <= 0.0101);
        CHECK(marginals.box.sigma <= 0.0101);
        // Gaussian product rule: sigma' = sigma sigma_m / sqrt(sigma^2 +
        // sigma_m^2), evaluated here independently.
        const double expected = 1.0 * 0.01 / std::sqrt(1.0 + 0.01 * 0.01);
        CHECK(marginals.photon.sigma ==
              doctest::Approx(expected).epsilon(1e-3));
    }
}

TEST_CASE("measurement samples the prior through its inverse cdf") {
    const JointEnergyState state =
        photonbox::make_photon_box(100.0, standard_prior());

    SUBCASE("median draw sits at the symmetric center") {
        CHECK(state.photon_cdf().quantile(0.5) ==
              doctest::Approx(10.0).epsilon(1e-6));
    }

    SUBCASE("identical seeds reproduce the record bit-exactly") {
        const auto first = photonbox::measure_box_energy(state, 0.01, 42);
        const auto second = photonbox::measure_box_energy(state, 0.01, 42);
        CHECK(first.record.outcome_frequency ==
              second.record.outcome_frequency);
        CHECK(first.record.box_energy_reading ==
              second.record.box_energy_reading);
        CHECK(first.record.seed == 42);
        CHECK_FALSE(first.record.generator.empty());
    }

    SUBCASE("conservation is a floating-point identity, trial by trial") {
        for (std::uint64_t i = 0; i < 1000; ++i) {
            const auto outcome =
                photonbox::measure_box_energy(state, 0.01, 1000 + i);
            CHECK(outcome.record.box_energy_reading +
                      outcome.record.outcome_frequency ==
                  100.0);
        }
    }

    SUBCASE("collapsed states reject another measurement") {
        const auto outcome = photonbox::measure_box_energy(state, 0.01, 3);
        CHECK(outcome.state.collapsed());
        CHECK(outcome.state.last_outcome().has_value());
        CHECK(*outcome.state.last_outcome() ==
              outcome.record.outcome_frequency);
        CHECK_THROWS_AS(photonbox::measure_box_energy(outcome.state, 0.01, 4),
                        std::invalid_argument);
    }

    SUBCASE("nonpositive resolution is rejected") {
        CHECK_THROWS_AS(photonbox::measure_box_energy(state, 0.0, 1),
                        std::invalid_argument);
        CHECK_THROWS_AS(photonbox::measure_box_energy(state, -1.0, 1),
                        std::invalid_argument);
    }

    SUBCASE("weak measurement leaves the prior untouched") {
        const auto outcome = photonbox::measure_box_energy(state, 1e3, 5);
        const auto marginals =
            photonbox::marginal_uncertainties(outcome.state);
        CHECK(marginals.photon.sigma == doctest::Approx(1.0).epsilon(1e-3));
    }

    SUBCASE("resolution far below the grid step underflows the posterior") {
        CHECK_THROWS_AS(photonbox::measure_box_energy(state, 1e-12, 1),
                        std::runtime_error);
    }
}

TEST_CASE("sampled outcomes reproduce the born weights") {
    const JointEnergyState state =
        photonbox::make_photon_box(100.0, standard_prior());
    const auto& prior = state.photon_amplitude();
    const photonbox::PiecewiseLinearCdf cdf(
        prior.grid().omega_min, prior.grid().step, prior.density());

    const int bins = 20;
    std::vector<double> edges;
    for (int b = 1; b < bins; ++b) {
        edges.push_back(cdf.quantile(static_cast<double>(b) / bins));
    }

    const std::size_t trials = 2000;
    std::vector<double> observed(bins, 0.0);
    for (std::size_t i = 0; i < trials; ++i) {
        const auto outcome =
            photonbox::measure_box_energy(state, 0.01, 500 + i);
        const auto it = std::upper_bound(edges.begin(), edges.end(),
                                          outcome.record.outcome_frequency);
        observed[static_cast<std::size_t>(it - edges.begin())] += 1.0;
    }
    const std::vector<double> expected(bins,
                                       static_cast<double>(trials) / bins);
    const auto chi = photonbox::pearson_chi_square(observed, expected);
    CHECK(chi.p_value > 0.001);
}

TEST_CASE("post-measurement time spread follows the pointer width") {
    SUBCASE("uncollapsed states are rejected") {
        const JointEnergyState state =
            photonbox::make_photon_box(100.0, standard_prior());
        CHECK_THROWS_AS(
            photonbox::post_measurement_time_uncertainty(state),
            std::invalid_argument);
    }

    SUBCASE("resolution 0.01 gives delta_t near 50") {
        const JointEnergyState state =
            photonbox::make_photon_box(100.0, standard_prior());
        const auto outcome = photonbox::measure_box_energy(state, 0.01, 21);
        const auto report =
            photonbox::post_measurement_time_uncertainty(outcome.state);
        CHECK(report.sigma == doctest::Approx(50.0).epsilon(0.01));
        CHECK_FALSE(report.divergent);

        const auto marginals =
            photonbox::marginal_uncertainties(outcome.state);
        CHECK(marginals.photon.sigma * report.sigma >= 0.5 - 1e-3);
    }

    SUBCASE("resolution 0.001 on a fine grid gives delta_t near 500") {
        const JointEnergyState state =
            photonbox::make_photon_box(100.0, standard_prior(40001));
        const auto outcome = photonbox::measure_box_energy(state, 0.001, 23);
        const auto report =
            photonbox::post_measurement_time_uncertainty(outcome.state);
        CHECK(report.sigma == doctest::Approx(500.0).epsilon(0.01));
    }

    SUBCASE("sharper pointers monotonically trade frequency for time") {
        const JointEnergyState state =
            photonbox::make_photon_box(100.0, standard_prior(40001));
        double previous_domega = 1e9;
        double previous_dt = 0.0;
        for (const double resolution : {0.1, 0.01, 0.001}) {
            const auto outcome =
                photonbox::measure_box_energy(state, resolution, 31);
            const double domega =
                photonbox::marginal_uncertainties(outcome.state).photon.sigma;
            const double dt = photonbox::post_measurement_time_uncertainty(
                                  outcome.state)
                                  .sigma;
            CHECK(domega < previous_domega);
            CHECK(dt > previous_dt);
            CHECK(domega * dt >= 0.5 - 1e-3);
            previous_domega = domega;
            previous_dt = dt;
        }
    }
}

TEST_CASE("pooling posterior densities recovers the prior") {
    SUBCASE("gaussian prior passes") {
        const JointEnergyState state =
            photonbox::make_photon_box(100.0, standard_prior());
        const auto result =
            photonbox::no_signaling_check(state, 0.05, 10000, 20, 900);
        CHECK(result.passed);
        CHECK(result.p_value > 0.001);
    }

    SUBCASE("double-hump prior passes") {
        const JointEnergyState state =
            photonbox::make_photon_box(100.0, double_hump_prior());
        const auto result =
            photonbox::no_signaling_check(state, 0.05, 10000, 20, 901);
        CHECK(result.passed);
    }

    SUBCASE("too few trials are rejected") {
        const JointEnergyState state =
            photonbox::make_photon_box(100.0, standard_prior());
        CHECK_THROWS_AS(
            photonbox::no_signaling_check(state, 0.05, 999, 20, 1),
            std::invalid_argument);
    }

    SUBCASE("a biased pool is caught") {
        const JointEnergyState state =
            photonbox::make_photon_box(100.0, standard_prior());
        const auto& grid = state.photon_amplitude().grid();
        // Keep only posteriors whose outcome landed above the mean: an
        // intentionally signaling-like filter.
        std::vector<double> pooled(grid.count, 0.0);
        std::size_t kept = 0;
        for (std::uint64_t i = 0; i < 4000; ++i) {
            const auto outcome =
                photonbox::measure_box_energy(state, 0.05, 7000 + i);
            if (outcome.record.outcome_frequency < 10.0) continue;
            ++kept;
            const auto& values = outcome.state.photon_amplitude().values();
            for (std::size_t k = 0; k < grid.count; ++k) {
                pooled[k] += std::norm(values[k]);
            }
        }
        REQUIRE(kept > 1000);
        for (double& p : pooled) p /= static_cast<double>(kept);
        const auto chi = photonbox::pooled_density_vs_prior(
            state.photon_amplitude(), pooled, 20, kept);
        CHECK(chi.p_value < 0.001);
    }

    SUBCASE("the prior compared against itself is a perfect fit") {
        const SpectralAmplitude prior = standard_prior();
        const auto chi = photonbox::pooled_density_vs_prior(
            prior, prior.density(), 20, 10000);
        CHECK(chi.statistic < 1e-6);
        CHECK(chi.p_value > 0.999);
    }
}
