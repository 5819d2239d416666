#include <doctest.h>

#include <cmath>
#include <complex>
#include <stdexcept>

#include "photonbox/epr.hpp"
#include "support/oracles.hpp"

using photonbox::TwoParticleMomentumState;

TEST_CASE("momentum pair construction is validated") {
    CHECK_NOTHROW(photonbox::make_epr(1.0));
    CHECK_THROWS_AS(photonbox::make_epr(0.0), std::invalid_argument);
    CHECK_THROWS_AS(photonbox::make_epr(-2.0), std::invalid_argument);

    SUBCASE("branch weights must be normalized") {
        CHECK_NOTHROW(TwoParticleMomentumState(1.0, {0.6, 0.0}, {0.0, 0.8}));
        CHECK_THROWS_AS(TwoParticleMomentumState(1.0, {0.6, 0.0}, {0.7, 0.0}),
                        std::invalid_argument);
        CHECK_THROWS_AS(TwoParticleMomentumState(1.0, {0.0, 0.0}, {0.0, 0.0}),
                        std::invalid_argument);
    }

    SUBCASE("the symmetric pair splits its weight evenly") {
        const auto state = photonbox::make_epr(3.0);
        CHECK(std::norm(state.amp_plus_minus()) ==
              doctest::Approx(0.5).epsilon(1e-12));
        CHECK(std::norm(state.amp_minus_plus()) ==
              doctest::Approx(0.5).epsilon(1e-12));
        CHECK_FALSE(state.collapsed());
    }
}

TEST_CASE("measuring the first particle fixes both momenta") {
    const auto state = photonbox::make_epr(2.5);

    SUBCASE("outcomes are one of the two branch values") {
        for (std::uint64_t seed = 0; seed < 64; ++seed) {
            const auto m = photonbox::measure_first_momentum(state, seed);
            CHECK((m.first_momentum == 2.5 || m.first_momentum == -2.5));
            CHECK(m.state.collapsed());
        }
    }

    SUBCASE("the partner momentum is the exact negative") {
        for (std::uint64_t seed = 0; seed < 10000; ++seed) {
            const auto m = photonbox::measure_first_momentum(state, seed);
            const double second = photonbox::second_particle_momentum(m.state);
            CHECK(second == -m.first_momentum);
            CHECK(m.first_momentum + second == 0.0);
        }
    }

    SUBCASE("identical seeds reproduce the outcome") {
        const auto a = photonbox::measure_first_momentum(state, 99);
        const auto b = photonbox::measure_first_momentum(state, 99);
        CHECK(a.first_momentum == b.first_momentum);
    }

    SUBCASE("+p frequency stays near one half over many trials") {
        std::size_t plus = 0;
        const std::size_t trials = 100000;
        for (std::uint64_t seed = 0; seed < trials; ++seed) {
            const auto m = photonbox::measure_first_momentum(state, seed);
            if (m.first_momentum > 0.0) ++plus;
        }
        const double frequency =
            static_cast<double>(plus) / static_cast<double>(trials);
        CHECK(frequency >= 0.494);
        CHECK(frequency <= 0.506);
    }

    SUBCASE("a pure branch always produces that branch") {
        const TwoParticleMomentumState pure(2.5, {1.0, 0.0}, {0.0, 0.0});
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            const auto m = photonbox::measure_first_momentum(pure, seed);
            CHECK(m.first_momentum == 2.5);
            CHECK(photonbox::second_particle_momentum(m.state) == -2.5);
        }
    }

    SUBCASE("collapsed states reject a second measurement") {
        const auto m = photonbox::measure_first_momentum(state, 1);
        CHECK_THROWS_AS(photonbox::measure_first_momentum(m.state, 2),
                        std::invalid_argument);
    }

    SUBCASE("the partner value is undefined before collapse") {
        CHECK_THROWS_AS(photonbox::second_particle_momentum(state),
                        std::invalid_argument);
    }
}

TEST_CASE("wavepacket spreads follow the packet width") {
    SUBCASE("unit width is a minimum-uncertainty packet") {
        const auto u = photonbox::wavepacket_uncertainties({0.0, 1.0});
        CHECK(u.delta_x == doctest::Approx(1.0).epsilon(1e-3));
        CHECK(u.delta_p == doctest::Approx(0.5).epsilon(1e-3));
        CHECK(u.product == doctest::Approx(0.5).epsilon(1e-3));
    }

    SUBCASE("a wide packet has a proportionally sharp momentum") {
        const auto u = photonbox::wavepacket_uncertainties({5.0, 100.0});
        CHECK(u.delta_x == doctest::Approx(100.0).epsilon(1e-3));
        CHECK(u.delta_p == doctest::Approx(0.005).epsilon(1e-3));
        CHECK(u.product == doctest::Approx(0.5).epsilon(1e-3));
    }

    SUBCASE("widening the packet trades position for momentum monotonically") {
        double previous_dx = 0.0;
        double previous_dp = 1e9;
        for (const double width : {0.5, 1.0, 2.0, 5.0, 10.0, 50.0}) {
            const auto u = photonbox::wavepacket_uncertainties({1.0, width});
            CHECK(u.delta_x > previous_dx);
            CHECK(u.delta_p < previous_dp);
            CHECK(u.product == doctest::Approx(0.5).epsilon(1e-3));
            previous_dx = u.delta_x;
            previous_dp = u.delta_p;
        }
    }

    SUBCASE("the riding momentum does not change the spreads") {
        const auto at_rest = photonbox::wavepacket_uncertainties({0.0, 2.0});
        const auto boosted = photonbox::wavepacket_uncertainties({40.0, 2.0});
        CHECK(boosted.delta_x == doctest::Approx(at_rest.delta_x).epsilon(1e-9));
        CHECK(boosted.delta_p == doctest::Approx(at_rest.delta_p).epsilon(1e-9));
    }

    SUBCASE("quadrature cross-check against an adaptive integrator") {
        // Position density exp(-x^2 / (2 L^2)) / (L sqrt(2 pi)) for L = 3.
        const double L = 3.0;
        const auto density = [L](double x) {
            return std::exp(-x * x / (2.0 * L * L)) /
                   (L * std::sqrt(2.0 * 3.14159265358979323846));
        };
        const double mass = oracle::integrate(density, -12.0 * L, 12.0 * L);
        const double m2 = oracle::integrate(
            [&](double x) { return x * x * density(x); }, -12.0 * L, 12.0 * L);
        const double sigma = std::sqrt(m2 / mass);

        const auto u = photonbox::wavepacket_uncertainties({0.0, L});
        CHECK(u.delta_x == doctest::Approx(sigma).epsilon(1e-6));
    }

    SUBCASE("invalid parameters are rejected") {
        CHECK_THROWS_AS(photonbox::wavepacket_uncertainties({0.0, 0.0}),
                        std::invalid_argument);
        CHECK_THROWS_AS(photonbox::wavepacket_uncertainties({0.0, -1.0}),
                        std::invalid_argument);
        CHECK_THROWS_AS(
            photonbox::wavepacket_uncertainties({0.0, 1.0}, {6.0, 2049}),
            std::invalid_argument);
        CHECK_THROWS_AS(
            photonbox::wavepacket_uncertainties({0.0, 1.0}, {12.0, 16}),
            std::invalid_argument);
    }
}
