#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "photonbox/amplitude_io.hpp"
#include "photonbox/spectral.hpp"

using photonbox::FrequencyGrid;
using photonbox::SpectralAmplitude;

TEST_CASE("amplitude csv round trip is lossless") {
    const FrequencyGrid grid = FrequencyGrid::over_span(-10.0, 10.0, 512);
    const SpectralAmplitude original =
        photonbox::make_gaussian(0.7, 1.1, grid);

    std::stringstream buffer;
    photonbox::write_amplitude_csv(buffer, original);

    const auto rows = photonbox::read_amplitude_csv(buffer);
    REQUIRE(rows.size() == grid.count);
    const auto loaded = photonbox::load_amplitude(rows);

    for (std::size_t k = 0; k < grid.count; ++k) {
        // Shortest round-trip formatting must reproduce every double.
        CHECK(rows[k].omega == grid.omega(k));
        CHECK(loaded.amplitude.values()[k].real() ==
              doctest::Approx(original.values()[k].real()).epsilon(1e-15));
    }
}

TEST_CASE("csv reader enforces the header and row shape") {
    SUBCASE("missing header") {
        std::stringstream in("1.0,2.0,3.0\n");
        CHECK_THROWS_AS(photonbox::read_amplitude_csv(in),
                        std::runtime_error);
    }
    SUBCASE("wrong header") {
        std::stringstream in("w,x,y\n1,2,3\n");
        CHECK_THROWS_AS(photonbox::read_amplitude_csv(in),
                        std::runtime_error);
    }
    SUBCASE("short row") {
        std::stringstream in("omega,re,im\n1.0,2.0\n");
        CHECK_THROWS_AS(photonbox::read_amplitude_csv(in),
                        std::runtime_error);
    }
    SUBCASE("extra field") {
        std::stringstream in("omega,re,im\n1.0,2.0,3.0,4.0\n");
        CHECK_THROWS_AS(photonbox::read_amplitude_csv(in),
                        std::runtime_error);
    }
    SUBCASE("non-numeric field names the line") {
        std::stringstream in("omega,re,im\n1.0,abc,3.0\n");
        CHECK_THROWS_WITH_AS(photonbox::read_amplitude_csv(in),
                             doctest::Contains("line 2"), std::runtime_error);
    }
    SUBCASE("blank lines and surrounding whitespace are tolerated") {
        std::stringstream in(
            "omega,re,im\n\n 0.0 , 1.0 , 0.0 \n1.0,1.0,0.0\n\n");
        const auto rows = photonbox::read_amplitude_csv(in);
        REQUIRE(rows.size() == 2);
        CHECK(rows[0].re == 1.0);
        CHECK(rows[1].omega == 1.0);
    }
    SUBCASE("missing file") {
        CHECK_THROWS_AS(
            photonbox::read_amplitude_csv_file("/nonexistent/amp.csv"),
            std::runtime_error);
    }
}
