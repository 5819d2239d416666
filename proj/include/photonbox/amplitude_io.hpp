#pragma once

#include <filesystem>
#include <istream>
#include <ostream>
#include <vector>

#include "photonbox/spectral.hpp"

namespace photonbox {

/// Reads rows of "omega,re,im" with a mandatory header line. Blank lines are
/// ignored; anything else malformed raises std::runtime_error.
std::vector<AmplitudeRow> read_amplitude_csv(std::istream& in);
std::vector<AmplitudeRow> read_amplitude_csv_file(
    const std::filesystem::path& path);

/// Writes the normalized samples in the same "omega,re,im" layout with
/// shortest round-trip number formatting.
void write_amplitude_csv(std::ostream& out, const SpectralAmplitude& amplitude);

}  // namespace photonbox
