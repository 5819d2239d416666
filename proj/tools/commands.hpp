#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace cli {

/// Flags shared by every subcommand.
struct CommonOptions {
    std::optional<std::string> config_path;
    std::optional<std::uint64_t> seed;
    std::string output_dir = ".";
    unsigned jobs = 1;
    bool emit_plot_data = false;
};

struct UncertaintyOptions {
    CommonOptions common;
    std::optional<std::string> profile;
    std::optional<double> omega0;
    std::optional<double> sigma;
    std::optional<double> width;
    std::optional<std::string> csv_path;
    std::optional<double> grid_min;
    std::optional<double> grid_max;
    std::optional<std::uint64_t> grid_points;
    std::optional<double> window_factor;
};

struct PhotonBoxOptions {
    CommonOptions common;
    std::optional<double> box_rest_frequency;
    std::optional<double> resolution;
    std::optional<std::uint64_t> trials;
    std::optional<std::string> amplitude_csv;
    bool no_signaling = false;
};

struct EprOptions {
    CommonOptions common;
    std::optional<double> momentum;
    std::optional<std::uint64_t> trials;
    std::optional<double> wavepacket_l;
};

struct ChshOptions {
    CommonOptions common;
    bool optimal = false;
    std::optional<double> a;
    std::optional<double> a_prime;
    std::optional<double> b;
    std::optional<double> b_prime;
    std::optional<std::uint64_t> trials;
};

struct RobertsonOptions {
    CommonOptions common;
    std::optional<std::uint64_t> trials;
    std::optional<std::uint64_t> dim_min;
    std::optional<std::uint64_t> dim_max;
};

struct BohrOptions {
    CommonOptions common;
    std::optional<double> hbar;
    std::optional<double> c;
    std::optional<double> g;
    std::optional<double> t;
    std::optional<double> t0;
    std::optional<double> delta_x;
    std::optional<double> delta_p;
    std::optional<double> shutter_delta_t;
};

void run_uncertainty(const UncertaintyOptions& options);
void run_photon_box(const PhotonBoxOptions& options);
void run_epr(const EprOptions& options);
void run_chsh(const ChshOptions& options);
void run_robertson(const RobertsonOptions& options);
void run_bohr(const BohrOptions& options);

}  // namespace cli
