#include <exception>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "commands.hpp"
#include "harness.hpp"

namespace {

void add_common_flags(CLI::App* sub, cli::CommonOptions& common) {
    sub->add_option("--config", common.config_path,
                    "JSON config file; explicit flags override its values");
    sub->add_option("--seed", common.seed, "Base seed for derived RNG streams");
    sub->add_option("--output", common.output_dir,
                    "Directory for result.json, manifest.json and CSV logs")
        ->capture_default_str();
    sub->add_option("--jobs", common.jobs,
                    "Worker threads for independent trials")
        ->check(CLI::Range(1u, 256u));
    sub->add_flag("--emit-plot-data", common.emit_plot_data,
                  "Also write (x, y) CSV series for plotting");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantitative toolkit for the photon-box thought experiment"};
    app.set_version_flag("--version", cli::kToolVersion);
    app.require_subcommand(1);

    cli::UncertaintyOptions uncertainty;
    auto* uncertainty_cmd = app.add_subcommand(
        "uncertainty", "Frequency/time spreads of one spectral profile");
    add_common_flags(uncertainty_cmd, uncertainty.common);
    uncertainty_cmd->add_option("--profile", uncertainty.profile,
                                "gaussian, rect or csv");
    uncertainty_cmd->add_option("--omega0", uncertainty.omega0,
                                "Profile center frequency");
    uncertainty_cmd->add_option("--sigma", uncertainty.sigma,
                                "Gaussian spectral width");
    uncertainty_cmd->add_option("--width", uncertainty.width,
                                "Rect full width");
    uncertainty_cmd->add_option("--csv-path", uncertainty.csv_path,
                                "Amplitude CSV for --profile csv");
    uncertainty_cmd->add_option("--grid-min", uncertainty.grid_min,
                                "Lowest grid frequency");
    uncertainty_cmd->add_option("--grid-max", uncertainty.grid_max,
                                "Highest grid frequency");
    uncertainty_cmd->add_option("--grid-points", uncertainty.grid_points,
                                "Grid node count");
    uncertainty_cmd->add_option("--window-factor", uncertainty.window_factor,
                                "Time window scale (>= 1)");
    uncertainty_cmd->callback([&] { cli::run_uncertainty(uncertainty); });

    cli::PhotonBoxOptions photon_box;
    auto* photon_box_cmd = app.add_subcommand(
        "photon-box", "Entangled photon/box pair: measure and collapse");
    add_common_flags(photon_box_cmd, photon_box.common);
    photon_box_cmd->add_option("--box-rest-frequency",
                               photon_box.box_rest_frequency,
                               "Box rest energy in frequency units");
    photon_box_cmd->add_option("--resolution", photon_box.resolution,
                               "Gaussian pointer width of the energy readout");
    photon_box_cmd->add_option("--trials", photon_box.trials,
                               "Number of seeded measurements");
    photon_box_cmd->add_option("--amplitude-csv", photon_box.amplitude_csv,
                               "Photon amplitude CSV (overrides config)");
    photon_box_cmd->add_flag("--no-signaling", photon_box.no_signaling,
                             "Pool posteriors against the prior marginal");
    photon_box_cmd->callback([&] { cli::run_photon_box(photon_box); });

    cli::EprOptions epr;
    auto* epr_cmd = app.add_subcommand(
        "epr", "Two-branch momentum pair: sample and verify anticorrelation");
    add_common_flags(epr_cmd, epr.common);
    epr_cmd->add_option("--p", epr.momentum, "Branch momentum magnitude");
    epr_cmd->add_option("--trials", epr.trials,
                        "Number of seeded measurements");
    epr_cmd->add_option("--wavepacket-l", epr.wavepacket_l,
                        "Gaussian packet width for the spread report");
    epr_cmd->callback([&] { cli::run_epr(epr); });

    cli::ChshOptions chsh;
    auto* chsh_cmd = app.add_subcommand(
        "chsh", "Singlet correlations and the CHSH combination");
    add_common_flags(chsh_cmd, chsh.common);
    chsh_cmd->add_flag("--optimal", chsh.optimal,
                       "Use the angles that reach |S| = 2 sqrt 2");
    chsh_cmd->add_option("--a", chsh.a, "First analyzer angle a");
    chsh_cmd->add_option("--a-prime", chsh.a_prime,
                         "Alternative analyzer angle a'");
    chsh_cmd->add_option("--b", chsh.b, "Second analyzer angle b");
    chsh_cmd->add_option("--b-prime", chsh.b_prime,
                         "Alternative analyzer angle b'");
    chsh_cmd->add_option("--trials", chsh.trials,
                         "Monte Carlo samples per correlator; 0 = exact");
    chsh_cmd->callback([&] { cli::run_chsh(chsh); });

    cli::RobertsonOptions robertson;
    auto* robertson_cmd = app.add_subcommand(
        "robertson", "Random sweep of uncertainty and clock bounds");
    add_common_flags(robertson_cmd, robertson.common);
    robertson_cmd->add_option("--trials", robertson.trials,
                              "Number of random triples");
    robertson_cmd->add_option("--dim-min", robertson.dim_min,
                              "Smallest state-space dimension");
    robertson_cmd->add_option("--dim-max", robertson.dim_max,
                              "Largest state-space dimension");
    robertson_cmd->callback([&] { cli::run_robertson(robertson); });

    cli::BohrOptions bohr;
    auto* bohr_cmd = app.add_subcommand(
        "bohr", "Weighing-protocol bounds and their chained product");
    add_common_flags(bohr_cmd, bohr.common);
    bohr_cmd->add_option("--hbar", bohr.hbar, "Reduced Planck constant");
    bohr_cmd->add_option("--c", bohr.c, "Speed of light");
    bohr_cmd->add_option("--g", bohr.g, "Gravitational acceleration");
    bohr_cmd->add_option("--t", bohr.t, "Laboratory weighing duration");
    bohr_cmd->add_option("--t0", bohr.t0, "Proper duration of the box clock");
    bohr_cmd->add_option("--delta-x", bohr.delta_x,
                         "Pointer position spread");
    bohr_cmd->add_option("--delta-p", bohr.delta_p,
                         "Pointer momentum spread");
    bohr_cmd->add_option("--shutter-delta-t", bohr.shutter_delta_t,
                         "Shutter opening time");
    bohr_cmd->callback([&] { cli::run_bohr(bohr); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& help) {
        return app.exit(help);
    } catch (const CLI::CallForVersion& version) {
        return app.exit(version);
    } catch (const CLI::ParseError& error) {
        app.exit(error);
        return 2;
    } catch (const std::invalid_argument& error) {
        std::cerr << "config error: " << error.what() << "\n";
        return 2;
    } catch (const std::exception& error) {
        std::cerr << "run failed: " << error.what() << "\n";
        return 3;
    }
    return 0;
}
