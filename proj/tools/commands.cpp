#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "harness.hpp"
#include "photonbox/amplitude_io.hpp"
#include "photonbox/bohr.hpp"
#include "photonbox/chsh.hpp"
#include "photonbox/entangled.hpp"
#include "photonbox/epr.hpp"
#include "photonbox/random.hpp"
#include "photonbox/robertson.hpp"
#include "photonbox/spectral.hpp"

namespace cli {
namespace {

constexpr double kPi = 3.14159265358979323846;

nlohmann::json maybe_config(const CommonOptions& common) {
    if (common.config_path.has_value()) {
        return load_config_file(*common.config_path);
    }
    return nlohmann::json::object();
}

std::uint64_t resolve_seed(const CommonOptions& common,
                           const nlohmann::json& config) {
    return resolve_setting(common.seed, config_integer(config, "seed", 1));
}

nlohmann::json report_json(const photonbox::UncertaintyReport& report) {
    return {{"mean", report.mean},
            {"second_moment", report.second_moment},
            {"sigma", report.sigma},
            {"divergent", report.divergent}};
}

/// Runs body(i) for every trial index, split across `jobs` threads in
/// contiguous chunks. Each index owns its output slot, so the result does not
/// depend on the thread count.
void for_each_trial(std::uint64_t trials, unsigned jobs,
                    const std::function<void(std::uint64_t)>& body) {
    if (jobs <= 1 || trials < 2) {
        for (std::uint64_t i = 0; i < trials; ++i) {
            body(i);
        }
        return;
    }
    const unsigned workers = static_cast<unsigned>(
        std::min<std::uint64_t>(jobs, trials));
    std::vector<std::thread> threads;
    threads.reserve(workers);
    const std::uint64_t chunk = (trials + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t begin = static_cast<std::uint64_t>(w) * chunk;
        const std::uint64_t end = std::min(trials, begin + chunk);
        if (begin >= end) {
            break;
        }
        threads.emplace_back([&body, begin, end] {
            for (std::uint64_t i = begin; i < end; ++i) {
                body(i);
            }
        });
    }
    for (std::thread& thread : threads) {
        thread.join();
    }
}

photonbox::SpectralAmplitude amplitude_from_csv(const std::string& path) {
    try {
        const auto rows = photonbox::read_amplitude_csv_file(path);
        return photonbox::load_amplitude(rows).amplitude;
    } catch (const std::runtime_error& error) {
        // A malformed data file is a configuration problem, not a failed run.
        throw std::invalid_argument(error.what());
    }
}

struct AmplitudeSpec {
    std::string profile = "gaussian";
    double omega0 = 10.0;
    double sigma = 1.0;
    double width = 1.0;
    double grid_min = 0.0;
    double grid_max = 20.0;
    std::uint64_t grid_points = 4097;
    std::string csv_path;

    nlohmann::json to_json() const {
        if (profile == "csv") {
            return {{"profile", profile}, {"csv_path", csv_path}};
        }
        nlohmann::json spec = {{"profile", profile},
                               {"omega0", omega0},
                               {"grid_min", grid_min},
                               {"grid_max", grid_max},
                               {"grid_points", grid_points}};
        spec[profile == "rect" ? "width" : "sigma"] =
            profile == "rect" ? width : sigma;
        return spec;
    }

    photonbox::SpectralAmplitude build() const {
        if (profile == "csv") {
            return amplitude_from_csv(csv_path);
        }
        if (grid_points < 8) {
            throw std::invalid_argument("grid_points must be at least 8");
        }
        const photonbox::FrequencyGrid grid =
            photonbox::FrequencyGrid::over_span(grid_min, grid_max,
                                                grid_points);
        if (profile == "gaussian") {
            return photonbox::make_gaussian(omega0, sigma, grid);
        }
        if (profile == "rect") {
            return photonbox::make_rect(omega0, width, grid);
        }
        throw std::invalid_argument("unknown profile '" + profile +
                                    "': expected gaussian, rect or csv");
    }
};

AmplitudeSpec parse_amplitude_config(const nlohmann::json& node) {
    AmplitudeSpec spec;
    if (node.is_string()) {
        spec.profile = "csv";
        spec.csv_path = node.get<std::string>();
        return spec;
    }
    if (!node.is_object()) {
        throw std::invalid_argument(
            "config key 'amplitude' must be a CSV path or an object");
    }
    reject_unknown_keys(node,
                        {"profile", "omega0", "sigma", "width", "grid_min",
                         "grid_max", "grid_points", "csv_path"},
                        "amplitude");
    spec.profile = config_string(node, "profile", spec.profile);
    spec.omega0 = config_number(node, "omega0", spec.omega0);
    spec.sigma = config_number(node, "sigma", spec.sigma);
    spec.width = config_number(node, "width", spec.width);
    spec.grid_min = config_number(node, "grid_min", spec.grid_min);
    spec.grid_max = config_number(node, "grid_max", spec.grid_max);
    spec.grid_points = config_integer(node, "grid_points", spec.grid_points);
    spec.csv_path = config_string(node, "csv_path", spec.csv_path);
    return spec;
}

std::string density_csv(const char* x_name,
                        const std::vector<double>& x,
                        const std::vector<double>& y) {
    std::string body = std::string(x_name) + ",density\n";
    for (std::size_t k = 0; k < x.size(); ++k) {
        body += format_double(x[k]) + "," + format_double(y[k]) + "\n";
    }
    return body;
}

}  // namespace

void run_uncertainty(const UncertaintyOptions& options) {
    const nlohmann::json config = maybe_config(options.common);
    reject_unknown_keys(config,
                        {"profile", "omega0", "sigma", "width", "csv_path",
                         "grid_min", "grid_max", "grid_points",
                         "window_factor", "seed"},
                        "uncertainty");

    AmplitudeSpec spec;
    spec.profile = resolve_setting(options.profile,
                                   config_string(config, "profile",
                                                 "gaussian"));
    spec.omega0 = resolve_setting(options.omega0,
                                  config_number(config, "omega0", 0.0));
    spec.sigma = resolve_setting(options.sigma,
                                 config_number(config, "sigma", 1.0));
    spec.width = resolve_setting(options.width,
                                 config_number(config, "width", 1.0));
    spec.csv_path = resolve_setting(options.csv_path,
                                    config_string(config, "csv_path", ""));
    // Default analytic grids track the profile scale.
    const double default_min = spec.profile == "rect"
                                   ? spec.omega0 - spec.width
                                   : spec.omega0 - 10.0 * spec.sigma;
    const double default_max = spec.profile == "rect"
                                   ? spec.omega0 + spec.width
                                   : spec.omega0 + 10.0 * spec.sigma;
    spec.grid_min = resolve_setting(
        options.grid_min, config_number(config, "grid_min", default_min));
    spec.grid_max = resolve_setting(
        options.grid_max, config_number(config, "grid_max", default_max));
    spec.grid_points = resolve_setting(
        options.grid_points, config_integer(config, "grid_points", 4097));
    const double window_factor = resolve_setting(
        options.window_factor, config_number(config, "window_factor", 1.0));
    const std::uint64_t seed = resolve_seed(options.common, config);

    if (spec.profile == "csv" && spec.csv_path.empty()) {
        throw std::invalid_argument("profile csv needs csv_path");
    }

    const photonbox::SpectralAmplitude amplitude = spec.build();
    const auto frequency = photonbox::frequency_uncertainty(amplitude);
    const photonbox::TimeProfile profile =
        photonbox::fourier_transform(amplitude, window_factor);
    const auto time = photonbox::time_uncertainty(profile);

    RunArtifacts artifacts;
    artifacts.subcommand = "uncertainty";
    artifacts.seed = seed;
    artifacts.resolved_config = spec.to_json();
    artifacts.resolved_config["window_factor"] = window_factor;
    artifacts.resolved_config["seed"] = seed;

    const bool divergent = frequency.divergent || time.divergent;
    artifacts.result = {
        {"frequency", report_json(frequency)},
        {"time", report_json(time)},
        {"product", divergent
                        ? nlohmann::json()
                        : nlohmann::json(frequency.sigma * time.sigma)},
        {"divergent", divergent},
        {"bound_satisfied",
         divergent || frequency.sigma * time.sigma >=
                          photonbox::kFourierBound -
                              photonbox::kBoundTolerance}};

    if (options.common.emit_plot_data) {
        const auto& grid = amplitude.grid();
        std::vector<double> omegas(grid.count);
        for (std::size_t k = 0; k < grid.count; ++k) {
            omegas[k] = grid.omega(k);
        }
        artifacts.plot_data.push_back(
            {"spectral_density.csv",
             density_csv("omega", omegas, amplitude.density())});

        std::vector<double> times(profile.values.size());
        std::vector<double> time_density(profile.values.size());
        for (std::size_t j = 0; j < profile.values.size(); ++j) {
            times[j] = profile.time(j);
            time_density[j] = std::norm(profile.values[j]);
        }
        artifacts.plot_data.push_back(
            {"time_density.csv", density_csv("t", times, time_density)});
    }

    write_run_artifacts(options.common.output_dir, artifacts);
}

void run_photon_box(const PhotonBoxOptions& options) {
    const nlohmann::json config = maybe_config(options.common);
    reject_unknown_keys(config,
                        {"box_rest_frequency", "amplitude", "resolution",
                         "trials", "seed"},
                        "photon-box");

    AmplitudeSpec spec;
    if (config.contains("amplitude")) {
        spec = parse_amplitude_config(config["amplitude"]);
    }
    if (options.amplitude_csv.has_value()) {
        spec = AmplitudeSpec{};
        spec.profile = "csv";
        spec.csv_path = *options.amplitude_csv;
    }
    const double box_rest_frequency = resolve_setting(
        options.box_rest_frequency,
        config_number(config, "box_rest_frequency", 100.0));
    const double resolution = resolve_setting(
        options.resolution, config_number(config, "resolution", 0.01));
    const std::uint64_t trials = resolve_setting(
        options.trials, config_integer(config, "trials", 100));
    const std::uint64_t seed = resolve_seed(options.common, config);
    if (trials == 0) {
        throw std::invalid_argument("trials must be at least 1");
    }
    if (options.no_signaling && trials < 1000) {
        throw std::invalid_argument(
            "the no-signaling check needs at least 1000 trials");
    }

    const photonbox::JointEnergyState state =
        photonbox::make_photon_box(box_rest_frequency, spec.build());
    const auto marginals = photonbox::marginal_uncertainties(state);

    struct TrialRow {
        std::uint64_t seed = 0;
        double omega_meas = 0.0;
        double box_reading = 0.0;
        double post_sigma_omega = 0.0;
        double post_sigma_t = 0.0;
        bool conserved = false;
    };
    std::vector<TrialRow> rows(trials);
    for_each_trial(trials, options.common.jobs, [&](std::uint64_t i) {
        const auto outcome =
            photonbox::measure_box_energy(state, resolution, seed + i);
        TrialRow& row = rows[i];
        row.seed = outcome.record.seed;
        row.omega_meas = outcome.record.outcome_frequency;
        row.box_reading = outcome.record.box_energy_reading;
        row.post_sigma_omega =
            photonbox::marginal_uncertainties(outcome.state).photon.sigma;
        row.post_sigma_t =
            photonbox::post_measurement_time_uncertainty(outcome.state).sigma;
        row.conserved = row.box_reading + row.omega_meas ==
                        box_rest_frequency;
    });

    std::string csv = "trial,seed,omega_meas,box_reading,post_sigma_omega,"
                      "post_sigma_t\n";
    double sigma_omega_sum = 0.0;
    double sigma_t_sum = 0.0;
    std::uint64_t violations = 0;
    for (std::uint64_t i = 0; i < trials; ++i) {
        const TrialRow& row = rows[i];
        csv += std::to_string(i) + "," + std::to_string(row.seed) + "," +
               format_double(row.omega_meas) + "," +
               format_double(row.box_reading) + "," +
               format_double(row.post_sigma_omega) + "," +
               format_double(row.post_sigma_t) + "\n";
        sigma_omega_sum += row.post_sigma_omega;
        sigma_t_sum += row.post_sigma_t;
        if (!row.conserved) {
            ++violations;
        }
    }

    nlohmann::json born = nlohmann::json();
    if (trials >= 1000) {
        const int bins = 20;
        const photonbox::PiecewiseLinearCdf& cdf = state.photon_cdf();
        std::vector<double> edges;
        for (int b = 1; b < bins; ++b) {
            edges.push_back(cdf.quantile(static_cast<double>(b) / bins));
        }
        std::vector<double> observed(bins, 0.0);
        for (const TrialRow& row : rows) {
            const auto it = std::upper_bound(edges.begin(), edges.end(),
                                             row.omega_meas);
            observed[static_cast<std::size_t>(it - edges.begin())] += 1.0;
        }
        const std::vector<double> expected(
            bins, static_cast<double>(trials) / bins);
        const auto chi = photonbox::pearson_chi_square(observed, expected);
        born = {{"statistic", chi.statistic},
                {"p_value", chi.p_value},
                {"bins", bins}};
    }

    nlohmann::json no_signaling = nlohmann::json();
    if (options.no_signaling) {
        const auto result = photonbox::no_signaling_check(
            state, resolution, trials, 20, seed);
        no_signaling = {{"statistic", result.statistic},
                        {"p_value", result.p_value},
                        {"passed", result.passed},
                        {"bins", result.bins}};
    }

    RunArtifacts artifacts;
    artifacts.subcommand = "photon-box";
    artifacts.seed = seed;
    artifacts.resolved_config = {{"box_rest_frequency", box_rest_frequency},
                                 {"amplitude", spec.to_json()},
                                 {"resolution", resolution},
                                 {"trials", trials},
                                 {"seed", seed}};
    artifacts.result = {
        {"box_rest_frequency", box_rest_frequency},
        {"resolution", resolution},
        {"trials", trials},
        {"total_energy_uncertainty",
         photonbox::total_energy_uncertainty(state)},
        {"marginals",
         {{"photon", report_json(marginals.photon)},
          {"box", report_json(marginals.box)}}},
        {"conservation_exact", violations == 0},
        {"mean_post_sigma_omega",
         sigma_omega_sum / static_cast<double>(trials)},
        {"mean_post_sigma_t", sigma_t_sum / static_cast<double>(trials)},
        {"born", born},
        {"no_signaling", no_signaling}};
    artifacts.trials_csv = csv;

    if (options.common.emit_plot_data) {
        const auto& grid = state.photon_amplitude().grid();
        std::vector<double> omegas(grid.count);
        for (std::size_t k = 0; k < grid.count; ++k) {
            omegas[k] = grid.omega(k);
        }
        artifacts.plot_data.push_back(
            {"prior_density.csv",
             density_csv("omega", omegas,
                         state.photon_amplitude().density())});

        std::string sweep = "sigma_meas,post_sigma_omega,post_sigma_t\n";
        for (const double sigma_meas :
             {0.1, 0.05, 0.02, 0.01, 0.005, 0.002, 0.001}) {
            if (sigma_meas < 2.0 * grid.step) {
                continue;  // unresolvable on this grid
            }
            const auto outcome =
                photonbox::measure_box_energy(state, sigma_meas, seed);
            const double sigma_omega =
                photonbox::marginal_uncertainties(outcome.state).photon.sigma;
            const double sigma_t =
                photonbox::post_measurement_time_uncertainty(outcome.state)
                    .sigma;
            sweep += format_double(sigma_meas) + "," +
                     format_double(sigma_omega) + "," +
                     format_double(sigma_t) + "\n";
        }
        artifacts.plot_data.push_back({"resolution_sweep.csv", sweep});
    }

    write_run_artifacts(options.common.output_dir, artifacts);

    if (violations > 0) {
        throw std::runtime_error(
            std::to_string(violations) +
            " trials violated exact energy conservation");
    }
}

void run_epr(const EprOptions& options) {
    const nlohmann::json config = maybe_config(options.common);
    reject_unknown_keys(config, {"p", "trials", "seed", "wavepacket_L"},
                        "epr");

    const double p = resolve_setting(options.momentum,
                                     config_number(config, "p", 1.0));
    const std::uint64_t trials = resolve_setting(
        options.trials, config_integer(config, "trials", 10000));
    const double wavepacket_l = resolve_setting(
        options.wavepacket_l, config_number(config, "wavepacket_L", 1.0));
    const std::uint64_t seed = resolve_seed(options.common, config);
    if (trials == 0) {
        throw std::invalid_argument("trials must be at least 1");
    }

    const photonbox::TwoParticleMomentumState state = photonbox::make_epr(p);

    struct TrialRow {
        std::uint64_t seed = 0;
        double outcome = 0.0;
        double second = 0.0;
    };
    std::vector<TrialRow> rows(trials);
    for_each_trial(trials, options.common.jobs, [&](std::uint64_t i) {
        const auto measurement =
            photonbox::measure_first_momentum(state, seed + i);
        rows[i].seed = measurement.seed;
        rows[i].outcome = measurement.first_momentum;
        rows[i].second =
            photonbox::second_particle_momentum(measurement.state);
    });

    std::string csv = "trial,seed,outcome,second_momentum\n";
    std::uint64_t plus = 0;
    std::uint64_t violations = 0;
    for (std::uint64_t i = 0; i < trials; ++i) {
        const TrialRow& row = rows[i];
        csv += std::to_string(i) + "," + std::to_string(row.seed) + "," +
               format_double(row.outcome) + "," + format_double(row.second) +
               "\n";
        if (row.outcome > 0.0) {
            ++plus;
        }
        if (row.outcome + row.second != 0.0) {
            ++violations;
        }
    }

    const auto wavepacket =
        photonbox::wavepacket_uncertainties({p, wavepacket_l});

    RunArtifacts artifacts;
    artifacts.subcommand = "epr";
    artifacts.seed = seed;
    artifacts.resolved_config = {{"p", p},
                                 {"trials", trials},
                                 {"seed", seed},
                                 {"wavepacket_L", wavepacket_l}};
    artifacts.result = {
        {"p", p},
        {"trials", trials},
        {"plus_frequency",
         static_cast<double>(plus) / static_cast<double>(trials)},
        {"anticorrelation_exact", violations == 0},
        {"wavepacket",
         {{"L", wavepacket_l},
          {"delta_x", wavepacket.delta_x},
          {"delta_p", wavepacket.delta_p},
          {"product", wavepacket.product}}}};
    artifacts.trials_csv = csv;

    if (options.common.emit_plot_data) {
        std::string sweep = "L,delta_x,delta_p,product\n";
        for (const double width :
             {0.5, 1.0, 2.0, 5.0, 10.0, 20.0, 50.0, 100.0}) {
            const auto u = photonbox::wavepacket_uncertainties({p, width});
            sweep += format_double(width) + "," + format_double(u.delta_x) +
                     "," + format_double(u.delta_p) + "," +
                     format_double(u.product) + "\n";
        }
        artifacts.plot_data.push_back({"wavepacket_sweep.csv", sweep});
    }

    write_run_artifacts(options.common.output_dir, artifacts);

    if (violations > 0) {
        throw std::runtime_error(
            std::to_string(violations) +
            " trials violated exact momentum anticorrelation");
    }
}

void run_chsh(const ChshOptions& options) {
    const nlohmann::json config = maybe_config(options.common);
    reject_unknown_keys(
        config, {"optimal", "a", "a_prime", "b", "b_prime", "trials", "seed"},
        "chsh");

    bool optimal = options.optimal;
    if (!optimal && config.contains("optimal")) {
        if (!config["optimal"].is_boolean()) {
            throw std::invalid_argument(
                "config key 'optimal' must be a boolean");
        }
        optimal = config["optimal"].get<bool>();
    }

    const photonbox::MeasurementSettings reference =
        photonbox::optimal_settings();
    photonbox::MeasurementSettings settings;
    settings.a = resolve_setting(options.a,
                                 config_number(config, "a", reference.a));
    settings.a_prime = resolve_setting(
        options.a_prime, config_number(config, "a_prime",
                                       reference.a_prime));
    settings.b = resolve_setting(options.b,
                                 config_number(config, "b", reference.b));
    settings.b_prime = resolve_setting(
        options.b_prime, config_number(config, "b_prime",
                                       reference.b_prime));
    if (optimal) {
        settings = reference;
    }
    const std::uint64_t trials = resolve_setting(
        options.trials, config_integer(config, "trials", 0));
    const std::uint64_t seed = resolve_seed(options.common, config);

    double s_value = 0.0;
    double std_error = 0.0;
    if (trials == 0) {
        s_value = photonbox::chsh_value(settings);
    } else {
        const auto estimate =
            photonbox::chsh_monte_carlo(settings, trials, seed);
        s_value = estimate.S;
        std_error = estimate.std_error;
    }

    RunArtifacts artifacts;
    artifacts.subcommand = "chsh";
    artifacts.seed = seed;
    artifacts.resolved_config = {{"optimal", optimal},
                                 {"a", settings.a},
                                 {"a_prime", settings.a_prime},
                                 {"b", settings.b},
                                 {"b_prime", settings.b_prime},
                                 {"trials", trials},
                                 {"seed", seed}};
    artifacts.result = {
        {"S", s_value},
        {"std_error", std_error},
        {"settings",
         {settings.a, settings.a_prime, settings.b, settings.b_prime}},
        {"trials", trials}};

    if (options.common.emit_plot_data) {
        std::string sweep = "angle_difference,correlation\n";
        const int samples = 256;
        for (int k = 0; k <= samples; ++k) {
            const double difference =
                2.0 * kPi * static_cast<double>(k) / samples;
            sweep += format_double(difference) + "," +
                     format_double(
                         photonbox::singlet_correlation(difference, 0.0)) +
                     "\n";
        }
        artifacts.plot_data.push_back({"correlation_vs_angle.csv", sweep});
    }

    write_run_artifacts(options.common.output_dir, artifacts);
}

void run_robertson(const RobertsonOptions& options) {
    const nlohmann::json config = maybe_config(options.common);
    reject_unknown_keys(config, {"trials", "seed", "dim_min", "dim_max"},
                        "robertson");

    const std::uint64_t trials = resolve_setting(
        options.trials, config_integer(config, "trials", 1000));
    const std::uint64_t dim_min = resolve_setting(
        options.dim_min, config_integer(config, "dim_min", 2));
    const std::uint64_t dim_max = resolve_setting(
        options.dim_max, config_integer(config, "dim_max", 8));
    const std::uint64_t seed = resolve_seed(options.common, config);
    if (trials == 0) {
        throw std::invalid_argument("trials must be at least 1");
    }
    if (dim_min < 2 || dim_max > 16 || dim_min > dim_max) {
        throw std::invalid_argument(
            "dimensions must satisfy 2 <= dim_min <= dim_max <= 16");
    }

    // The drift comparison needs gently scaled operators: the fixed 1e-4
    // finite-difference step carries an h^2 |f'''| truncation error that the
    // 1e-6 relative tolerance can only absorb when the spectrum is mild.
    constexpr double kSweepScale = 0.05;
    constexpr double kRateGate = 1e-8;

    struct TrialRow {
        std::uint64_t dim = 0;
        double lhs = 0.0;
        double rhs = 0.0;
        bool holds = false;
        double rate_rel_error = 0.0;
        double et_product = 0.0;
        bool gated = false;
        bool clock_holds = false;
    };
    std::vector<TrialRow> rows(trials);
    const std::uint64_t dim_span = dim_max - dim_min + 1;
    for_each_trial(trials, options.common.jobs, [&](std::uint64_t i) {
        photonbox::SeededGenerator gen(seed + i);
        const auto dim = static_cast<Eigen::Index>(
            dim_min + std::min<std::uint64_t>(
                          dim_span - 1,
                          static_cast<std::uint64_t>(
                              gen.uniform() * static_cast<double>(dim_span))));
        const auto q_raw = photonbox::random_hermitian(dim, gen);
        const auto h_raw = photonbox::random_hermitian(dim, gen);
        const photonbox::FiniteObservable q(kSweepScale * q_raw.matrix());
        const photonbox::FiniteObservable h(kSweepScale * h_raw.matrix());
        const auto psi = photonbox::random_state(dim, gen);

        const auto check = photonbox::robertson_check(q, h, psi);
        const auto rate = photonbox::heisenberg_rate(q, h, psi);
        const auto clock = photonbox::clock_time_uncertainty(q, h, psi);

        TrialRow& row = rows[i];
        row.dim = static_cast<std::uint64_t>(dim);
        row.lhs = check.lhs;
        row.rhs = check.rhs;
        row.holds = check.holds;
        row.rate_rel_error = rate.rel_error;
        row.et_product = clock.energy_time_product;
        row.gated = std::abs(rate.analytic) > kRateGate;
        row.clock_holds = clock.holds;
    });

    std::string csv = "trial,dim,lhs,rhs,holds,rate_rel_error,et_product\n";
    bool all_hold = true;
    bool clock_all_hold = true;
    double max_gated_rel_error = 0.0;
    for (std::uint64_t i = 0; i < trials; ++i) {
        const TrialRow& row = rows[i];
        csv += std::to_string(i) + "," + std::to_string(row.dim) + "," +
               format_double(row.lhs) + "," + format_double(row.rhs) + "," +
               (row.holds ? "1" : "0") + "," +
               format_double(row.rate_rel_error) + "," +
               format_double(row.et_product) + "\n";
        all_hold = all_hold && row.holds;
        clock_all_hold = clock_all_hold && row.clock_holds;
        if (row.gated) {
            max_gated_rel_error =
                std::max(max_gated_rel_error, row.rate_rel_error);
        }
    }

    RunArtifacts artifacts;
    artifacts.subcommand = "robertson";
    artifacts.seed = seed;
    artifacts.resolved_config = {{"trials", trials},
                                 {"dim_min", dim_min},
                                 {"dim_max", dim_max},
                                 {"seed", seed}};
    artifacts.result = {{"trials", trials},
                        {"dim_min", dim_min},
                        {"dim_max", dim_max},
                        {"all_hold", all_hold},
                        {"clock_all_hold", clock_all_hold},
                        {"max_gated_rate_rel_error", max_gated_rel_error},
                        {"rate_gate", kRateGate}};
    artifacts.trials_csv = csv;

    write_run_artifacts(options.common.output_dir, artifacts);

    if (!all_hold || !clock_all_hold) {
        throw std::runtime_error("an uncertainty bound failed in the sweep");
    }
}

void run_bohr(const BohrOptions& options) {
    const nlohmann::json config = maybe_config(options.common);
    reject_unknown_keys(config,
                        {"hbar", "c", "g", "t", "t0", "delta_x", "delta_p",
                         "shutter_delta_t", "seed"},
                        "bohr");

    photonbox::PhysicalConstants constants;
    constants.hbar = resolve_setting(options.hbar,
                                     config_number(config, "hbar",
                                                   constants.hbar));
    constants.c = resolve_setting(options.c,
                                  config_number(config, "c", constants.c));
    constants.g = resolve_setting(options.g,
                                  config_number(config, "g", constants.g));
    const double t = resolve_setting(options.t,
                                     config_number(config, "t", 1.0));
    const double t0 = resolve_setting(options.t0,
                                      config_number(config, "t0", 1.0));
    const double delta_x = resolve_setting(
        options.delta_x, config_number(config, "delta_x", 1e-6));
    const double delta_p = resolve_setting(
        options.delta_p, config_number(config, "delta_p", 1e-30));
    const double shutter = resolve_setting(
        options.shutter_delta_t,
        config_number(config, "shutter_delta_t", 1.0));
    const std::uint64_t seed = resolve_seed(options.common, config);

    const photonbox::WeighingScenario scenario(constants, t, t0, delta_x,
                                               delta_p, shutter);
    const auto product = photonbox::bohr_product(scenario);

    RunArtifacts artifacts;
    artifacts.subcommand = "bohr";
    artifacts.seed = seed;
    artifacts.resolved_config = {{"hbar", constants.hbar},
                                 {"c", constants.c},
                                 {"g", constants.g},
                                 {"t", t},
                                 {"t0", t0},
                                 {"delta_x", delta_x},
                                 {"delta_p", delta_p},
                                 {"shutter_delta_t", shutter},
                                 {"seed", seed}};
    artifacts.result = {
        {"et_product", product.et_product},
        {"px_product", product.px_product},
        {"ratio_t0_over_t", product.ratio_t0_over_t},
        {"bound_satisfied_if_px_bound", product.bound_satisfied_if_px_bound}};

    if (options.common.emit_plot_data) {
        std::string sweep = "shutter_delta_t,photon_energy_lower_bound\n";
        for (int k = -4; k <= 4; ++k) {
            const double delta_t = shutter * std::pow(10.0, 0.5 * k);
            sweep += format_double(delta_t) + "," +
                     format_double(photonbox::photon_energy_lower_bound(
                         delta_t, constants)) +
                     "\n";
        }
        artifacts.plot_data.push_back({"shutter_sweep.csv", sweep});
    }

    write_run_artifacts(options.common.output_dir, artifacts);
}

}  // namespace cli
