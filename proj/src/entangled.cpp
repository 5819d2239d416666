#include "photonbox/entangled.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "photonbox/random.hpp"

namespace photonbox {

namespace {

/// Pointer weights below exp(-64) are numerically irrelevant, so the
/// posterior window is cut at 16 resolutions from the outcome.
constexpr double kPointerWindowSigmas = 16.0;

}  // namespace

struct MeasurementAccess {
    static JointEnergyState collapse(double box_rest_frequency,
                                     SpectralAmplitude posterior,
                                     double outcome) {
        return JointEnergyState(JointEnergyState::CollapsedTag{},
                                box_rest_frequency, std::move(posterior),
                                outcome);
    }
};

JointEnergyState::JointEnergyState(double box_rest_frequency,
                                   SpectralAmplitude photon)
    : box_rest_frequency_(box_rest_frequency), photon_(std::move(photon)) {
    if (!std::isfinite(box_rest_frequency_)) {
        throw std::invalid_argument("box rest frequency must be finite");
    }
    if (box_rest_frequency_ <= photon_.grid().omega_max()) {
        throw std::invalid_argument(
            "box rest frequency must exceed every photon frequency");
    }
    cdf_ = std::make_shared<const PiecewiseLinearCdf>(
        photon_.grid().omega_min, photon_.grid().step, photon_.density());
}

JointEnergyState::JointEnergyState(CollapsedTag, double box_rest_frequency,
                                   SpectralAmplitude photon, double outcome)
    : box_rest_frequency_(box_rest_frequency),
      photon_(std::move(photon)),
      collapsed_(true),
      last_outcome_(outcome) {}

const PiecewiseLinearCdf& JointEnergyState::photon_cdf() const {
    if (!cdf_) {
        throw std::logic_error("collapsed state carries no sampling cdf");
    }
    return *cdf_;
}

JointEnergyState make_photon_box(double box_rest_frequency,
                                 SpectralAmplitude photon) {
    return JointEnergyState(box_rest_frequency, std::move(photon));
}

double total_energy_uncertainty(const JointEnergyState&) {
    // Photon and box energies are exactly anticorrelated by construction:
    // every branch carries total m0, so the spread of the total vanishes.
    return 0.0;
}

MarginalReports marginal_uncertainties(const JointEnergyState& state) {
    MarginalReports reports;
    reports.photon = frequency_uncertainty(state.photon_amplitude());
    reports.box.mean = state.box_rest_frequency() - reports.photon.mean;
    reports.box.sigma = reports.photon.sigma;
    reports.box.second_moment =
        reports.box.mean * reports.box.mean +
        reports.photon.sigma * reports.photon.sigma;
    reports.box.divergent = false;
    return reports;
}

MeasurementOutcome measure_box_energy(const JointEnergyState& state,
                                      double resolution, std::uint64_t seed) {
    if (state.collapsed()) {
        throw std::invalid_argument("state is already collapsed");
    }
    if (!std::isfinite(resolution) || !(resolution > 0.0)) {
        throw std::invalid_argument("resolution must be positive");
    }

    SeededGenerator gen(seed);
    const double omega_meas = state.photon_cdf().quantile(gen.uniform());

    const auto& grid = state.photon_amplitude().grid();
    const auto& prior = state.photon_amplitude().values();
    const double window = kPointerWindowSigmas * resolution;
    const auto lo = static_cast<std::size_t>(std::max(
        0.0, std::ceil((omega_meas - window - grid.omega_min) / grid.step)));
    const auto hi = static_cast<std::size_t>(std::clamp(
        std::floor((omega_meas + window - grid.omega_min) / grid.step), 0.0,
        static_cast<double>(grid.count - 1)));

    std::vector<cdouble> posterior(grid.count, cdouble(0.0, 0.0));
    const double inv = 1.0 / (4.0 * resolution * resolution);
    double peak = 0.0;
    for (std::size_t k = lo; k <= hi && k < grid.count; ++k) {
        const double d = grid.omega(k) - omega_meas;
        posterior[k] = prior[k] * std::exp(-d * d * inv);
        peak = std::max(peak, std::norm(posterior[k]));
    }
    if (peak == 0.0) {
        throw std::runtime_error(
            "posterior underflow: resolution is unresolvable on this grid");
    }

    MeasurementRecord record;
    record.outcome_frequency = omega_meas;
    record.resolution = resolution;
    record.box_energy_reading = state.box_rest_frequency() - omega_meas;
    record.seed = seed;
    record.generator = SeededGenerator::algorithm;

    SpectralAmplitude collapsed(grid, std::move(posterior));
    return {record, MeasurementAccess::collapse(state.box_rest_frequency(),
                                                std::move(collapsed),
                                                omega_meas)};
}

UncertaintyReport post_measurement_time_uncertainty(
    const JointEnergyState& state, double time_window_factor) {
    if (!state.collapsed()) {
        throw std::invalid_argument(
            "time uncertainty is defined for collapsed states");
    }
    const SpectralAmplitude restricted =
        restrict_support(state.photon_amplitude());
    return time_uncertainty(fourier_transform(restricted, time_window_factor));
}

ChiSquareResult pooled_density_vs_prior(const SpectralAmplitude& prior,
                                        const std::vector<double>& pooled,
                                        int bins, std::size_t trials) {
    const auto& grid = prior.grid();
    if (pooled.size() != grid.count) {
        throw std::invalid_argument("pooled density does not match the grid");
    }
    if (bins < 2 || bins > 100) {
        throw std::invalid_argument("bin count must lie in [2, 100]");
    }
    const PiecewiseLinearCdf prior_cdf(grid.omega_min, grid.step,
                                       prior.density());
    const PiecewiseLinearCdf pooled_cdf(grid.omega_min, grid.step, pooled);

    // Edges split the prior into equal-mass bins, so the expected pooled
    // count per bin is trials / bins by construction.
    std::vector<double> observed(static_cast<std::size_t>(bins));
    std::vector<double> expected(static_cast<std::size_t>(bins));
    const double n = static_cast<double>(trials);
    double prev_cdf = 0.0;
    for (int b = 1; b <= bins; ++b) {
        const double edge =
            b == bins ? grid.omega_max()
                      : prior_cdf.quantile(static_cast<double>(b) / bins);
        const double cdf_here = pooled_cdf.cdf(edge) / pooled_cdf.total_mass();
        observed[static_cast<std::size_t>(b - 1)] = n * (cdf_here - prev_cdf);
        expected[static_cast<std::size_t>(b - 1)] = n / bins;
        prev_cdf = cdf_here;
    }
    return pearson_chi_square(observed, expected);
}

NoSignalingResult no_signaling_check(const JointEnergyState& state,
                                     double resolution, std::size_t trials,
                                     int bins, std::uint64_t seed) {
    if (state.collapsed()) {
        throw std::invalid_argument("state is already collapsed");
    }
    if (trials < 1000) {
        throw std::invalid_argument("no-signaling check needs >= 1000 trials");
    }

    const auto& grid = state.photon_amplitude().grid();
    std::vector<double> pooled(grid.count, 0.0);
    for (std::size_t i = 0; i < trials; ++i) {
        const MeasurementOutcome outcome =
            measure_box_energy(state, resolution, seed + i);
        const auto& values = outcome.state.photon_amplitude().values();
        for (std::size_t k = 0; k < grid.count; ++k) {
            pooled[k] += std::norm(values[k]);
        }
    }
    const double inv_trials = 1.0 / static_cast<double>(trials);
    for (double& p : pooled) p *= inv_trials;

    const ChiSquareResult chi = pooled_density_vs_prior(
        state.photon_amplitude(), pooled, bins, trials);

    NoSignalingResult result;
    result.statistic = chi.statistic;
    result.p_value = chi.p_value;
    result.passed = chi.p_value > 0.001;
    result.bins = bins;
    return result;
}

}  // namespace photonbox
