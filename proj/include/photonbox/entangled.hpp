#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "photonbox/spectral.hpp"
#include "photonbox/stats.hpp"

namespace photonbox {

/// One projective energy measurement on the box side of the pair.
struct MeasurementRecord {
    double outcome_frequency = 0.0;
    double resolution = 0.0;
    double box_energy_reading = 0.0;
    std::uint64_t seed = 0;
    /// Identifier of the sampling bit stream that produced the outcome.
    std::string_view generator;
};

/// Photon/box pair with exactly anticorrelated energies: a photon drawn from
/// c(omega) leaves the box with energy m0 - omega (units hbar = 1), so the
/// total m0 is sharp. Only the photon marginal needs an amplitude; the box
/// reading is a deterministic function of the photon frequency.
class JointEnergyState {
public:
    JointEnergyState(double box_rest_frequency, SpectralAmplitude photon);

    double box_rest_frequency() const { return box_rest_frequency_; }
    const SpectralAmplitude& photon_amplitude() const { return photon_; }
    bool collapsed() const { return collapsed_; }
    std::optional<double> last_outcome() const { return last_outcome_; }

    /// Cumulative distribution of |c(omega)|^2; built once per uncollapsed
    /// state and shared by every measurement drawn from it. Collapsed states
    /// are never sampled, so they carry none and this throws for them.
    const PiecewiseLinearCdf& photon_cdf() const;

private:
    friend struct MeasurementAccess;
    struct CollapsedTag {};
    JointEnergyState(CollapsedTag, double box_rest_frequency,
                     SpectralAmplitude photon, double outcome);
    double box_rest_frequency_;
    SpectralAmplitude photon_;
    bool collapsed_ = false;
    std::optional<double> last_outcome_;
    std::shared_ptr<const PiecewiseLinearCdf> cdf_;
};

struct MarginalReports {
    UncertaintyReport photon;
    UncertaintyReport box;
};

struct MeasurementOutcome {
    MeasurementRecord record;
    JointEnergyState state;
};

struct NoSignalingResult {
    double statistic = 0.0;
    double p_value = 1.0;
    bool passed = false;
    int bins = 0;
};

/// Entangled pair whose photon marginal is `photon`; the box rest frequency
/// must exceed every photon frequency so readings stay positive.
JointEnergyState make_photon_box(double box_rest_frequency,
                                 SpectralAmplitude photon);

/// Spread of the conserved total; identically zero for this state family.
double total_energy_uncertainty(const JointEnergyState& state);

/// Frequency statistics of each subsystem separately. The box marginal has
/// the same spread as the photon, mirrored around the rest frequency.
MarginalReports marginal_uncertainties(const JointEnergyState& state);

/// Draws omega from |c|^2 by inverse transform sampling, then collapses the
/// amplitude through a Gaussian pointer of width `resolution` centered on the
/// draw. The returned state is collapsed and cannot be measured again.
MeasurementOutcome measure_box_energy(const JointEnergyState& state,
                                      double resolution, std::uint64_t seed);

/// Time spread of the collapsed photon amplitude. The support is restricted
/// before transforming, which leaves the moments unchanged but keeps sharp
/// posteriors cheap.
UncertaintyReport post_measurement_time_uncertainty(
    const JointEnergyState& state, double time_window_factor = 1.0);

/// Pools the posterior densities of `trials` simulated measurements and
/// compares them against the unmeasured marginal with a chi-square test on
/// equal-prior-mass bins. Passing means no statistically visible signal.
NoSignalingResult no_signaling_check(const JointEnergyState& state,
                                     double resolution, std::size_t trials,
                                     int bins, std::uint64_t seed);

/// Chi-square comparison of a pooled density against the prior marginal on
/// equal-prior-mass bins; exposed for direct tests with synthetic pools.
ChiSquareResult pooled_density_vs_prior(const SpectralAmplitude& prior,
                                        const std::vector<double>& pooled,
                                        int bins, std::size_t trials);

}  // namespace photonbox
