#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace photonbox {

using cdouble = std::complex<double>;

/// Lower bound for sigma_omega * sigma_t of any normalizable profile pair.
inline constexpr double kFourierBound = 0.5;
/// Slack allowed when checking the bound against discretized moments.
inline constexpr double kBoundTolerance = 1e-3;

/// Uniform angular-frequency grid omega_k = omega_min + k * step.
struct FrequencyGrid {
    double omega_min = 0.0;
    double step = 0.0;
    std::size_t count = 0;

    FrequencyGrid() = default;
    FrequencyGrid(double omega_min_, double step_, std::size_t count_);

    /// Grid covering [lo, hi] with `count` nodes including both endpoints.
    static FrequencyGrid over_span(double lo, double hi, std::size_t count);

    double omega(std::size_t k) const {
        return omega_min + static_cast<double>(k) * step;
    }
    double omega_max() const { return omega(count - 1); }
    double span() const { return step * static_cast<double>(count - 1); }
};

/// Trapezoid-rule integral of uniformly sampled values with spacing h.
double trapezoid(std::span<const double> values, double h);

/// Complex spectral amplitude c(omega) sampled on a FrequencyGrid and
/// normalized so that the trapezoid integral of |c|^2 is one.
class SpectralAmplitude {
public:
    /// Normalizes `values` in place; rejects empty or zero-norm input.
    SpectralAmplitude(FrequencyGrid grid, std::vector<cdouble> values);

    const FrequencyGrid& grid() const { return grid_; }
    const std::vector<cdouble>& values() const { return values_; }

    /// True when either endpoint carries more than 1e-6 of the peak
    /// probability density, i.e. the grid visibly clips the support.
    bool truncated() const { return truncated_; }

    /// Factor the constructor multiplied the raw samples by.
    double normalization_scale() const { return normalization_scale_; }

    /// |c(omega_k)|^2 for every node.
    std::vector<double> density() const;

private:
    FrequencyGrid grid_;
    std::vector<cdouble> values_;
    bool truncated_ = false;
    double normalization_scale_ = 1.0;
};

/// Complex time profile sampled on the uniform grid t_j = t_min + j * step.
struct TimeProfile {
    double t_min = 0.0;
    double t_step = 0.0;
    std::vector<cdouble> values;

    double time(std::size_t j) const {
        return t_min + static_cast<double>(j) * t_step;
    }
    /// Trapezoid integral of |values|^2; equals one when the transform
    /// window captured all of the signal (Parseval).
    double norm() const;
};

struct UncertaintyReport {
    double mean = 0.0;
    double second_moment = 0.0;
    double sigma = 0.0;
    bool divergent = false;
};

struct UncertaintyProduct {
    double delta_omega = 0.0;
    double delta_t = 0.0;
    double product = 0.0;
    bool bound_satisfied = false;
    bool divergent = false;
};

/// Tail test deciding whether the time spread is an artifact of the finite
/// window: flags divergence when the outer `window_fraction` of the window
/// (split evenly between the two ends) holds more than `moment_fraction` of
/// the centered second moment.
struct TailTestConfig {
    double window_fraction = 0.10;
    double moment_fraction = 0.05;
};

/// Normalized Gaussian exp(-(omega-omega0)^2 / (4 sigma^2)); the grid must
/// extend at least 8 sigma beyond the center on both sides.
SpectralAmplitude make_gaussian(double omega0, double sigma,
                                const FrequencyGrid& grid);

/// Normalized top-hat of full width `width` centered on omega0 with value
/// 1/sqrt(width) inside, 0 outside, and the trapezoid half-power value
/// 1/sqrt(2 width) on nodes that land on the support edge. The grid must
/// cover the support with at least one spare cell on each side.
SpectralAmplitude make_rect(double omega0, double width,
                            const FrequencyGrid& grid);

struct AmplitudeRow {
    double omega = 0.0;
    double re = 0.0;
    double im = 0.0;
};

struct LoadedAmplitude {
    SpectralAmplitude amplitude;
    /// Scale applied to reach unit norm; 1 when the input was normalized.
    double normalization_factor = 1.0;
};

/// Builds an amplitude from tabulated rows. Rows must be strictly increasing
/// in omega and uniformly spaced within 1e-9 relative tolerance.
LoadedAmplitude load_amplitude(std::span<const AmplitudeRow> rows);

/// Trapezoid estimate of the n-th raw moment of |c|^2.
double moment(const SpectralAmplitude& amplitude, unsigned order);

/// Mean, raw second moment and standard deviation of omega under |c|^2.
UncertaintyReport frequency_uncertainty(const SpectralAmplitude& amplitude);

/// Direct Fourier sum c~(t) = integral domega/sqrt(2 pi) c(omega) e^{-i omega t}
/// evaluated with trapezoid weights on a centered time grid. The grid spacing
/// is 2 pi / span(omega) and the window extent scales with
/// `time_window_factor` (>= 1).
TimeProfile fourier_transform(const SpectralAmplitude& amplitude,
                              double time_window_factor = 1.0);

/// Moments of |c~(t)|^2 plus the window-tail divergence heuristic.
UncertaintyReport time_uncertainty(const TimeProfile& profile,
                                   const TailTestConfig& tail = {});

/// Frequency spread, time spread and their product; a divergent time profile
/// reports infinite delta_t and product with bound_satisfied = true.
UncertaintyProduct uncertainty_product(const SpectralAmplitude& amplitude,
                                       double time_window_factor = 1.0);

/// Restricts the amplitude to the contiguous node range whose density exceeds
/// `relative_threshold` times the peak, padded by `margin` cells, then
/// renormalizes. Used to keep transforms of sharply collapsed posteriors
/// cheap without changing their moments.
SpectralAmplitude restrict_support(const SpectralAmplitude& amplitude,
                                   double relative_threshold = 1e-16,
                                   std::size_t margin = 16);

}  // namespace photonbox
