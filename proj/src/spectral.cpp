#include "photonbox/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace photonbox {

namespace {

constexpr double kTruncationDensityRatio = 1e-6;

double pow_int(double x, unsigned n) {
    double result = 1.0;
    double base = x;
    while (n > 0) {
        if (n & 1u) result *= base;
        base *= base;
        n >>= 1u;
    }
    return result;
}

/// Mean and centered second moment of a weighted density on a uniform grid.
/// Weighting is the trapezoid rule; the centered pass avoids cancellation.
struct GridMoments {
    double mass = 0.0;
    double mean = 0.0;
    double central_m2 = 0.0;
};

GridMoments weighted_moments(std::span<const double> density, double x0,
                             double step) {
    const std::size_t n = density.size();
    double mass = 0.0;
    double first = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double w = (k == 0 || k == n - 1) ? 0.5 : 1.0;
        const double x = x0 + static_cast<double>(k) * step;
        mass += w * density[k];
        first += w * density[k] * x;
    }
    mass *= step;
    first *= step;
    if (!(mass > 0.0) || !std::isfinite(mass)) {
        throw std::runtime_error("density has zero or non-finite mass");
    }
    const double mean = first / mass;
    double m2 = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double w = (k == 0 || k == n - 1) ? 0.5 : 1.0;
        const double d = x0 + static_cast<double>(k) * step - mean;
        m2 += w * density[k] * d * d;
    }
    m2 = m2 * step / mass;
    return {mass, mean, m2};
}

}  // namespace

FrequencyGrid::FrequencyGrid(double omega_min_, double step_,
                             std::size_t count_)
    : omega_min(omega_min_), step(step_), count(count_) {
    if (!std::isfinite(omega_min) || !std::isfinite(step)) {
        throw std::invalid_argument("frequency grid parameters must be finite");
    }
    if (!(step > 0.0)) {
        throw std::invalid_argument("frequency grid step must be positive");
    }
    if (count < 8) {
        throw std::invalid_argument("frequency grid needs at least 8 nodes");
    }
}

FrequencyGrid FrequencyGrid::over_span(double lo, double hi,
                                       std::size_t count) {
    if (count < 8) {
        throw std::invalid_argument("frequency grid needs at least 8 nodes");
    }
    if (!(hi > lo)) {
        throw std::invalid_argument("frequency span must have hi > lo");
    }
    return FrequencyGrid(lo, (hi - lo) / static_cast<double>(count - 1),
                         count);
}

double trapezoid(std::span<const double> values, double h) {
    if (values.size() < 2) return 0.0;
    double sum = 0.5 * (values.front() + values.back());
    for (std::size_t k = 1; k + 1 < values.size(); ++k) sum += values[k];
    return sum * h;
}

SpectralAmplitude::SpectralAmplitude(FrequencyGrid grid,
                                     std::vector<cdouble> values)
    : grid_(grid), values_(std::move(values)) {
    if (values_.size() != grid_.count) {
        throw std::invalid_argument(
            "amplitude sample count does not match the grid");
    }
    double peak = 0.0;
    for (const cdouble& v : values_) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw std::invalid_argument("amplitude samples must be finite");
        }
        peak = std::max(peak, std::norm(v));
    }
    if (peak == 0.0) {
        throw std::invalid_argument("amplitude is identically zero");
    }

    double raw = 0.0;
    const std::size_t n = values_.size();
    for (std::size_t k = 0; k < n; ++k) {
        const double w = (k == 0 || k == n - 1) ? 0.5 : 1.0;
        raw += w * std::norm(values_[k]);
    }
    raw *= grid_.step;
    if (!(raw > 0.0) || !std::isfinite(raw)) {
        throw std::invalid_argument("amplitude norm is not positive finite");
    }
    normalization_scale_ = 1.0 / std::sqrt(raw);
    for (cdouble& v : values_) v *= normalization_scale_;

    const double edge =
        std::max(std::norm(values_.front()), std::norm(values_.back()));
    truncated_ = edge > kTruncationDensityRatio * (peak / raw);
}

std::vector<double> SpectralAmplitude::density() const {
    std::vector<double> p(values_.size());
    for (std::size_t k = 0; k < p.size(); ++k) p[k] = std::norm(values_[k]);
    return p;
}

double TimeProfile::norm() const {
    std::vector<double> p(values.size());
    for (std::size_t j = 0; j < p.size(); ++j) p[j] = std::norm(values[j]);
    return trapezoid(p, t_step);
}

SpectralAmplitude make_gaussian(double omega0, double sigma,
                                const FrequencyGrid& grid) {
    if (!std::isfinite(omega0) || !std::isfinite(sigma) || !(sigma > 0.0)) {
        throw std::invalid_argument("gaussian needs finite omega0, sigma > 0");
    }
    if (grid.omega_min > omega0 - 8.0 * sigma ||
        grid.omega_max() < omega0 + 8.0 * sigma) {
        throw std::invalid_argument(
            "grid must extend 8 sigma beyond the gaussian center");
    }
    const double prefactor =
        std::pow(2.0 * std::numbers::pi * sigma * sigma, -0.25);
    std::vector<cdouble> values(grid.count);
    for (std::size_t k = 0; k < grid.count; ++k) {
        const double d = grid.omega(k) - omega0;
        values[k] = prefactor * std::exp(-d * d / (4.0 * sigma * sigma));
    }
    return SpectralAmplitude(grid, std::move(values));
}

SpectralAmplitude make_rect(double omega0, double width,
                            const FrequencyGrid& grid) {
    if (!std::isfinite(omega0) || !std::isfinite(width) || !(width > 0.0)) {
        throw std::invalid_argument("rect needs finite omega0, width > 0");
    }
    const double half = 0.5 * width;
    if (grid.omega_min > omega0 - half - grid.step ||
        grid.omega_max() < omega0 + half + grid.step) {
        throw std::invalid_argument(
            "grid must cover the rect support with margin");
    }
    const double full = 1.0 / std::sqrt(width);
    const double edge = 1.0 / std::sqrt(2.0 * width);
    const double edge_tol = 1e-9 * width;
    std::vector<cdouble> values(grid.count);
    for (std::size_t k = 0; k < grid.count; ++k) {
        const double d = std::abs(grid.omega(k) - omega0);
        if (std::abs(d - half) <= edge_tol) {
            values[k] = edge;
        } else if (d < half) {
            values[k] = full;
        } else {
            values[k] = 0.0;
        }
    }
    return SpectralAmplitude(grid, std::move(values));
}

LoadedAmplitude load_amplitude(std::span<const AmplitudeRow> rows) {
    if (rows.empty()) {
        throw std::invalid_argument("amplitude table is empty");
    }
    bool any_nonzero = false;
    for (const AmplitudeRow& row : rows) {
        if (row.re != 0.0 || row.im != 0.0) {
            any_nonzero = true;
            break;
        }
    }
    if (!any_nonzero) {
        throw std::invalid_argument("amplitude table is identically zero");
    }
    if (rows.size() < 8) {
        throw std::invalid_argument("amplitude table needs at least 8 rows");
    }
    const std::size_t n = rows.size();
    const double lo = rows.front().omega;
    const double hi = rows.back().omega;
    if (!(hi > lo)) {
        throw std::invalid_argument("amplitude table must increase in omega");
    }
    const double step = (hi - lo) / static_cast<double>(n - 1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        const double gap = rows[k + 1].omega - rows[k].omega;
        if (!(gap > 0.0)) {
            throw std::invalid_argument(
                "amplitude table must increase in omega");
        }
        if (std::abs(gap - step) > 1e-9 * step) {
            throw std::invalid_argument(
                "amplitude table must be uniformly spaced");
        }
    }
    std::vector<cdouble> values(n);
    for (std::size_t k = 0; k < n; ++k) {
        values[k] = cdouble(rows[k].re, rows[k].im);
    }
    SpectralAmplitude amplitude(FrequencyGrid(lo, step, n), std::move(values));
    return {amplitude, amplitude.normalization_scale()};
}

double moment(const SpectralAmplitude& amplitude, unsigned order) {
    const auto& g = amplitude.grid();
    const auto& v = amplitude.values();
    double sum = 0.0;
    for (std::size_t k = 0; k < g.count; ++k) {
        const double w = (k == 0 || k == g.count - 1) ? 0.5 : 1.0;
        sum += w * std::norm(v[k]) * pow_int(g.omega(k), order);
    }
    return sum * g.step;
}

UncertaintyReport frequency_uncertainty(const SpectralAmplitude& amplitude) {
    const auto m = weighted_moments(amplitude.density(),
                                    amplitude.grid().omega_min,
                                    amplitude.grid().step);
    UncertaintyReport report;
    report.mean = m.mean;
    report.second_moment = m.central_m2 + m.mean * m.mean;
    report.sigma = std::sqrt(m.central_m2);
    report.divergent = false;
    return report;
}

TimeProfile fourier_transform(const SpectralAmplitude& amplitude,
                              double time_window_factor) {
    if (!std::isfinite(time_window_factor) || time_window_factor < 1.0) {
        throw std::invalid_argument("time window factor must be >= 1");
    }
    const auto& g = amplitude.grid();
    const auto& c = amplitude.values();
    const double t_step = 2.0 * std::numbers::pi / g.span();
    const auto m = static_cast<std::size_t>(std::llround(
                       time_window_factor *
                       static_cast<double>(g.count - 1))) +
                   1;

    TimeProfile profile;
    profile.t_step = t_step;
    profile.t_min = -0.5 * static_cast<double>(m - 1) * t_step;
    profile.values.resize(m);

    const double scale =
        g.step / std::sqrt(2.0 * std::numbers::pi);
    for (std::size_t j = 0; j < m; ++j) {
        const double t = profile.time(j);
        // Phase recurrence: e^{-i omega_k t} advances by a fixed rotation
        // per node, so the inner loop carries no trig calls.
        const cdouble rot = std::polar(1.0, -g.step * t);
        cdouble phase = std::polar(1.0, -g.omega_min * t);
        cdouble sum = 0.0;
        for (std::size_t k = 0; k < g.count; ++k) {
            sum += c[k] * phase;
            phase *= rot;
        }
        // Trapezoid end correction: endpoints enter with weight 1/2.
        const cdouble end_phase =
            std::polar(1.0, -g.omega_max() * t);
        sum -= 0.5 * c.front() * std::polar(1.0, -g.omega_min * t);
        sum -= 0.5 * c.back() * end_phase;
        profile.values[j] = sum * scale;
    }
    return profile;
}

UncertaintyReport time_uncertainty(const TimeProfile& profile,
                                   const TailTestConfig& tail) {
    if (!(tail.window_fraction > 0.0) || !(tail.window_fraction < 1.0) ||
        !(tail.moment_fraction > 0.0)) {
        throw std::invalid_argument("invalid tail test configuration");
    }
    const std::size_t n = profile.values.size();
    if (n < 2 || !(profile.t_step > 0.0)) {
        throw std::invalid_argument("time profile is too short");
    }
    std::vector<double> p(n);
    for (std::size_t j = 0; j < n; ++j) p[j] = std::norm(profile.values[j]);

    const auto m = weighted_moments(p, profile.t_min, profile.t_step);

    // Mass-weighted second moment carried by the outer edges of the window.
    const double span = profile.t_step * static_cast<double>(n - 1);
    const double edge_width = 0.5 * tail.window_fraction * span;
    const double t_lo = profile.t_min + edge_width;
    const double t_hi = profile.t_min + span - edge_width;
    double tail_m2 = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double t = profile.time(j);
        if (t > t_lo && t < t_hi) continue;
        const double w = (j == 0 || j == n - 1) ? 0.5 : 1.0;
        const double d = t - m.mean;
        tail_m2 += w * p[j] * d * d;
    }
    tail_m2 = tail_m2 * profile.t_step / m.mass;

    UncertaintyReport report;
    report.mean = m.mean;
    report.second_moment = m.central_m2 + m.mean * m.mean;
    report.sigma = std::sqrt(m.central_m2);
    report.divergent =
        m.central_m2 > 0.0 && tail_m2 > tail.moment_fraction * m.central_m2;
    return report;
}

UncertaintyProduct uncertainty_product(const SpectralAmplitude& amplitude,
                                       double time_window_factor) {
    const UncertaintyReport freq = frequency_uncertainty(amplitude);
    const TimeProfile profile =
        fourier_transform(amplitude, time_window_factor);
    const UncertaintyReport time = time_uncertainty(profile);

    UncertaintyProduct result;
    result.delta_omega = freq.sigma;
    result.divergent = time.divergent;
    if (time.divergent) {
        result.delta_t = std::numeric_limits<double>::infinity();
        result.product = std::numeric_limits<double>::infinity();
        result.bound_satisfied = true;
        return result;
    }
    result.delta_t = time.sigma;
    result.product = freq.sigma * time.sigma;
    result.bound_satisfied = result.product >= kFourierBound - kBoundTolerance;
    return result;
}

SpectralAmplitude restrict_support(const SpectralAmplitude& amplitude,
                                   double relative_threshold,
                                   std::size_t margin) {
    if (!(relative_threshold > 0.0) || relative_threshold >= 1.0) {
        throw std::invalid_argument(
            "support threshold must lie in (0, 1)");
    }
    const auto p = amplitude.density();
    const std::size_t n = p.size();
    const double peak = *std::max_element(p.begin(), p.end());
    const double cut = relative_threshold * peak;

    std::size_t lo = 0;
    while (lo + 1 < n && p[lo] < cut) ++lo;
    std::size_t hi = n - 1;
    while (hi > 0 && p[hi] < cut) --hi;
    if (hi < lo) throw std::logic_error("empty support window");

    lo = lo > margin ? lo - margin : 0;
    hi = std::min(n - 1, hi + margin);
    // Keep enough nodes for a valid grid.
    while (hi - lo + 1 < 8) {
        if (lo > 0) --lo;
        if (hi < n - 1) ++hi;
        if (lo == 0 && hi == n - 1) break;
    }
    if (hi - lo + 1 < 8) {
        throw std::invalid_argument("grid too small to restrict");
    }

    const auto& g = amplitude.grid();
    std::vector<cdouble> values(amplitude.values().begin() + lo,
                                amplitude.values().begin() + hi + 1);
    return SpectralAmplitude(FrequencyGrid(g.omega(lo), g.step, hi - lo + 1),
                             std::move(values));
}

}  // namespace photonbox
