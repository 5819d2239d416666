#include "photonbox/epr.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "photonbox/random.hpp"
#include "photonbox/spectral.hpp"

namespace photonbox {

struct MomentumMeasurementAccess {
    static TwoParticleMomentumState collapse(
        const TwoParticleMomentumState& state, int branch) {
        const std::complex<double> survivor =
            branch == 0 ? state.amp_plus_minus() : state.amp_minus_plus();
        const double mag = std::abs(survivor);
        const std::complex<double> phase =
            mag > 0.0 ? survivor / mag : std::complex<double>(1.0, 0.0);
        return TwoParticleMomentumState(
            state.momentum(), branch == 0 ? phase : 0.0,
            branch == 1 ? phase : 0.0, branch);
    }
};

TwoParticleMomentumState::TwoParticleMomentumState(
    double momentum, std::complex<double> amp_plus_minus,
    std::complex<double> amp_minus_plus)
    : momentum_(momentum),
      amp_plus_minus_(amp_plus_minus),
      amp_minus_plus_(amp_minus_plus) {
    if (!std::isfinite(momentum_) || !(momentum_ > 0.0)) {
        throw std::invalid_argument("branch momentum must be positive");
    }
    const double norm =
        std::norm(amp_plus_minus_) + std::norm(amp_minus_plus_);
    if (std::abs(norm - 1.0) > 1e-12) {
        throw std::invalid_argument("branch amplitudes must be normalized");
    }
}

TwoParticleMomentumState::TwoParticleMomentumState(
    double momentum, std::complex<double> amp_plus_minus,
    std::complex<double> amp_minus_plus, int branch)
    : momentum_(momentum),
      amp_plus_minus_(amp_plus_minus),
      amp_minus_plus_(amp_minus_plus),
      branch_(branch) {}

TwoParticleMomentumState TwoParticleMomentumState::equal_superposition(
    double momentum) {
    const double amp = 1.0 / std::sqrt(2.0);
    return TwoParticleMomentumState(momentum, amp, amp);
}

TwoParticleMomentumState make_epr(double momentum) {
    return TwoParticleMomentumState::equal_superposition(momentum);
}

MomentumMeasurement measure_first_momentum(
    const TwoParticleMomentumState& state, std::uint64_t seed) {
    if (state.collapsed()) {
        throw std::invalid_argument("state is already collapsed");
    }
    SeededGenerator gen(seed);
    const double p_plus = std::norm(state.amp_plus_minus());
    const int branch = gen.uniform() < p_plus ? 0 : 1;
    MomentumMeasurement measurement{
        branch == 0 ? state.momentum() : -state.momentum(), seed,
        MomentumMeasurementAccess::collapse(state, branch)};
    return measurement;
}

double second_particle_momentum(const TwoParticleMomentumState& state) {
    if (!state.collapsed()) {
        throw std::invalid_argument(
            "second momentum is defined only after the first is measured");
    }
    // Exact anticorrelation: negation of the recorded first outcome.
    return *state.branch() == 0 ? -state.momentum() : state.momentum();
}

WavepacketUncertainties wavepacket_uncertainties(
    const WavepacketParams& params, const WavepacketGrid& grid) {
    if (!std::isfinite(params.width) || !(params.width > 0.0) ||
        !std::isfinite(params.p_center)) {
        throw std::invalid_argument("wavepacket needs width > 0, finite center");
    }
    if (grid.count < 64) {
        throw std::invalid_argument("wavepacket grid needs >= 64 nodes");
    }
    if (!(grid.half_width_in_l >= 8.0)) {
        throw std::invalid_argument(
            "wavepacket window must extend at least 8 widths per side");
    }

    const double l = params.width;
    const std::size_t n = grid.count;

    // Position density exp(-x^2 / (2 L^2)) around 0; the carrier momentum
    // only rotates the phase and drops out of |psi|^2.
    const double x_half = grid.half_width_in_l * l;
    const double x_step = 2.0 * x_half / static_cast<double>(n - 1);
    // Momentum density exp(-2 L^2 (p - p0)^2), spread 1 / (2 L).
    const double sigma_p = 0.5 / l;
    const double p_half = grid.half_width_in_l * sigma_p;
    const double p_step = 2.0 * p_half / static_cast<double>(n - 1);

    std::vector<double> px(n);
    std::vector<double> xw(n);
    std::vector<double> pp(n);
    std::vector<double> pw(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double x = -x_half + static_cast<double>(k) * x_step;
        px[k] = std::exp(-x * x / (2.0 * l * l));
        xw[k] = px[k] * x * x;
        const double dp = -p_half + static_cast<double>(k) * p_step;
        pp[k] = std::exp(-2.0 * l * l * dp * dp);
        pw[k] = pp[k] * dp * dp;
    }

    WavepacketUncertainties result;
    result.delta_x = std::sqrt(trapezoid(xw, x_step) / trapezoid(px, x_step));
    result.delta_p = std::sqrt(trapezoid(pw, p_step) / trapezoid(pp, p_step));
    result.product = result.delta_x * result.delta_p;
    return result;
}

}  // namespace photonbox
