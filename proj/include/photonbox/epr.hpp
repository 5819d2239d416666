#pragma once

#include <complex>
#include <cstdint>
#include <optional>

namespace photonbox {

/// Two-branch momentum state: branch 0 carries (+p, -p), branch 1 carries
/// (-p, +p). Branch amplitudes are normalized to |a0|^2 + |a1|^2 = 1.
class TwoParticleMomentumState {
public:
    TwoParticleMomentumState(double momentum,
                             std::complex<double> amp_plus_minus,
                             std::complex<double> amp_minus_plus);

    /// The maximally undecided pair with both branch weights 1/2.
    static TwoParticleMomentumState equal_superposition(double momentum);

    double momentum() const { return momentum_; }
    std::complex<double> amp_plus_minus() const { return amp_plus_minus_; }
    std::complex<double> amp_minus_plus() const { return amp_minus_plus_; }
    bool collapsed() const { return branch_.has_value(); }
    /// 0 when the first particle came out at +p, 1 at -p.
    std::optional<int> branch() const { return branch_; }

private:
    TwoParticleMomentumState(double momentum,
                             std::complex<double> amp_plus_minus,
                             std::complex<double> amp_minus_plus, int branch);

    friend struct MomentumMeasurementAccess;

    double momentum_;
    std::complex<double> amp_plus_minus_;
    std::complex<double> amp_minus_plus_;
    std::optional<int> branch_ = std::nullopt;
};

struct MomentumMeasurement {
    double first_momentum = 0.0;
    std::uint64_t seed = 0;
    TwoParticleMomentumState state;
};

/// The symmetric EPR pair: both branches weighted 1/sqrt(2).
TwoParticleMomentumState make_epr(double momentum);

/// Samples the first particle's momentum with Born weights |a0|^2 and |a1|^2
/// and collapses the pair onto the surviving branch.
MomentumMeasurement measure_first_momentum(const TwoParticleMomentumState& state,
                                           std::uint64_t seed);

/// The second particle's momentum, defined only after collapse; it is always
/// the exact negative of the first outcome.
double second_particle_momentum(const TwoParticleMomentumState& state);

/// Gaussian position-space wavepacket of spatial width L riding on momentum
/// p_center (units hbar = 1).
struct WavepacketParams {
    double p_center = 0.0;
    double width = 1.0;
};

/// Sampling window for the wavepacket moments, in units of the width L.
/// The window must keep at least 8 L on each side of the center.
struct WavepacketGrid {
    double half_width_in_l = 12.0;
    std::size_t count = 2049;
};

struct WavepacketUncertainties {
    double delta_x = 0.0;
    double delta_p = 0.0;
    double product = 0.0;
};

/// Position and momentum spreads of the packet computed from sampled
/// densities; a minimum-uncertainty packet returns product 1/2.
WavepacketUncertainties wavepacket_uncertainties(const WavepacketParams& params,
                                                 const WavepacketGrid& grid = {});

}  // namespace photonbox
