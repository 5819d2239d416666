#pragma once

#include <array>
#include <cstdint>

namespace photonbox {

/// Analyzer angles in radians for the four CHSH correlators.
struct MeasurementSettings {
    double a = 0.0;
    double a_prime = 0.0;
    double b = 0.0;
    double b_prime = 0.0;
};

/// Angles that drive the singlet to the quantum extreme |S| = 2 sqrt(2).
MeasurementSettings optimal_settings();

/// Exact singlet correlation E(a, b) computed from the spin-singlet state and
/// the analyzer operators cos(theta) sigma_z + sin(theta) sigma_x.
double singlet_correlation(double angle_a, double angle_b);

/// Joint outcome probabilities for one analyzer pair, ordered
/// (++, +-, -+, --). Sums to one.
std::array<double, 4> joint_outcome_distribution(double angle_a,
                                                 double angle_b);

/// Exact S = E(a,b) - E(a,b') + E(a',b) + E(a',b').
double chsh_value(const MeasurementSettings& settings);

struct ChshEstimate {
    double S = 0.0;
    double std_error = 0.0;
    std::uint64_t trials_per_pair = 0;
};

/// Monte Carlo estimate of S from `trials_per_pair` joint samples per
/// correlator; the standard error combines the four per-correlator errors in
/// quadrature.
ChshEstimate chsh_monte_carlo(const MeasurementSettings& settings,
                              std::uint64_t trials_per_pair,
                              std::uint64_t seed);

}  // namespace photonbox
