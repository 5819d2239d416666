#include "photonbox/chsh.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "photonbox/random.hpp"

namespace photonbox {

namespace {

using Eigen::Matrix2cd;
using Eigen::Matrix4cd;
using Eigen::Vector4cd;

/// cos(theta) sigma_z + sin(theta) sigma_x: spin along an axis in the x-z
/// plane, eigenvalues exactly +-1.
Matrix2cd spin_axis(double theta) {
    if (!std::isfinite(theta)) {
        throw std::invalid_argument("analyzer angle must be finite");
    }
    Matrix2cd m;
    m << std::cos(theta), std::sin(theta), std::sin(theta), -std::cos(theta);
    return m;
}

Matrix4cd kron(const Matrix2cd& a, const Matrix2cd& b) {
    Matrix4cd out;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
        }
    }
    return out;
}

const Vector4cd& singlet() {
    static const Vector4cd psi = [] {
        Vector4cd v;
        const double amp = 1.0 / std::sqrt(2.0);
        v << 0.0, amp, -amp, 0.0;
        return v;
    }();
    return psi;
}

double settings_correlator_sign(int pair) {
    // S = E(a,b) - E(a,b') + E(a',b) + E(a',b')
    return pair == 1 ? -1.0 : 1.0;
}

std::pair<double, double> pair_angles(const MeasurementSettings& s, int pair) {
    switch (pair) {
        case 0: return {s.a, s.b};
        case 1: return {s.a, s.b_prime};
        case 2: return {s.a_prime, s.b};
        default: return {s.a_prime, s.b_prime};
    }
}

}  // namespace

MeasurementSettings optimal_settings() {
    const double pi = std::numbers::pi;
    return {0.0, 0.5 * pi, 0.25 * pi, 0.75 * pi};
}

double singlet_correlation(double angle_a, double angle_b) {
    const Matrix4cd joint = kron(spin_axis(angle_a), spin_axis(angle_b));
    const std::complex<double> e = singlet().dot(joint * singlet());
    return e.real();
}

std::array<double, 4> joint_outcome_distribution(double angle_a,
                                                 double angle_b) {
    const Matrix2cd a = spin_axis(angle_a);
    const Matrix2cd b = spin_axis(angle_b);
    const Matrix2cd id = Matrix2cd::Identity();
    const Matrix2cd pa[2] = {0.5 * (id + a), 0.5 * (id - a)};
    const Matrix2cd pb[2] = {0.5 * (id + b), 0.5 * (id - b)};

    std::array<double, 4> probs{};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            const Matrix4cd proj = kron(pa[i], pb[j]);
            probs[static_cast<std::size_t>(2 * i + j)] =
                singlet().dot(proj * singlet()).real();
        }
    }
    return probs;
}

double chsh_value(const MeasurementSettings& settings) {
    double s = 0.0;
    for (int pair = 0; pair < 4; ++pair) {
        const auto [a, b] = pair_angles(settings, pair);
        s += settings_correlator_sign(pair) * singlet_correlation(a, b);
    }
    return s;
}

ChshEstimate chsh_monte_carlo(const MeasurementSettings& settings,
                              std::uint64_t trials_per_pair,
                              std::uint64_t seed) {
    if (trials_per_pair < 1000) {
        throw std::invalid_argument(
            "monte carlo needs at least 1000 trials per pair");
    }
    ChshEstimate estimate;
    estimate.trials_per_pair = trials_per_pair;
    double variance = 0.0;
    for (int pair = 0; pair < 4; ++pair) {
        const auto [a, b] = pair_angles(settings, pair);
        const std::array<double, 4> probs = joint_outcome_distribution(a, b);
        SeededGenerator gen(seed + static_cast<std::uint64_t>(pair));
        long long sum = 0;
        for (std::uint64_t t = 0; t < trials_per_pair; ++t) {
            const double u = gen.uniform();
            double acc = 0.0;
            int outcome = 3;
            for (int o = 0; o < 4; ++o) {
                acc += probs[static_cast<std::size_t>(o)];
                if (u < acc) {
                    outcome = o;
                    break;
                }
            }
            // Products: ++ and -- give +1, mixed give -1.
            sum += (outcome == 0 || outcome == 3) ? 1 : -1;
        }
        const double n = static_cast<double>(trials_per_pair);
        const double e_hat = static_cast<double>(sum) / n;
        estimate.S += settings_correlator_sign(pair) * e_hat;
        variance += (1.0 - e_hat * e_hat) / n;
    }
    estimate.std_error = std::sqrt(variance);
    return estimate;
}

}  // namespace photonbox
