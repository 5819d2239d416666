#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace photonbox {

/// Regularized upper incomplete gamma Q(a, x) for a > 0, x >= 0.
double regularized_gamma_q(double a, double x);

/// Upper-tail probability of a chi-square statistic with `dof` degrees of
/// freedom.
double chi_square_p_value(double statistic, int dof);

struct ChiSquareResult {
    double statistic = 0.0;
    double p_value = 1.0;
    int dof = 0;
};

/// Pearson statistic sum (o-e)^2/e with dof = bins - 1. Expected counts must
/// be positive.
ChiSquareResult pearson_chi_square(std::span<const double> observed,
                                   std::span<const double> expected);

/// Cumulative distribution of a piecewise-linear density sampled on a uniform
/// grid. Within each cell the density is interpolated linearly, so cell masses
/// follow the trapezoid rule and the quantile solves a quadratic per cell.
class PiecewiseLinearCdf {
public:
    PiecewiseLinearCdf(double x0, double step, std::vector<double> density);

    double total_mass() const { return cumulative_.back(); }
    double x_min() const { return x0_; }
    double x_max() const;

    /// Mass accumulated on (-inf, x], clamped to the grid extent.
    double cdf(double x) const;

    /// Inverse of cdf normalized to total mass; u in [0, 1].
    double quantile(double u) const;

private:
    double x0_;
    double step_;
    std::vector<double> density_;
    std::vector<double> cumulative_;
};

/// 64-bit FNV-1a hash of a byte string.
std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace photonbox
