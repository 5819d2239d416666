#include "photonbox/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace photonbox {

namespace {

// Lower regularized gamma by power series; valid for x < a + 1.
double gamma_p_series(double a, double x) {
    double term = 1.0 / a;
    double sum = term;
    for (int n = 1; n < 2000; ++n) {
        term *= x / (a + n);
        sum += term;
        if (std::abs(term) < std::abs(sum) * 1e-16) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Upper regularized gamma by modified Lentz continued fraction; x >= a + 1.
double gamma_q_contfrac(double a, double x) {
    constexpr double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 2000; ++i) {
        const double an = -static_cast<double>(i) * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

}  // namespace

double regularized_gamma_q(double a, double x) {
    if (!(a > 0.0) || !(x >= 0.0)) {
        throw std::invalid_argument("gamma_q needs a > 0, x >= 0");
    }
    if (x == 0.0) return 1.0;
    if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
    return gamma_q_contfrac(a, x);
}

double chi_square_p_value(double statistic, int dof) {
    if (dof < 1) throw std::invalid_argument("chi-square dof must be >= 1");
    if (!(statistic >= 0.0)) {
        throw std::invalid_argument("chi-square statistic must be >= 0");
    }
    return regularized_gamma_q(0.5 * dof, 0.5 * statistic);
}

ChiSquareResult pearson_chi_square(std::span<const double> observed,
                                   std::span<const double> expected) {
    if (observed.size() != expected.size() || observed.size() < 2) {
        throw std::invalid_argument(
            "chi-square needs matching bins, at least two");
    }
    double statistic = 0.0;
    for (std::size_t b = 0; b < observed.size(); ++b) {
        if (!(expected[b] > 0.0)) {
            throw std::invalid_argument(
                "chi-square expected counts must be positive");
        }
        const double d = observed[b] - expected[b];
        statistic += d * d / expected[b];
    }
    ChiSquareResult result;
    result.statistic = statistic;
    result.dof = static_cast<int>(observed.size()) - 1;
    result.p_value = chi_square_p_value(statistic, result.dof);
    return result;
}

PiecewiseLinearCdf::PiecewiseLinearCdf(double x0, double step,
                                       std::vector<double> density)
    : x0_(x0), step_(step), density_(std::move(density)) {
    if (!(step_ > 0.0) || density_.size() < 2) {
        throw std::invalid_argument("cdf needs step > 0 and >= 2 samples");
    }
    cumulative_.resize(density_.size());
    cumulative_[0] = 0.0;
    for (std::size_t k = 0; k + 1 < density_.size(); ++k) {
        const double pk = density_[k];
        const double pk1 = density_[k + 1];
        if (!(pk >= 0.0) || !std::isfinite(pk)) {
            throw std::invalid_argument("cdf density must be non-negative");
        }
        cumulative_[k + 1] = cumulative_[k] + 0.5 * (pk + pk1) * step_;
    }
    if (!(cumulative_.back() > 0.0)) {
        throw std::invalid_argument("cdf density has zero total mass");
    }
}

double PiecewiseLinearCdf::x_max() const {
    return x0_ + step_ * static_cast<double>(density_.size() - 1);
}

double PiecewiseLinearCdf::cdf(double x) const {
    if (x <= x0_) return 0.0;
    if (x >= x_max()) return cumulative_.back();
    const double u = (x - x0_) / step_;
    auto cell = static_cast<std::size_t>(u);
    cell = std::min(cell, density_.size() - 2);
    const double xi = u - static_cast<double>(cell);
    const double pk = density_[cell];
    const double dp = density_[cell + 1] - pk;
    return cumulative_[cell] + step_ * xi * (pk + 0.5 * dp * xi);
}

double PiecewiseLinearCdf::quantile(double u) const {
    if (!(u >= 0.0) || !(u <= 1.0)) {
        throw std::invalid_argument("quantile argument must lie in [0, 1]");
    }
    const double target = u * cumulative_.back();
    const auto it =
        std::upper_bound(cumulative_.begin(), cumulative_.end(), target);
    std::size_t cell = it == cumulative_.begin()
                           ? 0
                           : static_cast<std::size_t>(it - cumulative_.begin()) - 1;
    cell = std::min(cell, density_.size() - 2);
    const double m = (target - cumulative_[cell]) / step_;
    const double pk = density_[cell];
    const double dp = density_[cell + 1] - pk;
    double xi;
    if (std::abs(dp) <= 1e-14 * (pk + std::abs(dp))) {
        xi = pk > 0.0 ? m / pk : 0.0;
    } else {
        // Root of 0.5 dp xi^2 + pk xi - m = 0 in [0, 1]; the discriminant is
        // (pk + dp)^2 at full cell mass, so it cannot go negative.
        const double disc = std::max(0.0, pk * pk + 2.0 * dp * m);
        xi = (std::sqrt(disc) - pk) / dp;
    }
    xi = std::clamp(xi, 0.0, 1.0);
    return x0_ + step_ * (static_cast<double>(cell) + xi);
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t hash = 14695981039346656037ull;
    for (const char ch : bytes) {
        hash ^= static_cast<unsigned char>(ch);
        hash *= 1099511628211ull;
    }
    return hash;
}

}  // namespace photonbox
