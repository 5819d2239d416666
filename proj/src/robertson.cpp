#include "photonbox/robertson.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

namespace photonbox {

namespace {

constexpr double kStationaryRate = 1e-12;

void require_matching_dims(const FiniteObservable& q,
                           const FiniteObservable& h,
                           const StateVector& state) {
    if (q.dim() != h.dim() || q.dim() != state.dim()) {
        throw std::invalid_argument("operator and state dimensions differ");
    }
}

/// <[Q, H]> = 2i Im((Q psi)^dag (H psi)); purely imaginary for hermitian
/// Q, H, so only the imaginary part is carried around.
double commutator_imag(const FiniteObservable& q, const FiniteObservable& h,
                       const StateVector& state) {
    const Eigen::VectorXcd qpsi = q.matrix() * state.vector();
    const Eigen::VectorXcd hpsi = h.matrix() * state.vector();
    return qpsi.dot(hpsi).imag();
}

}  // namespace

FiniteObservable::FiniteObservable(Eigen::MatrixXcd matrix)
    : matrix_(std::move(matrix)) {
    if (matrix_.rows() != matrix_.cols()) {
        throw std::invalid_argument("observable matrix must be square");
    }
    if (matrix_.rows() < 2 || matrix_.rows() > 16) {
        throw std::invalid_argument("observable dimension must lie in [2, 16]");
    }
    const double deviation =
        (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
    if (deviation > 1e-12) {
        throw std::invalid_argument("observable matrix must be hermitian");
    }
}

StateVector::StateVector(Eigen::VectorXcd vector) : vector_(std::move(vector)) {
    if (vector_.size() < 2) {
        throw std::invalid_argument("state needs dimension >= 2");
    }
    if (std::abs(vector_.norm() - 1.0) > 1e-12) {
        throw std::invalid_argument("state vector must have unit norm");
    }
}

StateVector StateVector::normalized(Eigen::VectorXcd vector) {
    const double norm = vector.norm();
    if (!(norm > 0.0) || !std::isfinite(norm)) {
        throw std::invalid_argument("cannot normalize a zero vector");
    }
    return StateVector(vector / norm);
}

Expectation expectation_and_uncertainty(const FiniteObservable& observable,
                                        const StateVector& state) {
    if (observable.dim() != state.dim()) {
        throw std::invalid_argument("operator and state dimensions differ");
    }
    const Eigen::VectorXcd opsi = observable.matrix() * state.vector();
    const std::complex<double> raw = state.vector().dot(opsi);
    if (std::abs(raw.imag()) > 1e-12) {
        throw std::logic_error("expectation of a hermitian operator drifted"
                               " off the real axis");
    }
    Expectation result;
    result.mean = raw.real();
    // <Q^2> = |Q psi|^2 for hermitian Q; non-negative by construction.
    const double m2 = opsi.squaredNorm();
    result.sigma = std::sqrt(std::max(0.0, m2 - result.mean * result.mean));
    return result;
}

RobertsonCheck robertson_check(const FiniteObservable& q,
                               const FiniteObservable& h,
                               const StateVector& state) {
    require_matching_dims(q, h, state);
    const Expectation eq = expectation_and_uncertainty(q, state);
    const Expectation eh = expectation_and_uncertainty(h, state);
    RobertsonCheck check;
    check.lhs = eq.sigma * eh.sigma;
    check.rhs = std::abs(commutator_imag(q, h, state));
    check.holds = check.lhs >= check.rhs - 1e-10;
    return check;
}

StateVector evolve(const FiniteObservable& h, const StateVector& state,
                   double t) {
    if (h.dim() != state.dim()) {
        throw std::invalid_argument("operator and state dimensions differ");
    }
    if (!std::isfinite(t)) {
        throw std::invalid_argument("evolution time must be finite");
    }
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h.matrix());
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eigendecomposition failed");
    }
    const Eigen::VectorXcd coeffs =
        solver.eigenvectors().adjoint() * state.vector();
    Eigen::VectorXcd rotated(coeffs.size());
    for (Eigen::Index k = 0; k < coeffs.size(); ++k) {
        const double angle = -solver.eigenvalues()[k] * t;
        rotated[k] = coeffs[k] * std::complex<double>(std::cos(angle),
                                                      std::sin(angle));
    }
    // Unitary evolution preserves the norm up to rounding; renormalize so the
    // result satisfies the StateVector contract exactly.
    return StateVector::normalized(solver.eigenvectors() * rotated);
}

HeisenbergRate heisenberg_rate(const FiniteObservable& q,
                               const FiniteObservable& h,
                               const StateVector& state, double step) {
    require_matching_dims(q, h, state);
    if (!(step > 0.0) || !std::isfinite(step)) {
        throw std::invalid_argument("finite difference step must be positive");
    }
    HeisenbergRate rate;
    // d<Q>/dt = i <[H, Q]> = 2 Im((Q psi)^dag (H psi)) under exp(-iHt).
    rate.analytic = 2.0 * commutator_imag(q, h, state);
    const double forward =
        expectation_and_uncertainty(q, evolve(h, state, step)).mean;
    const double backward =
        expectation_and_uncertainty(q, evolve(h, state, -step)).mean;
    rate.finite_difference = (forward - backward) / (2.0 * step);
    rate.rel_error = std::abs(rate.analytic - rate.finite_difference) /
                     std::max(std::abs(rate.analytic), 1e-12);
    return rate;
}

ClockBound clock_time_uncertainty(const FiniteObservable& q,
                                  const FiniteObservable& h,
                                  const StateVector& state) {
    require_matching_dims(q, h, state);
    const Expectation eq = expectation_and_uncertainty(q, state);
    const Expectation eh = expectation_and_uncertainty(h, state);
    const double rate = 2.0 * commutator_imag(q, h, state);

    ClockBound bound;
    if (std::abs(rate) < kStationaryRate) {
        // The pointer does not move: it takes forever to resolve one spread,
        // and an infinite window satisfies any energy-time bound.
        bound.delta_t = std::numeric_limits<double>::infinity();
        bound.energy_time_product = std::numeric_limits<double>::infinity();
        bound.holds = true;
        bound.stationary = true;
        return bound;
    }
    bound.delta_t = eq.sigma / std::abs(rate);
    bound.energy_time_product = eh.sigma * bound.delta_t;
    bound.holds = bound.energy_time_product >= 0.5 - 1e-10;
    return bound;
}

FiniteObservable random_hermitian(Eigen::Index dim, SeededGenerator& gen) {
    if (dim < 2 || dim > 16) {
        throw std::invalid_argument("observable dimension must lie in [2, 16]");
    }
    Eigen::MatrixXcd m(dim, dim);
    const double off_scale = 1.0 / std::sqrt(2.0);
    for (Eigen::Index i = 0; i < dim; ++i) {
        m(i, i) = gen.normal();
        for (Eigen::Index j = i + 1; j < dim; ++j) {
            const std::complex<double> z(gen.normal() * off_scale,
                                         gen.normal() * off_scale);
            m(i, j) = z;
            m(j, i) = std::conj(z);
        }
    }
    return FiniteObservable(std::move(m));
}

StateVector random_state(Eigen::Index dim, SeededGenerator& gen) {
    if (dim < 2) {
        throw std::invalid_argument("state needs dimension >= 2");
    }
    Eigen::VectorXcd v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        v[i] = std::complex<double>(gen.normal(), gen.normal());
    }
    return StateVector::normalized(std::move(v));
}

}  // namespace photonbox
