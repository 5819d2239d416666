#pragma once

#include <Eigen/Dense>

#include "photonbox/random.hpp"

namespace photonbox {

/// Hermitian operator on a finite state space of dimension 2..16.
class FiniteObservable {
public:
    explicit FiniteObservable(Eigen::MatrixXcd matrix);

    const Eigen::MatrixXcd& matrix() const { return matrix_; }
    Eigen::Index dim() const { return matrix_.rows(); }

private:
    Eigen::MatrixXcd matrix_;
};

/// Unit-norm state vector; the constructor rejects vectors off the unit
/// sphere by more than 1e-12, `normalized` rescales arbitrary input.
class StateVector {
public:
    explicit StateVector(Eigen::VectorXcd vector);
    static StateVector normalized(Eigen::VectorXcd vector);

    const Eigen::VectorXcd& vector() const { return vector_; }
    Eigen::Index dim() const { return vector_.size(); }

private:
    Eigen::VectorXcd vector_;
};

struct Expectation {
    double mean = 0.0;
    double sigma = 0.0;
};

/// <Q> and the spread sqrt(<Q^2> - <Q>^2) in the given state.
Expectation expectation_and_uncertainty(const FiniteObservable& observable,
                                        const StateVector& state);

struct RobertsonCheck {
    double lhs = 0.0;  ///< sigma_Q * sigma_H
    double rhs = 0.0;  ///< |<[Q, H]>| / 2
    bool holds = false;
};

/// The uncertainty relation sigma_Q sigma_H >= |<[Q,H]>|/2, checked with a
/// 1e-10 absolute slack for rounding.
RobertsonCheck robertson_check(const FiniteObservable& q,
                               const FiniteObservable& h,
                               const StateVector& state);

/// exp(-i H t) |psi> via the eigendecomposition of H.
StateVector evolve(const FiniteObservable& h, const StateVector& state,
                   double t);

struct HeisenbergRate {
    double analytic = 0.0;  ///< i <[H, Q]>, the drift of <Q> under exp(-iHt)
    double finite_difference = 0.0;
    double rel_error = 0.0;
};

/// Compares the closed-form drift of <Q(t)> at t = 0 against a central
/// finite difference of the evolved expectation.
HeisenbergRate heisenberg_rate(const FiniteObservable& q,
                               const FiniteObservable& h,
                               const StateVector& state, double step = 1e-4);

struct ClockBound {
    double delta_t = 0.0;             ///< sigma_Q / |d<Q>/dt|
    double energy_time_product = 0.0; ///< sigma_H * delta_t
    bool holds = false;               ///< product >= 1/2 (hbar = 1)
    bool stationary = false;          ///< drift below 1e-12: delta_t infinite
};

/// Time for the observable Q to shift by one spread, and the resulting
/// energy-time product. Stationary states report infinite delta_t and
/// product with holds = true.
ClockBound clock_time_uncertainty(const FiniteObservable& q,
                                  const FiniteObservable& h,
                                  const StateVector& state);

/// GUE-style random Hermitian matrix with independent normal entries.
FiniteObservable random_hermitian(Eigen::Index dim, SeededGenerator& gen);

/// Haar-like random unit vector from complex normal components.
StateVector random_state(Eigen::Index dim, SeededGenerator& gen);

}  // namespace photonbox
