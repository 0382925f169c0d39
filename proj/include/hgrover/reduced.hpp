#pragma once

#include <complex>

#include <Eigen/Dense>

#include "hgrover/problem.hpp"

namespace hgrover {

/// Amplitudes on (|alpha>, |beta>): the normalized non-solution and
/// solution superpositions. Every operator in this library keeps the
/// state inside that plane.
template <typename Real>
using ReducedStateT = Eigen::Matrix<std::complex<Real>, 2, 1>;
using ReducedState = ReducedStateT<double>;

template <typename Real>
using IterationMatrixT = Eigen::Matrix<std::complex<Real>, 2, 2>;
using IterationMatrix = IterationMatrixT<double>;

/// Sign convention of the diffusion reflection.
///   Plus:  P(omega) O(phi)
///   Minus: P(-omega) O(phi), the second phase-matching variant with its
///          global phase dropped.
enum class Kernel { Plus, Minus };

/// One iteration restricted to the Grover plane. With E = (e^{i w} - 1)/2
/// the columns are
///   G|alpha> = (1 + E(1 + cos t),  E sin t)
///   G|beta>  = e^{i phi} (E sin t, 1 + E(1 - cos t))
/// where w = omega for Plus and -omega for Minus.
template <typename Real>
IterationMatrixT<Real> iteration_matrix(Real theta, Real phi, Real omega, Kernel kernel) {
  using Complex = std::complex<Real>;
  const Real w = kernel == Kernel::Plus ? omega : -omega;
  const Real half = theta / Real(2);
  const Real s = std::sin(half);
  const Real c = std::cos(half);
  // e^{iw} - 1 = 2i sin(w/2) e^{iw/2}; exact zero at w = 0.
  const Complex e = Complex(Real(0), Real(2) * std::sin(w / Real(2))) *
                    std::polar(Real(1), w / Real(2));
  const Complex oracle = std::polar(Real(1), phi);
  // (e^{iw}-1)/2 times (1 + cos t), sin t, (1 - cos t) in half-angle form.
  IterationMatrixT<Real> g;
  g(0, 0) = Real(1) + e * (c * c);
  g(1, 0) = e * (s * c);
  g(0, 1) = oracle * (e * (s * c));
  g(1, 1) = oracle * (Real(1) + e * (s * s));
  return g;
}

template <typename Real>
ReducedStateT<Real> apply_iteration(const ReducedStateT<Real>& state, Real theta, Real phi,
                                    Real omega, Kernel kernel) {
  return iteration_matrix(theta, phi, omega, kernel) * state;
}

template <typename Real>
ReducedStateT<Real> initial_reduced_state(Real theta) {
  ReducedStateT<Real> s;
  s << std::complex<Real>(std::cos(theta / Real(2))), std::complex<Real>(std::sin(theta / Real(2)));
  return s;
}

inline ReducedState initial_reduced_state(const ProblemSpec& spec) {
  return initial_reduced_state(theta(spec));
}

/// Probability of reading any one solution after measurement summed over
/// all M solutions, |amp_beta|^2.
template <typename Real>
Real success_probability(const ReducedStateT<Real>& state) {
  return std::norm(state(1));
}

}  // namespace hgrover
