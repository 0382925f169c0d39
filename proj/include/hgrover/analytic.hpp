#pragma once

#include <complex>

#include "hgrover/dependence.hpp"
#include "hgrover/problem.hpp"
#include "hgrover/reduced.hpp"

namespace hgrover {

// Closed-form solution amplitudes <m|G...G|psi> for a single solution.
// Probabilities are their squared moduli.

/// One iteration, Plus kernel.
std::complex<double> one_iteration_amplitude(double theta, double phi, double omega);

/// Two identical iterations. The Minus kernel substitutes e^{i w} -> e^{-i w}.
std::complex<double> two_iteration_amplitude(double theta, double phi, double omega,
                                              Kernel kernel);

/// Two Plus iterations with independent phases; (phi1, omega1) acts first.
std::complex<double> two_iteration_multiphase_amplitude(double theta, double phi1,
                                                        double omega1, double phi2,
                                                        double omega2);

/// Published N=9 polynomials (five-decimal coefficients) along each
/// dependence; x is phi, or omega for PhiEqPi.
double n9_polynomial_probability(Dependence dep, double x);

/// Reference probability for OPH along `dep`:
///   N=9, M=1          -> published polynomial
///   M=1, k_iter == 1  -> one_iteration_amplitude
///   M=1, k_iter == 2  -> two_iteration_amplitude
/// Anything else throws std::invalid_argument.
double analytic_reference(const ProblemSpec& spec, Dependence dep, double x);

}  // namespace hgrover
