#include "hgrover/analytic.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hgrover {

namespace {

using Complex = std::complex<double>;

Complex cis(double x) { return std::polar(1.0, x); }

}  // namespace

Complex one_iteration_amplitude(double theta, double phi, double omega) {
  const double s = std::sin(theta / 2.0);
  const double c = std::cos(theta / 2.0);
  const Complex ew = cis(omega) - 1.0;
  return cis(phi) * s * (1.0 + ew * s * s) + 0.5 * ew * c * std::sin(theta);
}

Complex two_iteration_amplitude(double theta, double phi, double omega, Kernel kernel) {
  const double w = kernel == Kernel::Plus ? omega : -omega;
  const double s = std::sin(theta / 2.0);
  const double c = std::cos(theta / 2.0);
  const Complex ew = cis(w) - 1.0;
  const Complex ep = cis(phi) - 1.0;
  return cis(phi) * s * (1.0 + ew * s * s) * (cis(phi) + cis(w) - 1.0 + ep * ew * s * s) +
         0.5 * ew * c * (cis(w) + ep * ew * s * s) * std::sin(theta);
}

Complex two_iteration_multiphase_amplitude(double theta, double phi1, double omega1,
                                           double phi2, double omega2) {
  const double s = std::sin(theta / 2.0);
  const double c = std::cos(theta / 2.0);
  const Complex ew1 = cis(omega1) - 1.0;
  const Complex ew2 = cis(omega2) - 1.0;
  const Complex ep1 = cis(phi1) - 1.0;
  return cis(phi2) * s * (-1.0 + cis(phi1) + cis(omega1) + ep1 * ew1 * s * s) *
             (1.0 + ew2 * s * s) +
         0.5 * ew2 * c * (cis(omega1) + ep1 * ew1 * s * s) * std::sin(theta);
}

double n9_polynomial_probability(Dependence dep, double x) {
  switch (dep) {
    case Dependence::OmegaEqPhi:
      return std::norm(0.03292 + 0.46090 * cis(x) - 0.69135 * cis(2 * x) -
                       0.13168 * cis(3 * x) - 0.00411 * cis(4 * x));
    case Dependence::OmegaEqTwoPiMinusPhi: {
      const double a = 0.13580 - 0.32921 * std::cos(x) + 0.52674 * std::cos(2 * x);
      return a * a;
    }
    case Dependence::OmegaEqPi:
    case Dependence::PhiEqPi:
      return std::norm(0.46090 - 0.32921 * cis(x) + 0.20164 * cis(2 * x));
  }
  throw std::logic_error("unknown dependence");
}

double analytic_reference(const ProblemSpec& spec, Dependence dep, double x) {
  if (spec.num_solutions() != 1) {
    throw std::invalid_argument("closed-form references cover a single solution only");
  }
  if (spec.register_size() == 9) return n9_polynomial_probability(dep, x);
  const int k = optimal_iterations(spec);
  const PhasePair p = phases_on_line(dep, x);
  const double t = theta(spec);
  if (k == 1) return std::norm(one_iteration_amplitude(t, p.phi, p.omega));
  if (k == 2) return std::norm(two_iteration_amplitude(t, p.phi, p.omega, Kernel::Plus));
  throw std::invalid_argument("no closed form for N=" + std::to_string(spec.register_size()) +
                              " (" + std::to_string(k) + " iterations)");
}

}  // namespace hgrover
