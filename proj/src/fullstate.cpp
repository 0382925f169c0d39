#include "hgrover/fullstate.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace hgrover {

SolutionSet::SolutionSet(std::vector<int> indices, int register_size)
    : indices_(std::move(indices)), n_(register_size) {
  std::sort(indices_.begin(), indices_.end());
  if (indices_.empty()) throw std::invalid_argument("solution set must not be empty");
  if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end()) {
    throw std::invalid_argument("solution indices must be distinct");
  }
  if (indices_.front() < 0 || indices_.back() >= n_) {
    throw std::invalid_argument("solution index outside [0, " + std::to_string(n_) + ")");
  }
  if (size() >= n_) throw std::invalid_argument("solution set must be smaller than the register");
}

SolutionSet SolutionSet::first(int m, int register_size) {
  std::vector<int> idx(static_cast<std::size_t>(std::max(m, 0)));
  for (int i = 0; i < m; ++i) idx[static_cast<std::size_t>(i)] = i;
  return SolutionSet(std::move(idx), register_size);
}

StateVector equal_superposition(int n) {
  if (n < 2) throw std::invalid_argument("register size must be >= 2");
  return StateVector::Constant(n, std::complex<double>(1.0 / std::sqrt(static_cast<double>(n))));
}

StateVector solution_superposition(const SolutionSet& solutions) {
  StateVector beta = StateVector::Zero(solutions.register_size());
  const double amp = 1.0 / std::sqrt(static_cast<double>(solutions.size()));
  for (int i : solutions.indices()) beta(i) = amp;
  return beta;
}

StateVector apply_generalized_householder(const StateVector& state, const StateVector& axis,
                                          double phase) {
  if (state.size() != axis.size()) {
    throw std::invalid_argument("state and axis dimensions differ (" +
                                std::to_string(state.size()) + " vs " +
                                std::to_string(axis.size()) + ")");
  }
  if (std::abs(axis.norm() - 1.0) > 1e-9) {
    throw std::invalid_argument("reflection axis must have unit norm");
  }
  const std::complex<double> factor = 1.0 - std::polar(1.0, phase);
  // Eigen's dot conjugates its left operand: axis.dot(state) = <axis|state>.
  return state - (factor * axis.dot(state)) * axis;
}

double run_full(const ProblemSpec& spec, const SolutionSet& solutions,
                const PhaseSchedule& schedule, std::optional<int> iters) {
  if (solutions.register_size() != spec.register_size()) {
    throw std::invalid_argument("solution set register size does not match the problem");
  }
  if (solutions.size() != spec.num_solutions()) {
    throw std::invalid_argument("solution set has " + std::to_string(solutions.size()) +
                                " entries, problem expects " +
                                std::to_string(spec.num_solutions()));
  }
  const int k = iters ? *iters : default_iterations(spec, schedule);
  const StateVector psi = equal_superposition(spec.register_size());
  const StateVector beta = solution_superposition(solutions);
  const bool minus = schedule_kernel(schedule.kind) == Kernel::Minus;

  StateVector state = psi;
  for (int j = 0; j < k; ++j) {
    const PhasePair p = schedule_phases(schedule, j, k);
    state = apply_generalized_householder(state, beta, p.phi);
    state = apply_generalized_householder(state, psi, minus ? -p.omega : p.omega);
  }
  double prob = 0.0;
  for (int i : solutions.indices()) prob += std::norm(state(i));
  return prob;
}

}  // namespace hgrover
