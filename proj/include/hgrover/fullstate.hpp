#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "hgrover/problem.hpp"
#include "hgrover/schedule.hpp"

namespace hgrover {

// Reference N-dimensional simulator. Every reflection is a rank-1 update
// on the amplitude vector; no N x N matrix is ever formed.

using StateVector = Eigen::VectorXcd;

/// Sorted, distinct marked indices in [0, N); non-empty and fewer than N.
class SolutionSet {
 public:
  SolutionSet(std::vector<int> indices, int register_size);

  /// {0, 1, ..., m-1}
  static SolutionSet first(int m, int register_size);

  const std::vector<int>& indices() const { return indices_; }
  int size() const { return static_cast<int>(indices_.size()); }
  int register_size() const { return n_; }

 private:
  std::vector<int> indices_;
  int n_;
};

/// F|0>: every amplitude 1/sqrt(n).
StateVector equal_superposition(int n);

/// Uniform superposition of the marked states.
StateVector solution_superposition(const SolutionSet& solutions);

/// (I - (1 - e^{i phase}) |axis><axis|) state. Throws std::invalid_argument
/// if |axis| deviates from 1 by more than 1e-9 or dimensions differ.
StateVector apply_generalized_householder(const StateVector& state, const StateVector& axis,
                                          double phase);

/// Sum over marked m of |<m|final>|^2. Each iteration applies the oracle
/// reflection about |beta> with phi_j, then the reflection about |psi>
/// with omega_j (Plus) or -omega_j (Minus).
double run_full(const ProblemSpec& spec, const SolutionSet& solutions,
                const PhaseSchedule& schedule, std::optional<int> iters = std::nullopt);

}  // namespace hgrover
