#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hgrover {

// Self-checks of the simulator against independent references. Each suite
// counts individual comparisons and the largest deviation seen.
//
//   analytic-n9     N=9 published polynomials, 64 phases per dependence, 5e-4
//   closed-form     p(pi,pi) = sin^2((2k+1) theta/2) for N in 2..110, plus the
//                   one- and two-iteration amplitude formulas, 1e-12
//   oracle          reduced vs full-state simulation, N in 2..64,
//                   M in {1, 2, N/4}, every schedule, 20 random pairs, 1e-10
//   duality         p_Minus(phi, omega) = p_Plus(phi, 2pi - omega), 50x50 grid,
//                   N in {9, 36, 72}, 1e-12
//   equivalence     nine sign-pattern identities between schedule variants,
//                   25x25 grid, N in {9, 36}, 1e-12
//   phase-matching  p >= 0.999 at the resolved angle, N in 7..110, OPH and SPM
//   unitarity       state norm preserved by random schedules, 1e-12

struct SuiteResult {
  std::string name;
  long checks = 0;
  long failures = 0;
  double max_error = 0.0;
  double tolerance = 0.0;
  std::string note;

  bool passed() const { return checks > 0 && failures == 0; }
};

struct VerifyOptions {
  std::uint64_t seed = 0x5eed;
  /// Negative control: evaluate the Minus side of the duality suite with the
  /// Plus kernel, which must make that suite fail.
  bool corrupt_minus_kernel = false;
};

const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite name.
SuiteResult run_suite(std::string_view name, const VerifyOptions& options = {});

std::vector<SuiteResult> run_all(const VerifyOptions& options = {});

/// One identity of the equivalence suite, e.g. "acbp = both-even mirrored".
struct EquivalenceCase {
  std::string name;
  double max_error = 0.0;
  long checks = 0;
};

/// Per-identity results of the equivalence suite.
std::vector<EquivalenceCase> equivalence_cases(const VerifyOptions& options = {});

}  // namespace hgrover
