#pragma once

#include <optional>

#include "hgrover/problem.hpp"
#include "hgrover/reduced.hpp"
#include "hgrover/schedule.hpp"

namespace hgrover {

/// Applies `iters` scheduled iterations to the uniform initial state.
ReducedState evolve(const ProblemSpec& spec, const PhaseSchedule& schedule, int iters);

/// Success probability |amp_beta|^2 after the scheduled iterations.
/// `iters` defaults to default_iterations(spec, schedule).
double run(const ProblemSpec& spec, const PhaseSchedule& schedule,
           std::optional<int> iters = std::nullopt);

enum class PhaseMatchingBranch { Formula, NumericFallback };

struct PhaseMatchingResult {
  double phi = 0.0;    ///< oracle phase
  double omega = 0.0;  ///< diffusion phase (2pi - phi for SPM)
  int iterations = 0;  ///< J + 1
  double probability = 0.0;
  PhaseMatchingBranch branch = PhaseMatchingBranch::Formula;
};

/// Deterministic-success phases for OPH or SPM:
///   phi_max = 2 asin(sin(pi/(4J+6)) sqrt(N/M)),  J = floor((pi/2 - t/2)/t)
/// J is moved to the smallest value with a valid asin argument. When the
/// closed form does not reach p >= 0.999 the phase is found by a grid
/// search plus golden-section refinement over phi = omega and the branch is
/// reported as NumericFallback.
PhaseMatchingResult phase_matching_angle(const ProblemSpec& spec,
                                         ScheduleKind kind = ScheduleKind::OPH);

}  // namespace hgrover
