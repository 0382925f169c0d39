#include "hgrover/grover.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hgrover {

ReducedState evolve(const ProblemSpec& spec, const PhaseSchedule& schedule, int iters) {
  if (iters < 0) throw std::invalid_argument("iteration count must be non-negative");
  const double t = theta(spec);
  const Kernel kernel = schedule_kernel(schedule.kind);
  ReducedState state = initial_reduced_state(t);
  for (int j = 0; j < iters; ++j) {
    const PhasePair p = schedule_phases(schedule, j, iters);
    state = apply_iteration(state, t, p.phi, p.omega, kernel);
  }
  return state;
}

double run(const ProblemSpec& spec, const PhaseSchedule& schedule, std::optional<int> iters) {
  const int k = iters ? *iters : default_iterations(spec, schedule);
  return success_probability(evolve(spec, schedule, k));
}

namespace {

constexpr double kTargetProbability = 0.999;

double matched_probability(const ProblemSpec& spec, ScheduleKind kind, double phi, int iters) {
  const double omega = kind == ScheduleKind::SPM ? negate_phase(phi) : phi;
  return run(spec, PhaseSchedule::make(kind, phi, omega), iters);
}

// Maximizes p over phi = omega on [0, 2pi]: coarse grid, then golden section
// inside the bracketing cell.
double numeric_matching_phase(const ProblemSpec& spec, ScheduleKind kind, int iters) {
  constexpr int kGrid = 2000;
  int best_i = 0;
  double best_p = -1.0;
  for (int i = 0; i <= kGrid; ++i) {
    const double x = kTwoPi * i / kGrid;
    const double p = matched_probability(spec, kind, x, iters);
    if (p > best_p) {
      best_p = p;
      best_i = i;
    }
  }
  double lo = kTwoPi * std::max(0, best_i - 1) / kGrid;
  double hi = kTwoPi * std::min(kGrid, best_i + 1) / kGrid;
  const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = hi - ratio * (hi - lo);
  double b = lo + ratio * (hi - lo);
  double fa = matched_probability(spec, kind, a, iters);
  double fb = matched_probability(spec, kind, b, iters);
  for (int it = 0; it < 100 && hi - lo > 1e-13; ++it) {
    if (fa < fb) {
      lo = a;
      a = b;
      fa = fb;
      b = lo + ratio * (hi - lo);
      fb = matched_probability(spec, kind, b, iters);
    } else {
      hi = b;
      b = a;
      fb = fa;
      a = hi - ratio * (hi - lo);
      fa = matched_probability(spec, kind, a, iters);
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

PhaseMatchingResult phase_matching_angle(const ProblemSpec& spec, ScheduleKind kind) {
  if (kind != ScheduleKind::OPH && kind != ScheduleKind::SPM) {
    throw std::invalid_argument("phase matching is defined for the oph and spm schedules only");
  }
  const double t = theta(spec);
  const double scale = std::sqrt(static_cast<double>(spec.register_size()) /
                                 static_cast<double>(spec.num_solutions()));
  auto argument = [&](int j) { return std::sin(kPi / (4.0 * j + 6.0)) * scale; };
  constexpr double kSlack = 1e-12;

  int j = static_cast<int>(std::floor((kPi / 2.0 - t / 2.0) / t));
  if (j < 0) j = 0;
  while (argument(j) > 1.0 + kSlack) ++j;
  while (j > 0 && argument(j - 1) <= 1.0 + kSlack) --j;

  PhaseMatchingResult result;
  result.iterations = j + 1;
  result.phi = 2.0 * std::asin(std::min(1.0, argument(j)));
  result.probability = matched_probability(spec, kind, result.phi, result.iterations);
  if (!(result.probability >= kTargetProbability)) {
    result.branch = PhaseMatchingBranch::NumericFallback;
    result.phi = numeric_matching_phase(spec, kind, result.iterations);
    result.probability = matched_probability(spec, kind, result.phi, result.iterations);
  }
  result.omega = kind == ScheduleKind::SPM ? negate_phase(result.phi) : result.phi;
  return result;
}

}  // namespace hgrover
