#include "hgrover/schedule.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>

namespace hgrover {

double negate_phase(double x) {
  double r = kTwoPi - x;
  if (r >= kTwoPi) r -= kTwoPi;
  if (r < 0.0) r += kTwoPi;
  return r;
}

double signed_phase(int exponent, double x) {
  return (exponent % 2 == 0) ? x : negate_phase(x);
}

int half_split(int k_iter) { return (k_iter + 1) / 2; }

PhasePair schedule_phases(const PhaseSchedule& schedule, int j, int k_iter) {
  if (k_iter < 1 || j < 0 || j >= k_iter) {
    throw std::out_of_range("iteration index " + std::to_string(j) + " outside [0, " +
                            std::to_string(k_iter) + ")");
  }
  const double phi = schedule.base_phi;
  const double omega = schedule.base_omega;
  switch (schedule.kind) {
    case ScheduleKind::OPH:
    case ScheduleKind::SPM:
      return {phi, omega};
    case ScheduleKind::ACSP:
      return {phi, signed_phase(j, omega)};
    case ScheduleKind::ACBP:
      return {signed_phase(j + 1, phi), signed_phase(j, omega)};
    case ScheduleKind::HIDP: {
      const int h = j / half_split(k_iter);
      return {signed_phase(h, phi), signed_phase(h + 1, omega)};
    }
    case ScheduleKind::Custom:
      if (schedule.custom_pairs.size() < static_cast<std::size_t>(k_iter)) {
        throw std::invalid_argument("custom schedule has " +
                                    std::to_string(schedule.custom_pairs.size()) +
                                    " phase pairs but " + std::to_string(k_iter) +
                                    " iterations were requested");
      }
      return schedule.custom_pairs[static_cast<std::size_t>(j)];
  }
  throw std::logic_error("unknown schedule kind");
}

int default_iterations(const ProblemSpec& spec, const PhaseSchedule& schedule) {
  if (schedule.kind == ScheduleKind::Custom) return static_cast<int>(schedule.custom_pairs.size());
  return optimal_iterations(spec);
}

Kernel schedule_kernel(ScheduleKind kind) {
  return kind == ScheduleKind::SPM ? Kernel::Minus : Kernel::Plus;
}

std::string_view to_string(ScheduleKind kind) {
  switch (kind) {
    case ScheduleKind::OPH: return "oph";
    case ScheduleKind::SPM: return "spm";
    case ScheduleKind::ACSP: return "acsp";
    case ScheduleKind::ACBP: return "acbp";
    case ScheduleKind::HIDP: return "hidp";
    case ScheduleKind::Custom: return "custom";
  }
  return "?";
}

ScheduleKind parse_schedule_kind(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  for (ScheduleKind k : {ScheduleKind::OPH, ScheduleKind::SPM, ScheduleKind::ACSP,
                         ScheduleKind::ACBP, ScheduleKind::HIDP, ScheduleKind::Custom}) {
    if (lower == to_string(k)) return k;
  }
  throw std::invalid_argument("unknown schedule '" + std::string(name) +
                              "' (expected oph, spm, acsp, acbp, hidp or custom)");
}

}  // namespace hgrover
