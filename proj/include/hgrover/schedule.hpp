#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hgrover/reduced.hpp"

namespace hgrover {

/// Per-iteration phase schedules. Index j is zero-based.
///   OPH   (phi, omega)                                   Plus kernel
///   SPM   (phi, omega)                                   Minus kernel
///   ACSP  (phi, (-1)^j omega)                            Plus kernel
///   ACBP  ((-1)^{j+1} phi, (-1)^j omega)                 Plus kernel
///   HIDP  ((-1)^h phi, (-1)^{h+1} omega), h = floor(j / ceil(k/2))
///   CUSTOM explicit pairs, Plus kernel
/// Negated phases are folded into [0, 2pi).
enum class ScheduleKind { OPH, SPM, ACSP, ACBP, HIDP, Custom };

struct PhasePair {
  double phi = 0.0;
  double omega = 0.0;

  friend bool operator==(const PhasePair&, const PhasePair&) = default;
};

struct PhaseSchedule {
  ScheduleKind kind = ScheduleKind::OPH;
  double base_phi = kPi;
  double base_omega = kPi;
  std::vector<PhasePair> custom_pairs;

  static PhaseSchedule make(ScheduleKind kind, double phi, double omega) {
    return PhaseSchedule{kind, phi, omega, {}};
  }
  static PhaseSchedule custom(std::vector<PhasePair> pairs) {
    return PhaseSchedule{ScheduleKind::Custom, 0.0, 0.0, std::move(pairs)};
  }
};

/// -x folded into [0, 2pi).
double negate_phase(double x);

/// (-1)^exponent applied to x, folded into [0, 2pi) when negative.
double signed_phase(int exponent, double x);

/// First index of the second half for HIDP, ceil(k_iter / 2).
int half_split(int k_iter);

/// Throws std::out_of_range for j outside [0, k_iter) and
/// std::invalid_argument for a CUSTOM schedule without enough pairs.
PhasePair schedule_phases(const PhaseSchedule& schedule, int j, int k_iter);

Kernel schedule_kernel(ScheduleKind kind);

/// Iteration count used when a run does not specify one: the number of
/// pairs for CUSTOM, optimal_iterations(spec) otherwise.
int default_iterations(const ProblemSpec& spec, const PhaseSchedule& schedule);

/// Builds a CUSTOM schedule from sign exponents: the j-th pair is
/// ((-1)^{phi_exp(j,k)} phi, (-1)^{omega_exp(j,k)} omega).
template <typename PhiExp, typename OmegaExp>
PhaseSchedule signed_schedule(double phi, double omega, int k_iter, PhiExp phi_exp,
                              OmegaExp omega_exp) {
  std::vector<PhasePair> pairs;
  pairs.reserve(static_cast<std::size_t>(k_iter));
  for (int j = 0; j < k_iter; ++j) {
    pairs.push_back({signed_phase(phi_exp(j, k_iter), phi),
                     signed_phase(omega_exp(j, k_iter), omega)});
  }
  return PhaseSchedule::custom(std::move(pairs));
}

std::string_view to_string(ScheduleKind kind);
/// Accepts oph, spm, acsp, acbp, hidp, custom (case-insensitive).
ScheduleKind parse_schedule_kind(std::string_view name);

inline constexpr ScheduleKind kStudiedSchedules[] = {
    ScheduleKind::OPH, ScheduleKind::SPM, ScheduleKind::ACSP, ScheduleKind::ACBP,
    ScheduleKind::HIDP};

}  // namespace hgrover
