#pragma once

#include <optional>
#include <vector>

#include "hgrover/dependence.hpp"
#include "hgrover/hill.hpp"
#include "hgrover/schedule.hpp"

namespace hgrover {

/// One Hill fit of one cross-section.
struct RobustnessRecord {
  int N = 0;
  int M = 1;
  ScheduleKind schedule = ScheduleKind::OPH;
  Dependence dependence = Dependence::OmegaEqPhi;
  int k_iter = 0;
  double b = 0.0;
  double k = 0.0;
  double n = 0.0;
  double c = 0.0;
  double sigma = 0.0;
  bool converged = false;

  friend bool operator==(const RobustnessRecord&, const RobustnessRecord&) = default;
};

struct ScanOptions {
  int n_min = 2;
  int n_max = 110;
  int m = 1;
  int samples = kDefaultCrossSectionSamples;
  std::vector<Dependence> dependences{std::begin(kAllDependences), std::end(kAllDependences)};
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

struct ScanResult {
  std::vector<RobustnessRecord> records;  ///< sorted by (N, dependence)
  /// Register sizes at which k_iter increases over its value at N - 1.
  std::vector<int> iteration_steps;
};

/// Cross-sections and Hill fits for every N in [n_min, n_max] and every
/// requested dependence. N values with M/N > 1/2 are skipped. A failed fit
/// is kept with converged = false.
ScanResult scan(ScheduleKind schedule, const ScanOptions& options = {});

/// A secondary fit of one Hill parameter against N. Both model families are
/// fitted; `fit` holds the lower-SSE one.
struct SeriesSummary {
  FitResult fit;
  FitResult alternative;
  double extrapolated = 0.0;
};

struct CaseSummary {
  Dependence dependence = Dependence::OmegaEqPhi;
  /// Dependences that competed for this role (one entry when fixed).
  std::vector<Dependence> candidates;
  SeriesSummary k;
  SeriesSummary b;
  SeriesSummary n;
};

struct ScheduleSummary {
  ScheduleKind schedule = ScheduleKind::OPH;
  CaseSummary best;
  CaseSummary worst;
};

struct ComparisonReport {
  int target_n = 1000;
  int fit_n_min = 7;
  std::vector<ScheduleSummary> schedules;
  /// Schedules ordered by extrapolated k, largest first.
  std::vector<ScheduleKind> ranking_best;
  std::vector<ScheduleKind> ranking_worst;
};

inline constexpr int kSecondaryFitMinN = 7;

/// Most and least robust dependences per schedule:
///   OPH  omega=phi / omega=2pi-phi        SPM  omega=2pi-phi / omega=phi
///   ACSP phi=pi    / omega=pi             ACBP phi=pi / min k of {omega=phi, omega=2pi-phi}
///   HIDP omega=2pi-phi / min k of the other three
/// "min k" is decided at the largest scanned N.
std::vector<Dependence> best_candidates(ScheduleKind schedule);
std::vector<Dependence> worst_candidates(ScheduleKind schedule);

/// Secondary fits of k, b, n over N >= fit_n_min for the schedule's best and
/// worst dependences, extrapolated to target_n. Throws std::runtime_error
/// when fewer than 6 converged records are available for a series.
ScheduleSummary summarize(const std::vector<RobustnessRecord>& records, ScheduleKind schedule,
                          int target_n, int fit_n_min = kSecondaryFitMinN);

/// summarize() for every schedule present in `records`, plus rankings.
ComparisonReport compare(const std::vector<RobustnessRecord>& records, int target_n,
                         int fit_n_min = kSecondaryFitMinN);

}  // namespace hgrover
