#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "hgrover/dependence.hpp"
#include "hgrover/problem.hpp"
#include "hgrover/schedule.hpp"

namespace hgrover {

struct SamplePoint {
  double phi = 0.0;
  double omega = 0.0;
  double p = 0.0;
};

/// Sampled success probabilities. A cross-section is ordered by its sweep
/// variable; a grid is row-major with phi along rows and omega along columns.
struct SampleSet {
  std::vector<SamplePoint> points;
  std::optional<ProblemSpec> spec;
  ScheduleKind schedule = ScheduleKind::OPH;
  std::optional<Dependence> dependence;
  int rows = 0;
  int cols = 0;
};

inline constexpr int kDefaultCrossSectionSamples = 1001;
inline constexpr int kDefaultGridSide = 201;
inline constexpr double kDefaultPlateauDelta = 0.02;

/// Uniform inclusive grid of `samples` sweep values over [0, 2pi]; the other
/// phase follows `dep`. Throws std::invalid_argument if samples < 3.
SampleSet cross_section(const ProblemSpec& spec, const PhaseSchedule& schedule, Dependence dep,
                        int samples = kDefaultCrossSectionSamples);

/// rows x cols uniform grid over [0, 2pi]^2. Throws if rows or cols < 2.
SampleSet grid(const ProblemSpec& spec, const PhaseSchedule& schedule,
               int rows = kDefaultGridSide, int cols = kDefaultGridSide);

/// The sweep variable of a one-dimensional sample set: omega when the set is
/// a PhiEqPi section (or phi is constant), phi otherwise.
std::vector<double> sweep_axis(const SampleSet& samples);
std::vector<double> probabilities(const SampleSet& samples);

/// Half-width eps of the widest symmetric interval [x* - eps, x* + eps]
/// on which every sample keeps p >= (1 - delta) max p. x* is the centre of
/// the contiguous run of maximal samples. Resolution is one sample step.
/// If no sample falls below the threshold the full half-range is returned.
double robustness_interval(const SampleSet& samples, double delta = kDefaultPlateauDelta);

/// CSV with header `phi,omega,p`, 17 significant digits, LF endings.
void write_samples_csv(std::ostream& out, const SampleSet& samples);
/// Throws std::runtime_error naming the offending line.
SampleSet read_samples_csv(std::istream& in);

}  // namespace hgrover
