#include "hgrover/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

#include "hgrover/sweep.hpp"

namespace hgrover {

namespace {

RobustnessRecord fit_one(const ProblemSpec& spec, ScheduleKind kind, Dependence dep,
                         int samples) {
  const SampleSet set = cross_section(spec, PhaseSchedule::make(kind, kPi, kPi), dep, samples);
  RobustnessRecord rec;
  rec.N = spec.register_size();
  rec.M = spec.num_solutions();
  rec.schedule = kind;
  rec.dependence = dep;
  rec.k_iter = optimal_iterations(spec);
  try {
    const FitResult fit = fit_hill(set);
    const HillParams hp = fit.hill();
    rec.b = hp.b;
    rec.k = hp.k;
    rec.n = hp.n;
    rec.c = hp.c;
    rec.sigma = fit.sigma;
    rec.converged = fit.converged;
  } catch (const std::exception&) {
    rec.converged = false;
  }
  return rec;
}

}  // namespace

ScanResult scan(ScheduleKind schedule, const ScanOptions& options) {
  if (schedule == ScheduleKind::Custom) {
    throw std::invalid_argument("custom schedules cannot be scanned");
  }
  if (options.n_min < 2 || options.n_max < options.n_min) {
    throw std::invalid_argument("scan range must satisfy 2 <= n_min <= n_max");
  }
  if (options.m < 1) throw std::invalid_argument("M must be >= 1");
  if (options.dependences.empty()) throw std::invalid_argument("no dependences requested");

  struct Task {
    ProblemSpec spec;
    Dependence dep;
  };
  std::vector<Task> tasks;
  ScanResult result;
  int previous_k = -1;
  for (int n = options.n_min; n <= options.n_max; ++n) {
    if (2 * options.m > n) continue;
    const ProblemSpec spec(n, options.m);
    const int k = optimal_iterations(spec);
    if (previous_k >= 0 && k > previous_k) result.iteration_steps.push_back(n);
    previous_k = k;
    for (Dependence d : options.dependences) tasks.push_back({spec, d});
  }

  result.records.resize(tasks.size());
  unsigned workers = options.threads ? options.threads : std::thread::hardware_concurrency();
  workers = std::clamp<unsigned>(workers, 1u, static_cast<unsigned>(std::max<std::size_t>(tasks.size(), 1)));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        result.records[i] = fit_one(tasks[i].spec, schedule, tasks[i].dep, options.samples);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);

  std::stable_sort(result.records.begin(), result.records.end(),
                   [](const RobustnessRecord& a, const RobustnessRecord& b) {
                     if (a.N != b.N) return a.N < b.N;
                     return static_cast<int>(a.dependence) < static_cast<int>(b.dependence);
                   });
  return result;
}

std::vector<Dependence> best_candidates(ScheduleKind schedule) {
  switch (schedule) {
    case ScheduleKind::OPH: return {Dependence::OmegaEqPhi};
    case ScheduleKind::SPM: return {Dependence::OmegaEqTwoPiMinusPhi};
    case ScheduleKind::ACSP: return {Dependence::PhiEqPi};
    case ScheduleKind::ACBP: return {Dependence::PhiEqPi};
    case ScheduleKind::HIDP: return {Dependence::OmegaEqTwoPiMinusPhi};
    case ScheduleKind::Custom: break;
  }
  throw std::invalid_argument("no robustness designation for custom schedules");
}

std::vector<Dependence> worst_candidates(ScheduleKind schedule) {
  switch (schedule) {
    case ScheduleKind::OPH: return {Dependence::OmegaEqTwoPiMinusPhi};
    case ScheduleKind::SPM: return {Dependence::OmegaEqPhi};
    case ScheduleKind::ACSP: return {Dependence::OmegaEqPi};
    case ScheduleKind::ACBP:
      return {Dependence::OmegaEqPhi, Dependence::OmegaEqTwoPiMinusPhi};
    case ScheduleKind::HIDP:
      return {Dependence::OmegaEqPhi, Dependence::OmegaEqPi, Dependence::PhiEqPi};
    case ScheduleKind::Custom: break;
  }
  throw std::invalid_argument("no robustness designation for custom schedules");
}

namespace {

std::vector<const RobustnessRecord*> select(const std::vector<RobustnessRecord>& records,
                                            ScheduleKind schedule, Dependence dep) {
  std::vector<const RobustnessRecord*> out;
  for (const auto& r : records) {
    if (r.schedule == schedule && r.dependence == dep) out.push_back(&r);
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const RobustnessRecord* a, const RobustnessRecord* b) { return a->N < b->N; });
  return out;
}

// Candidate with the smallest k at the largest N for which all candidates
// have a converged record.
Dependence least_robust(const std::vector<RobustnessRecord>& records, ScheduleKind schedule,
                        const std::vector<Dependence>& candidates) {
  if (candidates.size() == 1) return candidates.front();
  int common_n = -1;
  for (const auto& r : records) {
    if (r.schedule != schedule || !r.converged) continue;
    const bool all = std::all_of(candidates.begin(), candidates.end(), [&](Dependence d) {
      return std::any_of(records.begin(), records.end(), [&](const RobustnessRecord& o) {
        return o.schedule == schedule && o.dependence == d && o.N == r.N && o.converged;
      });
    });
    if (all) common_n = std::max(common_n, r.N);
  }
  if (common_n < 0) {
    throw std::runtime_error("no register size with converged fits for every candidate of " +
                             std::string(to_string(schedule)));
  }
  Dependence chosen = candidates.front();
  double smallest = std::numeric_limits<double>::infinity();
  for (Dependence d : candidates) {
    for (const auto& r : records) {
      if (r.schedule == schedule && r.dependence == d && r.N == common_n && r.k < smallest) {
        smallest = r.k;
        chosen = d;
      }
    }
  }
  return chosen;
}

SeriesSummary fit_series(const std::vector<SeriesPoint>& series, int target_n) {
  SeriesSummary s;
  const FitResult sat = fit_secondary(series, ModelId::SatExp);
  const FitResult logi = fit_secondary(series, ModelId::LogisticOffset);
  if (logi.sse < sat.sse) {
    s.fit = logi;
    s.alternative = sat;
  } else {
    s.fit = sat;
    s.alternative = logi;
  }
  s.extrapolated = extrapolate(s.fit, target_n);
  return s;
}

CaseSummary summarize_case(const std::vector<RobustnessRecord>& records, ScheduleKind schedule,
                           std::vector<Dependence> candidates, int target_n, int fit_n_min) {
  CaseSummary cs;
  cs.dependence = least_robust(records, schedule, candidates);
  cs.candidates = std::move(candidates);
  std::vector<SeriesPoint> k_series, b_series, n_series;
  for (const RobustnessRecord* r : select(records, schedule, cs.dependence)) {
    if (r->N < fit_n_min || !r->converged) continue;
    k_series.push_back({r->N, r->k});
    b_series.push_back({r->N, r->b});
    n_series.push_back({r->N, r->n});
  }
  if (k_series.size() < 6) {
    throw std::runtime_error("only " + std::to_string(k_series.size()) +
                             " converged records for " + std::string(to_string(schedule)) + " / " +
                             std::string(to_string(cs.dependence)) + " with N >= " +
                             std::to_string(fit_n_min) + "; need at least 6");
  }
  cs.k = fit_series(k_series, target_n);
  cs.b = fit_series(b_series, target_n);
  cs.n = fit_series(n_series, target_n);
  return cs;
}

}  // namespace

ScheduleSummary summarize(const std::vector<RobustnessRecord>& records, ScheduleKind schedule,
                          int target_n, int fit_n_min) {
  ScheduleSummary s;
  s.schedule = schedule;
  s.best = summarize_case(records, schedule, best_candidates(schedule), target_n, fit_n_min);
  s.worst = summarize_case(records, schedule, worst_candidates(schedule), target_n, fit_n_min);
  return s;
}

ComparisonReport compare(const std::vector<RobustnessRecord>& records, int target_n,
                         int fit_n_min) {
  ComparisonReport report;
  report.target_n = target_n;
  report.fit_n_min = fit_n_min;
  for (ScheduleKind kind : kStudiedSchedules) {
    const bool present = std::any_of(records.begin(), records.end(),
                                     [&](const RobustnessRecord& r) { return r.schedule == kind; });
    if (present) report.schedules.push_back(summarize(records, kind, target_n, fit_n_min));
  }
  if (report.schedules.empty()) throw std::runtime_error("no records to summarize");

  auto ranking = [&](auto member) {
    std::vector<const ScheduleSummary*> order;
    for (const auto& s : report.schedules) order.push_back(&s);
    std::stable_sort(order.begin(), order.end(), [&](const ScheduleSummary* a, const ScheduleSummary* b) {
      return (a->*member).k.extrapolated > (b->*member).k.extrapolated;
    });
    std::vector<ScheduleKind> out;
    for (const auto* s : order) out.push_back(s->schedule);
    return out;
  };
  report.ranking_best = ranking(&ScheduleSummary::best);
  report.ranking_worst = ranking(&ScheduleSummary::worst);
  return report;
}

}  // namespace hgrover
