#include "hgrover/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>
#include <stdexcept>

#include "hgrover/analytic.hpp"
#include "hgrover/dependence.hpp"
#include "hgrover/fullstate.hpp"
#include "hgrover/grover.hpp"
#include "hgrover/schedule.hpp"

namespace hgrover {

namespace {

void record(SuiteResult& r, double error) {
  ++r.checks;
  if (!(error <= r.tolerance)) ++r.failures;
  if (!(error <= r.max_error)) r.max_error = error;  // NaN sticks
}

double grid_value(int i, int count) { return kTwoPi * i / (count - 1); }

SuiteResult analytic_n9(const VerifyOptions&) {
  SuiteResult r{"analytic-n9", 0, 0, 0.0, 5e-4, {}};
  const ProblemSpec spec(9, 1);
  for (Dependence dep : kAllDependences) {
    for (int i = 0; i < 64; ++i) {
      const double x = kTwoPi * i / 63;
      const PhasePair pp = phases_on_line(dep, x);
      const double p = run(spec, PhaseSchedule::make(ScheduleKind::OPH, pp.phi, pp.omega));
      record(r, std::abs(p - n9_polynomial_probability(dep, x)));
    }
  }
  return r;
}

SuiteResult closed_form(const VerifyOptions& options) {
  SuiteResult r{"closed-form", 0, 0, 0.0, 1e-12, {}};
  for (int n = 2; n <= 110; ++n) {
    const ProblemSpec spec(n, 1);
    const int k = optimal_iterations(spec);
    const double s = std::sin((2 * k + 1) * theta(spec) / 2);
    record(r, std::abs(run(spec, PhaseSchedule::make(ScheduleKind::OPH, kPi, kPi)) - s * s));
  }

  constexpr int side = 17;
  for (int n = 2; n <= 14; ++n) {
    const ProblemSpec spec(n, 1);
    const double t = theta(spec);
    for (int i = 0; i < side; ++i) {
      for (int j = 0; j < side; ++j) {
        const double phi = grid_value(i, side);
        const double omega = grid_value(j, side);
        const auto plus = PhaseSchedule::make(ScheduleKind::OPH, phi, omega);
        const auto minus = PhaseSchedule::make(ScheduleKind::SPM, phi, omega);
        record(r, std::abs(run(spec, plus, 1) - std::norm(one_iteration_amplitude(t, phi, omega))));
        record(r, std::abs(run(spec, plus, 2) -
                           std::norm(two_iteration_amplitude(t, phi, omega, Kernel::Plus))));
        record(r, std::abs(run(spec, minus, 2) -
                           std::norm(two_iteration_amplitude(t, phi, omega, Kernel::Minus))));
      }
    }
  }

  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  for (int n = 2; n <= 64; ++n) {
    const ProblemSpec spec(n, 1);
    for (int trial = 0; trial < 10; ++trial) {
      const PhasePair a{angle(rng), angle(rng)};
      const PhasePair b{angle(rng), angle(rng)};
      const double p = run(spec, PhaseSchedule::custom({a, b}), 2);
      const auto amp =
          two_iteration_multiphase_amplitude(theta(spec), a.phi, a.omega, b.phi, b.omega);
      record(r, std::abs(p - std::norm(amp)));
    }
  }
  return r;
}

SuiteResult oracle(const VerifyOptions& options) {
  SuiteResult r{"oracle", 0, 0, 0.0, 1e-10, {}};
  std::mt19937_64 rng(options.seed + 1);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  for (int n = 2; n <= 64; ++n) {
    std::vector<int> counts{1, 2, n / 4};
    std::sort(counts.begin(), counts.end());
    counts.erase(std::unique(counts.begin(), counts.end()), counts.end());
    for (int m : counts) {
      if (m < 1 || 2 * m > n) continue;
      const ProblemSpec spec(n, m);
      const int k = optimal_iterations(spec);
      std::vector<int> order(static_cast<std::size_t>(n));
      std::iota(order.begin(), order.end(), 0);
      std::shuffle(order.begin(), order.end(), rng);
      const SolutionSet marked(std::vector<int>(order.begin(), order.begin() + m), n);
      for (ScheduleKind kind : kStudiedSchedules) {
        for (int trial = 0; trial < 20; ++trial) {
          const double phi = angle(rng);
          const double omega = angle(rng);
          const auto schedule = PhaseSchedule::make(kind, phi, omega);
          record(r, std::abs(run(spec, schedule, k) - run_full(spec, marked, schedule, k)));
        }
      }
    }
  }
  return r;
}

SuiteResult duality(const VerifyOptions& options) {
  SuiteResult r{"duality", 0, 0, 0.0, 1e-12, {}};
  const ScheduleKind minus_kind =
      options.corrupt_minus_kernel ? ScheduleKind::OPH : ScheduleKind::SPM;
  if (options.corrupt_minus_kernel) r.note = "corrupted Minus kernel";
  constexpr int side = 50;
  for (int n : {9, 36, 72}) {
    const ProblemSpec spec(n, 1);
    for (int i = 0; i < side; ++i) {
      for (int j = 0; j < side; ++j) {
        const double phi = grid_value(i, side);
        const double omega = grid_value(j, side);
        const double minus = run(spec, PhaseSchedule::make(minus_kind, phi, omega));
        const double plus = run(spec, PhaseSchedule::make(ScheduleKind::OPH, phi, kTwoPi - omega));
        record(r, std::abs(minus - plus));
      }
    }
  }
  return r;
}

// A schedule evaluated at (phi, omega) for k iterations.
using ScheduleAt = std::function<PhaseSchedule(double, double, int)>;
// Where the reference is evaluated for a variant point (phi, omega).
using PointMap = std::function<PhasePair(double, double)>;

ScheduleAt builtin(ScheduleKind kind) {
  return [kind](double phi, double omega, int) { return PhaseSchedule::make(kind, phi, omega); };
}

// ((-1)^{phi_exp} phi, (-1)^{omega_exp} omega) with exponents taken from
// either the iteration index j or the half index h = floor(j / ceil(k/2)).
ScheduleAt pattern(bool halves, int phi_shift, int omega_shift, bool phi_alternates,
                   bool omega_alternates) {
  return [=](double phi, double omega, int k) {
    auto index = [=](int j, int kk) { return halves ? j / half_split(kk) : j; };
    return signed_schedule(
        phi, omega, k,
        [=](int j, int kk) { return (phi_alternates ? index(j, kk) : 0) + phi_shift; },
        [=](int j, int kk) { return (omega_alternates ? index(j, kk) : 0) + omega_shift; });
  };
}

struct Identity {
  std::string name;
  ScheduleAt variant;
  ScheduleAt reference;
  PointMap map;
};

std::vector<Identity> identities() {
  const PointMap same = [](double p, double w) { return PhasePair{p, w}; };
  const PointMap mirror = [](double p, double w) { return PhasePair{p, kTwoPi - w}; };
  const PointMap rotate = [](double p, double w) { return PhasePair{w, kTwoPi - p}; };
  const PointMap exchange = [](double p, double w) { return PhasePair{w, p}; };

  // Sign patterns: j-alternating ("alt"/"both") or half-wise ("halves").
  const ScheduleAt both_even = pattern(false, 0, 0, true, true);
  const ScheduleAt halves_even = pattern(true, 0, 0, true, true);
  const ScheduleAt halves_phi_odd = pattern(true, 1, 0, true, true);

  return {
      {"alt-omega-odd = acsp mirrored", pattern(false, 0, 1, false, true),
       builtin(ScheduleKind::ACSP), mirror},
      {"alt-phi-even = acsp rotated", pattern(false, 0, 0, true, false),
       builtin(ScheduleKind::ACSP), rotate},
      {"alt-phi-odd = acsp exchanged", pattern(false, 1, 0, true, false),
       builtin(ScheduleKind::ACSP), exchange},
      {"both-odd = both-even", pattern(false, 1, 1, true, true), both_even, same},
      {"acbp = both-even mirrored", builtin(ScheduleKind::ACBP), both_even, mirror},
      {"phi-even-omega-odd = both-even mirrored", pattern(false, 0, 1, true, true), both_even,
       mirror},
      {"halves-odd = halves-even", pattern(true, 1, 1, true, true), halves_even, same},
      {"halves-phi-odd = halves-even mirrored", halves_phi_odd, halves_even, mirror},
      {"hidp = halves-phi-odd", builtin(ScheduleKind::HIDP), halves_phi_odd, same},
  };
}

SuiteResult equivalence(const VerifyOptions& options) {
  SuiteResult r{"equivalence", 0, 0, 0.0, 1e-12, {}};
  for (const EquivalenceCase& c : equivalence_cases(options)) {
    r.checks += c.checks;
    if (!(c.max_error <= r.tolerance)) {
      ++r.failures;
      r.note += (r.note.empty() ? "" : "; ") + c.name;
    }
    r.max_error = std::max(r.max_error, c.max_error);
  }
  return r;
}

SuiteResult phase_matching(const VerifyOptions&) {
  SuiteResult r{"phase-matching", 0, 0, 0.0, 1e-3, {}};
  int fallbacks = 0;
  for (int n = 7; n <= 110; ++n) {
    const ProblemSpec spec(n, 1);
    for (ScheduleKind kind : {ScheduleKind::OPH, ScheduleKind::SPM}) {
      const PhaseMatchingResult pm = phase_matching_angle(spec, kind);
      if (pm.branch == PhaseMatchingBranch::NumericFallback) {
        ++fallbacks;
        r.note += (r.note.empty() ? "" : "; ") + ("fallback at N=" + std::to_string(n));
      }
      const double p = run(spec, PhaseSchedule::make(kind, pm.phi, pm.omega), pm.iterations);
      record(r, std::max(0.0, 1.0 - p));
    }
  }
  if (fallbacks == 0) r.note = "closed form at every N";
  return r;
}

SuiteResult unitarity(const VerifyOptions& options) {
  SuiteResult r{"unitarity", 0, 0, 0.0, 1e-12, {}};
  std::mt19937_64 rng(options.seed + 2);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  for (int n = 2; n <= 110; ++n) {
    const ProblemSpec spec(n, 1);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<PhasePair> pairs(12);
      for (auto& p : pairs) p = {angle(rng), angle(rng)};
      const ReducedState s = evolve(spec, PhaseSchedule::custom(pairs), 12);
      record(r, std::abs(s.squaredNorm() - 1.0));
    }
  }
  for (int n : {4, 17, 64}) {
    const ProblemSpec spec(n, 1);
    StateVector s = equal_superposition(n);
    const StateVector beta = solution_superposition(SolutionSet::first(1, n));
    const StateVector psi = equal_superposition(n);
    for (int j = 0; j < 20; ++j) {
      s = apply_generalized_householder(s, beta, angle(rng));
      s = apply_generalized_householder(s, psi, angle(rng));
      record(r, std::abs(s.squaredNorm() - 1.0));
    }
  }
  return r;
}

using SuiteFn = SuiteResult (*)(const VerifyOptions&);

struct Suite {
  const char* name;
  SuiteFn fn;
};

constexpr Suite kSuites[] = {
    {"analytic-n9", analytic_n9}, {"closed-form", closed_form},
    {"oracle", oracle},           {"duality", duality},
    {"equivalence", equivalence}, {"phase-matching", phase_matching},
    {"unitarity", unitarity},
};

}  // namespace

std::vector<EquivalenceCase> equivalence_cases(const VerifyOptions&) {
  constexpr int side = 25;
  std::vector<EquivalenceCase> out;
  for (const Identity& id : identities()) {
    EquivalenceCase c{id.name, 0.0, 0};
    for (int n : {9, 36}) {
      const ProblemSpec spec(n, 1);
      const int k = optimal_iterations(spec);
      for (int i = 0; i < side; ++i) {
        for (int j = 0; j < side; ++j) {
          const double phi = grid_value(i, side);
          const double omega = grid_value(j, side);
          const PhasePair at = id.map(phi, omega);
          const double lhs = run(spec, id.variant(phi, omega, k), k);
          const double rhs = run(spec, id.reference(at.phi, at.omega, k), k);
          const double err = std::abs(lhs - rhs);
          if (!(err <= c.max_error)) c.max_error = err;
          ++c.checks;
        }
      }
    }
    out.push_back(std::move(c));
  }
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const Suite& s : kSuites) v.emplace_back(s.name);
    return v;
  }();
  return names;
}

SuiteResult run_suite(std::string_view name, const VerifyOptions& options) {
  for (const Suite& s : kSuites) {
    if (name == s.name) return s.fn(options);
  }
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

std::vector<SuiteResult> run_all(const VerifyOptions& options) {
  std::vector<SuiteResult> out;
  for (const Suite& s : kSuites) out.push_back(s.fn(options));
  return out;
}

}  // namespace hgrover
