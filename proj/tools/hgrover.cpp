// hgrover: simulate, sweep, fit, scan, report and verify from the shell.
//
// Exit status: 0 success, 1 runtime failure (I/O, fit, failed checks),
// 2 invalid arguments.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hgrover/grover.hpp"
#include "hgrover/hill.hpp"
#include "hgrover/io.hpp"
#include "hgrover/pipeline.hpp"
#include "hgrover/sweep.hpp"
#include "hgrover/verify.hpp"

using namespace hgrover;

namespace {

// Thrown for bad flag values detected after CLI11 parsing.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Decimal radians, or multiples/fractions of pi: pi, 2pi, 2*pi, pi/2, -3pi/4.
double parse_angle(const std::string& text) {
  static const std::regex pi_form(R"(^\s*([+-]?(?:\d+\.?\d*|\.\d+)?(?:[eE][+-]?\d+)?)\s*\*?\s*pi\s*(?:/\s*(\d+\.?\d*|\.\d+))?\s*$)");
  std::smatch m;
  if (std::regex_match(text, m, pi_form)) {
    std::string coef = m[1].str();
    double value = kPi;
    if (coef == "-") value = -kPi;
    else if (!coef.empty() && coef != "+") value = std::stod(coef) * kPi;
    if (m[2].matched) value /= std::stod(m[2].str());
    return value;
  }
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || text.find_first_not_of(" \t", used) != std::string::npos || !std::isfinite(value)) {
    throw UsageError("cannot read angle '" + text + "'");
  }
  return value;
}

ScheduleKind schedule_flag(const std::string& name) {
  try {
    return parse_schedule_kind(name);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

ProblemSpec problem_flags(int n, int m) {
  try {
    return ProblemSpec(n, m);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  return in;
}

// Writes `text` to `path`, or to stdout when path is "-".
void emit(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

PhaseSchedule schedule_from(ScheduleKind kind, const std::string& phi, const std::string& omega,
                            const std::string& pairs_path) {
  if (kind == ScheduleKind::Custom) {
    if (pairs_path.empty()) throw UsageError("--schedule custom requires --pairs");
    auto in = open_in(pairs_path);
    return PhaseSchedule::custom(read_phase_pairs_csv(in));
  }
  if (!pairs_path.empty()) throw UsageError("--pairs is only valid with --schedule custom");
  return PhaseSchedule::make(kind, parse_angle(phi), parse_angle(omega));
}

std::string schedule_names() { return "oph, spm, acsp, acbp, hidp or custom"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grover search with generalized Householder phases: simulation, robustness fits, "
               "and cross-schedule comparison"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();

  // simulate
  struct {
    int n = 0, m = 1;
    std::string schedule = "oph", phi = "pi", omega = "pi", pairs;
    std::optional<int> iters;
  } sim;
  auto* simulate = app.add_subcommand("simulate", "Success probability after the scheduled iterations");
  simulate->add_option("--n", sim.n, "Register size N")->required();
  simulate->add_option("--m", sim.m, "Number of solutions M");
  simulate->add_option("--schedule", sim.schedule, schedule_names());
  simulate->add_option("--phi", sim.phi, "Oracle phase (radians, or e.g. pi, pi/2, 1.5pi)");
  simulate->add_option("--omega", sim.omega, "Diffusion phase");
  simulate->add_option("--pairs", sim.pairs, "CSV phi,omega per iteration (custom schedule)");
  simulate->add_option("--iters", sim.iters, "Iteration count (default: floor(pi/4 sqrt(N/M)), or the number of pairs)");

  // sweep
  struct {
    int n = 0, m = 1, samples = kDefaultCrossSectionSamples, rows = kDefaultGridSide,
        cols = kDefaultGridSide;
    std::string schedule = "oph", dependence, out = "-";
    bool grid = false;
  } swp;
  auto* sweep = app.add_subcommand("sweep", "Sample p along a cross-section or over the phase grid");
  sweep->add_option("--n", swp.n, "Register size N")->required();
  sweep->add_option("--m", swp.m, "Number of solutions M");
  sweep->add_option("--schedule", swp.schedule, "oph, spm, acsp, acbp or hidp");
  sweep->add_option("--dependence", swp.dependence,
                    "omega-eq-phi, omega-eq-2pi-minus-phi, omega-eq-pi or phi-eq-pi");
  sweep->add_flag("--grid", swp.grid, "Sample the full [0,2pi]^2 grid instead");
  sweep->add_option("--samples", swp.samples, "Points along the cross-section");
  sweep->add_option("--rows", swp.rows, "Grid rows (phi)");
  sweep->add_option("--cols", swp.cols, "Grid columns (omega)");
  sweep->add_option("--out", swp.out, "Output CSV, - for stdout");

  // fit
  struct {
    std::string in, model = "hill", out = "-";
  } fit;
  auto* fitcmd = app.add_subcommand("fit", "Fit a Hill curve to a cross-section, or a secondary model to N,y data");
  fitcmd->add_option("--in", fit.in, "Input CSV (phi,omega,p for hill; N,y otherwise)")->required();
  fitcmd->add_option("--model", fit.model, "hill, sat-exp or logistic-offset");
  fitcmd->add_option("--out", fit.out, "Output JSON, - for stdout");

  // scan
  ScanOptions scan_opts;
  struct {
    std::string schedule = "oph", out;
    std::vector<std::string> dependences;
  } scn;
  auto* scancmd = app.add_subcommand("scan", "Hill fits of every cross-section for a range of N");
  scancmd->add_option("--schedule", scn.schedule, "oph, spm, acsp, acbp or hidp");
  scancmd->add_option("--n-min", scan_opts.n_min, "Smallest register size");
  scancmd->add_option("--n-max", scan_opts.n_max, "Largest register size");
  scancmd->add_option("--m", scan_opts.m, "Number of solutions M");
  scancmd->add_option("--samples", scan_opts.samples, "Points per cross-section");
  scancmd->add_option("--dependence", scn.dependences, "Restrict to these dependences (default: all four)");
  scancmd->add_option("--threads", scan_opts.threads, "Worker threads, 0 = hardware concurrency");
  scancmd->add_option("--out", scn.out, "Output record CSV")->required();

  // report
  struct {
    std::vector<std::string> in;
    int target = 1000, fit_n_min = kSecondaryFitMinN;
    std::string out = "-";
  } rep;
  auto* report = app.add_subcommand("report", "Secondary fits, extrapolation and schedule ranking");
  report->add_option("--in", rep.in, "Record CSV files from scan")->required();
  report->add_option("--extrapolate", rep.target, "Register size to extrapolate to");
  report->add_option("--fit-n-min", rep.fit_n_min, "Smallest N used by the secondary fits");
  report->add_option("--out", rep.out, "Output JSON, - for stdout");

  // verify
  std::vector<std::string> suites;
  VerifyOptions verify_opts;
  auto* verify = app.add_subcommand("verify", "Run the simulator self-checks");
  verify->add_option("--suite", suites, "Suites to run (default: all)")
      ->check(CLI::IsMember(suite_names()));
  verify->add_option("--seed", verify_opts.seed, "Seed for the randomized suites");
  verify->add_flag("--corrupt-minus-kernel", verify_opts.corrupt_minus_kernel,
                   "Negative control: break the Minus kernel in the duality suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*simulate) {
      const ProblemSpec spec = problem_flags(sim.n, sim.m);
      const ScheduleKind kind = schedule_flag(sim.schedule);
      const PhaseSchedule schedule = schedule_from(kind, sim.phi, sim.omega, sim.pairs);
      if (sim.iters && *sim.iters < 0) throw UsageError("--iters must be >= 0");
      std::printf("%.12f\n", run(spec, schedule, sim.iters));
      return 0;
    }

    if (*sweep) {
      const ProblemSpec spec = problem_flags(swp.n, swp.m);
      const ScheduleKind kind = schedule_flag(swp.schedule);
      if (kind == ScheduleKind::Custom) throw UsageError("custom schedules cannot be swept");
      if (swp.grid == !swp.dependence.empty()) {
        throw UsageError("give exactly one of --dependence or --grid");
      }
      const PhaseSchedule schedule = PhaseSchedule::make(kind, kPi, kPi);
      SampleSet set;
      try {
        set = swp.grid ? grid(spec, schedule, swp.rows, swp.cols)
                       : cross_section(spec, schedule, parse_dependence(swp.dependence), swp.samples);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      std::ostringstream os;
      write_samples_csv(os, set);
      emit(swp.out, os.str());
      return 0;
    }

    if (*fitcmd) {
      ModelId model;
      try {
        model = parse_model_id(fit.model);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      auto in = open_in(fit.in);
      FitResult result;
      if (model == ModelId::Hill) {
        result = fit_hill(read_samples_csv(in));
      } else {
        result = fit_secondary(read_series_csv(in), model);
      }
      emit(fit.out, fit_to_json(result));
      return 0;
    }

    if (*scancmd) {
      const ScheduleKind kind = schedule_flag(scn.schedule);
      if (kind == ScheduleKind::Custom) throw UsageError("custom schedules cannot be scanned");
      if (!scn.dependences.empty()) {
        scan_opts.dependences.clear();
        for (const auto& d : scn.dependences) {
          try {
            scan_opts.dependences.push_back(parse_dependence(d));
          } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
          }
        }
      }
      if (scan_opts.n_min < 2 || scan_opts.n_max < scan_opts.n_min || scan_opts.m < 1 ||
          scan_opts.samples < 3) {
        throw UsageError("need 2 <= n-min <= n-max, m >= 1 and samples >= 3");
      }
      const ScanResult result = scan(kind, scan_opts);
      persist(scn.out, result.records);
      long failed = 0;
      for (const auto& r : result.records) failed += r.converged ? 0 : 1;
      std::printf("%zu records, %ld unconverged; k_iter increases at N =", result.records.size(),
                  failed);
      for (int n : result.iteration_steps) std::printf(" %d", n);
      std::printf("\n");
      return 0;
    }

    if (*report) {
      if (rep.target < 2 || rep.fit_n_min < 2) throw UsageError("--extrapolate and --fit-n-min must be >= 2");
      std::vector<RobustnessRecord> records;
      for (const auto& path : rep.in) {
        auto part = load_records(path);
        records.insert(records.end(), part.begin(), part.end());
      }
      emit(rep.out, report_to_json(compare(records, rep.target, rep.fit_n_min)));
      return 0;
    }

    if (*verify) {
      std::vector<SuiteResult> results;
      if (suites.empty()) {
        results = run_all(verify_opts);
      } else {
        for (const auto& s : suites) results.push_back(run_suite(s, verify_opts));
      }
      bool ok = true;
      for (const auto& r : results) {
        std::printf("%-4s %-15s checks=%ld failures=%ld max_error=%.3g tol=%.0e%s%s\n",
                    r.passed() ? "ok" : "FAIL", r.name.c_str(), r.checks, r.failures, r.max_error,
                    r.tolerance, r.note.empty() ? "" : "  ", r.note.c_str());
        ok = ok && r.passed();
      }
      return ok ? 0 : 1;
    }
  } catch (const UsageError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
