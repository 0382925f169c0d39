#include "hgrover/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "hgrover/grover.hpp"

namespace hgrover {

PhasePair phases_on_line(Dependence dep, double x) {
  switch (dep) {
    case Dependence::OmegaEqPhi: return {x, x};
    case Dependence::OmegaEqTwoPiMinusPhi: return {x, kTwoPi - x};
    case Dependence::OmegaEqPi: return {x, kPi};
    case Dependence::PhiEqPi: return {kPi, x};
  }
  throw std::logic_error("unknown dependence");
}

std::string_view to_string(Dependence dep) {
  switch (dep) {
    case Dependence::OmegaEqPhi: return "omega-eq-phi";
    case Dependence::OmegaEqTwoPiMinusPhi: return "omega-eq-2pi-minus-phi";
    case Dependence::OmegaEqPi: return "omega-eq-pi";
    case Dependence::PhiEqPi: return "phi-eq-pi";
  }
  return "?";
}

Dependence parse_dependence(std::string_view name) {
  for (Dependence d : kAllDependences) {
    if (name == to_string(d)) return d;
  }
  throw std::invalid_argument("unknown dependence '" + std::string(name) +
                              "' (expected omega-eq-phi, omega-eq-2pi-minus-phi, "
                              "omega-eq-pi or phi-eq-pi)");
}

namespace {

double uniform_node(int i, int count) {
  // Exact endpoints so that periodicity checks compare p(0) with p(2pi).
  if (i == count - 1) return kTwoPi;
  return kTwoPi * static_cast<double>(i) / static_cast<double>(count - 1);
}

}  // namespace

SampleSet cross_section(const ProblemSpec& spec, const PhaseSchedule& schedule, Dependence dep,
                        int samples) {
  if (samples < 3) throw std::invalid_argument("a cross-section needs at least 3 samples");
  const int k = optimal_iterations(spec);
  SampleSet out;
  out.spec = spec;
  out.schedule = schedule.kind;
  out.dependence = dep;
  out.rows = samples;
  out.cols = 1;
  out.points.reserve(static_cast<std::size_t>(samples));
  PhaseSchedule s = schedule;
  for (int i = 0; i < samples; ++i) {
    const PhasePair pp = phases_on_line(dep, uniform_node(i, samples));
    s.base_phi = pp.phi;
    s.base_omega = pp.omega;
    out.points.push_back({pp.phi, pp.omega, run(spec, s, k)});
  }
  return out;
}

SampleSet grid(const ProblemSpec& spec, const PhaseSchedule& schedule, int rows, int cols) {
  if (rows < 2 || cols < 2) throw std::invalid_argument("grid needs at least 2 rows and columns");
  const int k = optimal_iterations(spec);
  SampleSet out;
  out.spec = spec;
  out.schedule = schedule.kind;
  out.rows = rows;
  out.cols = cols;
  out.points.reserve(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
  PhaseSchedule s = schedule;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      s.base_phi = uniform_node(r, rows);
      s.base_omega = uniform_node(c, cols);
      out.points.push_back({s.base_phi, s.base_omega, run(spec, s, k)});
    }
  }
  return out;
}

std::vector<double> sweep_axis(const SampleSet& samples) {
  bool use_omega = samples.dependence == Dependence::PhiEqPi;
  if (!samples.dependence && !samples.points.empty()) {
    const double first = samples.points.front().phi;
    use_omega = std::all_of(samples.points.begin(), samples.points.end(),
                            [&](const SamplePoint& p) { return p.phi == first; });
  }
  std::vector<double> x;
  x.reserve(samples.points.size());
  for (const auto& p : samples.points) x.push_back(use_omega ? p.omega : p.phi);
  return x;
}

std::vector<double> probabilities(const SampleSet& samples) {
  std::vector<double> p;
  p.reserve(samples.points.size());
  for (const auto& s : samples.points) p.push_back(s.p);
  return p;
}

double robustness_interval(const SampleSet& samples, double delta) {
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("delta must lie in (0, 1)");
  if (samples.points.size() < 2) throw std::invalid_argument("need at least two samples");
  if (samples.cols > 1 && samples.rows > 1) {
    throw std::invalid_argument("robustness interval needs a one-dimensional sample set");
  }
  const std::vector<double> x = sweep_axis(samples);
  const std::vector<double> p = probabilities(samples);
  const auto [lo_it, hi_it] = std::minmax_element(x.begin(), x.end());
  const double half_range = 0.5 * (*hi_it - *lo_it);

  const std::size_t arg = static_cast<std::size_t>(std::max_element(p.begin(), p.end()) - p.begin());
  const double peak = p[arg];
  const double flat_tol = 1e-12 * std::max(1.0, std::abs(peak));
  std::size_t first = arg;
  std::size_t last = arg;
  while (first > 0 && peak - p[first - 1] <= flat_tol) --first;
  while (last + 1 < p.size() && peak - p[last + 1] <= flat_tol) ++last;
  const double centre = 0.5 * (x[first] + x[last]);

  const double threshold = (1.0 - delta) * peak;
  double fail_distance = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < threshold) fail_distance = std::min(fail_distance, std::abs(x[i] - centre));
  }
  if (!std::isfinite(fail_distance)) return half_range;
  double eps = 0.0;
  for (double xi : x) {
    const double d = std::abs(xi - centre);
    if (d < fail_distance) eps = std::max(eps, d);
  }
  return eps;
}

void write_samples_csv(std::ostream& out, const SampleSet& samples) {
  out << "phi,omega,p\n";
  char buf[96];
  for (const auto& s : samples.points) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", s.phi, s.omega, s.p);
    out << buf;
  }
}

namespace {

double parse_double_field(std::string_view field, std::size_t line) {
  double value = 0.0;
  const char* begin = field.data();
  const char* end = field.data() + field.size();
  while (begin < end && *begin == ' ') ++begin;
  while (end > begin && (end[-1] == ' ' || end[-1] == '\r')) --end;
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    throw std::runtime_error("line " + std::to_string(line) + ": cannot parse number '" +
                             std::string(field) + "'");
  }
  return value;
}

}  // namespace

SampleSet read_samples_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("line 1: missing header");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "phi,omega,p") {
    throw std::runtime_error("line 1: expected header 'phi,omega,p', got '" + line + "'");
  }
  SampleSet out;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    std::string_view v(line);
    const auto c1 = v.find(',');
    const auto c2 = c1 == std::string_view::npos ? c1 : v.find(',', c1 + 1);
    if (c2 == std::string_view::npos || v.find(',', c2 + 1) != std::string_view::npos) {
      throw std::runtime_error("line " + std::to_string(lineno) + ": expected 3 fields");
    }
    out.points.push_back({parse_double_field(v.substr(0, c1), lineno),
                          parse_double_field(v.substr(c1 + 1, c2 - c1 - 1), lineno),
                          parse_double_field(v.substr(c2 + 1), lineno)});
  }
  out.rows = static_cast<int>(out.points.size());
  out.cols = 1;
  return out;
}

}  // namespace hgrover
