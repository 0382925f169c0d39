#include "hgrover/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace hgrover {

using nlohmann::ordered_json;

namespace {

std::runtime_error line_error(std::size_t line, const std::string& what) {
  return std::runtime_error("line " + std::to_string(line) + ": " + what);
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    out.push_back(line.substr(start, comma == std::string_view::npos ? comma : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

template <typename T>
T parse_number(std::string_view field, std::size_t line, const char* column) {
  T value{};
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw line_error(line, std::string("cannot parse ") + column + " from '" + std::string(field) + "'");
  }
  return value;
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

template <typename T>
T json_get(const ordered_json& j, const char* key) {
  if (!j.contains(key)) throw std::runtime_error(std::string("missing key '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("bad value for key '") + key + "': " + e.what());
  }
}

ordered_json fit_object(const FitResult& fit) {
  ordered_json j;
  j["model_id"] = std::string(to_string(fit.model));
  const auto names = parameter_names(fit.model);
  for (std::size_t i = 0; i < names.size(); ++i) {
    j[names[i]] = fit.params(static_cast<Eigen::Index>(i));
  }
  j["sigma"] = fit.sigma;
  j["sse"] = fit.sse;
  j["converged"] = fit.converged;
  j["iterations"] = fit.iterations;
  return j;
}

FitResult fit_from_object(const ordered_json& j) {
  FitResult fit;
  fit.model = parse_model_id(json_get<std::string>(j, "model_id"));
  const auto names = parameter_names(fit.model);
  fit.params.resize(static_cast<Eigen::Index>(names.size()));
  for (std::size_t i = 0; i < names.size(); ++i) {
    fit.params(static_cast<Eigen::Index>(i)) = json_get<double>(j, names[i].c_str());
  }
  fit.sigma = json_get<double>(j, "sigma");
  fit.sse = json_get<double>(j, "sse");
  fit.converged = json_get<bool>(j, "converged");
  fit.iterations = json_get<int>(j, "iterations");
  return fit;
}

ordered_json series_object(const SeriesSummary& s) {
  ordered_json j;
  j["model_id"] = std::string(to_string(s.fit.model));
  j["extrapolated"] = s.extrapolated;
  j["fit"] = fit_object(s.fit);
  j["alternative"] = fit_object(s.alternative);
  return j;
}

SeriesSummary series_from_object(const ordered_json& j) {
  SeriesSummary s;
  s.extrapolated = json_get<double>(j, "extrapolated");
  s.fit = fit_from_object(j.at("fit"));
  s.alternative = fit_from_object(j.at("alternative"));
  return s;
}

ordered_json case_object(const CaseSummary& c) {
  ordered_json j;
  j["dependence"] = std::string(to_string(c.dependence));
  ordered_json cands = ordered_json::array();
  for (Dependence d : c.candidates) cands.push_back(std::string(to_string(d)));
  j["candidates"] = cands;
  j["k"] = series_object(c.k);
  j["b"] = series_object(c.b);
  j["n"] = series_object(c.n);
  return j;
}

CaseSummary case_from_object(const ordered_json& j) {
  CaseSummary c;
  c.dependence = parse_dependence(json_get<std::string>(j, "dependence"));
  for (const auto& d : j.at("candidates")) c.candidates.push_back(parse_dependence(d.get<std::string>()));
  c.k = series_from_object(j.at("k"));
  c.b = series_from_object(j.at("b"));
  c.n = series_from_object(j.at("n"));
  return c;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json parse_json(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

std::string fit_to_json(const FitResult& fit) { return dump(fit_object(fit)); }

FitResult fit_from_json(const std::string& text) { return fit_from_object(parse_json(text)); }

void write_records_csv(std::ostream& out, const std::vector<RobustnessRecord>& records) {
  out << "N,M,schedule,dependence,k_iter,b,k,n,c,sigma,converged\n";
  for (const auto& r : records) {
    out << r.N << ',' << r.M << ',' << to_string(r.schedule) << ',' << to_string(r.dependence)
        << ',' << r.k_iter << ',' << format_double(r.b) << ',' << format_double(r.k) << ','
        << format_double(r.n) << ',' << format_double(r.c) << ',' << format_double(r.sigma)
        << ',' << (r.converged ? 1 : 0) << '\n';
  }
}

std::vector<RobustnessRecord> read_records_csv(std::istream& in) {
  static constexpr std::string_view kHeader = "N,M,schedule,dependence,k_iter,b,k,n,c,sigma,converged";
  std::string line;
  if (!std::getline(in, line)) throw line_error(1, "missing header");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kHeader) throw line_error(1, "expected header '" + std::string(kHeader) + "'");

  std::vector<RobustnessRecord> out;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto f = split_fields(line);
    if (f.size() != 11) {
      throw line_error(lineno, "expected 11 fields, found " + std::to_string(f.size()));
    }
    RobustnessRecord r;
    r.N = parse_number<int>(f[0], lineno, "N");
    r.M = parse_number<int>(f[1], lineno, "M");
    try {
      r.schedule = parse_schedule_kind(f[2]);
      r.dependence = parse_dependence(f[3]);
    } catch (const std::invalid_argument& e) {
      throw line_error(lineno, e.what());
    }
    r.k_iter = parse_number<int>(f[4], lineno, "k_iter");
    r.b = parse_number<double>(f[5], lineno, "b");
    r.k = parse_number<double>(f[6], lineno, "k");
    r.n = parse_number<double>(f[7], lineno, "n");
    r.c = parse_number<double>(f[8], lineno, "c");
    r.sigma = parse_number<double>(f[9], lineno, "sigma");
    const int conv = parse_number<int>(f[10], lineno, "converged");
    if (conv != 0 && conv != 1) throw line_error(lineno, "converged must be 0 or 1");
    r.converged = conv == 1;
    out.push_back(r);
  }
  return out;
}

std::string report_to_json(const ComparisonReport& report) {
  ordered_json j;
  j["target_n"] = report.target_n;
  j["fit_n_min"] = report.fit_n_min;
  ordered_json schedules = ordered_json::array();
  for (const auto& s : report.schedules) {
    ordered_json o;
    o["schedule"] = std::string(to_string(s.schedule));
    o["best"] = case_object(s.best);
    o["worst"] = case_object(s.worst);
    schedules.push_back(o);
  }
  j["schedules"] = schedules;
  auto names = [](const std::vector<ScheduleKind>& v) {
    ordered_json a = ordered_json::array();
    for (ScheduleKind k : v) a.push_back(std::string(to_string(k)));
    return a;
  };
  j["ranking_best"] = names(report.ranking_best);
  j["ranking_worst"] = names(report.ranking_worst);
  return dump(j);
}

ComparisonReport report_from_json(const std::string& text) {
  const ordered_json j = parse_json(text);
  ComparisonReport r;
  r.target_n = json_get<int>(j, "target_n");
  r.fit_n_min = json_get<int>(j, "fit_n_min");
  for (const auto& o : j.at("schedules")) {
    ScheduleSummary s;
    s.schedule = parse_schedule_kind(json_get<std::string>(o, "schedule"));
    s.best = case_from_object(o.at("best"));
    s.worst = case_from_object(o.at("worst"));
    r.schedules.push_back(std::move(s));
  }
  for (const auto& k : j.at("ranking_best")) r.ranking_best.push_back(parse_schedule_kind(k.get<std::string>()));
  for (const auto& k : j.at("ranking_worst")) r.ranking_worst.push_back(parse_schedule_kind(k.get<std::string>()));
  return r;
}

std::vector<PhasePair> read_phase_pairs_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw line_error(1, "missing header");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "phi,omega") throw line_error(1, "expected header 'phi,omega'");
  std::vector<PhasePair> pairs;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto f = split_fields(line);
    if (f.size() != 2) throw line_error(lineno, "expected 2 fields");
    pairs.push_back({parse_number<double>(f[0], lineno, "phi"),
                     parse_number<double>(f[1], lineno, "omega")});
  }
  return pairs;
}

std::vector<SeriesPoint> read_series_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw line_error(1, "missing header");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "N,y") throw line_error(1, "expected header 'N,y'");
  std::vector<SeriesPoint> series;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto f = split_fields(line);
    if (f.size() != 2) throw line_error(lineno, "expected 2 fields");
    series.push_back({parse_number<int>(f[0], lineno, "N"), parse_number<double>(f[1], lineno, "y")});
  }
  return series;
}

namespace {

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  return out;
}

}  // namespace

void persist(const std::filesystem::path& path, const std::vector<RobustnessRecord>& records) {
  auto out = open_out(path);
  write_records_csv(out, records);
  if (!out) throw std::runtime_error("write to '" + path.string() + "' failed");
}

void persist(const std::filesystem::path& path, const ComparisonReport& report) {
  auto out = open_out(path);
  out << report_to_json(report);
  if (!out) throw std::runtime_error("write to '" + path.string() + "' failed");
}

std::vector<RobustnessRecord> load_records(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "' for reading");
  try {
    return read_records_csv(in);
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

ComparisonReport load_report(const std::filesystem::path& path) {
  return report_from_json(slurp(path));
}

}  // namespace hgrover
