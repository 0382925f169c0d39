#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "hgrover/hill.hpp"
#include "hgrover/pipeline.hpp"
#include "hgrover/schedule.hpp"

namespace hgrover {

// File formats. Numbers are written with 17 significant digits so that a
// write/read cycle reproduces every double exactly. Parse errors throw
// std::runtime_error with the line (CSV) or key (JSON) at fault.

/// Flat JSON object: model_id, one key per parameter, sigma, sse,
/// converged, iterations.
std::string fit_to_json(const FitResult& fit);
FitResult fit_from_json(const std::string& text);

/// Header N,M,schedule,dependence,k_iter,b,k,n,c,sigma,converged.
void write_records_csv(std::ostream& out, const std::vector<RobustnessRecord>& records);
std::vector<RobustnessRecord> read_records_csv(std::istream& in);

std::string report_to_json(const ComparisonReport& report);
ComparisonReport report_from_json(const std::string& text);

/// CSV with header phi,omega; one row per iteration.
std::vector<PhasePair> read_phase_pairs_csv(std::istream& in);

/// CSV with header N,y; input of the secondary fits.
std::vector<SeriesPoint> read_series_csv(std::istream& in);

void persist(const std::filesystem::path& path, const std::vector<RobustnessRecord>& records);
void persist(const std::filesystem::path& path, const ComparisonReport& report);
std::vector<RobustnessRecord> load_records(const std::filesystem::path& path);
ComparisonReport load_report(const std::filesystem::path& path);

}  // namespace hgrover
