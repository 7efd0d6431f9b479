#pragma once

#include <string>
#include <vector>

#include "hgbps/numeric.hpp"

namespace hgbps {

struct CriterionResult {
  int id;
  std::string name;
  bool pass;
  double worst;      // worst observed residual / deviation
  double tolerance;  // pinned acceptance tolerance
  std::string details;
  double seconds;
};

struct ReportOptions {
  std::uint64_t seed = 20240817u;
  std::string curve_filter;  // run only this curve's sections when set
  std::string out_dir = ".";
  bool write_files = true;
};

// Runs the full acceptance matrix (criteria 1-11).
std::vector<CriterionResult> run_acceptance(const ReportOptions& opt);

// Serializes results + plot CSV bundle (report.json, rays.csv,
// borel_residuals.csv, tau_fits.csv) into opt.out_dir.
void write_report_files(const ReportOptions& opt, const std::vector<CriterionResult>& results);

}  // namespace hgbps
