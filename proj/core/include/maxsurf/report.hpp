#pragma once

#include <string>
#include <utility>
#include <vector>

namespace maxsurf {

/// One verification check: pass iff max_residual <= tolerance.
struct CheckRow {
  std::string name;
  double max_residual = 0.0;
  double tolerance = 0.0;
  long samples = 0;

  bool pass() const { return max_residual <= tolerance; }
};

/// Ordered metadata + check rows; serialized by export_report with stable
/// field ordering (deterministic bytes for identical inputs).
struct VerificationReport {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<CheckRow> rows;

  void add_meta(std::string key, std::string value);
  void add_row(std::string name, double max_residual, double tolerance, long samples);
  bool overall_pass() const;
};

/// Render as key-value text. Throws std::invalid_argument if there are no
/// check rows (a report that verified nothing is a caller bug).
std::string export_report(const VerificationReport& report);

}  // namespace maxsurf
