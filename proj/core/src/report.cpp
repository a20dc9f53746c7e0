#include "maxsurf/report.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace maxsurf {

namespace {

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

void VerificationReport::add_meta(std::string key, std::string value) {
  metadata.emplace_back(std::move(key), std::move(value));
}

void VerificationReport::add_row(std::string name, double max_residual, double tolerance,
                                 long samples) {
  rows.push_back(CheckRow{std::move(name), max_residual, tolerance, samples});
}

bool VerificationReport::overall_pass() const {
  for (const auto& r : rows)
    if (!r.pass()) return false;
  return true;
}

std::string export_report(const VerificationReport& report) {
  if (report.rows.empty())
    throw std::invalid_argument("a verification report needs at least one check row");
  std::ostringstream out;
  out << "# maxsurf verification report\n";
  for (const auto& [k, v] : report.metadata) out << "meta " << k << " = " << v << "\n";
  for (const auto& r : report.rows) {
    out << "check " << r.name << " max_residual=" << fmt17(r.max_residual)
        << " tolerance=" << fmt17(r.tolerance) << " samples=" << r.samples
        << " status=" << (r.pass() ? "pass" : "FAIL") << "\n";
  }
  out << "overall = " << (report.overall_pass() ? "pass" : "FAIL") << "\n";
  return out.str();
}

}  // namespace maxsurf
