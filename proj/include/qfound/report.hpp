// report.hpp
// Machine-readable experiment reports: named result rows carrying computed
// values, optional analytic references with tolerances and pass/fail flags,
// emitted as JSON or CSV with 10-significant-digit floats.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace qfound::report {

struct ResultRow {
  std::string name;
  double computed = 0.0;
  std::optional<double> analytic;
  std::optional<double> tolerance;
  std::optional<bool> pass;
  std::string note;
};

// Row whose pass flag is |computed - analytic| <= tolerance.
ResultRow checked_row(std::string name, double analytic, double computed, double tolerance,
                      std::string note = "");

// Informational row with no pass criterion.
ResultRow info_row(std::string name, double computed, std::string note = "");

// Boolean claim: analytic 1, computed 1/0.
ResultRow flag_row(std::string name, bool expected, bool computed, std::string note = "");

struct Report {
  std::string experiment;
  nlohmann::ordered_json parameters;
  std::vector<ResultRow> rows;
  double duration_ms = 0.0;

  void add(ResultRow row) { rows.push_back(std::move(row)); }
  bool all_pass() const;
};

// Round to 10 significant digits (display precision for every float in the
// emitted report).
double round_sig10(double x);

std::string emit_json(const Report& r);
std::string emit_csv(const Report& r);
std::string emit(const Report& r, const std::string& format);  // "json" | "csv"

}  // namespace qfound::report
