#include "qfound/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace qfound::report {

ResultRow checked_row(std::string name, double analytic, double computed, double tolerance,
                      std::string note) {
  ResultRow row;
  row.name = std::move(name);
  row.analytic = analytic;
  row.computed = computed;
  row.tolerance = tolerance;
  row.pass = std::abs(computed - analytic) <= tolerance;
  row.note = std::move(note);
  return row;
}

ResultRow info_row(std::string name, double computed, std::string note) {
  ResultRow row;
  row.name = std::move(name);
  row.computed = computed;
  row.note = std::move(note);
  return row;
}

ResultRow flag_row(std::string name, bool expected, bool computed, std::string note) {
  return checked_row(std::move(name), expected ? 1.0 : 0.0, computed ? 1.0 : 0.0, 0.5,
                     std::move(note));
}

bool Report::all_pass() const {
  for (const ResultRow& row : rows)
    if (row.pass.has_value() && !*row.pass) return false;
  return true;
}

double round_sig10(double x) {
  if (!std::isfinite(x) || x == 0.0) return x;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", x);
  return std::strtod(buf, nullptr);
}

namespace {

nlohmann::ordered_json row_to_json(const ResultRow& row) {
  nlohmann::ordered_json j;
  j["name"] = row.name;
  if (row.analytic.has_value()) j["analytic"] = round_sig10(*row.analytic);
  j["computed"] = round_sig10(row.computed);
  if (row.tolerance.has_value()) j["tolerance"] = round_sig10(*row.tolerance);
  if (row.pass.has_value()) j["pass"] = *row.pass;
  if (!row.note.empty()) j["note"] = row.note;
  return j;
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", x);
  return buf;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string emit_json(const Report& r) {
  nlohmann::ordered_json j;
  j["experiment"] = r.experiment;
  j["parameters"] = r.parameters;
  j["rows"] = nlohmann::ordered_json::array();
  for (const ResultRow& row : r.rows) j["rows"].push_back(row_to_json(row));
  j["all_pass"] = r.all_pass();
  j["duration_ms"] = round_sig10(r.duration_ms);
  return j.dump(2) + "\n";
}

std::string emit_csv(const Report& r) {
  std::ostringstream out;
  out << "name,analytic,computed,tolerance,pass,note\n";
  for (const ResultRow& row : r.rows) {
    out << csv_escape(row.name) << ',';
    if (row.analytic.has_value()) out << format_double(*row.analytic);
    out << ',' << format_double(row.computed) << ',';
    if (row.tolerance.has_value()) out << format_double(*row.tolerance);
    out << ',';
    if (row.pass.has_value()) out << (*row.pass ? "pass" : "fail");
    out << ',' << csv_escape(row.note) << '\n';
  }
  return out.str();
}

std::string emit(const Report& r, const std::string& format) {
  if (format == "json") return emit_json(r);
  if (format == "csv") return emit_csv(r);
  throw std::invalid_argument("emit: unknown format '" + format + "'");
}

}  // namespace qfound::report
