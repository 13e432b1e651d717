#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "degbound/rational.hpp"

namespace degbound {

// One keyed result in a report. Rationals serialize as "num/den" strings so
// exactness survives the machine-readable format.
struct ReportValue {
  std::variant<Rational, BigInt, double, std::string, bool> value;

  static ReportValue rational(Rational q) { return {std::move(q)}; }
  static ReportValue integer(BigInt z) { return {std::move(z)}; }
  static ReportValue real(double x) { return {x}; }
  static ReportValue text(std::string s) { return {std::move(s)}; }
  static ReportValue boolean(bool b) { return {b}; }
};

struct Report {
  std::string command;   // echo of the invocation
  std::string instance;  // one-line instance summary
  std::vector<std::pair<std::string, ReportValue>> results;
  std::vector<std::pair<std::string, std::string>> flags;
  double elapsed_seconds = 0;

  void add(const std::string& key, ReportValue v) { results.emplace_back(key, std::move(v)); }
  void flag(const std::string& key, const std::string& v) { flags.emplace_back(key, v); }
};

nlohmann::json report_to_json(const Report& report);
Report report_from_json(const nlohmann::json& j);

void print_report_text(std::ostream& os, const Report& report);
void print_report_json(std::ostream& os, const Report& report);

// Field-wise equality ignoring timings; rational fields compare exactly.
bool reports_equivalent(const Report& a, const Report& b);

}  // namespace degbound
