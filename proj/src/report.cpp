#include "degbound/report.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "degbound/errors.hpp"

namespace degbound {

namespace {

nlohmann::json value_to_json(const ReportValue& v) {
  nlohmann::json j;
  if (const auto* q = std::get_if<Rational>(&v.value)) {
    j["type"] = "rational";
    j["value"] = rational_to_string(*q);
    j["decimal"] = rational_to_decimal(*q);
  } else if (const auto* z = std::get_if<BigInt>(&v.value)) {
    j["type"] = "integer";
    j["value"] = z->get_str();
  } else if (const auto* x = std::get_if<double>(&v.value)) {
    j["type"] = "real";
    std::ostringstream os;
    os << std::setprecision(17) << *x;
    j["value"] = os.str();
  } else if (const auto* s = std::get_if<std::string>(&v.value)) {
    j["type"] = "text";
    j["value"] = *s;
  } else {
    j["type"] = "flag";
    j["value"] = std::get<bool>(v.value);
  }
  return j;
}

ReportValue value_from_json(const nlohmann::json& j) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "rational") return ReportValue::rational(rational_from_string(j.at("value").get<std::string>()));
  if (type == "integer") return ReportValue::integer(BigInt(j.at("value").get<std::string>()));
  if (type == "real") return ReportValue::real(std::stod(j.at("value").get<std::string>()));
  if (type == "text") return ReportValue::text(j.at("value").get<std::string>());
  if (type == "flag") return ReportValue::boolean(j.at("value").get<bool>());
  fail(ErrorKind::parse_error, "unknown report value type '" + type + "'");
}

std::string value_to_display(const ReportValue& v) {
  if (const auto* q = std::get_if<Rational>(&v.value))
    return rational_to_string(*q) + " (" + rational_to_decimal(*q) + ")";
  if (const auto* z = std::get_if<BigInt>(&v.value)) return z->get_str();
  if (const auto* x = std::get_if<double>(&v.value)) {
    std::ostringstream os;
    os << std::setprecision(12) << *x;
    return os.str();
  }
  if (const auto* s = std::get_if<std::string>(&v.value)) return *s;
  return std::get<bool>(v.value) ? "yes" : "no";
}

}  // namespace

nlohmann::json report_to_json(const Report& report) {
  nlohmann::json j;
  j["command"] = report.command;
  j["instance"] = report.instance;
  j["results"] = nlohmann::json::array();
  for (const auto& [key, value] : report.results) {
    nlohmann::json entry = value_to_json(value);
    entry["key"] = key;
    j["results"].push_back(std::move(entry));
  }
  j["flags"] = nlohmann::json::array();
  for (const auto& [key, value] : report.flags)
    j["flags"].push_back(nlohmann::json{{"key", key}, {"value", value}});
  j["elapsed_seconds"] = report.elapsed_seconds;
  return j;
}

Report report_from_json(const nlohmann::json& j) {
  Report report;
  report.command = j.at("command").get<std::string>();
  report.instance = j.at("instance").get<std::string>();
  for (const auto& entry : j.at("results"))
    report.results.emplace_back(entry.at("key").get<std::string>(), value_from_json(entry));
  for (const auto& entry : j.at("flags"))
    report.flags.emplace_back(entry.at("key").get<std::string>(), entry.at("value").get<std::string>());
  report.elapsed_seconds = j.value("elapsed_seconds", 0.0);
  return report;
}

void print_report_text(std::ostream& os, const Report& report) {
  os << "command:  " << report.command << "\n";
  os << "instance: " << report.instance << "\n";
  std::size_t width = 0;
  for (const auto& [key, value] : report.results) width = std::max(width, key.size());
  for (const auto& [key, value] : report.results)
    os << "  " << std::left << std::setw(static_cast<int>(width) + 2) << key << value_to_display(value)
       << "\n";
  for (const auto& [key, value] : report.flags) os << "  [" << key << "] " << value << "\n";
  os << std::setprecision(3) << "elapsed:  " << report.elapsed_seconds << "s\n";
}

void print_report_json(std::ostream& os, const Report& report) {
  os << report_to_json(report).dump(2) << "\n";
}

bool reports_equivalent(const Report& a, const Report& b) {
  if (a.command != b.command || a.instance != b.instance) return false;
  if (a.results.size() != b.results.size() || a.flags != b.flags) return false;
  for (std::size_t i = 0; i < a.results.size(); ++i) {
    if (a.results[i].first != b.results[i].first) return false;
    const auto& va = a.results[i].second.value;
    const auto& vb = b.results[i].second.value;
    if (va.index() != vb.index()) return false;
    bool same = true;
    std::visit(
        [&](const auto& x) {
          using T = std::decay_t<decltype(x)>;
          same = x == std::get<T>(vb);
        },
        va);
    if (!same) return false;
  }
  return true;
}

}  // namespace degbound
