#include "heawood/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace heawood {

RunMode parse_run_mode(const std::string& text) {
  if (text == "serial") return RunMode::serial;
  if (text == "parallel") return RunMode::parallel;
  throw std::invalid_argument("run mode must be \"serial\" or \"parallel\", got \"" +
                              text + "\"");
}

std::string to_string(RunMode mode) {
  return mode == RunMode::serial ? "serial" : "parallel";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::exempt: return "exempt";
    case Verdict::fail: return "fail";
  }
  return "?";
}

long long RunReport::count(Verdict v) const {
  long long total = 0;
  for (const auto& check : checks) total += check.verdict == v;
  return total;
}

void RunReport::finalize() {
  std::stable_sort(checks.begin(), checks.end(),
                   [](const CheckVerdict& a, const CheckVerdict& b) {
                     return a.key < b.key;
                   });
}

std::string report_to_text(const RunReport& report, bool show_all) {
  std::ostringstream out;
  out << "command: " << report.command << '\n';
  for (const auto& [name, value] : report.params)
    out << "  " << name << ": " << value << '\n';
  for (const auto& check : report.checks) {
    if (!show_all && check.verdict == Verdict::pass) continue;
    out << to_string(check.verdict) << "  " << check.key << "  "
        << check.claim;
    if (!check.detail.empty()) out << ": " << check.detail;
    out << '\n';
  }
  out << "checks: " << report.checks.size()
      << "  pass: " << report.count(Verdict::pass)
      << "  exempt: " << report.count(Verdict::exempt)
      << "  fail: " << report.count(Verdict::fail) << '\n';
  char wall[32];
  std::snprintf(wall, sizeof wall, "%.2f", report.wall_seconds);
  out << "wall: " << wall << " s\n";
  out << "result: " << (report.all_pass() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

std::string report_to_json(const RunReport& report) {
  nlohmann::ordered_json doc;
  doc["format_version"] = RunReport::kFormatVersion;
  doc["command"] = report.command;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [name, value] : report.params) params[name] = value;
  doc["params"] = std::move(params);
  doc["summary"] = {{"checks", report.checks.size()},
                    {"pass", report.count(Verdict::pass)},
                    {"exempt", report.count(Verdict::exempt)},
                    {"fail", report.count(Verdict::fail)}};
  doc["wall_seconds"] = report.wall_seconds;
  doc["result"] = report.all_pass() ? "pass" : "fail";
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& check : report.checks)
    checks.push_back({{"key", check.key},
                      {"verdict", to_string(check.verdict)},
                      {"claim", check.claim},
                      {"detail", check.detail}});
  doc["checks"] = std::move(checks);
  return doc.dump(2) + "\n";
}

}  // namespace heawood
