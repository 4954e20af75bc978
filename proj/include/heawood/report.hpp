#pragma once

#include <string>
#include <utility>
#include <vector>

// Structured results of verification runs: one verdict per checked
// instance, each carrying enough detail to re-check it without rerunning
// the sweep, plus the run's parameters and wall-clock time.

namespace heawood {

// Execution strategy for sweeps whose instances are independent. Parallel
// runs fan instances out across OpenMP workers and must produce the same
// report as serial (checks are written to preassigned slots, then sorted by
// key, so assembly order cannot leak in).
enum class RunMode { serial, parallel };

RunMode parse_run_mode(const std::string& text);  // "serial" | "parallel"
std::string to_string(RunMode mode);

enum class Verdict {
  pass,    // claim checked and true; detail holds the certificate
  exempt,  // instance excused by the claim's own exception clause
  fail,    // claim violated; detail holds the counterexample witness
};

std::string to_string(Verdict v);

struct CheckVerdict {
  std::string key;     // instance identifier; reports are sorted by it
  Verdict verdict = Verdict::pass;
  std::string claim;   // what was asserted for this instance
  std::string detail;  // certificate, witness, or margin; self-contained
};

struct RunReport {
  static constexpr int kFormatVersion = 1;

  std::string command;  // verb plus arguments, echoed
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<CheckVerdict> checks;  // sorted by key
  double wall_seconds = 0.0;

  long long count(Verdict v) const;
  // No failed checks (exempt instances count as passes for exit codes).
  bool all_pass() const { return count(Verdict::fail) == 0; }
  // Sorts checks by key; call once after assembly.
  void finalize();
};

// Human-readable rendering: command, parameters, every non-pass check (all
// checks when show_all), a summary count line, and the overall result.
std::string report_to_text(const RunReport& report, bool show_all = false);

// Machine-readable rendering with every check included.
std::string report_to_json(const RunReport& report);

}  // namespace heawood
