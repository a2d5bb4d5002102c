#ifndef EQMON_REPORT_HPP
#define EQMON_REPORT_HPP

#include <map>
#include <string>
#include <vector>

namespace eqmon {

/// One verification record: a named check with pass/fail/no-within-caps
/// status, counters, and an optional witness string.
struct CheckRecord {
  std::string name;
  std::string status;  // "pass", "fail", "no-within-caps"
  std::map<std::string, long long> counts;
  std::string witness;
  long long elapsed_ms = 0;

  bool passed() const { return status == "pass"; }
};

struct Report {
  std::string command;
  std::map<std::string, std::string> params;
  std::vector<CheckRecord> checks;

  bool overall_pass() const;
  std::string json() const;  // deterministic key order; elapsed_ms included
  std::string text() const;  // one line per check
};

}  // namespace eqmon

#endif  // EQMON_REPORT_HPP
