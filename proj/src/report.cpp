#include "eqmon/report.hpp"

#include <sstream>

#include "json.hpp"

namespace eqmon {

bool Report::overall_pass() const {
  for (const CheckRecord& c : checks) {
    if (c.status == "fail") return false;
  }
  return true;
}

std::string Report::json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  nlohmann::ordered_json p = nlohmann::ordered_json::object();
  for (const auto& [k, v] : params) p[k] = v;
  j["params"] = p;
  auto arr = nlohmann::ordered_json::array();
  for (const CheckRecord& c : checks) {
    nlohmann::ordered_json rec;
    rec["name"] = c.name;
    rec["status"] = c.status;
    nlohmann::ordered_json counts = nlohmann::ordered_json::object();
    for (const auto& [k, v] : c.counts) counts[k] = v;
    rec["counts"] = counts;
    if (!c.witness.empty()) rec["witness"] = c.witness;
    rec["elapsed_ms"] = c.elapsed_ms;
    arr.push_back(rec);
  }
  j["checks"] = arr;
  j["overall"] = overall_pass() ? "pass" : "fail";
  return j.dump(2);
}

std::string Report::text() const {
  std::ostringstream os;
  for (const CheckRecord& c : checks) {
    os << (c.status == "pass" ? "PASS" : c.status == "fail" ? "FAIL" : "NO-WITHIN-CAPS");
    os << "  " << c.name;
    if (!c.counts.empty()) {
      os << "  [";
      bool first = true;
      for (const auto& [k, v] : c.counts) {
        if (!first) os << ", ";
        first = false;
        os << k << "=" << v;
      }
      os << "]";
    }
    if (!c.witness.empty()) os << "  witness: " << c.witness;
    os << "  (" << c.elapsed_ms << " ms)\n";
  }
  os << (overall_pass() ? "OVERALL PASS" : "OVERALL FAIL") << "\n";
  return os.str();
}

}  // namespace eqmon
