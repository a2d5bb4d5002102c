#ifndef EQMON_MONITORS_HPP
#define EQMON_MONITORS_HPP

#include <string>
#include <vector>

#include "eqmon/rewrite.hpp"

namespace eqmon {

/// Bounds for the exhaustive lemma monitors.  Each monitor enumerates a
/// finite surgery schema over the family words (insertions of one or two
/// fresh twice-occurring variables or one fresh simple variable at the
/// positions its lemma quantifies over) and runs every one-step rewrite
/// under the all-pairs identity set; the notes of each report state the
/// exact instance space.  Strides subsample insertion positions; stride 1
/// is the full space.
struct MonitorParams {
  size_t n = 2;
  bool all_zeta = true;      // every family word as the base, else only the first
  size_t site_stride = 1;    // between insertion sites
  size_t slot_stride = 1;    // between partner-occurrence slots
  size_t max_instances = 100000;
  RewriteLimits limits;
};

struct MonitorViolation {
  std::string instance;
  std::string detail;
};

struct MonitorReport {
  std::string name;
  size_t n = 2;
  size_t instances = 0;   // hypothesis words generated
  size_t checks = 0;      // one-step conclusions tested
  std::vector<MonitorViolation> violations;
  long long elapsed_ms = 0;
  std::string notes;

  bool passed() const { return violations.empty(); }
};

std::vector<std::string> monitor_names();

/// Runs one monitor by name: directly, fic_class, three_isoterms, u_C,
/// u_ch, adj_2x2c2y, adj_1x1c1y, cor_ix1hiy, adj_2c1c2, adj_1c1c2.
MonitorReport monitor_lemma(const std::string& name, const MonitorParams& params = {});

}  // namespace eqmon

#endif  // EQMON_MONITORS_HPP
