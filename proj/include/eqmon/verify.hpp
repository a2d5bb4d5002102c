#ifndef EQMON_VERIFY_HPP
#define EQMON_VERIFY_HPP

#include <functional>
#include <optional>

#include "eqmon/monoid.hpp"
#include "eqmon/report.hpp"

namespace eqmon {

struct VerifyOptions {
  size_t n = 2;
  bool full = false;  // adds the big-family isoterm sweep and the n=3 rewrite sweep
  /// Test hook: overrides the built-in Brandt monoid.
  std::optional<FiniteMonoid> b21_override;
};

/// Runs the acceptance criteria and returns one record per criterion.
Report verify_all(const VerifyOptions& options = {});

}  // namespace eqmon

#endif  // EQMON_VERIFY_HPP
