#pragma once

#include <string>
#include <vector>

#include "coeffcat/check.hpp"
#include "coeffcat/harness/instance.hpp"

namespace coeffcat {

struct TimedCheck {
  CheckResult result;
  /// Wall time of the step that produced the check; steps can produce several.
  double ms = 0;
};

/// In report order.
const std::vector<std::string>& suiteNames();
bool isSuite(const std::string& name);

/// Runs one suite. Exceptions thrown by a step become failing checks named
/// after the step; nothing escapes except std::bad_alloc and the like.
std::vector<TimedCheck> runSuite(const std::string& suite, const ResolvedInstance& inst, const Bounds& bounds,
                                 std::uint64_t seed);

}  // namespace coeffcat
