#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coeffcat/harness/instance.hpp"
#include "coeffcat/harness/suites.hpp"

namespace coeffcat {

struct RunOptions {
  /// Replaces the instance's selection when set.
  std::optional<std::vector<std::string>> suites;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint32_t> maxRank;
  std::optional<std::uint64_t> samples;
  std::optional<std::uint64_t> exhaustiveLimit;
  /// Worker threads; suites are independent and share only immutable data.
  unsigned jobs = 1;
};

struct CheckRecord {
  std::string suite;
  CheckResult result;
  double ms = 0;
};

struct Report {
  std::string instance;
  std::uint64_t seed = 0;
  Bounds bounds;
  std::map<std::string, Bounds> suiteBounds;
  std::vector<std::string> suites;
  /// Sorted by (suite, check id).
  std::vector<CheckRecord> checks;
  double totalMs = 0;

  std::size_t count(Verdict v) const;
  /// 0 when nothing failed, 1 otherwise.
  int exitCode() const { return count(Verdict::Fail) == 0 ? 0 : 1; }

  /// Everything except wall times, which sit under "timing" when requested.
  Json toJson(bool withTiming = true) const;
  std::string toText() const;
};

/// Applies the options, resolves the instance (InputError on failure) and
/// runs the selected suites.
Report runSuites(const InstanceDescription& d, const RunOptions& opt = {});

}  // namespace coeffcat
