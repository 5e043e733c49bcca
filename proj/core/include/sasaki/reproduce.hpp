#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace sasaki {

inline constexpr std::uint64_t kDefaultSeed = 20240601;

struct RunConfig {
  std::uint64_t seed = kDefaultSeed;
  std::size_t jobs = 1;
};

struct CheckResult {
  std::string id;
  /// Acceptance criterion number, 0 for auxiliary checks.
  int criterion = 0;
  std::string title;
  bool pass = false;
  /// Ordered facts and witnesses, rendered as JSON strings.
  std::vector<std::pair<std::string, std::string>> facts;
  double seconds = 0;
};

struct RunReport {
  std::string command;
  RunConfig config;
  std::vector<CheckResult> results;
  bool all_passed() const;
  /// Timing lives under a separate "timing" key so reports compare equal
  /// byte for byte with `include_timing` false.
  std::string to_json(bool include_timing = true) const;
};

struct CheckInfo {
  std::string id;
  int criterion;
  std::string title;
};

/// Every registered check, criteria first in numeric order.
const std::vector<CheckInfo>& check_registry();

/// Throws Error(UnknownCheck).
CheckResult run_check(const std::string& id, const RunConfig& config = {});

/// Runs the named checks in order; "all" expands to the twelve criteria.
RunReport reproduce(const std::vector<std::string>& ids, const RunConfig& config = {},
                    const std::string& command = "reproduce");

}  // namespace sasaki
