#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mjc/budget.hpp"

namespace mjc {

enum SuiteFlags : unsigned {
  kSuiteIdentities = 1u << 0,
  kSuiteCross = 1u << 1,
  kSuiteBijections = 1u << 2,
  kSuiteOeis = 1u << 3,
  kSuiteAll = kSuiteIdentities | kSuiteCross | kSuiteBijections | kSuiteOeis,
};

struct VerifyOptions {
  int max_balls = 6;
  int max_capacity = 2;
  int max_length = 3;
  std::uint64_t seed = 0x6a75676731ull;
  Budget budget;
};

struct CheckResult {
  std::string id;
  std::string name;
  std::string params;
  bool passed = false;
  std::string detail;

  nlohmann::json to_json() const;
};

/// Runs the selected suites. Checks execute concurrently; the result is
/// sorted by id so output does not depend on scheduling. A check that throws
/// is reported as failed with the exception text as detail.
std::vector<CheckResult> run_verification(unsigned suites, const VerifyOptions& options);

/// Parses "identities", "cross", "bijections", "oeis" or "all".
unsigned parse_suite(const std::string& name);

}  // namespace mjc
