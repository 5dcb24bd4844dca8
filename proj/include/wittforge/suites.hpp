#pragma once

// Verification suites: each runs the identities of one module and collects
// counterexamples.

#include <cstdint>
#include <string>
#include <vector>

#include "wittforge/json_io.hpp"

namespace wittforge {

struct SuiteBudget {
  std::size_t random_cases = 200;
  std::size_t operator_cases = 100;
  std::size_t enum_limit = 1'000'000;
  int character_bound = 1;
  int gr_degree = 4;
  std::size_t groupoid_budget = 1'000'000;
};

struct SuiteFailure {
  std::string check;
  Json counterexample;
};

struct SuiteReport {
  std::string name;
  std::uint64_t seed = 0;
  std::size_t cases = 0;
  std::vector<SuiteFailure> failures;
  double wall_seconds = 0;
  Json details = Json::object();

  bool passed() const { return failures.empty(); }
};

/// Sorted suite ids.
const std::vector<std::string>& suite_ids();
/// suite id -> invariants it exercises.
Json coverage_map();
/// Throws ValidationError on an unknown id.
SuiteReport suite_run(const std::string& name, std::uint64_t seed, const SuiteBudget& budget = {});
/// Runs several suites concurrently; results ordered by suite id.
std::vector<SuiteReport> suite_run_all(const std::vector<std::string>& names, std::uint64_t seed,
                                       const SuiteBudget& budget = {});

Json report_to_json(const SuiteReport& r, bool with_timing = true);

}  // namespace wittforge
