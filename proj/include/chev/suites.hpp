#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "chev/group.hpp"

namespace chev {

/// Outcome of one named family of checks; the first failing case is kept as
/// a replayable counterexample.
struct CheckResult {
  std::string name;
  std::int64_t cases = 0;
  std::int64_t failures = 0;
  nlohmann::json counterexample;
};

struct SuiteReport {
  std::string suite;
  std::string system;
  std::string ring;
  std::vector<CheckResult> checks;
  double seconds = 0;

  bool passed() const;
  /// Deterministic report; timing is left out.
  nlohmann::json to_json() const;
};

/// Raised for (suite, system, ring) combinations the suite does not cover.
class UnsupportedCombination : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

const std::vector<std::string>& suite_names();

/// Runs a suite; tasks are spread over `threads` workers and the report is
/// assembled in a fixed order.
SuiteReport run_suite(const std::string& suite, const AdjointAlgebra& alg, const Ring& ring,
                      int threads = 1, std::uint64_t seed = 0);

/// Worker count from CHEV_THREADS, else the hardware concurrency.
int default_threads();

/// Runs tasks[i] for every i on a pool of `threads` workers.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& task);

}  // namespace chev
