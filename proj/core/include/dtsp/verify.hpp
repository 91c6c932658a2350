#pragma once

/**
 * @file verify.hpp
 * @brief Randomized self-checks against independent oracles.
 *
 * Each suite draws its cases from mt19937_64(seed) and reports how many cases
 * failed; the output carries no timings, so reruns are byte-identical.
 */

#include <cstdint>
#include <string>
#include <vector>

namespace dtsp {

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  double max_error = 0.0;  ///< largest violation seen, 0 when none
  std::string first_failure;
};

struct OracleSuiteOptions {
  std::size_t samples = 200;
  std::uint64_t seed = 1;
  int n_grid = 1024;
  double tolerance = 1e-9;
};

/// solve_interval against the dense grid oracle: the returned angles lie in
/// the intervals and reproduce the value (achievability), and no grid point is
/// lower (dominance). Two results: "interval_achievability" and "interval_dominance".
std::vector<SuiteResult> interval_oracle_suite(const OracleSuiteOptions& options);

struct TransformSuiteOptions {
  std::size_t trials = 500;
  std::uint64_t seed = 1;
};

/// Noon-Bean on integer GTSPs with at most 5 sets of at most 3 nodes, and
/// the 3n symmetric transformation on integer ATSPs with at most 6 nodes,
/// both against factorial enumeration of the original problem.
std::vector<SuiteResult> transformation_suite(const TransformSuiteOptions& options);

inline constexpr const char* kVerifyHeader = "suite,cases,failures,max_error";
std::string format_verify(const std::vector<SuiteResult>& results);

}  // namespace dtsp
