#pragma once

/**
 * @file pipeline.hpp
 * @brief Lower bounds, upper bounds and the Euclidean baseline for one instance.
 */

#include <optional>
#include <string>
#include <vector>

#include "dtsp/gtsp.hpp"
#include "dtsp/instance.hpp"

namespace dtsp {

enum class Strategy : std::uint8_t { exact, relaxed, automatic };

std::string_view to_string(Strategy s) noexcept;
std::optional<Strategy> parse_strategy(std::string_view name) noexcept;

/// One leg of a rendered tour: departure and arrival headings at its two targets.
struct Leg {
  std::size_t from = 0;
  std::size_t to = 0;
  double theta1 = 0.0;
  double theta2 = 0.0;
  DubinsPath path;
};

struct LowerBoundResult {
  std::size_t m = 1;
  Strategy strategy = Strategy::exact;  ///< exact or relaxed, never automatic
  /// Certified value: the exact BP optimum or the set-level relaxation.
  double value = 0.0;
  /// Relaxed strategy only: cost of the heuristic BP tour. Not a certified bound.
  std::optional<double> heuristic_value;
  Tour tour;  ///< exact optimum, or the heuristic tour under the relaxed strategy
  std::vector<Leg> legs;
};

struct UpperBoundResult {
  std::size_t k = 1;
  HeadingPlacement placement = HeadingPlacement::endpoints;
  bool optimal = false;  ///< the GTSP over the heading matrix was solved exactly
  double value = 0.0;    ///< sum of re-evaluated leg lengths
  Tour tour;
  std::vector<Leg> legs;
};

struct EtspResult {
  double value = 0.0;
  bool optimal = false;
  std::vector<std::size_t> order;
};

struct PipelineOptions {
  SolverLimits limits{};
  HeuristicOptions heuristic{};
  HeadingPlacement placement = HeadingPlacement::endpoints;
};

/// `automatic` picks exact when the instance fits limits.exact_sets.
LowerBoundResult lower_bound(const ProblemInstance& inst, std::size_t m, Strategy strategy,
                             const PipelineOptions& options = {});

/// Exact when the instance fits limits.exact_sets, heuristic otherwise. Every
/// leg is re-evaluated with dubins_shortest; a mismatch above 1e-9 relative throws.
UpperBoundResult upper_bound(const ProblemInstance& inst, std::size_t k, const PipelineOptions& options = {});

/// Held-Karp on the Euclidean matrix when n fits limits.relaxed_sets, heuristic otherwise.
EtspResult etsp(const ProblemInstance& inst, const PipelineOptions& options = {});

/// Euclidean distance matrix, shared by etsp and tests.
std::vector<double> euclidean_matrix(const std::vector<Point>& targets);

struct BoundReport {
  std::string instance;
  std::size_t n = 0;
  double rho = 0.0;
  std::optional<EtspResult> etsp;
  double etsp_seconds = 0.0;
  std::vector<LowerBoundResult> lower;
  std::vector<double> lower_seconds;
  std::optional<UpperBoundResult> upper;
  double upper_seconds = 0.0;
};

/// Runs ETSP, LB(m) for each m in `ms` and UB(k) (skipped when k == 0).
BoundReport compare_instance(const ProblemInstance& inst, const std::vector<std::size_t>& ms, std::size_t k,
                             Strategy strategy, const PipelineOptions& options = {});

}  // namespace dtsp
