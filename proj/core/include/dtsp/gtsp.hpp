#pragma once

/**
 * @file gtsp.hpp
 * @brief One-in-a-set TSP: instances built from interval or heading queries,
 * exact and heuristic solvers, and the set-level relaxation bound.
 *
 * Nodes are numbered set by set: the nodes of target 0 first (ascending choice
 * id), then target 1, and so on. Costs are a dense row-major matrix; +infinity
 * marks an excluded arc.
 */

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "dtsp/dubins.hpp"
#include "dtsp/interval.hpp"

namespace dtsp {

inline constexpr double kExcluded = std::numeric_limits<double>::infinity();

enum class BoundMode : std::uint8_t { lower, upper };

struct GtspNode {
  std::size_t target = 0;
  std::size_t choice = 0;
};

/// Heading intervals of one target; must tile [0, 2pi] in ascending order.
using Partition = std::vector<AngleInterval>;

class GtspInstance {
 public:
  /// `headings[i][a]` is the interval (lower mode) or point heading (upper
  /// mode) behind node (i, a). `cost` is N x N row-major with N = total nodes.
  GtspInstance(std::vector<std::vector<AngleInterval>> headings, std::vector<double> cost, BoundMode mode);

  std::size_t num_sets() const noexcept { return offsets_.size() - 1; }
  std::size_t num_nodes() const noexcept { return offsets_.back(); }
  std::size_t set_size(std::size_t set) const noexcept { return offsets_[set + 1] - offsets_[set]; }
  std::size_t node_index(std::size_t set, std::size_t choice) const noexcept { return offsets_[set] + choice; }
  GtspNode node(std::size_t index) const noexcept;
  BoundMode mode() const noexcept { return mode_; }

  double cost(std::size_t u, std::size_t v) const noexcept { return cost_[u * num_nodes() + v]; }
  double cost(GtspNode u, GtspNode v) const noexcept {
    return cost(node_index(u.target, u.choice), node_index(v.target, v.choice));
  }
  const std::vector<double>& matrix() const noexcept { return cost_; }
  const AngleInterval& heading(std::size_t set, std::size_t choice) const { return headings_[set][choice]; }

 private:
  std::vector<std::vector<AngleInterval>> headings_;
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> set_of_;
  std::vector<double> cost_;
  BoundMode mode_;
};

/// A closed tour: `order` visits every target once starting at target 0;
/// `choice[t]` is the node chosen in target t's set.
struct Tour {
  std::vector<std::size_t> order;
  std::vector<std::size_t> choice;
  double cost = 0.0;
};

double tour_cost(const GtspInstance& g, const std::vector<std::size_t>& order, const std::vector<std::size_t>& choice);

/// Checks `partition` tiles [0, 2pi]; throws InvalidPartition naming `target`.
void validate_partition(const Partition& partition, std::size_t target);

/// Entry (i,a) -> (j,b) is the interval-problem optimum between the two intervals.
GtspInstance build_lower_matrix(const std::vector<Point>& targets, const std::vector<Partition>& partitions,
                                TurnRadius rho);

/// Entry (i,a) -> (j,b) is the Dubins distance between the fixed headings.
GtspInstance build_upper_matrix(const std::vector<Point>& targets, const std::vector<std::vector<double>>& headings,
                                TurnRadius rho);

struct SolverLimits {
  std::size_t exact_sets = 16;   ///< cap for solve_exact
  std::size_t relaxed_sets = 22; ///< cap for set_level_relaxation and held_karp
};

/// Optimal tour by dynamic programming over (visited sets, last node).
/// Throws CapExceeded above `limits.exact_sets`.
Tour solve_exact(const GtspInstance& g, const SolverLimits& limits = {});

struct HeuristicOptions {
  std::uint64_t seed = 1;
  int restarts = 8;
};

/// Randomized nearest neighbour, then 2-opt and per-set node reselection until
/// neither improves. Deterministic for a given seed.
Tour solve_heuristic(const GtspInstance& g, const HeuristicOptions& options = {});

/// Optimum of the ATSP on super-nodes with d(S_i, S_j) = min member-pair cost.
/// Never above the GTSP optimum. Throws CapExceeded above `limits.relaxed_sets`.
double set_level_relaxation(const GtspInstance& g, const SolverLimits& limits = {});

struct HeldKarpResult {
  std::vector<std::size_t> order;  ///< starts at city 0
  double cost = 0.0;
};

/// Exact (A)TSP on a dense n x n row-major matrix. n = 1 gives a zero tour.
HeldKarpResult held_karp(const std::vector<double>& cost, std::size_t n, std::size_t cap = 22);

}  // namespace dtsp
