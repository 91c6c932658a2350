#pragma once

/**
 * @file transform.hpp
 * @brief GTSP -> ATSP (Noon-Bean) and ATSP -> symmetric TSP (node tripling).
 */

#include <cstddef>
#include <vector>

#include "dtsp/gtsp.hpp"

namespace dtsp {

struct AtspInstance {
  std::size_t n = 0;
  std::vector<double> cost;         ///< n x n row-major; kExcluded marks a missing arc
  std::vector<GtspNode> origin;     ///< GTSP node behind each ATSP node
  std::size_t num_sets = 0;
  double shift = 0.0;               ///< M added to every inter-set arc

  double at(std::size_t i, std::size_t j) const noexcept { return cost[i * n + j]; }
};

struct StspInstance {
  std::size_t n = 0;                ///< always 3 x the ATSP node count
  std::vector<double> cost;         ///< symmetric; kExcluded marks a missing edge
  double shift = 0.0;               ///< carried over from the ATSP

  double at(std::size_t i, std::size_t j) const noexcept { return cost[i * n + j]; }
};

/// Zero-cost directed cycle through each set in ascending choice order; the
/// arc u -> v of the GTSP leaves from u's cycle predecessor and costs c(u, v) + M,
/// with M = (sum of finite inter-set costs) + 1.
AtspInstance noon_bean(const GtspInstance& g);

/// Node i becomes the chain 3i - 3i+1 - 3i+2 with zero-cost edges; the ATSP arc
/// i -> j becomes the edge {3i+2, 3j}. No other edges exist.
StspInstance atsp_to_stsp(const AtspInstance& atsp);

/// Reads a GTSP tour off a Hamiltonian cycle of the Noon-Bean ATSP (cycle given as node sequence).
Tour decode_atsp_tour(const GtspInstance& g, const AtspInstance& atsp, const std::vector<std::size_t>& cycle);

/// Reads an ATSP cycle off a Hamiltonian cycle of the tripled instance.
std::vector<std::size_t> decode_stsp_tour(const StspInstance& stsp, const std::vector<std::size_t>& cycle);

/// Cost of a cycle given as a node sequence over a dense n x n matrix.
double cycle_cost(const std::vector<double>& cost, std::size_t n, const std::vector<std::size_t>& cycle);

}  // namespace dtsp
