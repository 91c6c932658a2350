#pragma once

/**
 * @file brute_force.hpp
 * @brief Factorial enumeration oracles for tiny GTSP and ATSP instances.
 */

#include <cstddef>
#include <vector>

#include "dtsp/gtsp.hpp"

namespace dtsp {

/// Every cyclic order of the sets (set 0 first) times every node choice.
/// Throws CapExceeded above `max_sets`.
Tour brute_force_gtsp(const GtspInstance& g, std::size_t max_sets = 9);

/// Every Hamiltonian cycle starting at city 0 of a dense n x n matrix.
/// Throws CapExceeded above `max_nodes`.
HeldKarpResult brute_force_atsp(const std::vector<double>& cost, std::size_t n, std::size_t max_nodes = 10);

}  // namespace dtsp
