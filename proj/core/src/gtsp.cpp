#include "dtsp/gtsp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <thread>

#include "dtsp/error.hpp"

namespace dtsp {

namespace {

constexpr double kTileSlack = 1e-12;

// Fills rows [0, rows) of a matrix with `fill(row)`, split across hardware
// threads. Each row is written by exactly one worker, so the result does not
// depend on scheduling.
template <typename Fill>
void parallel_rows(std::size_t rows, Fill fill) {
  const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers = std::min(hw, rows);
  if (workers <= 1) {
    for (std::size_t r = 0; r < rows; ++r) fill(r);
    return;
  }
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t r = w; r < rows; r += workers) fill(r);
    });
  }
  for (auto& t : pool) t.join();
}

Tour canonical_tour(const GtspInstance& g, std::vector<std::size_t> order, std::vector<std::size_t> choice) {
  const auto it = std::find(order.begin(), order.end(), std::size_t{0});
  std::rotate(order.begin(), it, order.end());
  Tour t;
  t.cost = tour_cost(g, order, choice);
  t.order = std::move(order);
  t.choice = std::move(choice);
  return t;
}

// Best node choice for a fixed visiting order: shortest cycle through one node
// per set, rooted at each node of the first set in turn.
void reselect(const GtspInstance& g, const std::vector<std::size_t>& order, std::vector<std::size_t>& choice) {
  const std::size_t k = order.size();
  double best = kExcluded;
  std::vector<std::size_t> best_choice = choice;
  std::vector<std::vector<double>> f(k);
  std::vector<std::vector<std::size_t>> from(k);
  for (std::size_t s = 0; s < g.set_size(order[0]); ++s) {
    f[0].assign(g.set_size(order[0]), kExcluded);
    f[0][s] = 0.0;
    for (std::size_t pos = 1; pos < k; ++pos) {
      const std::size_t prev = order[pos - 1], cur = order[pos];
      f[pos].assign(g.set_size(cur), kExcluded);
      from[pos].assign(g.set_size(cur), 0);
      for (std::size_t a = 0; a < g.set_size(prev); ++a) {
        if (f[pos - 1][a] == kExcluded) continue;
        for (std::size_t b = 0; b < g.set_size(cur); ++b) {
          const double v = f[pos - 1][a] + g.cost(GtspNode{prev, a}, GtspNode{cur, b});
          if (v < f[pos][b]) {
            f[pos][b] = v;
            from[pos][b] = a;
          }
        }
      }
    }
    std::size_t end = 0;
    double total = kExcluded;
    for (std::size_t b = 0; b < g.set_size(order[k - 1]); ++b) {
      const double v = f[k - 1][b] + g.cost(GtspNode{order[k - 1], b}, GtspNode{order[0], s});
      if (v < total) {
        total = v;
        end = b;
      }
    }
    if (total < best) {
      best = total;
      std::size_t b = end;
      for (std::size_t pos = k - 1; pos > 0; --pos) {
        best_choice[order[pos]] = b;
        b = from[pos][b];
      }
      best_choice[order[0]] = s;
    }
  }
  choice = best_choice;
}

// First-improvement 2-opt on the visiting order with choices held fixed.
void two_opt(const GtspInstance& g, std::vector<std::size_t>& order, const std::vector<std::size_t>& choice) {
  const std::size_t k = order.size();
  double current = tour_cost(g, order, choice);
  for (std::size_t i = 1; i + 1 < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      std::reverse(order.begin() + static_cast<std::ptrdiff_t>(i), order.begin() + static_cast<std::ptrdiff_t>(j) + 1);
      const double v = tour_cost(g, order, choice);
      if (v < current - 1e-12 * std::max(1.0, current)) {
        current = v;
      } else {
        std::reverse(order.begin() + static_cast<std::ptrdiff_t>(i),
                     order.begin() + static_cast<std::ptrdiff_t>(j) + 1);
      }
    }
  }
}

}  // namespace

GtspInstance::GtspInstance(std::vector<std::vector<AngleInterval>> headings, std::vector<double> cost, BoundMode mode)
    : headings_(std::move(headings)), cost_(std::move(cost)), mode_(mode) {
  offsets_.push_back(0);
  for (std::size_t i = 0; i < headings_.size(); ++i) {
    if (headings_[i].empty()) throw ValidationError("set " + std::to_string(i) + " has no nodes");
    offsets_.push_back(offsets_.back() + headings_[i].size());
    set_of_.insert(set_of_.end(), headings_[i].size(), i);
  }
  if (cost_.size() != num_nodes() * num_nodes()) throw ValidationError("cost matrix size does not match node count");
  for (double c : cost_) {
    if (std::isnan(c) || c < 0.0) throw ValidationError("costs must be non-negative");
  }
}

GtspNode GtspInstance::node(std::size_t index) const noexcept {
  const std::size_t set = set_of_[index];
  return {set, index - offsets_[set]};
}

double tour_cost(const GtspInstance& g, const std::vector<std::size_t>& order, const std::vector<std::size_t>& choice) {
  const std::size_t k = order.size();
  if (k < 2) return 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t a = order[i], b = order[(i + 1) % k];
    total += g.cost(GtspNode{a, choice[a]}, GtspNode{b, choice[b]});
  }
  return total;
}

void validate_partition(const Partition& partition, std::size_t target) {
  if (partition.empty()) throw InvalidPartition(target, "no intervals");
  if (std::abs(partition.front().lo()) > kTileSlack) throw InvalidPartition(target, "does not start at 0");
  if (std::abs(partition.back().hi() - kTwoPi) > kTileSlack) throw InvalidPartition(target, "does not end at 2pi");
  for (std::size_t k = 1; k < partition.size(); ++k) {
    const double gap = partition[k].lo() - partition[k - 1].hi();
    if (gap > kTileSlack) throw InvalidPartition(target, "gap before interval " + std::to_string(k));
    if (gap < -kTileSlack) throw InvalidPartition(target, "overlap before interval " + std::to_string(k));
  }
}

GtspInstance build_lower_matrix(const std::vector<Point>& targets, const std::vector<Partition>& partitions,
                                TurnRadius rho) {
  if (partitions.size() != targets.size()) throw ValidationError("one partition per target is required");
  for (std::size_t i = 0; i < partitions.size(); ++i) validate_partition(partitions[i], i);

  std::vector<GtspNode> nodes;
  for (std::size_t i = 0; i < partitions.size(); ++i) {
    for (std::size_t a = 0; a < partitions[i].size(); ++a) nodes.push_back({i, a});
  }
  const std::size_t n = nodes.size();
  std::vector<double> cost(n * n, kExcluded);
  parallel_rows(n, [&](std::size_t u) {
    const GtspNode from = nodes[u];
    for (std::size_t v = 0; v < n; ++v) {
      const GtspNode to = nodes[v];
      if (to.target == from.target) continue;
      cost[u * n + v] = solve_interval_value(targets[from.target], partitions[from.target][from.choice],
                                             targets[to.target], partitions[to.target][to.choice], rho);
    }
  });
  return {partitions, std::move(cost), BoundMode::lower};
}

GtspInstance build_upper_matrix(const std::vector<Point>& targets, const std::vector<std::vector<double>>& headings,
                                TurnRadius rho) {
  if (headings.size() != targets.size()) throw ValidationError("one heading list per target is required");
  std::vector<std::vector<AngleInterval>> sets(headings.size());
  std::vector<GtspNode> nodes;
  for (std::size_t i = 0; i < headings.size(); ++i) {
    if (headings[i].empty()) throw ValidationError("target " + std::to_string(i) + " has no headings");
    for (std::size_t a = 0; a < headings[i].size(); ++a) {
      sets[i].push_back(AngleInterval::point(normalize_angle(headings[i][a])));
      nodes.push_back({i, a});
    }
  }
  const std::size_t n = nodes.size();
  std::vector<double> cost(n * n, kExcluded);
  parallel_rows(n, [&](std::size_t u) {
    const GtspNode from = nodes[u];
    const Configuration start(targets[from.target], headings[from.target][from.choice]);
    for (std::size_t v = 0; v < n; ++v) {
      const GtspNode to = nodes[v];
      if (to.target == from.target) continue;
      const Configuration end(targets[to.target], headings[to.target][to.choice]);
      cost[u * n + v] = dubins_shortest(start, end, rho).total;
    }
  });
  return {std::move(sets), std::move(cost), BoundMode::upper};
}

Tour solve_exact(const GtspInstance& g, const SolverLimits& limits) {
  const std::size_t k = g.num_sets();
  if (k > limits.exact_sets) throw CapExceeded("solve_exact", k, limits.exact_sets);
  if (k == 0) return {};
  if (k == 1) return canonical_tour(g, {0}, {0});

  if (g.num_nodes() == k) {
    // One node per set: a plain ATSP, solved by the same routine as the ETSP.
    const HeldKarpResult hk = held_karp(g.matrix(), k, std::max(k, limits.relaxed_sets));
    return canonical_tour(g, hk.order, std::vector<std::size_t>(k, 0));
  }

  // Nodes outside set 0 are re-indexed 0..m-1; bits 0..k-2 stand for sets 1..k-1.
  const std::size_t first = g.set_size(0);
  const std::size_t m = g.num_nodes() - first;
  const std::size_t full = (std::size_t{1} << (k - 1)) - 1;
  std::vector<std::size_t> bit_of(m);
  for (std::size_t v = 0; v < m; ++v) bit_of[v] = g.node(v + first).target - 1;
  std::vector<std::size_t> set_begin(k), set_end(k);
  for (std::size_t s = 1; s < k; ++s) {
    set_begin[s] = g.node_index(s, 0) - first;
    set_end[s] = set_begin[s] + g.set_size(s);
  }

  std::vector<double> dp((full + 1) * m);
  std::vector<std::int32_t> parent((full + 1) * m);
  double best = kExcluded;
  std::vector<std::size_t> best_order, best_choice;

  for (std::size_t s0 = 0; s0 < first; ++s0) {
    std::fill(dp.begin(), dp.end(), kExcluded);
    std::fill(parent.begin(), parent.end(), -1);
    for (std::size_t v = 0; v < m; ++v) dp[(std::size_t{1} << bit_of[v]) * m + v] = g.cost(s0, v + first);
    for (std::size_t mask = 1; mask <= full; ++mask) {
      for (std::size_t v = 0; v < m; ++v) {
        if (!(mask >> bit_of[v] & 1)) continue;
        const double here = dp[mask * m + v];
        if (here == kExcluded) continue;
        for (std::size_t s = 1; s < k; ++s) {
          if (mask >> (s - 1) & 1) continue;
          const std::size_t next = mask | (std::size_t{1} << (s - 1));
          for (std::size_t w = set_begin[s]; w < set_end[s]; ++w) {
            const double val = here + g.cost(v + first, w + first);
            if (val < dp[next * m + w]) {
              dp[next * m + w] = val;
              parent[next * m + w] = static_cast<std::int32_t>(v);
            }
          }
        }
      }
    }
    for (std::size_t v = 0; v < m; ++v) {
      const double total = dp[full * m + v] + g.cost(v + first, s0);
      if (!(total < best)) continue;
      best = total;
      std::vector<std::size_t> rev;
      std::size_t mask = full, cur = v;
      while (true) {
        rev.push_back(cur);
        const std::int32_t p = parent[mask * m + cur];
        mask &= ~(std::size_t{1} << bit_of[cur]);
        if (p < 0) break;
        cur = static_cast<std::size_t>(p);
      }
      best_order.assign(1, 0);
      best_choice.assign(k, 0);
      best_choice[0] = s0;
      for (auto it = rev.rbegin(); it != rev.rend(); ++it) {
        const GtspNode node = g.node(*it + first);
        best_order.push_back(node.target);
        best_choice[node.target] = node.choice;
      }
    }
  }
  if (best == kExcluded) throw ValidationError("solve_exact: no finite tour exists");
  return canonical_tour(g, best_order, best_choice);
}

Tour solve_heuristic(const GtspInstance& g, const HeuristicOptions& options) {
  const std::size_t k = g.num_sets();
  if (k == 0) return {};
  if (k == 1) return canonical_tour(g, {0}, {0});

  std::mt19937_64 rng(options.seed);
  Tour best;
  best.cost = kExcluded;
  const int restarts = std::max(1, options.restarts);
  for (int r = 0; r < restarts; ++r) {
    // Nearest neighbour from a random node.
    const std::size_t start = static_cast<std::size_t>(rng() % g.num_nodes());
    std::vector<bool> used(k, false);
    std::vector<std::size_t> order, choice(k, 0);
    std::size_t cur = start;
    while (true) {
      const GtspNode node = g.node(cur);
      used[node.target] = true;
      order.push_back(node.target);
      choice[node.target] = node.choice;
      if (order.size() == k) break;
      std::size_t next = g.num_nodes();
      double next_cost = kExcluded;
      for (std::size_t v = 0; v < g.num_nodes(); ++v) {
        if (used[g.node(v).target]) continue;
        if (next == g.num_nodes() || g.cost(cur, v) < next_cost) {
          next = v;
          next_cost = g.cost(cur, v);
        }
      }
      cur = next;
    }

    double cost = tour_cost(g, order, choice);
    while (true) {
      two_opt(g, order, choice);
      reselect(g, order, choice);
      const double after = tour_cost(g, order, choice);
      if (!(after < cost - 1e-12 * std::max(1.0, cost))) break;
      cost = after;
    }
    Tour t = canonical_tour(g, order, choice);
    if (t.cost < best.cost) best = std::move(t);
  }
  return best;
}

double set_level_relaxation(const GtspInstance& g, const SolverLimits& limits) {
  const std::size_t k = g.num_sets();
  if (k > limits.relaxed_sets) throw CapExceeded("set_level_relaxation", k, limits.relaxed_sets);
  if (k < 2) return 0.0;
  std::vector<double> super(k * k, kExcluded);
  for (std::size_t u = 0; u < g.num_nodes(); ++u) {
    const std::size_t i = g.node(u).target;
    for (std::size_t v = 0; v < g.num_nodes(); ++v) {
      const std::size_t j = g.node(v).target;
      if (i == j) continue;
      super[i * k + j] = std::min(super[i * k + j], g.cost(u, v));
    }
  }
  return held_karp(super, k, limits.relaxed_sets).cost;
}

}  // namespace dtsp
