#include "dtsp/transform.hpp"

#include <algorithm>
#include <cmath>

#include "dtsp/error.hpp"

namespace dtsp {

AtspInstance noon_bean(const GtspInstance& g) {
  const std::size_t n = g.num_nodes();
  AtspInstance a;
  a.n = n;
  a.num_sets = g.num_sets();
  a.cost.assign(n * n, kExcluded);
  for (std::size_t u = 0; u < n; ++u) a.origin.push_back(g.node(u));

  double total = 0.0;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (g.node(u).target == g.node(v).target) continue;
      const double c = g.cost(u, v);
      if (std::isfinite(c)) total += c;
    }
  }
  a.shift = total + 1.0;

  auto pred = [&](std::size_t u) {
    const GtspNode node = g.node(u);
    const std::size_t k = g.set_size(node.target);
    return g.node_index(node.target, (node.choice + k - 1) % k);
  };
  for (std::size_t s = 0; s < g.num_sets(); ++s) {
    const std::size_t k = g.set_size(s);
    if (k < 2) continue;
    for (std::size_t c = 0; c < k; ++c) a.cost[g.node_index(s, c) * n + g.node_index(s, (c + 1) % k)] = 0.0;
  }
  for (std::size_t u = 0; u < n; ++u) {
    const std::size_t from = pred(u);
    for (std::size_t v = 0; v < n; ++v) {
      if (g.node(u).target == g.node(v).target) continue;
      const double c = g.cost(u, v);
      if (std::isfinite(c)) a.cost[from * n + v] = c + a.shift;
    }
  }
  return a;
}

StspInstance atsp_to_stsp(const AtspInstance& atsp) {
  StspInstance s;
  s.n = 3 * atsp.n;
  s.shift = atsp.shift;
  s.cost.assign(s.n * s.n, kExcluded);
  auto set = [&](std::size_t i, std::size_t j, double c) {
    s.cost[i * s.n + j] = c;
    s.cost[j * s.n + i] = c;
  };
  for (std::size_t i = 0; i < atsp.n; ++i) {
    set(3 * i, 3 * i + 1, 0.0);
    set(3 * i + 1, 3 * i + 2, 0.0);
  }
  for (std::size_t i = 0; i < atsp.n; ++i) {
    for (std::size_t j = 0; j < atsp.n; ++j) {
      if (i == j) continue;
      const double c = atsp.at(i, j);
      if (c != kExcluded) set(3 * i + 2, 3 * j, c);
    }
  }
  return s;
}

Tour decode_atsp_tour(const GtspInstance& g, const AtspInstance& atsp, const std::vector<std::size_t>& cycle) {
  if (cycle.size() != atsp.n) throw ValidationError("decode_atsp_tour: cycle must visit every node once");
  // Start right after a set change so that every set is entered exactly once.
  std::size_t start = 0;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const std::size_t prev = cycle[(i + cycle.size() - 1) % cycle.size()];
    if (atsp.origin[prev].target != atsp.origin[cycle[i]].target) {
      start = i;
      break;
    }
  }
  std::vector<std::size_t> order, choice(g.num_sets(), 0);
  std::vector<bool> seen(g.num_sets(), false);
  for (std::size_t k = 0; k < cycle.size(); ++k) {
    const GtspNode node = atsp.origin[cycle[(start + k) % cycle.size()]];
    if (seen[node.target]) {
      if (order.back() != node.target) throw ValidationError("decode_atsp_tour: a set is visited twice");
      continue;
    }
    seen[node.target] = true;
    order.push_back(node.target);
    choice[node.target] = node.choice;
  }
  const auto it = std::find(order.begin(), order.end(), std::size_t{0});
  std::rotate(order.begin(), it, order.end());
  Tour t;
  t.cost = tour_cost(g, order, choice);
  t.order = std::move(order);
  t.choice = std::move(choice);
  return t;
}

std::vector<std::size_t> decode_stsp_tour(const StspInstance& stsp, const std::vector<std::size_t>& cycle) {
  if (cycle.size() != stsp.n) throw ValidationError("decode_stsp_tour: cycle must visit every node once");
  // Orient the cycle so that chains read 3i, 3i+1, 3i+2.
  std::vector<std::size_t> c = cycle;
  const auto pos0 = static_cast<std::size_t>(std::find(c.begin(), c.end(), std::size_t{0}) - c.begin());
  std::rotate(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(pos0), c.end());
  if (c.size() > 1 && c[1] != 1) std::reverse(c.begin() + 1, c.end());
  std::vector<std::size_t> order;
  for (std::size_t k = 0; k < c.size(); k += 3) {
    if (c[k] % 3 != 0 || c[k + 1] != c[k] + 1 || c[k + 2] != c[k] + 2) {
      throw ValidationError("decode_stsp_tour: cycle does not follow the node chains");
    }
    order.push_back(c[k] / 3);
  }
  return order;
}

double cycle_cost(const std::vector<double>& cost, std::size_t n, const std::vector<std::size_t>& cycle) {
  double total = 0.0;
  for (std::size_t i = 0; i < cycle.size(); ++i) total += cost[cycle[i] * n + cycle[(i + 1) % cycle.size()]];
  return total;
}

}  // namespace dtsp
