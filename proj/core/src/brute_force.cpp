#include "dtsp/brute_force.hpp"

#include <algorithm>
#include <numeric>

#include "dtsp/error.hpp"

namespace dtsp {

Tour brute_force_gtsp(const GtspInstance& g, std::size_t max_sets) {
  const std::size_t n = g.num_sets();
  if (n > max_sets) throw CapExceeded("brute_force_gtsp", n, max_sets);
  Tour best;
  best.cost = kExcluded;
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<std::size_t> choice(n, 0);
  do {
    std::fill(choice.begin(), choice.end(), 0);
    while (true) {
      const double c = tour_cost(g, order, choice);
      if (c < best.cost) best = Tour{order, choice, c};
      std::size_t t = 0;
      while (t < n && ++choice[t] == g.set_size(t)) choice[t++] = 0;
      if (t == n) break;
    }
  } while (n > 1 && std::next_permutation(order.begin() + 1, order.end()));
  if (best.cost == kExcluded) throw ValidationError("brute_force_gtsp: no finite tour");
  return best;
}

HeldKarpResult brute_force_atsp(const std::vector<double>& cost, std::size_t n, std::size_t max_nodes) {
  if (n > max_nodes) throw CapExceeded("brute_force_atsp", n, max_nodes);
  if (n == 0) throw ValidationError("brute_force_atsp: empty instance");
  HeldKarpResult best;
  best.cost = kExcluded;
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  do {
    double c = 0.0;
    for (std::size_t i = 0; i < n && n > 1; ++i) c += cost[order[i] * n + order[(i + 1) % n]];
    if (c < best.cost) best = {order, c};
  } while (n > 1 && std::next_permutation(order.begin() + 1, order.end()));
  if (best.cost == kExcluded) throw ValidationError("brute_force_atsp: no finite tour");
  return best;
}

}  // namespace dtsp
