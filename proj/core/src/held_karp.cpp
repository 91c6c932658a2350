#include <algorithm>
#include <cstdint>
#include <vector>

#include "dtsp/error.hpp"
#include "dtsp/gtsp.hpp"

namespace dtsp {

HeldKarpResult held_karp(const std::vector<double>& cost, std::size_t n, std::size_t cap) {
  if (n > cap) throw CapExceeded("held_karp", n, cap);
  if (cost.size() != n * n) throw ValidationError("held_karp: matrix size does not match city count");
  HeldKarpResult res;
  if (n == 0) return res;
  res.order.push_back(0);
  if (n == 1) return res;

  // Cities 1..n-1 map to bits 0..n-2; dp[mask * k + j] is the cheapest path
  // 0 -> ... -> (j + 1) visiting exactly `mask`.
  const std::size_t k = n - 1;
  const std::size_t full = (std::size_t{1} << k) - 1;
  std::vector<double> dp((full + 1) * k, kExcluded);
  std::vector<std::uint8_t> parent((full + 1) * k, 0xff);
  auto c = [&](std::size_t i, std::size_t j) { return cost[i * n + j]; };

  for (std::size_t j = 0; j < k; ++j) dp[(std::size_t{1} << j) * k + j] = c(0, j + 1);
  for (std::size_t mask = 1; mask <= full; ++mask) {
    for (std::size_t j = 0; j < k; ++j) {
      if (!(mask >> j & 1)) continue;
      const double here = dp[mask * k + j];
      if (here == kExcluded) continue;
      for (std::size_t t = 0; t < k; ++t) {
        if (mask >> t & 1) continue;
        const std::size_t next = mask | (std::size_t{1} << t);
        const double v = here + c(j + 1, t + 1);
        if (v < dp[next * k + t]) {
          dp[next * k + t] = v;
          parent[next * k + t] = static_cast<std::uint8_t>(j);
        }
      }
    }
  }

  double best = kExcluded;
  std::size_t last = 0;
  for (std::size_t j = 0; j < k; ++j) {
    const double v = dp[full * k + j] + c(j + 1, 0);
    if (v < best) {
      best = v;
      last = j;
    }
  }
  if (best == kExcluded) throw ValidationError("held_karp: no finite tour exists");

  std::vector<std::size_t> rev;
  std::size_t mask = full, j = last;
  while (true) {
    rev.push_back(j + 1);
    const std::uint8_t p = parent[mask * k + j];
    mask &= ~(std::size_t{1} << j);
    if (p == 0xff) break;
    j = p;
  }
  res.order.insert(res.order.end(), rev.rbegin(), rev.rend());
  // Recompute along the order so the cost matches a leg-by-leg sum exactly.
  res.cost = 0.0;
  for (std::size_t i = 0; i < n; ++i) res.cost += c(res.order[i], res.order[(i + 1) % n]);
  return res;
}

}  // namespace dtsp
