#include "dtsp/pipeline.hpp"

#include <chrono>
#include <cmath>

#include "dtsp/error.hpp"

namespace dtsp {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<Leg> lower_legs(const ProblemInstance& inst, const std::vector<Partition>& parts, const Tour& tour) {
  const TurnRadius rho(inst.rho);
  std::vector<Leg> legs;
  const std::size_t n = tour.order.size();
  if (n < 2) return legs;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t a = tour.order[i], b = tour.order[(i + 1) % n];
    const IntervalSolution s =
        solve_interval(inst.targets[a], parts[a][tour.choice[a]], inst.targets[b], parts[b][tour.choice[b]], rho);
    Leg leg{a, b, s.theta1, s.theta2, {}};
    leg.path = dubins_shortest({inst.targets[a], s.theta1}, {inst.targets[b], s.theta2}, rho);
    legs.push_back(leg);
  }
  return legs;
}

}  // namespace

std::string_view to_string(Strategy s) noexcept {
  switch (s) {
    case Strategy::exact: return "exact";
    case Strategy::relaxed: return "relaxed";
    case Strategy::automatic: return "auto";
  }
  return "?";
}

std::optional<Strategy> parse_strategy(std::string_view name) noexcept {
  if (name == "exact") return Strategy::exact;
  if (name == "relaxed") return Strategy::relaxed;
  if (name == "auto") return Strategy::automatic;
  return std::nullopt;
}

std::vector<double> euclidean_matrix(const std::vector<Point>& targets) {
  const std::size_t n = targets.size();
  std::vector<double> c(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) c[i * n + j] = distance(targets[i], targets[j]);
    }
  }
  return c;
}

LowerBoundResult lower_bound(const ProblemInstance& inst, std::size_t m, Strategy strategy,
                             const PipelineOptions& options) {
  validate_instance(inst);
  const std::size_t n = inst.targets.size();
  if (strategy == Strategy::automatic) strategy = n <= options.limits.exact_sets ? Strategy::exact : Strategy::relaxed;
  if (strategy == Strategy::exact && n > options.limits.exact_sets) {
    throw CapExceeded("exact lower bound (use --strategy relaxed)", n, options.limits.exact_sets);
  }
  const std::vector<Partition> parts(n, uniform_partition(m));
  const GtspInstance g = build_lower_matrix(inst.targets, parts, TurnRadius(inst.rho));

  LowerBoundResult r;
  r.m = m;
  r.strategy = strategy;
  if (strategy == Strategy::exact) {
    r.tour = solve_exact(g, options.limits);
    r.value = r.tour.cost;
  } else {
    r.value = set_level_relaxation(g, options.limits);
    r.tour = solve_heuristic(g, options.heuristic);
    r.heuristic_value = r.tour.cost;
  }
  r.legs = lower_legs(inst, parts, r.tour);
  return r;
}

UpperBoundResult upper_bound(const ProblemInstance& inst, std::size_t k, const PipelineOptions& options) {
  validate_instance(inst);
  const std::size_t n = inst.targets.size();
  const TurnRadius rho(inst.rho);
  const std::vector<double> h = uniform_headings(k, options.placement);
  const GtspInstance g = build_upper_matrix(inst.targets, std::vector<std::vector<double>>(n, h), rho);

  UpperBoundResult r;
  r.k = k;
  r.placement = options.placement;
  r.optimal = n <= options.limits.exact_sets;
  r.tour = r.optimal ? solve_exact(g, options.limits) : solve_heuristic(g, options.heuristic);

  // Each target is entered and left with the same heading, so this is a feasible Dubins tour.
  r.value = 0.0;
  if (n >= 2) {
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t a = r.tour.order[i], b = r.tour.order[(i + 1) % n];
      const double t1 = h[r.tour.choice[a]], t2 = h[r.tour.choice[b]];
      Leg leg{a, b, t1, t2, dubins_shortest({inst.targets[a], t1}, {inst.targets[b], t2}, rho)};
      r.value += leg.path.total;
      r.legs.push_back(leg);
    }
  }
  if (std::abs(r.value - r.tour.cost) > 1e-9 * std::max(1.0, r.tour.cost)) {
    throw Error("upper_bound: leg re-evaluation does not reproduce the tour cost");
  }
  return r;
}

EtspResult etsp(const ProblemInstance& inst, const PipelineOptions& options) {
  validate_instance(inst);
  const std::size_t n = inst.targets.size();
  const std::vector<double> c = euclidean_matrix(inst.targets);
  EtspResult r;
  if (n <= options.limits.relaxed_sets) {
    const HeldKarpResult hk = held_karp(c, n, options.limits.relaxed_sets);
    r.value = hk.cost;
    r.order = hk.order;
    r.optimal = true;
    return r;
  }
  std::vector<std::vector<AngleInterval>> sets(n, {AngleInterval::full()});
  const GtspInstance g(std::move(sets), c, BoundMode::lower);
  const Tour t = solve_heuristic(g, options.heuristic);
  r.value = t.cost;
  r.order = t.order;
  r.optimal = false;
  return r;
}

BoundReport compare_instance(const ProblemInstance& inst, const std::vector<std::size_t>& ms, std::size_t k,
                             Strategy strategy, const PipelineOptions& options) {
  BoundReport rep;
  rep.instance = inst.name;
  rep.n = inst.targets.size();
  rep.rho = inst.rho;
  auto t0 = std::chrono::steady_clock::now();
  rep.etsp = etsp(inst, options);
  rep.etsp_seconds = seconds_since(t0);
  for (std::size_t m : ms) {
    t0 = std::chrono::steady_clock::now();
    rep.lower.push_back(lower_bound(inst, m, strategy, options));
    rep.lower_seconds.push_back(seconds_since(t0));
  }
  if (k > 0) {
    t0 = std::chrono::steady_clock::now();
    rep.upper = upper_bound(inst, k, options);
    rep.upper_seconds = seconds_since(t0);
  }
  return rep;
}

}  // namespace dtsp
