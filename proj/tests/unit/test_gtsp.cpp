#include <random>

#include "doctest.h"
#include "dtsp/brute_force.hpp"
#include "dtsp/error.hpp"
#include "dtsp/gtsp.hpp"
#include "dtsp/instance.hpp"
#include "oracles.hpp"

using namespace dtsp;
using dtsp::testing::uniform;

namespace {

// Random GTSP with `sets` sets of 1..max_nodes nodes and costs in [0, 100).
GtspInstance random_gtsp(std::mt19937_64& rng, std::size_t sets, std::size_t max_nodes, bool symmetric = false) {
  std::vector<std::vector<AngleInterval>> headings(sets);
  std::size_t total = 0;
  for (auto& h : headings) {
    const std::size_t k = 1 + rng() % max_nodes;
    for (std::size_t c = 0; c < k; ++c) h.push_back(AngleInterval::point(kTwoPi * static_cast<double>(c) / static_cast<double>(k)));
    total += k;
  }
  std::vector<double> cost(total * total, 0.0);
  for (std::size_t u = 0; u < total; ++u) {
    for (std::size_t v = symmetric ? u + 1 : 0; v < total; ++v) {
      cost[u * total + v] = uniform(rng, 0.0, 100.0);
      if (symmetric) cost[v * total + u] = cost[u * total + v];
    }
  }
  return {std::move(headings), std::move(cost), BoundMode::upper};
}

void check_tour(const GtspInstance& g, const Tour& t) {
  REQUIRE(t.order.size() == g.num_sets());
  CHECK(t.order.front() == 0);
  std::vector<bool> seen(g.num_sets(), false);
  for (std::size_t s : t.order) {
    CHECK(!seen[s]);
    seen[s] = true;
    CHECK(t.choice[s] < g.set_size(s));
  }
  CHECK(t.cost == doctest::Approx(tour_cost(g, t.order, t.choice)).epsilon(1e-9));
}

std::vector<Point> random_points(std::mt19937_64& rng, std::size_t n) {
  std::vector<Point> pts(n);
  for (auto& p : pts) p = {uniform(rng, 0, 1000), uniform(rng, 0, 1000)};
  return pts;
}

}  // namespace

TEST_CASE("exact solver matches enumeration") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t sets = 1 + rng() % 6;
    const GtspInstance g = random_gtsp(rng, sets, 4);
    const Tour exact = solve_exact(g);
    const Tour brute = brute_force_gtsp(g);
    check_tour(g, exact);
    CHECK(exact.cost == doctest::Approx(brute.cost).epsilon(1e-12));

    const Tour h = solve_heuristic(g, {static_cast<std::uint64_t>(trial), 4});
    check_tour(g, h);
    CHECK(h.cost >= exact.cost - 1e-9);
    const Tour h2 = solve_heuristic(g, {static_cast<std::uint64_t>(trial), 4});
    CHECK(h2.order == h.order);
    CHECK(h2.choice == h.choice);
    CHECK(h2.cost == h.cost);

    const double relax = set_level_relaxation(g);
    CHECK(relax <= exact.cost + 1e-9);
  }
}

TEST_CASE("three single-node sets pick the better orientation") {
  const std::vector<double> c{0, 1, 10, 10, 0, 1, 1, 10, 0};
  const GtspInstance g({{AngleInterval::point(0)}, {AngleInterval::point(0)}, {AngleInterval::point(0)}}, c,
                       BoundMode::upper);
  const Tour t = solve_exact(g);
  CHECK(t.cost == 3.0);
  CHECK(t.order == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("symmetric costs give reversible tours") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const GtspInstance g = random_gtsp(rng, 5, 3, true);
    const Tour t = solve_exact(g);
    std::vector<std::size_t> rev(t.order.rbegin(), t.order.rend());
    std::rotate(rev.begin(), std::find(rev.begin(), rev.end(), std::size_t{0}), rev.end());
    CHECK(tour_cost(g, rev, t.choice) == doctest::Approx(t.cost).epsilon(1e-12));
  }
}

TEST_CASE("set-level relaxation examples") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const GtspInstance g = random_gtsp(rng, 6, 1);
    CHECK(set_level_relaxation(g) == doctest::Approx(solve_exact(g).cost).epsilon(1e-12));
  }
  const GtspInstance two = random_gtsp(rng, 2, 3);
  double there = kExcluded, back = kExcluded;
  for (std::size_t a = 0; a < two.set_size(0); ++a) {
    for (std::size_t b = 0; b < two.set_size(1); ++b) {
      there = std::min(there, two.cost(GtspNode{0, a}, GtspNode{1, b}));
      back = std::min(back, two.cost(GtspNode{1, b}, GtspNode{0, a}));
    }
  }
  CHECK(set_level_relaxation(two) == doctest::Approx(there + back));
}

TEST_CASE("solver caps") {
  std::mt19937_64 rng(10);
  const GtspInstance g = random_gtsp(rng, 5, 2);
  CHECK_THROWS_AS(solve_exact(g, {4, 22}), CapExceeded);
  CHECK_THROWS_AS(set_level_relaxation(g, {16, 4}), CapExceeded);
  CHECK_THROWS_AS(held_karp(std::vector<double>(25, 1.0), 5, 4), CapExceeded);
  CHECK(held_karp({0.0}, 1).cost == 0.0);
}

TEST_CASE("held-karp matches enumeration") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng() % 8;
    std::vector<double> c(n * n);
    for (auto& x : c) x = uniform(rng, 0, 50);
    CHECK(held_karp(c, n).cost == doctest::Approx(brute_force_atsp(c, n).cost).epsilon(1e-12));
  }
}

TEST_CASE("partition validation") {
  CHECK_NOTHROW(validate_partition(uniform_partition(4), 0));
  CHECK_THROWS_AS(validate_partition({{0.0, 1.0}, {1.5, kTwoPi}}, 3), InvalidPartition);
  CHECK_THROWS_AS(validate_partition({{0.0, 2.0}, {1.0, kTwoPi}}, 0), InvalidPartition);
  CHECK_THROWS_AS(validate_partition({{0.0, 3.0}}, 0), InvalidPartition);
  try {
    validate_partition({{0.0, 1.0}, {1.5, kTwoPi}}, 3);
  } catch (const InvalidPartition& e) {
    CHECK(e.target() == 3);
  }
  const std::vector<Point> pts{{0, 0}, {100, 0}};
  CHECK_THROWS_AS(build_lower_matrix(pts, {uniform_partition(2), {{0.0, 1.0}}}, TurnRadius(10.0)), InvalidPartition);
}

TEST_CASE("lower and upper matrices") {
  std::mt19937_64 rng(13);
  const TurnRadius rho(100.0);
  const auto pts = random_points(rng, 5);

  const GtspInstance one = build_lower_matrix(pts, std::vector<Partition>(5, uniform_partition(1)), rho);
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) {
      if (i != j) CHECK(one.cost(i, j) == distance(pts[i], pts[j]));
    }
  }

  const GtspInstance four = build_lower_matrix(pts, std::vector<Partition>(5, uniform_partition(4)), rho);
  const GtspInstance eight = build_lower_matrix(pts, std::vector<Partition>(5, uniform_partition(8)), rho);
  const auto h4 = uniform_headings(4);
  const GtspInstance up4 = build_upper_matrix(pts, std::vector<std::vector<double>>(5, h4), rho);
  for (std::size_t u = 0; u < eight.num_nodes(); ++u) {
    for (std::size_t v = 0; v < eight.num_nodes(); ++v) {
      const GtspNode a = eight.node(u), b = eight.node(v);
      if (a.target == b.target) continue;
      CHECK(eight.cost(u, v) >= distance(pts[a.target], pts[b.target]));
      CHECK(eight.cost(u, v) >= four.cost(GtspNode{a.target, a.choice / 2}, GtspNode{b.target, b.choice / 2}) - 1e-9);
    }
  }
  // A heading at an interval endpoint is a pair inside both adjacent intervals.
  for (std::size_t u = 0; u < up4.num_nodes(); ++u) {
    for (std::size_t v = 0; v < up4.num_nodes(); ++v) {
      const GtspNode a = up4.node(u), b = up4.node(v);
      if (a.target == b.target) continue;
      CHECK(up4.cost(u, v) >= four.cost(a, b) - 1e-9);
      CHECK(up4.cost(u, v) ==
            dubins_shortest({pts[a.target], h4[a.choice]}, {pts[b.target], h4[b.choice]}, rho).total);
    }
  }

  const double lb4 = solve_exact(four).cost, lb8 = solve_exact(eight).cost;
  const double ub4 = solve_exact(up4).cost;
  CHECK(solve_exact(one).cost <= lb4 + 1e-9);
  CHECK(lb4 <= lb8 + 1e-9);
  CHECK(lb8 <= ub4 + 1e-9);
  CHECK(set_level_relaxation(eight) <= lb8 + 1e-9);

  double prev = std::numeric_limits<double>::infinity();
  for (std::size_t k : {1, 2, 4, 8}) {
    const GtspInstance up = build_upper_matrix(pts, std::vector<std::vector<double>>(5, uniform_headings(k)), rho);
    const double v = solve_exact(up).cost;
    CHECK(v <= prev + 1e-9);
    CHECK(v >= lb8 - 1e-9);
    prev = v;
  }
}
