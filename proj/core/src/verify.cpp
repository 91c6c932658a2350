#include "dtsp/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "dtsp/brute_force.hpp"
#include "dtsp/interval.hpp"
#include "dtsp/transform.hpp"

namespace dtsp {

namespace {

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::size_t pick(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
}

AngleInterval random_interval(std::mt19937_64& rng) {
  const double u = uniform(rng, 0.0, 1.0);
  double w;
  if (u < 0.1) {
    w = 0.0;
  } else if (u < 0.2) {
    w = kTwoPi;
  } else {
    w = uniform(rng, 0.0, kTwoPi);
  }
  const double lo = uniform(rng, 0.0, kTwoPi - w);
  return {lo, std::min(lo + w, kTwoPi)};
}

struct IntervalCase {
  Point p1, p2;
  AngleInterval i1 = AngleInterval::full();
  AngleInterval i2 = AngleInterval::full();
  double rho = 100.0;
};

// Half of the cases put the second target within 4.5 rho of the first, where
// CCC words and the two-segment optimizers matter most.
IntervalCase random_case(std::mt19937_64& rng) {
  IntervalCase c;
  c.rho = uniform(rng, 50.0, 200.0);
  c.p1 = {uniform(rng, 0.0, 1000.0), uniform(rng, 0.0, 1000.0)};
  const double u = uniform(rng, 0.0, 1.0);
  if (u < 0.01) {
    c.p2 = c.p1;
  } else if (u < 0.5) {
    c.p2 = {uniform(rng, 0.0, 1000.0), uniform(rng, 0.0, 1000.0)};
  } else {
    do {
      const double r = uniform(rng, 0.0, 4.5 * c.rho), a = uniform(rng, 0.0, kTwoPi);
      c.p2 = {c.p1.x + r * std::cos(a), c.p1.y + r * std::sin(a)};
    } while (c.p2.x < 0.0 || c.p2.x > 1000.0 || c.p2.y < 0.0 || c.p2.y > 1000.0);
  }
  c.i1 = random_interval(rng);
  c.i2 = random_interval(rng);
  return c;
}

std::string describe(const IntervalCase& c) {
  std::ostringstream s;
  s.precision(17);
  s << "p1=(" << c.p1.x << "," << c.p1.y << ") I1=[" << c.i1.lo() << "," << c.i1.hi() << "] p2=(" << c.p2.x << ","
    << c.p2.y << ") I2=[" << c.i2.lo() << "," << c.i2.hi() << "] rho=" << c.rho;
  return s.str();
}

SuiteResult named(std::string name) {
  SuiteResult r;
  r.name = std::move(name);
  return r;
}

void record(SuiteResult& r, double error, bool failed, const std::string& what) {
  ++r.cases;
  r.max_error = std::max(r.max_error, error);
  if (failed) {
    if (r.failures == 0) r.first_failure = what;
    ++r.failures;
  }
}

std::vector<double> random_costs(std::mt19937_64& rng, std::size_t n, bool symmetric) {
  std::vector<double> c(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (symmetric && j < i) {
        c[i * n + j] = c[j * n + i];
      } else {
        c[i * n + j] = static_cast<double>(rng() % 101);
      }
    }
  }
  return c;
}

}  // namespace

std::vector<SuiteResult> interval_oracle_suite(const OracleSuiteOptions& options) {
  std::mt19937_64 rng(options.seed);
  SuiteResult ach = named("interval_achievability"), dom = named("interval_dominance");
  for (std::size_t s = 0; s < options.samples; ++s) {
    const IntervalCase c = random_case(rng);
    const TurnRadius rho(c.rho);
    const IntervalSolution sol = solve_interval(c.p1, c.i1, c.p2, c.i2, rho);

    const bool inside = c.i1.contains(sol.theta1, 1e-12) && c.i2.contains(sol.theta2, 1e-12);
    const double d = dubins_shortest({c.p1, sol.theta1}, {c.p2, sol.theta2}, rho).total;
    const double err = std::abs(d - sol.value);
    record(ach, err, !inside || !(err <= options.tolerance), describe(c));

    // Only grid points strictly below value - tolerance can be reported, and
    // any such point is a dominance failure.
    const GridOracleResult g =
        grid_oracle(c.p1, c.i1, c.p2, c.i2, rho, options.n_grid, sol.value - options.tolerance);
    record(dom, g.found ? sol.value - g.value : 0.0, g.found, describe(c));
  }
  return {ach, dom};
}

std::vector<SuiteResult> transformation_suite(const TransformSuiteOptions& options) {
  std::mt19937_64 rng(options.seed);
  SuiteResult nb = named("noon_bean_equivalence"), st = named("stsp_equivalence");

  for (std::size_t t = 0; t < options.trials; ++t) {
    const std::size_t k = pick(rng, 2, 5);
    std::vector<std::vector<AngleInterval>> sets(k);
    for (auto& s : sets) s.assign(pick(rng, 1, 3), AngleInterval::full());
    std::size_t nodes = 0;
    for (const auto& s : sets) nodes += s.size();
    std::vector<double> cost = random_costs(rng, nodes, false);
    const GtspInstance g(sets, std::move(cost), BoundMode::lower);

    const Tour brute = brute_force_gtsp(g);
    const AtspInstance a = noon_bean(g);
    const HeldKarpResult hk = held_karp(a.cost, a.n, 16);
    const double unshifted = hk.cost - static_cast<double>(k) * a.shift;
    const Tour decoded = decode_atsp_tour(g, a, hk.order);
    const double err = std::max(std::abs(unshifted - brute.cost), std::abs(decoded.cost - brute.cost));
    std::ostringstream what;
    what << "trial " << t << ": sets=" << k << " nodes=" << nodes << " brute=" << brute.cost << " atsp=" << unshifted;
    record(nb, err, err != 0.0, what.str());
  }

  for (std::size_t t = 0; t < options.trials; ++t) {
    const std::size_t n = pick(rng, 2, 6);
    AtspInstance a;
    a.n = n;
    a.cost = random_costs(rng, n, t % 4 == 0);
    const HeldKarpResult brute = brute_force_atsp(a.cost, n);
    const StspInstance s = atsp_to_stsp(a);
    const HeldKarpResult hk = held_karp(s.cost, s.n, 18);
    const std::vector<std::size_t> back = decode_stsp_tour(s, hk.order);
    const double err = std::max(std::abs(hk.cost - brute.cost), std::abs(cycle_cost(a.cost, n, back) - brute.cost));
    const bool structural = s.n == 3 * a.n;
    std::ostringstream what;
    what << "trial " << t << ": n=" << n << " brute=" << brute.cost << " stsp=" << hk.cost;
    record(st, err, err != 0.0 || !structural, what.str());
  }
  return {nb, st};
}

std::string format_verify(const std::vector<SuiteResult>& results) {
  std::ostringstream out;
  out << kVerifyHeader << '\n';
  for (const SuiteResult& r : results) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", r.max_error);
    out << r.name << ',' << r.cases << ',' << r.failures << ',' << buf << '\n';
  }
  return out.str();
}

}  // namespace dtsp
