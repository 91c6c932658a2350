#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "dtsp/error.hpp"
#include "dtsp/interval.hpp"

namespace dtsp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kMargin = 1e-9;
// Blocks at or below this many grid points are evaluated point by point.
constexpr std::size_t kLeafPoints = 16;

std::vector<double> grid_points(const AngleInterval& i, int n) {
  if (n == 1 || i.width() == 0.0) return {i.lo()};
  std::vector<double> pts(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) pts[k] = i.lo() + i.width() * k / (n - 1);
  pts.back() = i.hi();
  return pts;
}

// Smallest arc_angle(x) over x in [lo, lo + width], with a little room for
// the rounding of the exact constructions near a full turn.
double arc_lower(double lo, double width) {
  if (width >= kTwoPi) return 0.0;
  const double w = normalize_angle(lo);
  return w + width >= kTwoPi - kArcSnap - 1e-9 ? 0.0 : w;
}

// Directions of v + e over |e| <= r lie in [center - spread, center + spread].
struct AngleRange {
  double center, spread;
};

AngleRange direction_range(double vx, double vy, double r) {
  const double len = std::hypot(vx, vy);
  if (len <= r) return {0.0, kPi};
  return {std::atan2(vy, vx), std::asin(r / len)};
}

// Lower bound on the normalized shortest length over a block of frame-relative
// start headings [a_lo, a_hi] and goal headings [b_lo, b_hi]. Each turning
// circle center moves at most half a block width away from its position at
// the block's middle heading, so every center gap is known to within r. Each
// word's tangent headings then lie in computable ranges, and each arc is
// bounded below separately.
double block_lower_bound(double a_lo, double a_hi, double b_lo, double b_hi, double d) {
  const double wa = a_hi - a_lo, wb = b_hi - b_lo;
  const double r = (wa + wb) / 2.0;
  const detail::PoseCircles a = detail::start_circles((a_lo + a_hi) / 2.0);
  const detail::PoseCircles b = detail::end_circles(d, (b_lo + b_hi) / 2.0);
  double best = kInf;

  // LSL / RSR: tangent heading is the center direction.
  auto outer = [&](double vx, double vy, bool left) {
    const double len = std::hypot(vx, vy);
    const double p = std::max(0.0, len - r);
    if (len <= r) return p + (left ? arc_lower(b_lo - a_hi, wa + wb) : arc_lower(a_lo - b_hi, wa + wb));
    const AngleRange dir = direction_range(vx, vy, r);
    const double h_lo = dir.center - dir.spread, hw = 2.0 * dir.spread;
    if (left) return p + arc_lower(h_lo - a_hi, hw + wa) + arc_lower(b_lo - (h_lo + hw), hw + wb);
    return p + arc_lower(a_lo - (h_lo + hw), hw + wa) + arc_lower(h_lo - b_hi, hw + wb);
  };
  best = std::min(best, outer(b.lx - a.lx, b.ly - a.ly, true));
  best = std::min(best, outer(b.rx - a.rx, b.ry - a.ry, false));

  // RSL / LSR: center direction tilted by atan2(2, p).
  auto inner = [&](double vx, double vy, bool left_first) {
    const double len = std::hypot(vx, vy);
    if (len + r < 2.0 - 1e-6) return kInf;
    const double d_lo = std::max(0.0, len - r), d_hi = len + r;
    const double p_lo = d_lo > 2.0 ? std::sqrt(d_lo * d_lo - 4.0) : 0.0;
    const double p_hi = std::sqrt(d_hi * d_hi - 4.0);
    const AngleRange dir = direction_range(vx, vy, r);
    const double tilt_lo = std::atan2(2.0, p_hi), tilt_hi = std::atan2(2.0, p_lo);
    double h_lo, h_hi;
    if (left_first) {
      h_lo = dir.center - dir.spread + tilt_lo;
      h_hi = dir.center + dir.spread + tilt_hi;
    } else {
      h_lo = dir.center - dir.spread - tilt_hi;
      h_hi = dir.center + dir.spread - tilt_lo;
    }
    const double hw = h_hi - h_lo;
    if (left_first) return p_lo + arc_lower(h_lo - a_hi, hw + wa) + arc_lower(h_lo - b_hi, hw + wb);
    return p_lo + arc_lower(a_lo - h_hi, hw + wa) + arc_lower(b_lo - h_hi, hw + wb);
  };
  best = std::min(best, inner(b.lx - a.rx, b.ly - a.ry, false));
  best = std::min(best, inner(b.rx - a.lx, b.ry - a.ly, true));

  // RLR / LRL: with v the outer-center gap and s = acos(|v|/4), the middle
  // circle sits at angle dir(v) +- s from the first center and sees the second
  // center at dir(v) -+ s.
  auto ccc = [&](double vx, double vy, bool left_outer) {
    const double len = std::hypot(vx, vy);
    const double d_lo = std::max(0.0, len - r), d_hi = len + r;
    if (d_lo > 4.0 + 1e-6) return kInf;
    // Nearly concentric outer circles: the middle arc may snap to zero.
    if (d_lo < 1e-6) return 0.0;
    const double s_lo = std::acos(std::min(1.0, d_hi / 4.0)), s_hi = std::acos(std::min(1.0, d_lo / 4.0));
    const AngleRange dir = direction_range(vx, vy, r);
    const double c_lo = dir.center - dir.spread, cw = 2.0 * dir.spread, sw = s_hi - s_lo;
    double lo = kInf;
    for (double sign : {1.0, -1.0}) {
      // gamma = dir + sign s, gamma2 = dir - sign s
      const double g1_lo = c_lo + (sign > 0 ? s_lo : -s_hi);
      const double g2_lo = c_lo + (sign > 0 ? -s_hi : s_lo);
      const double gw = cw + sw;
      double total;
      if (left_outer) {
        const double h1_lo = g1_lo + kPi / 2.0, h2_lo = g2_lo - kPi / 2.0;
        const double mid_lo = sign > 0 ? kPi + 2.0 * s_lo : kPi - 2.0 * s_hi;
        total = arc_lower(h1_lo - a_hi, gw + wa) + arc_lower(mid_lo, 2.0 * sw) + arc_lower(b_lo - (h2_lo + gw), gw + wb);
      } else {
        const double h1_lo = g1_lo - kPi / 2.0, h2_lo = g2_lo + kPi / 2.0;
        const double mid_lo = sign > 0 ? kPi - 2.0 * s_hi : kPi + 2.0 * s_lo;
        total = arc_lower(a_lo - (h1_lo + gw), gw + wa) + arc_lower(mid_lo, 2.0 * sw) + arc_lower(h2_lo - b_hi, gw + wb);
      }
      lo = std::min(lo, total);
    }
    return lo;
  };
  if (d <= 6.0 + r) {
    best = std::min(best, ccc(b.rx - a.rx, b.ry - a.ry, false));
    best = std::min(best, ccc(b.lx - a.lx, b.ly - a.ly, true));
  }
  return std::max(best, d);
}

struct Search {
  const std::vector<double>& t1;  // grid headings (original frame)
  const std::vector<double>& t2;
  std::vector<detail::PoseCircles> starts, ends;
  double base, d;
  double best;
  bool found = false;
  std::size_t bi = 0, bj = 0;

  void leaf(std::size_t i0, std::size_t i1, std::size_t j0, std::size_t j1) {
    for (std::size_t i = i0; i < i1; ++i) {
      for (std::size_t j = j0; j < j1; ++j) {
        const double v = detail::shortest_normalized(starts[i], ends[j], best);
        if (v < best) {
          best = v;
          found = true;
          bi = i;
          bj = j;
        }
      }
    }
  }

  double bound(std::size_t i0, std::size_t i1, std::size_t j0, std::size_t j1) const {
    return block_lower_bound(t1[i0] - base, t1[i1 - 1] - base, t2[j0] - base, t2[j1 - 1] - base, d);
  }

  void run(std::size_t i0, std::size_t i1, std::size_t j0, std::size_t j1) {
    if ((i1 - i0) * (j1 - j0) <= kLeafPoints) {
      leaf(i0, i1, j0, j1);
      return;
    }
    struct Child {
      std::size_t i0, i1, j0, j1;
      double lb;
    };
    Child kids[4];
    int n = 0;
    const std::size_t im = i1 - i0 > 1 ? (i0 + i1) / 2 : i1;
    const std::size_t jm = j1 - j0 > 1 ? (j0 + j1) / 2 : j1;
    for (auto [a0, a1] : {std::pair{i0, im}, std::pair{im, i1}}) {
      if (a0 == a1) continue;
      for (auto [b0, b1] : {std::pair{j0, jm}, std::pair{jm, j1}}) {
        if (b0 == b1) continue;
        kids[n++] = {a0, a1, b0, b1, bound(a0, a1, b0, b1)};
      }
    }
    // Most promising block first so the running minimum drops early.
    std::stable_sort(kids, kids + n, [](const Child& x, const Child& y) { return x.lb < y.lb; });
    for (int k = 0; k < n; ++k) {
      if (kids[k].lb - kMargin >= best) continue;
      run(kids[k].i0, kids[k].i1, kids[k].j0, kids[k].j1);
    }
  }
};

}  // namespace

GridOracleResult grid_oracle(Point p1, const AngleInterval& i1, Point p2, const AngleInterval& i2, TurnRadius rho,
                             int n_grid, double cutoff) {
  if (n_grid < 2) throw ValidationError("grid_oracle needs n_grid >= 2");
  const double r = rho.value();
  const double dx = p2.x - p1.x, dy = p2.y - p1.y;
  const double base = (dx == 0.0 && dy == 0.0) ? 0.0 : std::atan2(dy, dx);

  const std::vector<double> t1 = grid_points(i1, n_grid);
  const std::vector<double> t2 = grid_points(i2, n_grid);
  Search s{t1, t2, {}, {}, base, std::hypot(dx, dy) / r, cutoff / r};
  s.starts.reserve(t1.size());
  s.ends.reserve(t2.size());
  for (double t : t1) s.starts.push_back(detail::start_circles(normalize_angle(t) - base));
  for (double t : t2) s.ends.push_back(detail::end_circles(s.d, normalize_angle(t) - base));
  s.run(0, t1.size(), 0, t2.size());

  GridOracleResult res;
  if (!s.found) {
    res.value = cutoff;
    return res;
  }
  res.found = true;
  res.theta1 = t1[s.bi];
  res.theta2 = t2[s.bj];
  res.value = dubins_shortest({p1, res.theta1}, {p2, res.theta2}, rho).total;
  return res;
}

}  // namespace dtsp
