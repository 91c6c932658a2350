#include "oracles.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace dtsp::testing {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct V {
  double x, y;
};

double turn_sign(SegmentType t) { return t == SegmentType::L ? 1.0 : -1.0; }

// Left normal of heading theta.
V left_normal(double theta) { return {-std::sin(theta), std::cos(theta)}; }

// Heading of motion at point p on a circle of center c, turning with sign s.
double heading_on_circle(V p, V c, double s, double rho) {
  const double wx = (p.x - c.x) / (s * rho), wy = (p.y - c.y) / (s * rho);
  return std::atan2(wx, -wy);
}

std::vector<DirectPath> curve_straight(double s, double xbar, double theta1, double rho) {
  const V n = left_normal(theta1);
  const V c{s * rho * n.x, s * rho * n.y};
  const V v{xbar - c.x, -c.y};
  const double d2 = v.x * v.x + v.y * v.y;
  if (d2 < rho * rho * (1.0 - 1e-9)) return {};
  const double len = std::sqrt(std::max(0.0, d2 - rho * rho));
  const double psi = std::atan2(v.y, v.x) + s * std::atan2(rho, len);
  DirectPath p;
  p.arc1 = arc_angle(s * (psi - theta1));
  p.straight = len;
  p.theta2 = normalize_angle(psi);
  p.total = rho * p.arc1 + len;
  return {p};
}

std::vector<DirectPath> straight_curve(double s, double xbar, double theta1, double rho) {
  const V u{std::cos(theta1), std::sin(theta1)};
  const V n = left_normal(theta1);
  const double ut = u.x * xbar, nt = n.x * xbar;
  const double disc = ut * ut - xbar * xbar + 2.0 * s * rho * nt;
  if (disc < -1e-9 * rho * rho) return {};
  const double sq = std::sqrt(std::max(0.0, disc));
  std::vector<DirectPath> out;
  int root = 0;
  for (double len : {ut - sq, ut + sq}) {
    const int r = root++;
    if (len < -1e-9 * rho) continue;
    len = std::max(0.0, len);
    const V c{len * u.x + s * rho * n.x, len * u.y + s * rho * n.y};
    DirectPath p;
    p.straight = len;
    p.theta2 = normalize_angle(heading_on_circle({xbar, 0.0}, c, s, rho));
    p.arc2 = arc_angle(s * (p.theta2 - theta1));
    p.total = len + rho * p.arc2;
    p.root = r;
    out.push_back(p);
  }
  return out;
}

std::vector<DirectPath> curve_curve(double s, double xbar, double theta1, double rho) {
  const V n = left_normal(theta1);
  const V c1{s * rho * n.x, s * rho * n.y};
  const V t{xbar, 0.0};
  // Centers at distance 2 rho from c1 and rho from the target.
  const V e{t.x - c1.x, t.y - c1.y};
  const double d = std::hypot(e.x, e.y);
  if (d == 0.0 || d > 3.0 * rho * (1.0 + 1e-12) || d < rho * (1.0 - 1e-12)) return {};
  const double a = (d * d + 4.0 * rho * rho - rho * rho) / (2.0 * d);
  const double h = std::sqrt(std::max(0.0, 4.0 * rho * rho - a * a));
  const V ue{e.x / d, e.y / d};
  std::vector<DirectPath> out;
  int root = 0;
  for (double sign : {1.0, -1.0}) {
    const V c2{c1.x + a * ue.x - sign * h * ue.y, c1.y + a * ue.y + sign * h * ue.x};
    const V q{(c1.x + c2.x) / 2.0, (c1.y + c2.y) / 2.0};
    const double psi = heading_on_circle(q, c1, s, rho);
    DirectPath p;
    p.arc1 = arc_angle(s * (psi - theta1));
    p.theta2 = normalize_angle(heading_on_circle(t, c2, -s, rho));
    p.arc2 = arc_angle(-s * (p.theta2 - psi));
    p.total = rho * (p.arc1 + p.arc2);
    p.root = root++;
    out.push_back(p);
  }
  return out;
}

// Signed heading difference in (-pi, pi].
double wrap_pi(double a) {
  double r = normalize_angle(a);
  return r > kPi ? r - kTwoPi : r;
}

struct Branch {
  TwoSegmentKind kind;
  double xbar, rho;
  int root;
  const HeadingSector* s2;

  std::optional<DirectPath> path(double theta1) const {
    for (const DirectPath& p : direct_two_segment(kind, xbar, theta1, rho)) {
      if (p.root == root) return p;
    }
    return std::nullopt;
  }
  double value(double theta1) const {
    const auto p = path(theta1);
    if (!p || !s2->contains(p->theta2, 1e-12)) return kInf;
    return p->total;
  }

  // Same continuous piece: both exist and the length does not jump by a full turn.
  bool joined(const std::optional<DirectPath>& p, const std::optional<DirectPath>& q) const {
    return p && q && std::abs(p->total - q->total) < rho;
  }

  // Last point of the piece containing `from`, moving towards `to`.
  double piece_end(double from, double to) const {
    const auto ref = path(from);
    double good = from, bad = to;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (good + bad);
      if (mid == good || mid == bad) break;
      (joined(ref, path(mid)) ? good : bad) = mid;
    }
    return good;
  }

  // Points of [a, c] where the constrained minimum can sit: the ends of each
  // continuous piece and every crossing of theta2 through an edge of s2.
  std::vector<double> breakpoints(double a, double c, const std::optional<DirectPath>& pa,
                                  const std::optional<DirectPath>& pc) const {
    std::vector<double> pts{a, c};
    if (!joined(pa, pc)) {
      if (pa) pts.push_back(piece_end(a, c));
      if (pc) pts.push_back(piece_end(c, a));
      if (!pa && !pc) return pts;
    }
    std::sort(pts.begin(), pts.end());
    std::vector<double> out = pts;
    if (s2->width >= kTwoPi) return out;
    for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
      const auto p = pts[k] == a ? pa : path(pts[k]);
      const auto q = pts[k + 1] == c ? pc : path(pts[k + 1]);
      if (!joined(p, q)) continue;
      for (double edge : {s2->start, s2->end()}) {
        const double d0 = wrap_pi(p->theta2 - edge), d1 = wrap_pi(q->theta2 - edge);
        if ((d0 < 0.0) == (d1 < 0.0) || std::abs(d0 - d1) > kPi / 2.0) continue;
        double lo = pts[k], hi = pts[k + 1];
        for (int it = 0; it < 200; ++it) {
          const double mid = 0.5 * (lo + hi);
          if (mid == lo || mid == hi) break;
          const auto pm = path(mid);
          if (!pm) break;
          ((wrap_pi(pm->theta2 - edge) < 0.0) == (d0 < 0.0) ? lo : hi) = mid;
        }
        out.push_back(lo);
        out.push_back(hi);
      }
    }
    return out;
  }
};

}  // namespace

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<DirectPath> direct_two_segment(TwoSegmentKind kind, double xbar, double theta1, double rho) {
  switch (kind) {
    case TwoSegmentKind::RS: return curve_straight(turn_sign(SegmentType::R), xbar, theta1, rho);
    case TwoSegmentKind::LS: return curve_straight(turn_sign(SegmentType::L), xbar, theta1, rho);
    case TwoSegmentKind::SR: return straight_curve(turn_sign(SegmentType::R), xbar, theta1, rho);
    case TwoSegmentKind::SL: return straight_curve(turn_sign(SegmentType::L), xbar, theta1, rho);
    case TwoSegmentKind::RL: return curve_curve(turn_sign(SegmentType::R), xbar, theta1, rho);
    case TwoSegmentKind::LR: return curve_curve(turn_sign(SegmentType::L), xbar, theta1, rho);
  }
  return {};
}

std::optional<double> one_d_oracle(TwoSegmentKind kind, double xbar, const HeadingSector& s1, const HeadingSector& s2,
                                   double rho, int n) {
  double best = kInf;
  std::vector<double> th(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) th[static_cast<std::size_t>(i)] = s1.start + s1.width * i / (n - 1);

  for (int root = 0; root < 2; ++root) {
    const Branch b{kind, xbar, rho, root, &s2};
    std::vector<double> f(th.size());
    std::vector<std::optional<DirectPath>> paths(th.size());
    for (std::size_t i = 0; i < th.size(); ++i) {
      paths[i] = b.path(th[i]);
      f[i] = b.value(th[i]);
      best = std::min(best, f[i]);
    }

    for (std::size_t i = 0; i + 1 < th.size(); ++i) {
      if (!paths[i] && !paths[i + 1]) continue;
      for (double x : b.breakpoints(th[i], th[i + 1], paths[i], paths[i + 1])) {
        if (x != th[i] && x != th[i + 1]) best = std::min(best, b.value(x));
      }
    }

    // Golden-section search around interior grid minima.
    for (std::size_t i = 1; i + 1 < th.size(); ++i) {
      if (!std::isfinite(f[i - 1]) || !std::isfinite(f[i + 1]) || f[i] > f[i - 1] || f[i] > f[i + 1]) continue;
      double a = th[i - 1], c = th[i + 1];
      const double g = (std::sqrt(5.0) - 1.0) / 2.0;
      double x1 = c - g * (c - a), x2 = a + g * (c - a);
      double f1 = b.value(x1), f2 = b.value(x2);
      for (int it = 0; it < 80; ++it) {
        if (f1 <= f2) {
          c = x2;
          x2 = x1;
          f2 = f1;
          x1 = c - g * (c - a);
          f1 = b.value(x1);
        } else {
          a = x1;
          x1 = x2;
          f1 = f2;
          x2 = a + g * (c - a);
          f2 = b.value(x2);
        }
      }
      best = std::min({best, f1, f2});
    }
  }
  if (!std::isfinite(best)) return std::nullopt;
  return best;
}

std::vector<LrlLimit> lrl_limit_paths(Point p1, double theta1, Point p2, double rho, bool mirrored) {
  // mirrored = false: LRL; true: RLR. s is the sign of the outer turns.
  const double s = mirrored ? -1.0 : 1.0;
  const V n = left_normal(theta1);
  const V c1{p1.x + s * rho * n.x, p1.y + s * rho * n.y};
  const V t{p2.x, p2.y};
  const V e{t.x - c1.x, t.y - c1.y};
  const double d = std::hypot(e.x, e.y);
  std::vector<LrlLimit> out;
  // The third circle sits 4 rho from the first (middle arc of pi) and rho from the target.
  if (d == 0.0 || d > 5.0 * rho || d < 3.0 * rho) return out;
  const double a = (d * d + 16.0 * rho * rho - rho * rho) / (2.0 * d);
  const double h = std::sqrt(std::max(0.0, 16.0 * rho * rho - a * a));
  const V ue{e.x / d, e.y / d};
  for (double sign : {1.0, -1.0}) {
    const V c3{c1.x + a * ue.x - sign * h * ue.y, c1.y + a * ue.y + sign * h * ue.x};
    const V c2{(c1.x + c3.x) / 2.0, (c1.y + c3.y) / 2.0};
    const V q{(c1.x + c2.x) / 2.0, (c1.y + c2.y) / 2.0};
    const double psi = heading_on_circle(q, c1, s, rho);
    const double theta2 = heading_on_circle(t, c3, s, rho);
    const double arc1 = arc_angle(s * (psi - theta1));
    const double arc3 = arc_angle(s * (theta2 - (psi - s * kPi)));
    out.push_back({normalize_angle(theta2), rho * (arc1 + kPi + arc3)});
  }
  return out;
}

}  // namespace dtsp::testing
