#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>
#include <utility>

#include "dtsp/interval.hpp"

namespace dtsp {

namespace {

// Existence slack on squared lengths normalized by rho^2.
constexpr double kGeomSlack = 1e-9;
// Heading membership slack for candidates.
constexpr double kAngleSlack = 1e-12;

struct Vec {
  double x, y;
};

Vec operator+(Vec a, Vec b) { return {a.x + b.x, a.y + b.y}; }
Vec operator-(Vec a, Vec b) { return {a.x - b.x, a.y - b.y}; }
Vec operator*(double s, Vec a) { return {s * a.x, s * a.y}; }
double dot(Vec a, Vec b) { return a.x * b.x + a.y * b.y; }
double norm(Vec a) { return std::hypot(a.x, a.y); }

// Right-turn circle of heading theta at the origin.
Vec right_center_at_origin(double theta, double rho) { return {rho * std::sin(theta), -rho * std::cos(theta)}; }
// Left-turn circle of heading theta at (xbar, 0).
Vec left_center_at_goal(double xbar, double theta, double rho) {
  return {xbar - rho * std::sin(theta), rho * std::cos(theta)};
}

// Intersections of circle(c0, r0) and circle(c1, r1); tangency is snapped.
std::vector<Vec> circle_intersections(Vec c0, double r0, Vec c1, double r1, double scale) {
  const Vec e = c1 - c0;
  const double dist = norm(e);
  if (dist == 0.0) return {};
  const double tol = kGeomSlack * scale;
  if (dist > r0 + r1 + tol || dist < std::abs(r0 - r1) - tol) return {};
  const double a = (dist * dist + r0 * r0 - r1 * r1) / (2.0 * dist);
  const double h2 = r0 * r0 - a * a;
  const double h = std::sqrt(std::max(0.0, h2));
  const Vec u = (1.0 / dist) * e;
  const Vec perp{-u.y, u.x};
  const Vec mid = c0 + a * u;
  if (h == 0.0) return {mid};
  return {mid + h * perp, mid - h * perp};
}

// RL geometry from both headings once the circle centers are known.
TwoSegmentGeometry rl_build(double theta1, double theta2, Vec c1, Vec c2, double rho) {
  const Vec dv = c2 - c1;
  TwoSegmentGeometry g;
  g.kind = TwoSegmentKind::RL;
  g.theta1 = normalize_angle(theta1);
  g.theta2 = normalize_angle(theta2);
  g.phi = normalize_angle(std::atan2(dv.x, dv.y));
  g.arc1 = arc_angle(g.theta1 + g.phi);
  g.arc2 = arc_angle(g.theta2 + g.phi);
  g.straight_len = 0.0;
  g.total = rho * (g.arc1 + g.arc2);
  g.branch = g.arc2 <= kPi ? Branch::short_arc : Branch::long_arc;
  return g;
}

class CandidateSet {
 public:
  CandidateSet(TwoSegmentKind kind, const HeadingSector& s1, const HeadingSector& s2) : kind_(kind), s1_(s1), s2_(s2) {}

  void offer(const TwoSegmentGeometry& g, Extremum which, bool degenerate = false) {
    Candidate c;
    c.label.source = degenerate ? CandidateLabel::Source::degenerate : CandidateLabel::Source::two_segment;
    c.label.kind = kind_;
    c.label.which = which;
    c.label.branch = g.branch;
    c.theta1 = g.theta1;
    c.theta2 = g.theta2;
    if (s1_.contains(g.theta1, kAngleSlack) && s2_.contains(g.theta2, kAngleSlack)) {
      c.value = g.total;
      if (!result_.best || g.total < result_.best->total) result_.best = g;
    }
    result_.candidates.push_back(c);
  }

  void missing(Extremum which) {
    Candidate c;
    c.label.source = CandidateLabel::Source::two_segment;
    c.label.kind = kind_;
    c.label.which = which;
    result_.candidates.push_back(c);
  }

  TwoSegmentResult take() { return std::move(result_); }

 private:
  TwoSegmentKind kind_;
  HeadingSector s1_, s2_;
  TwoSegmentResult result_;
};

TwoSegmentGeometry pure_arc(TwoSegmentKind kind, double theta1, double theta2, double turn, double rho,
                            bool second = false) {
  TwoSegmentGeometry g;
  g.kind = kind;
  g.theta1 = normalize_angle(theta1);
  g.theta2 = normalize_angle(theta2);
  (second ? g.arc2 : g.arc1) = turn;
  g.total = rho * turn;
  g.phi = normalize_angle(-theta2);
  if (kind == TwoSegmentKind::RL) g.branch = g.arc2 <= kPi ? Branch::short_arc : Branch::long_arc;
  return g;
}

}  // namespace

bool HeadingSector::contains(double theta, double slack) const noexcept {
  if (width >= kTwoPi - slack) return true;
  const double off = normalize_angle(theta - start);
  return off <= width + slack || off >= kTwoPi - slack;
}

std::optional<TwoSegmentGeometry> rs_from_departure(double xbar, double theta1, TurnRadius rho) noexcept {
  const double r = rho.value();
  const Vec c = right_center_at_origin(theta1, r);
  const Vec v = Vec{xbar, 0.0} - c;
  const double l2 = dot(v, v) - r * r;
  if (l2 < -kGeomSlack * r * r) return std::nullopt;
  const double len = std::sqrt(std::max(0.0, l2));
  const double h = std::atan2(v.y, v.x) - std::atan2(r, len);
  TwoSegmentGeometry g;
  g.kind = TwoSegmentKind::RS;
  g.theta1 = normalize_angle(theta1);
  g.theta2 = normalize_angle(h);
  g.phi = normalize_angle(-h);
  g.arc1 = arc_angle(g.theta1 - h);
  g.straight_len = len;
  g.total = r * g.arc1 + len;
  return g;
}

std::vector<TwoSegmentGeometry> rs_from_arrival(double xbar, double theta2, TurnRadius rho) {
  const double r = rho.value();
  const Vec u{std::cos(theta2), std::sin(theta2)};
  const Vec w = Vec{xbar, 0.0} + r * Vec{u.y, -u.x};
  const double b = dot(u, w);
  const double disc = b * b - dot(w, w) + r * r;
  std::vector<TwoSegmentGeometry> out;
  if (disc < -kGeomSlack * r * r) return out;
  const double sq = std::sqrt(std::max(0.0, disc));
  for (double len : {b - sq, b + sq}) {
    if (len < -kGeomSlack * r) continue;
    len = std::max(0.0, len);
    const Vec c = w - len * u;
    TwoSegmentGeometry g;
    g.kind = TwoSegmentKind::RS;
    g.theta1 = normalize_angle(std::atan2(-c.y, -c.x) - kPi / 2.0);
    g.theta2 = normalize_angle(theta2);
    g.phi = normalize_angle(-theta2);
    g.arc1 = arc_angle(g.theta1 - theta2);
    g.straight_len = len;
    g.total = r * g.arc1 + len;
    out.push_back(g);
    if (sq == 0.0) break;
  }
  return out;
}

std::vector<TwoSegmentGeometry> rl_from_departure(double xbar, double theta1, TurnRadius rho) {
  const double r = rho.value();
  const Vec c1 = right_center_at_origin(theta1, r);
  const Vec goal{xbar, 0.0};
  std::vector<TwoSegmentGeometry> out;
  for (Vec c2 : circle_intersections(c1, 2.0 * r, goal, r, r)) {
    const Vec off = c2 - goal;
    const double theta2 = std::atan2(-off.x, off.y);
    out.push_back(rl_build(theta1, theta2, c1, c2, r));
  }
  return out;
}

std::vector<TwoSegmentGeometry> rl_from_arrival(double xbar, double theta2, TurnRadius rho) {
  const double r = rho.value();
  const Vec c2 = left_center_at_goal(xbar, theta2, r);
  std::vector<TwoSegmentGeometry> out;
  for (Vec c1 : circle_intersections(c2, 2.0 * r, Vec{0.0, 0.0}, r, r)) {
    const double theta1 = std::atan2(c1.x, -c1.y);
    out.push_back(rl_build(theta1, theta2, c1, c2, r));
  }
  return out;
}

TwoSegmentResult opt_rs(double xbar, const HeadingSector& s1, const HeadingSector& s2, TurnRadius rho) {
  const double r = rho.value();
  CandidateSet set(TwoSegmentKind::RS, s1, s2);

  // d_S: the straight line, heading 0 in this frame.
  {
    TwoSegmentGeometry g;
    g.kind = TwoSegmentKind::RS;
    g.straight_len = xbar;
    g.total = xbar;
    set.offer(g, Extremum::straight, true);
  }

  // d_R: both right arcs through the two targets.
  if (xbar <= 2.0 * r) {
    const double half = std::asin(std::clamp(xbar / (2.0 * r), 0.0, 1.0));
    set.offer(pure_arc(TwoSegmentKind::RS, half, -half, 2.0 * half, r), Extremum::arc_r, true);
    set.offer(pure_arc(TwoSegmentKind::RS, kPi - half, kPi + half, kTwoPi - 2.0 * half, r), Extremum::arc_r, true);
  }

  // The length grows monotonically in theta1 on (0, 2pi), so only the lower
  // end of I1 matters among the departure-side boundaries.
  if (auto g = rs_from_departure(xbar, s1.start, rho)) {
    set.offer(*g, Extremum::theta1_min);
  } else {
    set.missing(Extremum::theta1_min);
  }

  const std::pair<double, Extremum> arrivals[] = {{s2.start, Extremum::theta2_min}, {s2.end(), Extremum::theta2_max}};
  for (auto [theta2, which] : arrivals) {
    auto gs = rs_from_arrival(xbar, theta2, rho);
    if (gs.empty()) set.missing(which);
    for (const auto& g : gs) set.offer(g, which);
  }
  return set.take();
}

TwoSegmentResult opt_rl(double xbar, const HeadingSector& s1, const HeadingSector& s2, TurnRadius rho) {
  const double r = rho.value();
  CandidateSet set(TwoSegmentKind::RL, s1, s2);
  if (xbar > 4.0 * r * (1.0 + kGeomSlack)) return set.take();

  auto from_departure = [&](double theta1, Extremum which) {
    auto gs = rl_from_departure(xbar, theta1, rho);
    if (gs.empty()) set.missing(which);
    for (const auto& g : gs) set.offer(g, which);
  };

  from_departure(s1.start, Extremum::theta1_min);
  from_departure(s1.end(), Extremum::theta1_max);
  for (auto [theta2, which] : {std::pair{s2.start, Extremum::theta2_min}, std::pair{s2.end(), Extremum::theta2_max}}) {
    auto gs = rl_from_arrival(xbar, theta2, rho);
    if (gs.empty()) set.missing(which);
    for (const auto& g : gs) set.offer(g, which);
  }

  // Interior minimum: theta2(theta1) == theta1, i.e. sin(theta1) = xbar / 4 rho.
  {
    const double s = std::clamp(xbar / (4.0 * r), -1.0, 1.0);
    const double a = std::asin(s);
    from_departure(a, Extremum::stationary);
    from_departure(kPi - a, Extremum::stationary);
  }

  {
    // Branches merge where the goal is 3 rho from the first circle's center.
    const double s = (xbar * xbar - 8.0 * r * r) / (2.0 * xbar * r);
    if (s <= 1.0 + kGeomSlack && s >= -1.0 - kGeomSlack) {
      const double a = std::asin(std::clamp(s, -1.0, 1.0));
      from_departure(a, Extremum::merge);
      from_departure(kPi - a, Extremum::merge);
    }
  }
  if (xbar <= 2.0 * r) {
    // One of the two arcs vanishes: single right or left arcs through both targets.
    const double half = std::asin(std::clamp(xbar / (2.0 * r), 0.0, 1.0));
    set.offer(pure_arc(TwoSegmentKind::RL, half, -half, 2.0 * half, r), Extremum::arc_r, true);
    set.offer(pure_arc(TwoSegmentKind::RL, kPi - half, kPi + half, kTwoPi - 2.0 * half, r), Extremum::arc_r, true);
    set.offer(pure_arc(TwoSegmentKind::RL, -half, half, 2.0 * half, r, true), Extremum::arc_l, true);
    set.offer(pure_arc(TwoSegmentKind::RL, kPi + half, kPi - half, kTwoPi - 2.0 * half, r, true), Extremum::arc_l, true);
  }
  return set.take();
}

std::pair<double, double> ReflectedProblem::back_map(double t1, double t2) const noexcept {
  if (swapped) std::swap(t1, t2);
  if (mirrored) {
    t1 = -t1;
    t2 = -t2;
  }
  return {normalize_angle(t1), normalize_angle(t2)};
}

ReflectedProblem reflect_problem(TwoSegmentKind kind, const HeadingSector& s1, const HeadingSector& s2) noexcept {
  ReflectedProblem p;
  switch (kind) {
    case TwoSegmentKind::RS:
      p = {TwoSegmentKind::RS, s1, s2, false, false};
      break;
    case TwoSegmentKind::LS:
      p = {TwoSegmentKind::RS, s1.mirrored(), s2.mirrored(), true, false};
      break;
    case TwoSegmentKind::SR:
      // Reversed, SR becomes LS from target 2 to target 1; the half-turn about
      // the midpoint and a mirror bring it back to RS.
      p = {TwoSegmentKind::RS, s2.mirrored(), s1.mirrored(), true, true};
      break;
    case TwoSegmentKind::SL:
      p = {TwoSegmentKind::RS, s2, s1, false, true};
      break;
    case TwoSegmentKind::RL:
      p = {TwoSegmentKind::RL, s1, s2, false, false};
      break;
    case TwoSegmentKind::LR:
      p = {TwoSegmentKind::RL, s1.mirrored(), s2.mirrored(), true, false};
      break;
  }
  return p;
}

TwoSegmentResult opt_two_segment(TwoSegmentKind kind, double xbar, const HeadingSector& s1, const HeadingSector& s2,
                                 TurnRadius rho) {
  const ReflectedProblem p = reflect_problem(kind, s1, s2);
  TwoSegmentResult res =
      p.base == TwoSegmentKind::RS ? opt_rs(xbar, p.s1, p.s2, rho) : opt_rl(xbar, p.s1, p.s2, rho);
  if (kind == p.base) return res;
  for (auto& c : res.candidates) {
    std::tie(c.theta1, c.theta2) = p.back_map(c.theta1, c.theta2);
    c.label.kind = kind;
  }
  if (res.best) {
    std::tie(res.best->theta1, res.best->theta2) = p.back_map(res.best->theta1, res.best->theta2);
    res.best->kind = kind;
  }
  return res;
}

std::optional<LrlGeometry> lrl_geometry(double theta2, double xbar, double ybar, TurnRadius rho) noexcept {
  const double r = rho.value();
  // Sum of unit vectors at alpha and -beta equals (a, b).
  const double a = (xbar / r - std::sin(theta2)) / 2.0;
  const double b = (std::cos(theta2) + ybar / r - 1.0) / 2.0;
  const double len = std::hypot(a, b);
  if (len > 2.0 || len < 1e-12) return std::nullopt;
  const double mean = std::atan2(b, a);
  const double spread = std::acos(std::clamp(len / 2.0, 0.0, 1.0));

  const double alpha0 = mean + spread;
  const double sum = 2.0 * spread;  // alpha + beta, in (0, pi)
  LrlGeometry g;
  g.arcs[0] = arc_angle(alpha0 + kPi / 2.0);
  g.arcs[1] = sum + kPi;
  g.alpha = g.arcs[0] - kPi / 2.0;
  g.beta = sum - g.alpha;
  g.arcs[2] = arc_angle(theta2 + g.beta + kPi / 2.0);
  g.theta2 = g.arcs[2] - g.beta - kPi / 2.0;
  g.total = r * (g.arcs[0] + g.arcs[1] + g.arcs[2]);
  return g;
}

double lrl_length_derivative(const LrlGeometry& g, TurnRadius rho) noexcept {
  const double s = std::sin(g.alpha + g.beta);
  return rho.value() * (std::cos(g.theta2 - g.alpha) / s + std::cos(g.theta2 + g.beta) / s + 1.0);
}

}  // namespace dtsp
