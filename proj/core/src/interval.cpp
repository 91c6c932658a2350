#include "dtsp/interval.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dtsp/error.hpp"

namespace dtsp {

namespace {

// Targets closer than this (relative to rho) are treated as coincident.
constexpr double kCoincident = 1e-12;
// Returned angles may sit this far outside an interval before being clamped in.
constexpr double kPlaceSlack = 1e-9;

struct Best {
  const Candidate* winner = nullptr;
  double value = 0.0;

  void consider(const Candidate& c) {
    if (!c.value) return;
    if (!winner || *c.value < value) {
      winner = &c;
      value = *c.value;
    }
  }
};

double place_or_clamp(const AngleInterval& i, double theta) {
  if (auto t = i.place(theta, kPlaceSlack)) return *t;
  // Only reachable through rounding far beyond kPlaceSlack; pick the nearer end.
  const double to_lo = heading_distance(theta, i.lo());
  const double to_hi = heading_distance(theta, i.hi());
  return to_lo <= to_hi ? i.lo() : i.hi();
}

}  // namespace

AngleInterval::AngleInterval(double lo, double hi) : lo_(lo), hi_(hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || lo < 0.0 || hi > kTwoPi || lo > hi) {
    throw ValidationError("angle interval must satisfy 0 <= lo <= hi <= 2pi, got [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + "]");
  }
}

bool AngleInterval::contains_heading(double theta, double slack) const noexcept {
  if (width() >= kTwoPi - slack) return true;
  const double off = normalize_angle(theta - lo_);
  return off <= width() + slack || off >= kTwoPi - slack;
}

std::optional<double> AngleInterval::place(double theta, double slack) const noexcept {
  const double base = normalize_angle(theta);
  for (double t : {base, base + kTwoPi, base - kTwoPi}) {
    if (contains(t)) return t;
  }
  for (double t : {base, base + kTwoPi, base - kTwoPi}) {
    if (contains(t, slack)) return std::clamp(t, lo_, hi_);
  }
  return std::nullopt;
}

std::string_view to_string(TwoSegmentKind kind) noexcept {
  switch (kind) {
    case TwoSegmentKind::RS: return "RS";
    case TwoSegmentKind::SR: return "SR";
    case TwoSegmentKind::LS: return "LS";
    case TwoSegmentKind::SL: return "SL";
    case TwoSegmentKind::RL: return "RL";
    case TwoSegmentKind::LR: return "LR";
  }
  return "?";
}

std::string_view to_string(Extremum which) noexcept {
  switch (which) {
    case Extremum::theta1_min: return "theta1_min";
    case Extremum::theta1_max: return "theta1_max";
    case Extremum::theta2_min: return "theta2_min";
    case Extremum::theta2_max: return "theta2_max";
    case Extremum::stationary: return "stationary";
    case Extremum::merge: return "merge";
    case Extremum::straight: return "d_S";
    case Extremum::arc_r: return "d_R";
    case Extremum::arc_l: return "d_L";
    case Extremum::coincident: return "coincident";
  }
  return "?";
}

std::string CandidateLabel::describe() const {
  static constexpr const char* kEnds[] = {"lo", "hi"};
  switch (source) {
    case Source::corner:
      return std::string("corner(") + kEnds[corner1 & 1] + "," + kEnds[corner2 & 1] + ")";
    case Source::two_segment:
    case Source::degenerate: {
      std::string s = source == Source::degenerate ? "degenerate(" : "two_segment(";
      s += to_string(kind);
      s += ",";
      s += to_string(which);
      if (branch == Branch::short_arc) s += ",short";
      if (branch == Branch::long_arc) s += ",long";
      return s + ")";
    }
  }
  return "?";
}

IntervalSolution solve_interval(Point p1, const AngleInterval& i1, Point p2, const AngleInterval& i2,
                                TurnRadius rho) {
  IntervalSolution sol;
  auto& all = sol.all_candidates;
  const double euclid = distance(p1, p2);

  const double ends1[] = {i1.lo(), i1.hi()};
  const double ends2[] = {i2.lo(), i2.hi()};
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      Candidate c;
      c.label.source = CandidateLabel::Source::corner;
      c.label.corner1 = a;
      c.label.corner2 = b;
      c.theta1 = ends1[a];
      c.theta2 = ends2[b];
      c.value = dubins_shortest({p1, c.theta1}, {p2, c.theta2}, rho).total;
      all.push_back(c);
    }
  }

  const CanonicalFrame frame = canonical_frame(p1, p2);
  const double xbar = frame.xbar;
  if (xbar <= kCoincident * rho.value()) {
    // A zero-length path exists iff some heading lies in both intervals.
    std::optional<double> common;
    if (i1.contains_heading(i2.lo(), 1e-12)) {
      common = i2.lo();
    } else if (i2.contains_heading(i1.lo(), 1e-12)) {
      common = i1.lo();
    }
    if (common) {
      Candidate c;
      c.label.source = CandidateLabel::Source::degenerate;
      c.label.which = Extremum::coincident;
      c.theta1 = place_or_clamp(i1, *common);
      c.theta2 = place_or_clamp(i2, *common);
      c.value = euclid;
      all.push_back(c);
    }
  } else {
    const HeadingSector s1{frame.apply_heading(i1.lo()), i1.width()};
    const HeadingSector s2{frame.apply_heading(i2.lo()), i2.width()};
    for (TwoSegmentKind kind : kAllTwoSegmentKinds) {
      TwoSegmentResult res = opt_two_segment(kind, xbar, s1, s2, rho);
      for (Candidate& c : res.candidates) {
        c.theta1 = frame.invert_heading(c.theta1);
        c.theta2 = frame.invert_heading(c.theta2);
        if (c.value) {
          c.theta1 = place_or_clamp(i1, c.theta1);
          c.theta2 = place_or_clamp(i2, c.theta2);
        }
        all.push_back(c);
      }
    }
  }

  // No path is shorter than the straight segment; this also absorbs rounding
  // in the closed forms so that the full-circle case returns |p1 p2| exactly.
  for (Candidate& c : all) {
    if (c.value) c.value = std::max(*c.value, euclid);
  }

  Best best;
  for (const Candidate& c : all) best.consider(c);
  sol.winning = *best.winner;
  sol.value = best.value;
  sol.theta1 = sol.winning.theta1;
  sol.theta2 = sol.winning.theta2;
  return sol;
}

double solve_interval_value(Point p1, const AngleInterval& i1, Point p2, const AngleInterval& i2, TurnRadius rho) {
  double best = dubins_shortest({p1, i1.lo()}, {p2, i2.lo()}, rho).total;
  best = std::min(best, dubins_shortest({p1, i1.lo()}, {p2, i2.hi()}, rho).total);
  best = std::min(best, dubins_shortest({p1, i1.hi()}, {p2, i2.lo()}, rho).total);
  best = std::min(best, dubins_shortest({p1, i1.hi()}, {p2, i2.hi()}, rho).total);

  const double euclid = distance(p1, p2);
  const CanonicalFrame frame = canonical_frame(p1, p2);
  if (frame.xbar <= kCoincident * rho.value()) {
    if (i1.contains_heading(i2.lo(), 1e-12) || i2.contains_heading(i1.lo(), 1e-12)) best = euclid;
    return std::max(best, euclid);
  }
  const HeadingSector s1{frame.apply_heading(i1.lo()), i1.width()};
  const HeadingSector s2{frame.apply_heading(i2.lo()), i2.width()};
  for (TwoSegmentKind kind : kAllTwoSegmentKinds) {
    const TwoSegmentResult res = opt_two_segment(kind, frame.xbar, s1, s2, rho);
    if (res.best) best = std::min(best, res.best->total);
  }
  return std::max(best, euclid);
}

}  // namespace dtsp
