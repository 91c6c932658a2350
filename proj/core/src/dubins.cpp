#include "dtsp/dubins.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dtsp/error.hpp"

namespace dtsp {

namespace {

// Existence slack on normalized squared lengths (rho = 1).
constexpr double kTangentSlack = 1e-9;

struct Vec {
  double x, y;
};

inline double norm2(Vec v) noexcept { return v.x * v.x + v.y * v.y; }

}  // namespace

TurnRadius::TurnRadius(double rho) : rho_(rho) {
  if (!(rho > 0.0) || !std::isfinite(rho)) {
    throw ValidationError("turn radius must be finite and strictly positive");
  }
}

std::array<SegmentType, 3> segments(DubinsWord word) noexcept {
  using enum SegmentType;
  switch (word) {
    case DubinsWord::RSR: return {R, S, R};
    case DubinsWord::RSL: return {R, S, L};
    case DubinsWord::LSR: return {L, S, R};
    case DubinsWord::LSL: return {L, S, L};
    case DubinsWord::RLR: return {R, L, R};
    case DubinsWord::LRL: return {L, R, L};
  }
  return {S, S, S};
}

std::string_view to_string(DubinsWord word) noexcept {
  switch (word) {
    case DubinsWord::RSR: return "RSR";
    case DubinsWord::RSL: return "RSL";
    case DubinsWord::LSR: return "LSR";
    case DubinsWord::LSL: return "LSL";
    case DubinsWord::RLR: return "RLR";
    case DubinsWord::LRL: return "LRL";
  }
  return "?";
}

std::optional<DubinsWord> parse_word(std::string_view name) noexcept {
  for (DubinsWord w : kAllWords) {
    if (to_string(w) == name) return w;
  }
  return std::nullopt;
}

DubinsWord mirror(DubinsWord word) noexcept {
  switch (word) {
    case DubinsWord::RSR: return DubinsWord::LSL;
    case DubinsWord::RSL: return DubinsWord::LSR;
    case DubinsWord::LSR: return DubinsWord::RSL;
    case DubinsWord::LSL: return DubinsWord::RSR;
    case DubinsWord::RLR: return DubinsWord::LRL;
    case DubinsWord::LRL: return DubinsWord::RLR;
  }
  return word;
}

bool is_ccc(DubinsWord word) noexcept { return word == DubinsWord::RLR || word == DubinsWord::LRL; }

Point CanonicalFrame::apply(Point p) const noexcept {
  const double c = std::cos(rotation), s = std::sin(rotation);
  const double x = p.x + translation.x, y = p.y + translation.y;
  return {c * x - s * y, s * x + c * y};
}

Point CanonicalFrame::invert(Point p) const noexcept {
  const double c = std::cos(rotation), s = std::sin(rotation);
  return {c * p.x + s * p.y - translation.x, -s * p.x + c * p.y - translation.y};
}

CanonicalFrame canonical_frame(Point p1, Point p2) noexcept {
  CanonicalFrame f;
  const double dx = p2.x - p1.x, dy = p2.y - p1.y;
  f.xbar = std::hypot(dx, dy);
  f.rotation = (dx == 0.0 && dy == 0.0) ? 0.0 : -std::atan2(dy, dx);
  f.translation = {-p1.x, -p1.y};
  return f;
}

namespace detail {

PoseCircles start_circles(double heading) noexcept {
  const double s = std::sin(heading), c = std::cos(heading);
  return {0.0, heading, -s, c, s, -c};
}

PoseCircles end_circles(double d, double heading) noexcept {
  const double s = std::sin(heading), c = std::cos(heading);
  return {d, heading, d - s, c, d + s, -c};
}

namespace {

// Outer tangent between two same-direction circles. `left` selects LSL vs RSR.
std::array<double, 3> outer(const PoseCircles& a, const PoseCircles& b, bool left) noexcept {
  const Vec v = left ? Vec{b.lx - a.lx, b.ly - a.ly} : Vec{b.rx - a.rx, b.ry - a.ry};
  const double p = std::hypot(v.x, v.y);
  const double h = p == 0.0 ? a.heading : std::atan2(v.y, v.x);
  if (left) return {arc_angle(h - a.heading), p, arc_angle(b.heading - h)};
  return {arc_angle(a.heading - h), p, arc_angle(h - b.heading)};
}

// Inner tangent; `left_first` selects LSR vs RSL.
std::optional<std::array<double, 3>> inner(const PoseCircles& a, const PoseCircles& b, bool left_first) noexcept {
  const Vec v = left_first ? Vec{b.rx - a.lx, b.ry - a.ly} : Vec{b.lx - a.rx, b.ly - a.ry};
  const double p2 = norm2(v) - 4.0;
  if (p2 < -kTangentSlack) return std::nullopt;
  const double p = std::sqrt(std::max(0.0, p2));
  const double base = std::atan2(v.y, v.x);
  if (left_first) {
    const double h = base + std::atan2(2.0, p);
    return std::array<double, 3>{arc_angle(h - a.heading), p, arc_angle(h - b.heading)};
  }
  const double h = base - std::atan2(2.0, p);
  return std::array<double, 3>{arc_angle(a.heading - h), p, arc_angle(b.heading - h)};
}

// Three arcs. `left_outer` selects LRL vs RLR. Both middle circles are tried.
std::optional<std::array<double, 3>> ccc(const PoseCircles& a, const PoseCircles& b, bool left_outer) noexcept {
  const double ax = left_outer ? a.lx : a.rx, ay = left_outer ? a.ly : a.ry;
  const double bx = left_outer ? b.lx : b.rx, by = left_outer ? b.ly : b.ry;
  const Vec v{bx - ax, by - ay};
  const double dist = std::hypot(v.x, v.y);
  if (dist > 4.0 + kTangentSlack) return std::nullopt;
  const double base = std::atan2(v.y, v.x);
  const double spread = std::acos(std::clamp(dist / 4.0, -1.0, 1.0));
  std::optional<std::array<double, 3>> best;
  double best_len = std::numeric_limits<double>::infinity();
  for (double sign : {1.0, -1.0}) {
    const double gamma = base + sign * spread;
    const double mx = ax + 2.0 * std::cos(gamma), my = ay + 2.0 * std::sin(gamma);
    const double gamma2 = std::atan2(by - my, bx - mx);
    std::array<double, 3> prm{};
    if (left_outer) {
      const double h1 = gamma + kPi / 2.0;   // L heading at first tangency
      const double h2 = gamma2 - kPi / 2.0;  // R heading at second tangency
      prm = {arc_angle(h1 - a.heading), arc_angle(h1 - h2), arc_angle(b.heading - h2)};
    } else {
      const double h1 = gamma - kPi / 2.0;
      const double h2 = gamma2 + kPi / 2.0;
      prm = {arc_angle(a.heading - h1), arc_angle(h2 - h1), arc_angle(h2 - b.heading)};
    }
    // Coincident outer circles: the middle arc is a full turn, never empty.
    if (prm[1] == 0.0) prm[1] = kTwoPi;
    const double len = prm[0] + prm[1] + prm[2];
    if (len < best_len) {
      best_len = len;
      best = prm;
    }
  }
  return best;
}

}  // namespace

std::optional<std::array<double, 3>> word_params(const PoseCircles& start, const PoseCircles& end,
                                                 DubinsWord word) noexcept {
  switch (word) {
    case DubinsWord::RSR: return outer(start, end, false);
    case DubinsWord::LSL: return outer(start, end, true);
    case DubinsWord::RSL: return inner(start, end, false);
    case DubinsWord::LSR: return inner(start, end, true);
    case DubinsWord::RLR: return ccc(start, end, false);
    case DubinsWord::LRL: return ccc(start, end, true);
  }
  return std::nullopt;
}

namespace {

// Cheap reduction into [0, 2pi) for pruning bounds only; inputs stay within a
// few turns, so a couple of subtractions replace fmod.
inline double wrap_loose(double a) noexcept {
  while (a < 0.0) a += kTwoPi;
  while (a >= kTwoPi) a -= kTwoPi;
  return a;
}

// Error allowance for turning angles built from one or two atan2_approx calls.
constexpr double kApproxArcError = 8.0 * kAtan2ApproxError;

// Lower bound on arc_angle(x*) for any x* within kApproxArcError of x.
inline double arc_lower(double x) noexcept {
  const double w = wrap_loose(x - kApproxArcError);
  return w + 2.0 * kApproxArcError >= kTwoPi - kArcSnap ? 0.0 : w;
}

}  // namespace

double atan2_approx(double y, double x) noexcept {
  const double ax = std::abs(x), ay = std::abs(y);
  const double hi = std::max(ax, ay);
  if (hi == 0.0) return 0.0;
  const double t = std::min(ax, ay) / hi;
  const double s = t * t;
  double r = 0.0028662257;
  r = r * s - 0.0161657367;
  r = r * s + 0.0429096138;
  r = r * s - 0.0752896400;
  r = r * s + 0.1065626393;
  r = r * s - 0.1420889944;
  r = r * s + 0.1999355085;
  r = r * s - 0.3333314528;
  r = (r * s + 1.0) * t;
  if (ay > ax) r = kPi / 2.0 - r;
  if (x < 0.0) r = kPi - r;
  return y < 0.0 ? -r : r;
}

double shortest_normalized(const PoseCircles& a, const PoseCircles& b, double bound) noexcept {
  const double d = b.x - a.x;
  if (bound <= d) return bound;
  constexpr double margin = 1e-9;
  const double ll = wrap_loose(b.heading - a.heading) - margin;  // t + q for LSL
  const double rr = wrap_loose(a.heading - b.heading) - margin;  // t + q for RSR
  const double mixed = std::min(ll, rr);

  auto sum = [](const std::array<double, 3>& p) { return p[0] + p[1] + p[2]; };

  // CSC words: exact straight part plus a bound on the turning.
  auto outer_ok = [&](double vx, double vy, double turn) {
    const double room = bound - turn;
    return room > 0.0 && vx * vx + vy * vy < room * room;
  };
  if (outer_ok(b.rx - a.rx, b.ry - a.ry, rr)) bound = std::min(bound, sum(outer(a, b, false)));
  if (outer_ok(b.lx - a.lx, b.ly - a.ly, ll)) bound = std::min(bound, sum(outer(a, b, true)));

  // RSL / LSR: first screen with the heading gap, then with approximate tangent headings.
  auto inner_ok = [&](double vx, double vy, bool left_first) {
    const double room = bound - mixed;
    if (room <= 0.0) return false;
    const double p2 = vx * vx + vy * vy - 4.0;
    if (p2 < -kTangentSlack || p2 >= room * room) return false;
    const double p = std::sqrt(std::max(0.0, p2));
    const double base = atan2_approx(vy, vx), tilt = atan2_approx(2.0, p);
    const double turn = left_first ? arc_lower(base + tilt - a.heading) + arc_lower(base + tilt - b.heading)
                                   : arc_lower(a.heading - base + tilt) + arc_lower(b.heading - base + tilt);
    return p + turn - margin < bound;
  };
  if (inner_ok(b.lx - a.rx, b.ly - a.ry, false)) {
    if (auto p = inner(a, b, false)) bound = std::min(bound, sum(*p));
  }
  if (inner_ok(b.rx - a.lx, b.ry - a.ly, true)) {
    if (auto p = inner(a, b, true)) bound = std::min(bound, sum(*p));
  }

  // CCC words: middle circle placed by algebra, arcs bounded through atan2_approx.
  if (d <= 6.0) {
    auto ccc_ok = [&](double ax, double ay, double bx, double by, bool left_outer) {
      const double vx = bx - ax, vy = by - ay;
      const double dd = vx * vx + vy * vy;
      if (dd > (4.0 + kTangentSlack) * (4.0 + kTangentSlack)) return false;
      if (std::max(0.25 * dd, mixed * mixed) >= bound * bound) return false;
      const double dist = std::sqrt(dd);
      if (dist < 1e-6) return true;
      {
        // Middle arc is P = 2 asin(D/4) or 2pi - P, with P in [D/2, pi D/4]; the
        // outer arcs then close the remaining heading gap.
        const double gap = left_outer ? b.heading - a.heading : a.heading - b.heading;
        const double plo = dist / 2.0, phi = kPi * dist / 4.0, span = phi - plo;
        const double w1 = wrap_loose(gap + plo);
        const double lb1 = w1 + span >= kTwoPi ? plo : plo + w1;
        const double w2 = wrap_loose(gap - phi);
        const double lb2 = w2 + span >= kTwoPi ? kTwoPi - phi : kTwoPi - phi + w2;
        if (std::min(lb1, lb2) - margin >= bound) return false;
      }
      const double along = dist / 4.0, across = std::sqrt(std::max(0.0, 1.0 - along * along));
      const double ux = vx / dist, uy = vy / dist;
      double lo = std::numeric_limits<double>::infinity();
      for (double sign : {1.0, -1.0}) {
        const double wx = along * ux - sign * across * uy, wy = along * uy + sign * across * ux;
        const double gamma = atan2_approx(wy, wx);
        const double gamma2 = atan2_approx(by - (ay + 2.0 * wy), bx - (ax + 2.0 * wx));
        double total;
        if (left_outer) {
          const double h1 = gamma + kPi / 2.0, h2 = gamma2 - kPi / 2.0;
          total = arc_lower(h1 - a.heading) + arc_lower(h1 - h2) + arc_lower(b.heading - h2);
        } else {
          const double h1 = gamma - kPi / 2.0, h2 = gamma2 + kPi / 2.0;
          total = arc_lower(a.heading - h1) + arc_lower(h2 - h1) + arc_lower(h2 - b.heading);
        }
        lo = std::min(lo, total);
      }
      return lo - margin < bound;
    };
    if (ccc_ok(a.rx, a.ry, b.rx, b.ry, false)) {
      if (auto p = ccc(a, b, false)) bound = std::min(bound, sum(*p));
    }
    if (ccc_ok(a.lx, a.ly, b.lx, b.ly, true)) {
      if (auto p = ccc(a, b, true)) bound = std::min(bound, sum(*p));
    }
  }
  return bound;
}

}  // namespace detail

namespace {

struct Normalized {
  detail::PoseCircles start, end;
};

Normalized normalize_pair(const Configuration& s, const Configuration& e, double rho) noexcept {
  const double dx = e.x() - s.x(), dy = e.y() - s.y();
  const double d = std::hypot(dx, dy) / rho;
  const double base = (dx == 0.0 && dy == 0.0) ? 0.0 : std::atan2(dy, dx);
  return {detail::start_circles(s.theta() - base), detail::end_circles(d, e.theta() - base)};
}

}  // namespace

std::optional<DubinsPath> word_length(const Configuration& start, const Configuration& end, TurnRadius rho,
                                      DubinsWord word) noexcept {
  const double r = rho.value();
  const Normalized n = normalize_pair(start, end, r);
  auto prm = detail::word_params(n.start, n.end, word);
  if (!prm) return std::nullopt;
  DubinsPath path;
  path.word = word;
  path.seg_lengths = {(*prm)[0] * r, (*prm)[1] * r, (*prm)[2] * r};
  path.total = path.seg_lengths[0] + path.seg_lengths[1] + path.seg_lengths[2];
  return path;
}

DubinsPath dubins_shortest(const Configuration& start, const Configuration& end, TurnRadius rho) noexcept {
  std::optional<DubinsPath> best;
  for (DubinsWord w : kAllWords) {
    auto p = word_length(start, end, rho, w);
    if (p && (!best || p->total < best->total)) best = p;
  }
  // LSL/RSR always exist, so best is engaged.
  return *best;
}

Configuration simulate_segment(const Configuration& start, double rho, SegmentType type, double len) noexcept {
  const double th = start.theta();
  switch (type) {
    case SegmentType::S:
      return {start.x() + len * std::cos(th), start.y() + len * std::sin(th), th};
    case SegmentType::L: {
      const double th2 = th + len / rho;
      return {start.x() + rho * (std::sin(th2) - std::sin(th)), start.y() + rho * (std::cos(th) - std::cos(th2)),
              th2};
    }
    case SegmentType::R: {
      const double th2 = th - len / rho;
      return {start.x() + rho * (std::sin(th) - std::sin(th2)), start.y() + rho * (std::cos(th2) - std::cos(th)),
              th2};
    }
  }
  return start;
}

Configuration simulate_word(const Configuration& start, TurnRadius rho, DubinsWord word,
                            const std::array<double, 3>& seg_lengths) noexcept {
  const auto types = segments(word);
  Configuration c = start;
  for (int i = 0; i < 3; ++i) c = simulate_segment(c, rho.value(), types[i], seg_lengths[i]);
  return c;
}

}  // namespace dtsp
