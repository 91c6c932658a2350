#pragma once

/**
 * @file interval.hpp
 * @brief Exact minimum of the shortest Dubins length over a departure heading
 * interval and an arrival heading interval.
 *
 * The minimum is attained either at one of the four interval corners or on a
 * path with at most two segments (RS, SR, LS, SL, RL, LR). The two-segment
 * optima are found in the canonical frame (target 1 at the origin, target 2 at
 * (xbar, 0)); SR/LS/SL reduce to RS and LR to RL by reflection and time
 * reversal.
 */

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dtsp/dubins.hpp"

namespace dtsp {

/// Closed, non-wrapping heading interval [lo, hi] with 0 <= lo <= hi <= 2pi.
class AngleInterval {
 public:
  AngleInterval(double lo, double hi);
  static AngleInterval full() { return {0.0, kTwoPi}; }
  static AngleInterval point(double theta) { return {theta, theta}; }

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }
  double width() const noexcept { return hi_ - lo_; }
  /// Closed membership with `slack` on both ends; theta taken literally (no wrap).
  bool contains(double theta, double slack = 0.0) const noexcept {
    return theta >= lo_ - slack && theta <= hi_ + slack;
  }
  /// Membership of the heading theta (mod 2pi), so 0 and 2pi are the same heading.
  bool contains_heading(double theta, double slack = 0.0) const noexcept;
  /// Representative of heading theta inside [lo, hi], clamped when it lies within slack outside.
  std::optional<double> place(double theta, double slack) const noexcept;

  friend bool operator==(const AngleInterval&, const AngleInterval&) = default;

 private:
  double lo_;
  double hi_;
};

/// Heading arc starting at `start` and sweeping counterclockwise by `width`.
/// Used inside rotated frames where an interval may straddle heading 0.
struct HeadingSector {
  double start = 0.0;
  double width = 0.0;

  double end() const noexcept { return start + width; }
  bool contains(double theta, double slack) const noexcept;
  /// y-axis flip: theta -> -theta.
  HeadingSector mirrored() const noexcept { return {normalize_angle(-start - width), width}; }
};

enum class TwoSegmentKind : std::uint8_t { RS, SR, LS, SL, RL, LR };
inline constexpr std::array<TwoSegmentKind, 6> kAllTwoSegmentKinds = {
    TwoSegmentKind::RS, TwoSegmentKind::SR, TwoSegmentKind::LS,
    TwoSegmentKind::SL, TwoSegmentKind::RL, TwoSegmentKind::LR};
std::string_view to_string(TwoSegmentKind kind) noexcept;

/// CC paths come in two families: second arc at most pi ("short") or above pi ("long").
enum class Branch : std::uint8_t { none, short_arc, long_arc };

/// Where a candidate came from inside a two-segment optimizer.
enum class Extremum : std::uint8_t {
  theta1_min,
  theta1_max,
  theta2_min,
  theta2_max,
  stationary,  ///< interior length minimum (theta2 == theta1 on RL)
  merge,       ///< existence boundary where the two CC branches meet
  straight,    ///< d_S
  arc_r,       ///< d_R
  arc_l,       ///< d_L
  coincident,  ///< zero-length path between coincident targets
};
std::string_view to_string(Extremum which) noexcept;

struct TwoSegmentGeometry {
  TwoSegmentKind kind = TwoSegmentKind::RS;
  double theta1 = 0.0;
  double theta2 = 0.0;
  double phi = 0.0;           ///< angle of the tangent construction in the base (RS/RL) frame
  double straight_len = 0.0;  ///< 0 for CC kinds
  double arc1 = 0.0;          ///< first turning angle (radians, base frame)
  double arc2 = 0.0;          ///< second turning angle for CC kinds
  double total = 0.0;
  Branch branch = Branch::none;
};

/// LRL path with theta1 = 0 and the middle arc above pi.
struct LrlGeometry {
  double alpha = 0.0;
  double beta = 0.0;
  double theta2 = 0.0;
  double total = 0.0;  ///< (2pi + 2 alpha + 2 beta + theta2) rho
  std::array<double, 3> arcs{};
};

struct CandidateLabel {
  enum class Source : std::uint8_t { corner, two_segment, degenerate };
  Source source = Source::corner;
  int corner1 = 0;  ///< 0 = lo, 1 = hi (corner candidates only)
  int corner2 = 0;
  TwoSegmentKind kind = TwoSegmentKind::RS;
  Extremum which = Extremum::theta1_min;
  Branch branch = Branch::none;

  std::string describe() const;
};

struct Candidate {
  CandidateLabel label;
  std::optional<double> value;  ///< nullopt when the candidate does not exist
  double theta1 = 0.0;
  double theta2 = 0.0;
};

struct IntervalSolution {
  double value = 0.0;
  double theta1 = 0.0;
  double theta2 = 0.0;
  Candidate winning;
  std::vector<Candidate> all_candidates;
};

/// Result of a single two-segment optimization in the canonical frame.
struct TwoSegmentResult {
  std::optional<TwoSegmentGeometry> best;
  std::vector<Candidate> candidates;
};

/// Exact solution of min d12(theta1, theta2) over theta1 in I1, theta2 in I2.
IntervalSolution solve_interval(Point p1, const AngleInterval& i1, Point p2, const AngleInterval& i2,
                                TurnRadius rho);

/// Value-only variant used when building large cost matrices.
double solve_interval_value(Point p1, const AngleInterval& i1, Point p2, const AngleInterval& i2, TurnRadius rho);

/// min over theta1 of RS^1(theta1) in the canonical frame.
TwoSegmentResult opt_rs(double xbar, const HeadingSector& s1, const HeadingSector& s2, TurnRadius rho);

/// min over theta1 of RL^1(theta1) in the canonical frame, both branches.
TwoSegmentResult opt_rl(double xbar, const HeadingSector& s1, const HeadingSector& s2, TurnRadius rho);

/// Any of the six kinds, solved through reflect_problem.
TwoSegmentResult opt_two_segment(TwoSegmentKind kind, double xbar, const HeadingSector& s1, const HeadingSector& s2,
                                 TurnRadius rho);

/// A two-segment kind rewritten as RS or RL.
struct ReflectedProblem {
  TwoSegmentKind base = TwoSegmentKind::RS;
  HeadingSector s1;
  HeadingSector s2;
  bool mirrored = false;  ///< y-axis flip applied
  bool swapped = false;   ///< traversal reversed (departure and arrival roles exchanged)

  /// Maps base-problem angles back to the original kind's (theta1, theta2).
  std::pair<double, double> back_map(double base_theta1, double base_theta2) const noexcept;
};

ReflectedProblem reflect_problem(TwoSegmentKind kind, const HeadingSector& s1, const HeadingSector& s2) noexcept;

// Closed-form constructions in the canonical frame, exposed for tests.

std::optional<TwoSegmentGeometry> rs_from_departure(double xbar, double theta1, TurnRadius rho) noexcept;
/// Up to two RS paths arriving with heading theta2.
std::vector<TwoSegmentGeometry> rs_from_arrival(double xbar, double theta2, TurnRadius rho);
/// Up to two RL paths (one per branch) leaving with heading theta1.
std::vector<TwoSegmentGeometry> rl_from_departure(double xbar, double theta1, TurnRadius rho);
std::vector<TwoSegmentGeometry> rl_from_arrival(double xbar, double theta2, TurnRadius rho);

/// Solves the LRL tangency system for theta1 = 0 with target 2 at (xbar, ybar).
std::optional<LrlGeometry> lrl_geometry(double theta2, double xbar, double ybar, TurnRadius rho) noexcept;
/// d(total)/d(theta2) in closed form.
double lrl_length_derivative(const LrlGeometry& g, TurnRadius rho) noexcept;

struct GridOracleResult {
  double value = 0.0;  ///< grid minimum, or the cutoff when no grid point is below it
  double theta1 = 0.0;
  double theta2 = 0.0;
  bool found = false;  ///< a grid point strictly below the cutoff was seen
};

/// Brute-force minimum of dubins_shortest over an n_grid x n_grid grid that
/// includes both endpoints of each interval. Points that provably cannot beat
/// the running minimum (initially `cutoff`) are skipped, so with a finite
/// cutoff the answer is exact only below it.
GridOracleResult grid_oracle(Point p1, const AngleInterval& i1, Point p2, const AngleInterval& i2, TurnRadius rho,
                             int n_grid, double cutoff = std::numeric_limits<double>::infinity());

}  // namespace dtsp
