#pragma once

/**
 * @file dubins.hpp
 * @brief Three-segment Dubins words: construction, lengths and forward simulation.
 *
 * Headings are measured counterclockwise from +x. An L segment is a
 * counterclockwise arc of radius rho, R a clockwise arc, S a straight line.
 */

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "dtsp/angle.hpp"

namespace dtsp {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

inline double distance(Point a, Point b) noexcept { return std::hypot(b.x - a.x, b.y - a.y); }

/// Planar pose; the heading is always stored in [0, 2pi).
class Configuration {
 public:
  Configuration() = default;
  Configuration(double x, double y, double theta) noexcept : x_(x), y_(y), theta_(normalize_angle(theta)) {}
  Configuration(Point p, double theta) noexcept : Configuration(p.x, p.y, theta) {}

  double x() const noexcept { return x_; }
  double y() const noexcept { return y_; }
  double theta() const noexcept { return theta_; }
  Point position() const noexcept { return {x_, y_}; }

 private:
  double x_ = 0.0;
  double y_ = 0.0;
  double theta_ = 0.0;
};

/// Minimum turning radius. Always strictly positive.
class TurnRadius {
 public:
  explicit TurnRadius(double rho);
  double value() const noexcept { return rho_; }

 private:
  double rho_;
};

enum class SegmentType : std::uint8_t { L, S, R };

/// Declaration order is the tie-break order used by dubins_shortest.
enum class DubinsWord : std::uint8_t { RSR, RSL, LSR, LSL, RLR, LRL };

inline constexpr std::array<DubinsWord, 6> kAllWords = {DubinsWord::RSR, DubinsWord::RSL, DubinsWord::LSR,
                                                       DubinsWord::LSL, DubinsWord::RLR, DubinsWord::LRL};

std::array<SegmentType, 3> segments(DubinsWord word) noexcept;
std::string_view to_string(DubinsWord word) noexcept;
std::optional<DubinsWord> parse_word(std::string_view name) noexcept;
/// L <-> R swap (reflection about the x axis).
DubinsWord mirror(DubinsWord word) noexcept;
bool is_ccc(DubinsWord word) noexcept;

struct DubinsPath {
  DubinsWord word = DubinsWord::RSR;
  std::array<double, 3> seg_lengths{};  ///< metric lengths, not angles
  double total = 0.0;
};

/// Rigid transform taking p1 to the origin and p2 to (xbar, 0).
struct CanonicalFrame {
  double xbar = 0.0;
  double rotation = 0.0;
  Point translation{};

  Point apply(Point p) const noexcept;
  Point invert(Point p) const noexcept;
  double apply_heading(double theta) const noexcept { return normalize_angle(theta + rotation); }
  double invert_heading(double theta) const noexcept { return normalize_angle(theta - rotation); }
  Configuration apply(const Configuration& c) const noexcept { return {apply(c.position()), apply_heading(c.theta())}; }
  Configuration invert(const Configuration& c) const noexcept {
    return {invert(c.position()), invert_heading(c.theta())};
  }
};

CanonicalFrame canonical_frame(Point p1, Point p2) noexcept;

/// Shortest path of exactly this word, or nullopt when the word has no real solution.
std::optional<DubinsPath> word_length(const Configuration& start, const Configuration& end, TurnRadius rho,
                                      DubinsWord word) noexcept;

/// Shortest of the six words. Ties resolve in kAllWords order.
DubinsPath dubins_shortest(const Configuration& start, const Configuration& end, TurnRadius rho) noexcept;

/// Integrates the three segments in closed form. Lengths are metric and non-negative.
Configuration simulate_word(const Configuration& start, TurnRadius rho, DubinsWord word,
                            const std::array<double, 3>& seg_lengths) noexcept;

/// Pose after a single segment of metric length `len`.
Configuration simulate_segment(const Configuration& start, double rho, SegmentType type, double len) noexcept;

namespace detail {

/// Turning circles of one pose in the normalized frame (rho = 1, start at the
/// origin, goal at (d, 0)). Shared by dubins_shortest and the grid oracle so
/// both evaluate the exact same objective.
struct PoseCircles {
  double x = 0.0;        ///< 0 for the start pose, d for the goal pose
  double heading = 0.0;  ///< frame-relative heading
  double lx = 0.0, ly = 0.0;
  double rx = 0.0, ry = 0.0;
};

PoseCircles start_circles(double heading) noexcept;
PoseCircles end_circles(double d, double heading) noexcept;

/// Segment parameters (t, p, q) in units of rho, or nullopt.
std::optional<std::array<double, 3>> word_params(const PoseCircles& start, const PoseCircles& end,
                                                 DubinsWord word) noexcept;

/// Polynomial atan2 used only inside pruning bounds; |error| <= kAtan2ApproxError.
double atan2_approx(double y, double x) noexcept;
inline constexpr double kAtan2ApproxError = 1e-7;

/// min(bound, shortest normalized length). Words whose cheap lower bound is
/// already >= bound are skipped without evaluating their trigonometry.
double shortest_normalized(const PoseCircles& start, const PoseCircles& end, double bound) noexcept;

}  // namespace detail

}  // namespace dtsp
