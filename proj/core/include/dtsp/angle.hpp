#pragma once

#include <cmath>
#include <numbers>

namespace dtsp {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Arc angles closer than this to a full turn are treated as vanished.
inline constexpr double kArcSnap = 1e-10;

/// Maps any angle into [0, 2pi). Idempotent.
inline double normalize_angle(double a) noexcept {
  double r = std::fmod(a, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

/// Turning amount in [0, 2pi) with near-full turns snapped to zero.
inline double arc_angle(double a) noexcept {
  double r = normalize_angle(a);
  if (r > kTwoPi - kArcSnap) r = 0.0;
  return r;
}

/// Smallest absolute difference between two headings, in [0, pi].
inline double heading_distance(double a, double b) noexcept {
  double d = normalize_angle(a - b);
  return d > kPi ? kTwoPi - d : d;
}

}  // namespace dtsp
