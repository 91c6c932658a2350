#pragma once

// Independent reference computations shared by the unit and acceptance tests.
// Nothing here calls the two-segment optimizers or the interval solver.

#include <optional>
#include <random>
#include <vector>

#include "dtsp/interval.hpp"

namespace dtsp::testing {

double uniform(std::mt19937_64& rng, double lo, double hi);

/// A two-segment path leaving the origin with heading theta1 and ending at (xbar, 0).
struct DirectPath {
  double theta2 = 0.0;
  double total = 0.0;
  double arc1 = 0.0;  ///< first arc (CS, CC) in radians
  double arc2 = 0.0;  ///< second arc (SC, CC) in radians
  double straight = 0.0;
  int root = 0;  ///< which of the (up to two) solutions this is
};

/// Built from tangent-circle geometry for each kind separately.
std::vector<DirectPath> direct_two_segment(TwoSegmentKind kind, double xbar, double theta1, double rho);

/// Minimum over theta1 in s1 of the kind's length subject to theta2 in s2:
/// an n-point inclusive grid, refined by bisection at feasibility changes,
/// length jumps and crossings of the s2 edges, and golden-section search at
/// interior grid minima.
std::optional<double> one_d_oracle(TwoSegmentKind kind, double xbar, const HeadingSector& s1, const HeadingSector& s2,
                                   double rho, int n = 8192);

/// Central difference of f at x.
template <typename F>
double central_difference(F&& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

/// LRL (left-right-left) paths whose middle arc is exactly pi, leaving p1 with heading theta1.
struct LrlLimit {
  double theta2 = 0.0;
  double total = 0.0;
};
std::vector<LrlLimit> lrl_limit_paths(Point p1, double theta1, Point p2, double rho, bool mirrored);

}  // namespace dtsp::testing
