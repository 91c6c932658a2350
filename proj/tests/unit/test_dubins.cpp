#include <random>

#include "doctest.h"
#include "dtsp/dubins.hpp"
#include "oracles.hpp"

using namespace dtsp;
using dtsp::testing::uniform;

namespace {

Configuration random_config(std::mt19937_64& rng, double extent) {
  return {uniform(rng, 0.0, extent), uniform(rng, 0.0, extent), uniform(rng, 0.0, kTwoPi)};
}

double pose_error(const Configuration& a, const Configuration& b) {
  return std::max(distance(a.position(), b.position()), heading_distance(a.theta(), b.theta()));
}

}  // namespace

TEST_CASE("angles normalize into [0, 2pi) idempotently") {
  for (double a : {-7.0, -kTwoPi, -1e-300, 0.0, 1.0, kTwoPi, 13.5, 1e6}) {
    const double r = normalize_angle(a);
    CHECK(r >= 0.0);
    CHECK(r < kTwoPi);
    CHECK(normalize_angle(r) == r);
  }
  CHECK(Configuration(1, 2, -kPi / 2).theta() == doctest::Approx(3 * kPi / 2));
  CHECK_THROWS(TurnRadius(0.0));
  CHECK_THROWS(TurnRadius(-1.0));
}

TEST_CASE("words map to fixed segment triples") {
  CHECK(kAllWords.size() == 6);
  CHECK(segments(DubinsWord::RSL) == std::array{SegmentType::R, SegmentType::S, SegmentType::L});
  CHECK(segments(DubinsWord::LRL) == std::array{SegmentType::L, SegmentType::R, SegmentType::L});
  for (DubinsWord w : kAllWords) {
    CHECK(parse_word(to_string(w)) == w);
    CHECK(mirror(mirror(w)) == w);
  }
  CHECK(mirror(DubinsWord::RSL) == DubinsWord::LSR);
  CHECK(!parse_word("SSS"));
}

TEST_CASE("worked word lengths") {
  const TurnRadius rho(2.0);
  const double r = rho.value();

  SUBCASE("straight RSR") {
    const auto p = word_length({0, 0, 0}, {10 * r, 0, 0}, rho, DubinsWord::RSR);
    REQUIRE(p);
    CHECK(p->seg_lengths[0] == doctest::Approx(0.0));
    CHECK(p->seg_lengths[1] == doctest::Approx(10 * r));
    CHECK(p->seg_lengths[2] == doctest::Approx(0.0));
    CHECK(p->total == doctest::Approx(10 * r));
  }
  SUBCASE("half turn RSR") {
    const auto p = word_length({0, 0, 0}, {0, -2 * r, kPi}, rho, DubinsWord::RSR);
    REQUIRE(p);
    CHECK(p->total == doctest::Approx(kPi * r));
    CHECK(p->seg_lengths[1] == doctest::Approx(0.0).epsilon(1e-9));
  }
  SUBCASE("LRL through identical poses closes with a positive length") {
    const Configuration c{0, 0, 0};
    const auto p = word_length(c, c, rho, DubinsWord::LRL);
    REQUIRE(p);
    CHECK(p->total > 0.0);
    CHECK(pose_error(simulate_word(c, rho, DubinsWord::LRL, p->seg_lengths), c) < 1e-6);
  }
  SUBCASE("LSL quarter arcs") {
    const Configuration end = simulate_word({0, 0, 0}, rho, DubinsWord::LSL, {kPi * r / 2, 1.0, kPi * r / 2});
    CHECK(end.theta() == doctest::Approx(kPi));
    CHECK(end.x() == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(end.y() == doctest::Approx(2 * r + 1.0));
  }
  SUBCASE("zero lengths return the start") {
    const Configuration s{3, 4, 1};
    CHECK(pose_error(simulate_word(s, rho, DubinsWord::RLR, {0, 0, 0}), s) == 0.0);
  }
  SUBCASE("inner tangents vanish for overlapping circles") {
    CHECK(!word_length({0, 0, kPi / 2}, {0.5 * r, 0, kPi / 2}, rho, DubinsWord::RSL));
    CHECK(!word_length({0, 0, 0}, {10 * r, 0, 0}, rho, DubinsWord::LRL));
  }
}

TEST_CASE("shortest path examples") {
  const TurnRadius rho(1.0);
  CHECK(dubins_shortest({0, 0, 0}, {7, 0, 0}, rho).total == doctest::Approx(7.0));
  CHECK(dubins_shortest({1, 1, 2}, {1, 1, 2}, rho).total == 0.0);

  std::mt19937_64 rng(3);
  for (int i = 0; i < 500; ++i) {
    const Configuration a = random_config(rng, 50.0), b = random_config(rng, 50.0);
    if (distance(a.position(), b.position()) <= 4.0) continue;
    CHECK(!is_ccc(dubins_shortest(a, b, rho).word));
  }
}

TEST_CASE("canonical frame") {
  const CanonicalFrame id = canonical_frame({0, 0}, {5, 0});
  CHECK(id.xbar == 5.0);
  CHECK(id.apply(Point{2, 3}).x == doctest::Approx(2.0));

  const CanonicalFrame up = canonical_frame({1, 1}, {1, 4});
  CHECK(up.xbar == doctest::Approx(3.0));
  CHECK(normalize_angle(up.rotation) == doctest::Approx(3 * kPi / 2));

  CHECK(canonical_frame({2, 2}, {2, 2}).rotation == 0.0);

  std::mt19937_64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    const Point p1{uniform(rng, -100, 100), uniform(rng, -100, 100)};
    const Point p2{uniform(rng, -100, 100), uniform(rng, -100, 100)};
    const CanonicalFrame f = canonical_frame(p1, p2);
    const Point q1 = f.apply(p1), q2 = f.apply(p2);
    CHECK(std::abs(q1.x) + std::abs(q1.y) < 1e-9);
    CHECK(q2.x == doctest::Approx(f.xbar).epsilon(1e-12));
    CHECK(std::abs(q2.y) < 1e-9);
    CHECK(f.xbar >= 0.0);
    const Point back = f.invert(f.apply(p2));
    CHECK(distance(back, p2) < 1e-9);
  }
}

TEST_CASE("path invariants on random pairs") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 2000; ++i) {
    const TurnRadius rho(uniform(rng, 0.5, 3.0));
    const double r = rho.value();
    const Configuration a = random_config(rng, 10.0), b = random_config(rng, 10.0);
    const DubinsPath best = dubins_shortest(a, b, rho);

    double min_word = std::numeric_limits<double>::infinity();
    for (DubinsWord w : kAllWords) {
      const auto p = word_length(a, b, rho, w);
      if (!p) continue;
      min_word = std::min(min_word, p->total);
      CHECK(p->word == w);
      CHECK(p->total == doctest::Approx(p->seg_lengths[0] + p->seg_lengths[1] + p->seg_lengths[2]).epsilon(1e-9));
      for (double s : p->seg_lengths) CHECK(s >= 0.0);
      const auto seg = segments(w);
      for (int k = 0; k < 3; ++k) {
        if (seg[static_cast<std::size_t>(k)] != SegmentType::S) CHECK(p->seg_lengths[static_cast<std::size_t>(k)] <= kTwoPi * r + 1e-9);
      }
      if (is_ccc(w)) {
        CHECK(p->seg_lengths[1] > 0.0);
        CHECK(p->seg_lengths[1] <= kTwoPi * r);
      }
      CHECK(pose_error(simulate_word(a, rho, w, p->seg_lengths), b) < 1e-6);
    }
    CHECK(best.total == min_word);
    CHECK(best.total >= distance(a.position(), b.position()) - 1e-12);

    // Mirror symmetry in the canonical frame.
    const CanonicalFrame f = canonical_frame(a.position(), b.position());
    const Configuration ca = f.apply(a), cb = f.apply(b);
    const Configuration ma{ca.x(), -ca.y(), -ca.theta()}, mb{cb.x(), -cb.y(), -cb.theta()};
    for (DubinsWord w : kAllWords) {
      const auto p = word_length(ca, cb, rho, w);
      const auto q = word_length(ma, mb, rho, mirror(w));
      CHECK(p.has_value() == q.has_value());
      if (p && q) CHECK(p->total == doctest::Approx(q->total).epsilon(1e-9));
    }

    // Rigid motion and scaling.
    const double rot = uniform(rng, 0, kTwoPi), s = uniform(rng, 0.2, 5.0);
    auto move = [&](const Configuration& c) {
      const double x = c.x() * std::cos(rot) - c.y() * std::sin(rot) + 3.0;
      const double y = c.x() * std::sin(rot) + c.y() * std::cos(rot) - 7.0;
      return Configuration{x, y, c.theta() + rot};
    };
    CHECK(dubins_shortest(move(a), move(b), rho).total == doctest::Approx(best.total).epsilon(1e-9));
    const Configuration sa{s * a.x(), s * a.y(), a.theta()}, sb{s * b.x(), s * b.y(), b.theta()};
    CHECK(dubins_shortest(sa, sb, TurnRadius(s * r)).total == doctest::Approx(s * best.total).epsilon(1e-9));
  }
}

TEST_CASE("pruned normalized search equals the full scan") {
  CHECK(std::abs(detail::atan2_approx(1.0, 1.0) - kPi / 4) <= detail::kAtan2ApproxError);
  std::mt19937_64 rng(9);
  double worst_atan = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const double y = uniform(rng, -10, 10), x = uniform(rng, -10, 10);
    worst_atan = std::max(worst_atan, std::abs(detail::atan2_approx(y, x) - std::atan2(y, x)));
  }
  CHECK(worst_atan <= detail::kAtan2ApproxError);

  for (int i = 0; i < 5000; ++i) {
    const double d = uniform(rng, 0.0, 8.0);
    const auto s = detail::start_circles(uniform(rng, 0, kTwoPi));
    const auto e = detail::end_circles(d, uniform(rng, 0, kTwoPi));
    double full = std::numeric_limits<double>::infinity();
    for (DubinsWord w : kAllWords) {
      if (const auto p = detail::word_params(s, e, w)) full = std::min(full, (*p)[0] + (*p)[1] + (*p)[2]);
    }
    CHECK(detail::shortest_normalized(s, e, std::numeric_limits<double>::infinity()) == doctest::Approx(full).epsilon(1e-12));
    const double bound = uniform(rng, d, d + 8.0);
    CHECK(detail::shortest_normalized(s, e, bound) == doctest::Approx(std::min(bound, full)).epsilon(1e-12));
  }
}
