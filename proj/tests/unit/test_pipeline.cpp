#include <filesystem>
#include <regex>
#include <set>

#include "doctest.h"
#include "dtsp/brute_force.hpp"
#include "dtsp/error.hpp"
#include "dtsp/pipeline.hpp"
#include "dtsp/report.hpp"

using namespace dtsp;

namespace {

ProblemInstance shipped(int seed) {
  return read_instance(std::filesystem::path(DTSP_SOURCE_DIR) / "data" / "n8" / ("n8_s" + std::to_string(seed) + ".json"));
}

ProblemInstance small_instance() {
  ProblemInstance inst = generate_instance(5, 1000.0, 100.0, 42);
  inst.name = "small";
  return inst;
}

// Minimal well-formedness check: every start tag is closed in order.
bool xml_balanced(const std::string& svg) {
  std::vector<std::string> stack;
  const std::regex tag(R"(<(/?)([A-Za-z][A-Za-z0-9]*)[^>]*?(/?)>)");
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), tag); it != std::sregex_iterator(); ++it) {
    const auto& m = *it;
    if (m[3].length()) continue;
    if (m[1].length() == 0) {
      stack.push_back(m[2]);
    } else {
      if (stack.empty() || stack.back() != m[2]) return false;
      stack.pop_back();
    }
  }
  return stack.empty();
}

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("instance generation and files") {
  const ProblemInstance a = generate_instance(20, 1000.0, 100.0, 7);
  const ProblemInstance b = generate_instance(20, 1000.0, 100.0, 7);
  CHECK(to_json(a) == to_json(b));
  for (const Point& p : a.targets) {
    CHECK(p.x >= 0.0);
    CHECK(p.x <= 1000.0);
    CHECK(p.y >= 0.0);
    CHECK(p.y <= 1000.0);
  }
  std::set<std::string> distinct;
  for (std::uint64_t s = 1; s <= 25; ++s) distinct.insert(to_json(generate_instance(20, 1000.0, 100.0, s)));
  CHECK(distinct.size() == 25);

  const ProblemInstance back = instance_from_json(to_json(a));
  CHECK(back.targets == a.targets);
  CHECK(back.rho == a.rho);
  CHECK(back.seed == a.seed);
  CHECK(to_json(back) == to_json(a));
  CHECK(to_json(a).find("\"name\"") < to_json(a).find("\"extent\""));

  CHECK_THROWS_AS(instance_from_json("{"), IoError);
  CHECK_THROWS_AS(read_instance("/nonexistent/x.json"), IoError);
  ProblemInstance bad = a;
  bad.targets.push_back({1001.0, 5.0});
  CHECK_THROWS_AS(validate_instance(bad), ValidationError);
  bad = a;
  bad.rho = 0.0;
  CHECK_THROWS_AS(validate_instance(bad), ValidationError);
}

TEST_CASE("partitions and headings") {
  const Partition one = uniform_partition(1);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == AngleInterval::full());
  const Partition four = uniform_partition(4);
  CHECK(four[1].lo() == kPi / 2);
  CHECK(four[2].lo() == kPi);
  CHECK(four[3].lo() == 3 * kPi / 2);
  CHECK(four[3].hi() == kTwoPi);
  for (std::size_t m : {1, 2, 4, 8, 16}) {
    const Partition c = uniform_partition(m), f = uniform_partition(2 * m);
    for (std::size_t j = 0; j < m; ++j) {
      CHECK(f[2 * j].lo() == c[j].lo());
      CHECK(f[2 * j].hi() == f[2 * j + 1].lo());
      CHECK(f[2 * j + 1].hi() == c[j].hi());
    }
    const auto hc = uniform_headings(m), hf = uniform_headings(2 * m);
    for (std::size_t j = 0; j < m; ++j) CHECK(hf[2 * j] == hc[j]);
  }
  CHECK(uniform_headings(4, HeadingPlacement::midpoints)[0] == kPi / 4);
  CHECK_THROWS(uniform_partition(0));
}

TEST_CASE("Euclidean baseline") {
  ProblemInstance line{"line", 100.0, 10.0, 0, {{0, 0}, {30, 0}, {100, 0}}};
  CHECK(etsp(line).value == doctest::Approx(200.0));
  ProblemInstance square{"sq", 100.0, 10.0, 0, {{0, 0}, {0, 50}, {50, 50}, {50, 0}}};
  CHECK(etsp(square).value == doctest::Approx(200.0));

  for (int s = 1; s <= 3; ++s) {
    const ProblemInstance inst = shipped(s);
    const auto e = etsp(inst);
    CHECK(e.optimal);
    const auto m = euclidean_matrix(inst.targets);
    CHECK(e.value == doctest::Approx(brute_force_atsp(m, inst.targets.size()).cost).epsilon(1e-12));
  }
}

TEST_CASE("bounds on a small instance") {
  const ProblemInstance inst = small_instance();
  const double e = etsp(inst).value;
  const auto lb1 = lower_bound(inst, 1, Strategy::exact);
  CHECK(lb1.value == e);
  CHECK(lb1.strategy == Strategy::exact);

  const auto lb4 = lower_bound(inst, 4, Strategy::automatic);
  CHECK(lb4.strategy == Strategy::exact);
  CHECK(lb4.value >= e - 1e-9);
  REQUIRE(lb4.legs.size() == 5);
  for (const Leg& leg : lb4.legs) {
    const auto p = dubins_shortest({inst.targets[leg.from], leg.theta1}, {inst.targets[leg.to], leg.theta2},
                                   TurnRadius(inst.rho));
    CHECK(p.total == doctest::Approx(leg.path.total).epsilon(1e-12));
  }

  const auto relaxed = lower_bound(inst, 4, Strategy::relaxed);
  CHECK(relaxed.strategy == Strategy::relaxed);
  CHECK(relaxed.value <= lb4.value + 1e-9);
  REQUIRE(relaxed.heuristic_value);
  CHECK(*relaxed.heuristic_value >= lb4.value - 1e-9);

  const auto ub = upper_bound(inst, 4);
  CHECK(ub.optimal);
  CHECK(ub.value >= lb4.value - 1e-9);
  double sum = 0.0;
  for (const Leg& leg : ub.legs) sum += leg.path.total;
  CHECK(sum == doctest::Approx(ub.value).epsilon(1e-12));
  // Arrival and departure headings agree at every target.
  for (std::size_t i = 0; i < ub.legs.size(); ++i) {
    const Leg& in = ub.legs[i];
    const Leg& out = ub.legs[(i + 1) % ub.legs.size()];
    CHECK(in.to == out.from);
    CHECK(in.theta2 == out.theta1);
  }

  PipelineOptions tight;
  tight.limits.exact_sets = 3;
  CHECK_THROWS_AS(lower_bound(inst, 4, Strategy::exact, tight), CapExceeded);
  CHECK(lower_bound(inst, 4, Strategy::automatic, tight).strategy == Strategy::relaxed);
  CHECK(!upper_bound(inst, 2, tight).optimal);

  CHECK(parse_strategy("auto") == Strategy::automatic);
  CHECK(!parse_strategy("fast"));
}

TEST_CASE("reports") {
  CHECK(format_report(report_rows({}, false)) == std::string(kReportHeader) + "\n");
  CHECK(format_summary(summarize({})) == std::string(kSummaryHeader) + "\n");

  const ProblemInstance inst = small_instance();
  const BoundReport rep = compare_instance(inst, {1, 4}, 4, Strategy::exact);
  const auto rows = report_rows({rep}, false);
  const std::string csv = format_report(rows);
  CHECK(csv == format_report(report_rows({compare_instance(inst, {1, 4}, 4, Strategy::exact)}, false)));
  CHECK(csv.find("small,5,100,,ETSP,") != std::string::npos);

  const auto parsed = parse_report(csv);
  REQUIRE(parsed.size() == rows.size());
  double lb4 = 0, ub = 0, e = 0;
  for (const auto& r : parsed) {
    CHECK(r.seconds < 0.0);
    if (r.kind == "LB_exact" && r.m_or_k == 4) lb4 = r.value;
    if (r.kind == "UB") ub = r.value;
    if (r.kind == "ETSP") e = r.value;
  }
  const auto summary = summarize(parsed);
  REQUIRE(summary.size() == 2);
  CHECK(summary[1].m == 4);
  CHECK(summary[1].mean_gap == doctest::Approx((ub - lb4) / lb4).epsilon(1e-15));
  CHECK(summary[1].mean_improvement == doctest::Approx((lb4 - e) / e).epsilon(1e-15));
  CHECK(summary[0].mean_improvement == 0.0);

  const auto timed = format_report(report_rows({rep}, true));
  CHECK(parse_report(timed)[0].seconds >= 0.0);

  BoundReport bad = rep;
  bad.instance = "a,b";
  CHECK_THROWS_AS(report_rows({bad}, false), ValidationError);
  CHECK_THROWS_AS(parse_report("nope\n"), IoError);
}

TEST_CASE("tour files and SVG") {
  const ProblemInstance inst = small_instance();
  const auto lb = lower_bound(inst, 4, Strategy::exact);
  const auto ub = upper_bound(inst, 4);
  const RenderedTour rl = rendered(lb, inst), ru = rendered(ub);
  CHECK(rl.intervals.size() == inst.targets.size());

  for (const RenderedTour& t : {rl, ru}) {
    const RenderedTour back = tour_from_json(tour_to_json(t, inst.name), inst);
    CHECK(back.mode == t.mode);
    CHECK(back.m_or_k == t.m_or_k);
    CHECK(back.cost == t.cost);
    REQUIRE(back.legs.size() == t.legs.size());
    for (std::size_t i = 0; i < t.legs.size(); ++i) {
      CHECK(back.legs[i].from == t.legs[i].from);
      CHECK(back.legs[i].theta1 == t.legs[i].theta1);
      CHECK(back.legs[i].path.total == t.legs[i].path.total);
    }
    CHECK(tour_to_json(back, inst.name) == tour_to_json(t, inst.name));
  }
  CHECK_THROWS_AS(tour_from_json("[]", inst), IoError);

  const std::string svg = render_svg(inst, {rl, ru});
  CHECK(svg.find("<svg ") != std::string::npos);
  CHECK(xml_balanced(svg));
  CHECK(count(svg, "class=\"leg\"") == 2 * inst.targets.size());
  CHECK(count(svg, "<g class=\"tour lower\"") == 1);
  CHECK(count(svg, "<g class=\"tour upper\"") == 1);
  CHECK(render_svg(inst, {ru}) == render_svg(inst, {ru}));
}
