#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "dtsp/error.hpp"
#include "dtsp/report.hpp"

namespace dtsp {

namespace {

// Maps plane coordinates to SVG user space (y grows downward).
struct Screen {
  double min_x = 0.0, max_y = 0.0;
  double x(double px) const { return px - min_x; }
  double y(double py) const { return max_y - py; }
};

std::string xml_escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

// Exact arc/line geometry of one Dubins path as SVG path data. Arcs are split
// into pieces of at most a quarter turn so full circles draw correctly.
std::string leg_path(const Screen& s, const Configuration& start, const DubinsPath& path, double rho) {
  std::ostringstream d;
  d << "M " << num(s.x(start.x())) << ' ' << num(s.y(start.y()));
  Configuration cur = start;
  const auto types = segments(path.word);
  for (int i = 0; i < 3; ++i) {
    const double len = path.seg_lengths[static_cast<std::size_t>(i)];
    if (len <= 0.0) continue;
    if (types[static_cast<std::size_t>(i)] == SegmentType::S) {
      cur = simulate_segment(cur, rho, SegmentType::S, len);
      d << " L " << num(s.x(cur.x())) << ' ' << num(s.y(cur.y()));
      continue;
    }
    const int pieces = std::max(1, static_cast<int>(std::ceil(len / rho / (kPi / 2.0))));
    const char* sweep = types[static_cast<std::size_t>(i)] == SegmentType::L ? "0" : "1";
    for (int p = 0; p < pieces; ++p) {
      cur = simulate_segment(cur, rho, types[static_cast<std::size_t>(i)], len / pieces);
      d << " A " << num(rho) << ' ' << num(rho) << " 0 0 " << sweep << ' ' << num(s.x(cur.x())) << ' '
        << num(s.y(cur.y()));
    }
  }
  return d.str();
}

std::string sector_path(const Screen& s, Point c, double r, const AngleInterval& iv) {
  std::ostringstream d;
  if (iv.width() >= kTwoPi - 1e-12) {
    d << "M " << num(s.x(c.x + r)) << ' ' << num(s.y(c.y)) << " A " << num(r) << ' ' << num(r) << " 0 1 0 "
      << num(s.x(c.x - r)) << ' ' << num(s.y(c.y)) << " A " << num(r) << ' ' << num(r) << " 0 1 0 "
      << num(s.x(c.x + r)) << ' ' << num(s.y(c.y)) << " Z";
    return d.str();
  }
  const Point a{c.x + r * std::cos(iv.lo()), c.y + r * std::sin(iv.lo())};
  const Point b{c.x + r * std::cos(iv.hi()), c.y + r * std::sin(iv.hi())};
  d << "M " << num(s.x(c.x)) << ' ' << num(s.y(c.y)) << " L " << num(s.x(a.x)) << ' ' << num(s.y(a.y)) << " A "
    << num(r) << ' ' << num(r) << " 0 " << (iv.width() > kPi ? 1 : 0) << " 0 " << num(s.x(b.x)) << ' '
    << num(s.y(b.y)) << " Z";
  return d.str();
}

}  // namespace

RenderedTour rendered(const LowerBoundResult& lb, const ProblemInstance& inst) {
  RenderedTour t;
  t.mode = RenderMode::lower;
  t.m_or_k = lb.m;
  t.cost = lb.tour.cost;
  t.legs = lb.legs;
  const Partition part = uniform_partition(lb.m);
  for (std::size_t i = 0; i < inst.targets.size() && i < lb.tour.choice.size(); ++i) {
    t.intervals.push_back(part[lb.tour.choice[i]]);
  }
  return t;
}

RenderedTour rendered(const UpperBoundResult& ub) {
  RenderedTour t;
  t.mode = RenderMode::upper;
  t.m_or_k = ub.k;
  t.cost = ub.value;
  t.legs = ub.legs;
  return t;
}

std::string tour_to_json(const RenderedTour& t, const std::string& instance_name) {
  nlohmann::ordered_json j;
  j["instance"] = instance_name;
  j["mode"] = t.mode == RenderMode::lower ? "lower" : "upper";
  j["m_or_k"] = t.m_or_k;
  j["cost"] = t.cost;
  j["legs"] = nlohmann::ordered_json::array();
  for (const Leg& l : t.legs) {
    j["legs"].push_back({{"from", l.from}, {"to", l.to}, {"theta1", l.theta1}, {"theta2", l.theta2}});
  }
  j["intervals"] = nlohmann::ordered_json::array();
  for (const AngleInterval& iv : t.intervals) j["intervals"].push_back({iv.lo(), iv.hi()});
  return j.dump(2) + "\n";
}

RenderedTour tour_from_json(const std::string& text, const ProblemInstance& inst) {
  RenderedTour t;
  const TurnRadius rho(inst.rho);
  try {
    const auto j = nlohmann::json::parse(text);
    const std::string mode = j.at("mode").get<std::string>();
    if (mode != "lower" && mode != "upper") throw ValidationError("tour: mode must be 'lower' or 'upper'");
    t.mode = mode == "lower" ? RenderMode::lower : RenderMode::upper;
    t.m_or_k = j.at("m_or_k").get<std::size_t>();
    t.cost = j.at("cost").get<double>();
    for (const auto& l : j.at("legs")) {
      Leg leg;
      leg.from = l.at("from").get<std::size_t>();
      leg.to = l.at("to").get<std::size_t>();
      if (leg.from >= inst.targets.size() || leg.to >= inst.targets.size()) {
        throw ValidationError("tour: leg refers to a target outside the instance");
      }
      leg.theta1 = l.at("theta1").get<double>();
      leg.theta2 = l.at("theta2").get<double>();
      leg.path = dubins_shortest({inst.targets[leg.from], leg.theta1}, {inst.targets[leg.to], leg.theta2}, rho);
      t.legs.push_back(leg);
    }
    if (j.contains("intervals")) {
      for (const auto& iv : j.at("intervals")) t.intervals.emplace_back(iv.at(0).get<double>(), iv.at(1).get<double>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("tour JSON: ") + e.what());
  }
  return t;
}

std::string render_svg(const ProblemInstance& inst, const std::vector<RenderedTour>& tours) {
  const double margin = 3.0 * inst.rho;
  Screen s{-margin, inst.extent + margin};
  const double size = inst.extent + 2.0 * margin;
  const double r_target = std::max(inst.extent / 200.0, 1.0);

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" viewBox=\"0 0 " << num(size) << ' '
      << num(size) << "\">\n";
  out << "  <title>" << xml_escape(inst.name) << "</title>\n";
  out << "  <rect x=\"" << num(s.x(0.0)) << "\" y=\"" << num(s.y(inst.extent)) << "\" width=\"" << num(inst.extent)
      << "\" height=\"" << num(inst.extent) << "\" fill=\"none\" stroke=\"#cccccc\"/>\n";

  static constexpr const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};
  for (std::size_t ti = 0; ti < tours.size(); ++ti) {
    const RenderedTour& t = tours[ti];
    const char* color = kColors[ti % 4];
    const char* mode = t.mode == RenderMode::lower ? "lower" : "upper";
    out << "  <g class=\"tour " << mode << "\" data-m-or-k=\"" << t.m_or_k << "\" data-cost=\"" << format_double(t.cost)
        << "\" stroke=\"" << color << "\" fill=\"none\" stroke-width=\"" << num(r_target / 2.0) << "\">\n";
    for (std::size_t i = 0; i < t.intervals.size() && i < inst.targets.size(); ++i) {
      out << "    <path class=\"interval\" d=\"" << sector_path(s, inst.targets[i], 0.6 * inst.rho, t.intervals[i])
          << "\" fill=\"" << color << "\" fill-opacity=\"0.15\" stroke=\"none\"/>\n";
    }
    for (const Leg& l : t.legs) {
      const Configuration start(inst.targets[l.from], l.theta1);
      out << "    <path class=\"leg\" data-from=\"" << l.from << "\" data-to=\"" << l.to << "\" data-word=\""
          << to_string(l.path.word) << "\" d=\"" << leg_path(s, start, l.path, inst.rho) << "\"/>\n";
    }
    for (const Leg& l : t.legs) {
      const Point p = inst.targets[l.from];
      const double len = 0.4 * inst.rho;
      out << "    <line class=\"heading\" x1=\"" << num(s.x(p.x)) << "\" y1=\"" << num(s.y(p.y)) << "\" x2=\""
          << num(s.x(p.x + len * std::cos(l.theta1))) << "\" y2=\"" << num(s.y(p.y + len * std::sin(l.theta1)))
          << "\"/>\n";
    }
    out << "  </g>\n";
  }
  out << "  <g class=\"targets\" fill=\"#000000\" font-size=\"" << num(4.0 * r_target) << "\">\n";
  for (std::size_t i = 0; i < inst.targets.size(); ++i) {
    const Point p = inst.targets[i];
    out << "    <circle cx=\"" << num(s.x(p.x)) << "\" cy=\"" << num(s.y(p.y)) << "\" r=\"" << num(r_target)
        << "\"/>\n";
    out << "    <text x=\"" << num(s.x(p.x) + 1.5 * r_target) << "\" y=\"" << num(s.y(p.y) - 1.5 * r_target) << "\">"
        << i << "</text>\n";
  }
  out << "  </g>\n</svg>\n";
  return out.str();
}

}  // namespace dtsp
