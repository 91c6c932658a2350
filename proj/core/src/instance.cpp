#include "dtsp/instance.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "dtsp/error.hpp"

namespace dtsp {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

ProblemInstance generate_instance(std::size_t n, double extent, double rho, std::uint64_t seed) {
  if (n < 1) throw ValidationError("generate_instance: n must be at least 1");
  if (!(extent > 0.0) || !std::isfinite(extent)) throw ValidationError("generate_instance: extent must be positive");
  TurnRadius{rho};
  std::mt19937_64 rng(seed);
  auto unit = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  ProblemInstance inst;
  inst.name = "n" + std::to_string(n) + "_s" + std::to_string(seed);
  inst.extent = extent;
  inst.rho = rho;
  inst.seed = seed;
  inst.targets.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = extent * unit();
    const double y = extent * unit();
    inst.targets.push_back({x, y});
  }
  return inst;
}

void validate_instance(const ProblemInstance& inst) {
  if (!(inst.rho > 0.0) || !std::isfinite(inst.rho)) throw ValidationError("instance '" + inst.name + "': rho must be positive");
  if (inst.targets.empty()) throw ValidationError("instance '" + inst.name + "': no targets");
  for (std::size_t i = 0; i < inst.targets.size(); ++i) {
    const Point p = inst.targets[i];
    if (!(p.x >= 0.0 && p.x <= inst.extent && p.y >= 0.0 && p.y <= inst.extent)) {
      throw ValidationError("instance '" + inst.name + "': target " + std::to_string(i) + " outside [0, extent]^2");
    }
  }
}

std::string to_json(const ProblemInstance& inst) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"name\": " << nlohmann::json(inst.name).dump() << ",\n";
  out << "  \"extent\": " << format_double(inst.extent) << ",\n";
  out << "  \"rho\": " << format_double(inst.rho) << ",\n";
  out << "  \"seed\": " << inst.seed << ",\n";
  out << "  \"targets\": [";
  for (std::size_t i = 0; i < inst.targets.size(); ++i) {
    out << (i ? ",\n    " : "\n    ") << '[' << format_double(inst.targets[i].x) << ", "
        << format_double(inst.targets[i].y) << ']';
  }
  out << (inst.targets.empty() ? "]\n" : "\n  ]\n");
  out << "}\n";
  return out.str();
}

ProblemInstance instance_from_json(const std::string& text) {
  ProblemInstance inst;
  try {
    const auto j = nlohmann::json::parse(text);
    inst.name = j.at("name").get<std::string>();
    inst.extent = j.at("extent").get<double>();
    inst.rho = j.at("rho").get<double>();
    inst.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& t : j.at("targets")) {
      if (!t.is_array() || t.size() != 2) throw ValidationError("instance: each target must be [x, y]");
      inst.targets.push_back({t[0].get<double>(), t[1].get<double>()});
    }
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("instance JSON: ") + e.what());
  }
  validate_instance(inst);
  return inst;
}

void write_instance(const ProblemInstance& inst, const std::filesystem::path& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path.string() + " for writing");
  f << to_json(inst);
  if (!f) throw IoError("failed writing " + path.string());
}

ProblemInstance read_instance(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path.string());
  std::ostringstream s;
  s << f.rdbuf();
  return instance_from_json(s.str());
}

Partition uniform_partition(std::size_t m) {
  if (m < 1) throw ValidationError("uniform_partition: m must be at least 1");
  Partition p;
  p.reserve(m);
  for (std::size_t j = 0; j < m; ++j) {
    const double lo = kTwoPi * static_cast<double>(j) / static_cast<double>(m);
    const double hi = j + 1 == m ? kTwoPi : kTwoPi * static_cast<double>(j + 1) / static_cast<double>(m);
    p.emplace_back(lo, hi);
  }
  return p;
}

std::vector<double> uniform_headings(std::size_t k, HeadingPlacement placement) {
  if (k < 1) throw ValidationError("uniform_headings: k must be at least 1");
  const double offset = placement == HeadingPlacement::midpoints ? 0.5 : 0.0;
  std::vector<double> h;
  h.reserve(k);
  for (std::size_t j = 0; j < k; ++j) h.push_back(kTwoPi * (static_cast<double>(j) + offset) / static_cast<double>(k));
  return h;
}

}  // namespace dtsp
