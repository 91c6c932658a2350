#include "dtsp/tsplib.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "dtsp/error.hpp"

namespace dtsp {

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

TsplibMatrix to_tsplib(const std::vector<double>& cost, std::size_t n, const TsplibOptions& options) {
  if (!(options.scale > 0.0) || !std::isfinite(options.scale)) throw ValidationError("TSPLIB scale must be positive");
  if (cost.size() != n * n) throw ValidationError("TSPLIB export: matrix size does not match dimension");
  TsplibMatrix m;
  m.name = options.name;
  m.type = options.symmetric ? "TSP" : "ATSP";
  m.dimension = n;
  m.weights.assign(n * n, 0);

  std::int64_t finite_sum = 0;
  std::vector<bool> excluded(n * n, false);
  for (std::size_t k = 0; k < n * n; ++k) {
    if (k / n == k % n) continue;
    if (!std::isfinite(cost[k])) {
      excluded[k] = true;
      continue;
    }
    const double scaled = cost[k] * options.scale;
    const double r = options.mode == BoundMode::lower ? std::floor(scaled) : std::ceil(scaled);
    if (r > 9.0e15) throw ValidationError("TSPLIB export: scaled cost too large for an integer matrix");
    m.weights[k] = static_cast<std::int64_t>(r);
    finite_sum += m.weights[k];
  }
  const std::int64_t big = finite_sum + 1;
  for (std::size_t k = 0; k < n * n; ++k) {
    if (excluded[k]) m.weights[k] = big;
  }

  m.comments.push_back(std::string("mode ") + (options.mode == BoundMode::lower ? "lower (floor)" : "upper (ceil)"));
  m.comments.push_back("scale " + fmt17(options.scale));
  m.comments.push_back("shift M " + fmt17(options.shift));
  m.comments.push_back("excluded weight " + std::to_string(big));
  return m;
}

std::string format_tsplib(const TsplibMatrix& m) {
  std::ostringstream out;
  out << "NAME: " << m.name << '\n';
  out << "TYPE: " << m.type << '\n';
  for (const auto& c : m.comments) out << "COMMENT: " << c << '\n';
  out << "DIMENSION: " << m.dimension << '\n';
  out << "EDGE_WEIGHT_TYPE: EXPLICIT\n";
  out << "EDGE_WEIGHT_FORMAT: FULL_MATRIX\n";
  out << "EDGE_WEIGHT_SECTION\n";
  for (std::size_t i = 0; i < m.dimension; ++i) {
    for (std::size_t j = 0; j < m.dimension; ++j) {
      if (j) out << ' ';
      out << m.weights[i * m.dimension + j];
    }
    out << '\n';
  }
  out << "EOF\n";
  return out.str();
}

void write_tsplib(const TsplibMatrix& m, const std::filesystem::path& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path.string() + " for writing");
  f << format_tsplib(m);
  if (!f) throw IoError("failed writing " + path.string());
}

TsplibMatrix parse_tsplib(const std::string& text) {
  TsplibMatrix m;
  std::istringstream in(text);
  std::string line;
  bool section = false;
  std::string type, format;
  while (!section && std::getline(in, line)) {
    line = trim(line);
    if (line.empty()) continue;
    if (line == "EDGE_WEIGHT_SECTION") {
      section = true;
      break;
    }
    if (line == "EOF") break;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw IoError("TSPLIB: malformed header line '" + line + "'");
    const std::string key = trim(line.substr(0, colon)), value = trim(line.substr(colon + 1));
    if (key == "NAME") {
      m.name = value;
    } else if (key == "TYPE") {
      m.type = value;
    } else if (key == "COMMENT") {
      m.comments.push_back(value);
    } else if (key == "DIMENSION") {
      m.dimension = static_cast<std::size_t>(std::stoull(value));
    } else if (key == "EDGE_WEIGHT_TYPE") {
      type = value;
    } else if (key == "EDGE_WEIGHT_FORMAT") {
      format = value;
    }
  }
  if (!section) throw IoError("TSPLIB: missing EDGE_WEIGHT_SECTION");
  if (type != "EXPLICIT" || format != "FULL_MATRIX") throw IoError("TSPLIB: only EXPLICIT FULL_MATRIX is supported");
  m.weights.reserve(m.dimension * m.dimension);
  std::int64_t w;
  while (m.weights.size() < m.dimension * m.dimension && in >> w) m.weights.push_back(w);
  if (m.weights.size() != m.dimension * m.dimension) throw IoError("TSPLIB: weight section is incomplete");
  return m;
}

TsplibMatrix read_tsplib(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path.string());
  std::ostringstream s;
  s << f.rdbuf();
  return parse_tsplib(s.str());
}

}  // namespace dtsp
