#include "dtsp/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include "dtsp/error.hpp"

namespace dtsp {

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

void check_name(const std::string& name) {
  if (name.find_first_of(",\"\n\r") != std::string::npos) {
    throw ValidationError("instance name '" + name + "' cannot be written to CSV");
  }
}

}  // namespace

std::vector<ReportRow> report_rows(std::vector<BoundReport> batch, bool timing) {
  std::stable_sort(batch.begin(), batch.end(),
                   [](const BoundReport& a, const BoundReport& b) { return a.instance < b.instance; });
  std::vector<ReportRow> rows;
  for (const BoundReport& r : batch) {
    check_name(r.instance);
    auto row = [&](std::size_t mk, const char* kind, double value, bool cert, double secs) {
      rows.push_back({r.instance, r.n, r.rho, mk, kind, value, cert, timing ? secs : -1.0});
    };
    if (r.etsp) row(0, "ETSP", r.etsp->value, r.etsp->optimal, r.etsp_seconds);
    for (std::size_t i = 0; i < r.lower.size(); ++i) {
      const LowerBoundResult& lb = r.lower[i];
      const double secs = i < r.lower_seconds.size() ? r.lower_seconds[i] : 0.0;
      row(lb.m, lb.strategy == Strategy::exact ? "LB_exact" : "LB_relaxed", lb.value, true, secs);
      if (lb.heuristic_value) row(lb.m, "BP_heuristic", *lb.heuristic_value, false, secs);
    }
    if (r.upper) row(r.upper->k, "UB", r.upper->value, true, r.upper_seconds);
  }
  return rows;
}

std::string format_report(const std::vector<ReportRow>& rows) {
  std::ostringstream out;
  out << kReportHeader << '\n';
  for (const ReportRow& r : rows) {
    out << r.instance << ',' << r.n << ',' << format_double(r.rho) << ',';
    if (r.kind != "ETSP") out << r.m_or_k;
    out << ',' << r.kind << ',' << format_double(r.value) << ',' << (r.certified ? "true" : "false") << ',';
    if (r.seconds >= 0.0) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3f", r.seconds);
      out << buf;
    }
    out << '\n';
  }
  return out.str();
}

std::vector<ReportRow> parse_report(const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  if (!std::getline(in, line) || split(line, ',') != split(kReportHeader, ',')) {
    throw IoError("report CSV: unexpected header");
  }
  std::vector<ReportRow> rows;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    const auto f = split(line, ',');
    if (f.size() != 8) throw IoError("report CSV: expected 8 fields in '" + line + "'");
    try {
      ReportRow r;
      r.instance = f[0];
      r.n = std::stoul(f[1]);
      r.rho = std::stod(f[2]);
      r.m_or_k = f[3].empty() ? 0 : std::stoul(f[3]);
      r.kind = f[4];
      r.value = std::stod(f[5]);
      r.certified = f[6] == "true";
      r.seconds = f[7].empty() ? -1.0 : std::stod(f[7]);
      rows.push_back(r);
    } catch (const std::logic_error&) {
      throw IoError("report CSV: malformed number in '" + line + "'");
    }
  }
  return rows;
}

std::vector<SummaryRow> summarize(const std::vector<ReportRow>& rows) {
  std::map<std::string, double> etsp, ub;
  for (const ReportRow& r : rows) {
    if (r.kind == "ETSP") etsp[r.instance] = r.value;
    if (r.kind == "UB") ub[r.instance] = r.value;
  }
  std::map<std::size_t, SummaryRow> by_m;
  std::map<std::size_t, std::size_t> gap_count;
  for (const ReportRow& r : rows) {
    if (r.kind != "LB_exact" && r.kind != "LB_relaxed") continue;
    const auto e = etsp.find(r.instance);
    if (e == etsp.end()) continue;
    SummaryRow& s = by_m[r.m_or_k];
    s.m = r.m_or_k;
    ++s.instances;
    s.mean_improvement += (r.value - e->second) / e->second;
    const auto u = ub.find(r.instance);
    if (u != ub.end()) {
      s.mean_gap += (u->second - r.value) / r.value;
      ++gap_count[r.m_or_k];
    }
  }
  std::vector<SummaryRow> out;
  for (auto& [m, s] : by_m) {
    s.mean_improvement /= static_cast<double>(s.instances);
    s.mean_gap = gap_count[m] ? s.mean_gap / static_cast<double>(gap_count[m]) : std::numeric_limits<double>::quiet_NaN();
    out.push_back(s);
  }
  return out;
}

std::string format_summary(const std::vector<SummaryRow>& rows) {
  std::ostringstream out;
  out << kSummaryHeader << '\n';
  for (const SummaryRow& s : rows) {
    out << s.m << ',' << s.instances << ',' << format_double(s.mean_improvement) << ',';
    if (!std::isnan(s.mean_gap)) out << format_double(s.mean_gap);
    out << '\n';
  }
  return out.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path.string() + " for writing");
  f << text;
  if (!f) throw IoError("failed writing " + path.string());
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path.string());
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

}  // namespace dtsp
