#pragma once

/**
 * @file report.hpp
 * @brief Batch CSV reports, summaries and SVG tour rendering.
 *
 * Report columns: instance,n,rho,m_or_k,kind,value,certified,seconds.
 * kind is one of LB_exact, LB_relaxed, BP_heuristic, UB, ETSP. `certified`
 * is true when the value is a proven bound of its kind (LB_* rows), a
 * feasible tour (UB) or a proven optimum (ETSP); BP_heuristic is never
 * certified. `seconds` stays empty unless timing output is requested, so
 * reports are byte-identical across runs.
 */

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "dtsp/pipeline.hpp"

namespace dtsp {

struct ReportRow {
  std::string instance;
  std::size_t n = 0;
  double rho = 0.0;
  std::size_t m_or_k = 0;  ///< 0 for ETSP rows, printed empty
  std::string kind;
  double value = 0.0;
  bool certified = false;
  double seconds = -1.0;  ///< negative when not recorded
};

inline constexpr const char* kReportHeader = "instance,n,rho,m_or_k,kind,value,certified,seconds";

/// Rows of a batch, ordered by instance name, then ETSP, LB rows by m, UB.
std::vector<ReportRow> report_rows(std::vector<BoundReport> batch, bool timing);
std::string format_report(const std::vector<ReportRow>& rows);
std::vector<ReportRow> parse_report(const std::string& csv);

/// Per-m means over instances: (LB - ETSP) / ETSP and (UB - LB) / LB, using
/// the certified LB of each instance.
struct SummaryRow {
  std::size_t m = 0;
  std::size_t instances = 0;
  double mean_improvement = 0.0;
  double mean_gap = 0.0;  ///< NaN when no UB rows exist
};

inline constexpr const char* kSummaryHeader = "m,instances,mean_improvement_over_etsp,mean_gap_ub_lb";

std::vector<SummaryRow> summarize(const std::vector<ReportRow>& rows);
std::string format_summary(const std::vector<SummaryRow>& rows);

void write_text(const std::filesystem::path& path, const std::string& text);
std::string read_text(const std::filesystem::path& path);

enum class RenderMode : std::uint8_t { lower, upper };

struct RenderedTour {
  RenderMode mode = RenderMode::upper;
  std::size_t m_or_k = 0;
  double cost = 0.0;
  std::vector<Leg> legs;
  std::vector<AngleInterval> intervals;  ///< chosen interval per target (lower mode)
};

RenderedTour rendered(const LowerBoundResult& lb, const ProblemInstance& inst);
RenderedTour rendered(const UpperBoundResult& ub);

/// Tour JSON: {"instance","mode","m_or_k","cost","legs":[{"from","to","theta1","theta2"}],"intervals":[[lo,hi],...]}.
std::string tour_to_json(const RenderedTour& t, const std::string& instance_name);
/// Reads a tour file and rebuilds each leg path with dubins_shortest.
RenderedTour tour_from_json(const std::string& text, const ProblemInstance& inst);

/// SVG with targets, headings (and chosen intervals in lower mode) and the
/// exact arc/line geometry of every leg. Several tours may share one picture.
std::string render_svg(const ProblemInstance& inst, const std::vector<RenderedTour>& tours);

}  // namespace dtsp
