// dtsp: command-line driver for the Dubins TSP bounding pipeline.
//
// Exit codes: 0 success, 1 validation or usage error, 2 I/O error.
// Relative output paths resolve against --out-dir, else $DTSP_OUTPUT_DIR, else
// the working directory.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dtsp/error.hpp"
#include "dtsp/instance.hpp"
#include "dtsp/pipeline.hpp"
#include "dtsp/report.hpp"
#include "dtsp/transform.hpp"
#include "dtsp/tsplib.hpp"
#include "dtsp/verify.hpp"

namespace fs = std::filesystem;

namespace {

struct Common {
  std::string out_dir;
  std::size_t exact_cap = 16;
  std::size_t relaxed_cap = 22;
  std::uint64_t heuristic_seed = 1;
  int restarts = 8;
  std::string placement = "endpoints";

  fs::path resolve(const std::string& p) const {
    const fs::path path(p);
    if (path.is_absolute()) return path;
    fs::path base;
    if (!out_dir.empty()) {
      base = out_dir;
    } else if (const char* env = std::getenv("DTSP_OUTPUT_DIR"); env && *env) {
      base = env;
    }
    if (base.empty()) return path;
    std::error_code ec;
    fs::create_directories(base, ec);
    if (ec) throw dtsp::IoError("cannot create output directory " + base.string());
    return base / path;
  }

  dtsp::PipelineOptions options() const {
    dtsp::PipelineOptions o;
    o.limits.exact_sets = exact_cap;
    o.limits.relaxed_sets = relaxed_cap;
    o.heuristic.seed = heuristic_seed;
    o.heuristic.restarts = restarts;
    o.placement = placement == "midpoints" ? dtsp::HeadingPlacement::midpoints : dtsp::HeadingPlacement::endpoints;
    return o;
  }
};

void add_solver_flags(CLI::App* cmd, Common& c) {
  cmd->add_option("--exact-cap", c.exact_cap, "Largest target count solved exactly")->capture_default_str();
  cmd->add_option("--relaxed-cap", c.relaxed_cap, "Largest target count for Held-Karp bounds")->capture_default_str();
  cmd->add_option("--heuristic-seed", c.heuristic_seed, "Seed of the GTSP heuristic")->capture_default_str();
  cmd->add_option("--restarts", c.restarts, "Heuristic restarts")->capture_default_str();
}

void add_placement_flag(CLI::App* cmd, Common& c) {
  cmd->add_option("--placement", c.placement, "Upper-bound headings at interval endpoints or midpoints")
      ->check(CLI::IsMember({"endpoints", "midpoints"}))
      ->capture_default_str();
}

dtsp::Strategy strategy_of(const std::string& s) {
  const auto st = dtsp::parse_strategy(s);
  if (!st) throw dtsp::ValidationError("unknown strategy '" + s + "'");
  return *st;
}

void emit(const std::string& text, const std::string& out, const Common& c) {
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    dtsp::write_text(c.resolve(out), text);
  }
}

dtsp::BoundReport single(const dtsp::ProblemInstance& inst) {
  dtsp::BoundReport r;
  r.instance = inst.name;
  r.n = inst.targets.size();
  r.rho = inst.rho;
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lower and upper bounds for the Dubins traveling salesman problem"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--out-dir", common.out_dir, "Directory for relative output paths (overrides $DTSP_OUTPUT_DIR)");

  // generate
  auto* gen = app.add_subcommand("generate", "Write random instances as JSON files");
  std::size_t gen_n = 20, gen_count = 1;
  double gen_extent = 1000.0, gen_rho = 100.0;
  std::uint64_t gen_seed = 1;
  std::string gen_prefix;
  gen->add_option("--n", gen_n, "Number of targets")->capture_default_str();
  gen->add_option("--extent", gen_extent, "Side of the square")->capture_default_str();
  gen->add_option("--rho", gen_rho, "Minimum turning radius")->capture_default_str();
  gen->add_option("--seed", gen_seed, "Seed of the first instance")->capture_default_str();
  gen->add_option("--count", gen_count, "Instances with consecutive seeds")->capture_default_str();
  gen->add_option("--prefix", gen_prefix, "File name prefix (default: instance name)");

  // lower
  auto* low = app.add_subcommand("lower", "Lower bound from m heading intervals per target");
  std::string low_instance, low_strategy = "auto", low_tour, low_svg;
  std::size_t low_m = 4;
  low->add_option("--instance", low_instance, "Instance JSON")->required();
  low->add_option("--m", low_m, "Intervals per target")->capture_default_str();
  low->add_option("--strategy", low_strategy, "exact, relaxed or auto")
      ->check(CLI::IsMember({"exact", "relaxed", "auto"}))
      ->capture_default_str();
  low->add_option("--tour-out", low_tour, "Write the tour as JSON");
  low->add_option("--svg", low_svg, "Render the tour as SVG");
  add_solver_flags(low, common);

  // upper
  auto* up = app.add_subcommand("upper", "Upper bound from k discrete headings per target");
  std::string up_instance, up_tour, up_svg;
  std::size_t up_k = 4;
  up->add_option("--instance", up_instance, "Instance JSON")->required();
  up->add_option("--k", up_k, "Headings per target")->capture_default_str();
  up->add_option("--tour-out", up_tour, "Write the tour as JSON");
  up->add_option("--svg", up_svg, "Render the tour as SVG");
  add_solver_flags(up, common);
  add_placement_flag(up, common);

  // etsp
  auto* et = app.add_subcommand("etsp", "Optimal Euclidean TSP value");
  std::string et_instance;
  et->add_option("--instance", et_instance, "Instance JSON")->required();
  add_solver_flags(et, common);

  // compare
  auto* cmp = app.add_subcommand("compare", "Batch report of ETSP, lower and upper bounds");
  std::vector<std::string> cmp_instances;
  std::vector<std::size_t> cmp_ms{4, 8, 16, 32};
  std::size_t cmp_k = 32;
  std::string cmp_strategy = "auto", cmp_out = "report.csv", cmp_summary = "summary.csv";
  bool cmp_timing = false;
  cmp->add_option("--instances", cmp_instances, "Instance JSON files or directories")->required();
  cmp->add_option("--m-list", cmp_ms, "Interval counts")->delimiter(',')->capture_default_str();
  cmp->add_option("--k", cmp_k, "Headings per target for the upper bound (0 skips it)")->capture_default_str();
  cmp->add_option("--strategy", cmp_strategy, "exact, relaxed or auto")
      ->check(CLI::IsMember({"exact", "relaxed", "auto"}))
      ->capture_default_str();
  cmp->add_option("--out", cmp_out, "Report CSV ('-' for stdout)")->capture_default_str();
  cmp->add_option("--summary", cmp_summary, "Summary CSV ('-' for stdout)")->capture_default_str();
  cmp->add_flag("--timing", cmp_timing, "Fill the seconds column (outputs are then not reproducible)");
  add_solver_flags(cmp, common);
  add_placement_flag(cmp, common);

  // export-tsplib
  auto* ex = app.add_subcommand("export-tsplib", "Write the bounding GTSP as a TSPLIB file");
  std::string ex_instance, ex_mode = "lower", ex_format = "stsp", ex_out;
  std::size_t ex_m = 4;
  double ex_scale = 1000.0;
  ex->add_option("--instance", ex_instance, "Instance JSON")->required();
  ex->add_option("--m", ex_m, "Intervals (lower) or headings (upper) per target")->capture_default_str();
  ex->add_option("--mode", ex_mode, "lower or upper")->check(CLI::IsMember({"lower", "upper"}))->capture_default_str();
  ex->add_option("--format", ex_format, "stsp (3n symmetric) or atsp (Noon-Bean only)")
      ->check(CLI::IsMember({"stsp", "atsp"}))
      ->capture_default_str();
  ex->add_option("--scale", ex_scale, "Cost multiplier before integer rounding")->capture_default_str();
  ex->add_option("--out", ex_out, "Output file (default: <instance>_<mode><m>.tsp)");
  add_placement_flag(ex, common);

  // plot
  auto* pl = app.add_subcommand("plot", "Render one or more tour files as SVG");
  std::string pl_instance, pl_out;
  std::vector<std::string> pl_tours;
  pl->add_option("--instance", pl_instance, "Instance JSON")->required();
  pl->add_option("--tour", pl_tours, "Tour JSON written by lower/upper --tour-out")->required();
  pl->add_option("--out", pl_out, "SVG file (default: <instance>.svg)");

  // verify
  auto* ver = app.add_subcommand("verify", "Randomized checks against grid and brute-force oracles");
  std::size_t ver_samples = 200, ver_trials = 500;
  std::uint64_t ver_seed = 1;
  int ver_grid = 1024;
  std::string ver_out = "-";
  ver->add_option("--samples", ver_samples, "Interval-problem cases checked against the grid oracle")
      ->capture_default_str();
  ver->add_option("--trials", ver_trials, "Transformation trials per suite")->capture_default_str();
  ver->add_option("--seed", ver_seed, "Seed of the case generator")->capture_default_str();
  ver->add_option("--grid", ver_grid, "Grid points per interval")->check(CLI::Range(2, 1 << 16))->capture_default_str();
  ver->add_option("--out", ver_out, "Result CSV ('-' for stdout)")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return 1;
  }

  try {
    const dtsp::PipelineOptions opts = common.options();

    if (*gen) {
      for (std::size_t i = 0; i < gen_count; ++i) {
        const dtsp::ProblemInstance inst = dtsp::generate_instance(gen_n, gen_extent, gen_rho, gen_seed + i);
        const std::string stem = gen_prefix.empty() ? inst.name : gen_prefix + std::to_string(gen_seed + i);
        const fs::path path = common.resolve(stem + ".json");
        dtsp::write_instance(inst, path);
        std::cout << path.string() << '\n';
      }
    } else if (*low) {
      const dtsp::ProblemInstance inst = dtsp::read_instance(low_instance);
      dtsp::BoundReport rep = single(inst);
      rep.lower.push_back(dtsp::lower_bound(inst, low_m, strategy_of(low_strategy), opts));
      std::cout << dtsp::format_report(dtsp::report_rows({rep}, false));
      const dtsp::RenderedTour t = dtsp::rendered(rep.lower.front(), inst);
      if (!low_tour.empty()) emit(dtsp::tour_to_json(t, inst.name), low_tour, common);
      if (!low_svg.empty()) emit(dtsp::render_svg(inst, {t}), low_svg, common);
    } else if (*up) {
      const dtsp::ProblemInstance inst = dtsp::read_instance(up_instance);
      dtsp::BoundReport rep = single(inst);
      rep.upper = dtsp::upper_bound(inst, up_k, opts);
      std::cout << dtsp::format_report(dtsp::report_rows({rep}, false));
      const dtsp::RenderedTour t = dtsp::rendered(*rep.upper);
      if (!up_tour.empty()) emit(dtsp::tour_to_json(t, inst.name), up_tour, common);
      if (!up_svg.empty()) emit(dtsp::render_svg(inst, {t}), up_svg, common);
    } else if (*et) {
      const dtsp::ProblemInstance inst = dtsp::read_instance(et_instance);
      dtsp::BoundReport rep = single(inst);
      rep.etsp = dtsp::etsp(inst, opts);
      std::cout << dtsp::format_report(dtsp::report_rows({rep}, false));
    } else if (*cmp) {
      std::vector<fs::path> files;
      for (const std::string& p : cmp_instances) {
        if (fs::is_directory(p)) {
          std::set<fs::path> sorted;
          for (const auto& e : fs::directory_iterator(p)) {
            if (e.path().extension() == ".json") sorted.insert(e.path());
          }
          files.insert(files.end(), sorted.begin(), sorted.end());
        } else {
          files.emplace_back(p);
        }
      }
      std::set<std::string> names;
      std::vector<dtsp::BoundReport> batch;
      for (const fs::path& f : files) {
        const dtsp::ProblemInstance inst = dtsp::read_instance(f);
        if (!names.insert(inst.name).second) throw dtsp::ValidationError("duplicate instance name '" + inst.name + "'");
        std::cerr << "compare: " << inst.name << '\n';
        batch.push_back(dtsp::compare_instance(inst, cmp_ms, cmp_k, strategy_of(cmp_strategy), opts));
      }
      const auto rows = dtsp::report_rows(std::move(batch), cmp_timing);
      emit(dtsp::format_report(rows), cmp_out, common);
      emit(dtsp::format_summary(dtsp::summarize(rows)), cmp_summary, common);
    } else if (*ex) {
      const dtsp::ProblemInstance inst = dtsp::read_instance(ex_instance);
      const std::size_t n = inst.targets.size();
      const dtsp::TurnRadius rho(inst.rho);
      const bool lower = ex_mode == "lower";
      const dtsp::GtspInstance g =
          lower ? dtsp::build_lower_matrix(inst.targets, std::vector<dtsp::Partition>(n, dtsp::uniform_partition(ex_m)),
                                           rho)
                : dtsp::build_upper_matrix(inst.targets,
                                           std::vector<std::vector<double>>(n, dtsp::uniform_headings(ex_m, opts.placement)),
                                           rho);
      const dtsp::AtspInstance a = dtsp::noon_bean(g);
      dtsp::TsplibOptions to;
      to.name = inst.name + "_" + ex_mode + std::to_string(ex_m);
      to.mode = lower ? dtsp::BoundMode::lower : dtsp::BoundMode::upper;
      to.scale = ex_scale;
      to.shift = a.shift;
      dtsp::TsplibMatrix m;
      if (ex_format == "stsp") {
        const dtsp::StspInstance s = dtsp::atsp_to_stsp(a);
        to.symmetric = true;
        m = dtsp::to_tsplib(s.cost, s.n, to);
      } else {
        m = dtsp::to_tsplib(a.cost, a.n, to);
      }
      m.comments.push_back("targets " + std::to_string(n) + ", optimum minus targets x shift is the bound");
      const fs::path path = common.resolve(ex_out.empty() ? to.name + ".tsp" : ex_out);
      dtsp::write_tsplib(m, path);
      std::cout << path.string() << " DIMENSION " << m.dimension << '\n';
    } else if (*pl) {
      const dtsp::ProblemInstance inst = dtsp::read_instance(pl_instance);
      std::vector<dtsp::RenderedTour> tours;
      for (const std::string& t : pl_tours) tours.push_back(dtsp::tour_from_json(dtsp::read_text(t), inst));
      emit(dtsp::render_svg(inst, tours), pl_out.empty() ? inst.name + ".svg" : pl_out, common);
    } else if (*ver) {
      dtsp::OracleSuiteOptions oo;
      oo.samples = ver_samples;
      oo.seed = ver_seed;
      oo.n_grid = ver_grid;
      dtsp::TransformSuiteOptions tr;
      tr.trials = ver_trials;
      tr.seed = ver_seed;
      auto results = dtsp::interval_oracle_suite(oo);
      const auto more = dtsp::transformation_suite(tr);
      results.insert(results.end(), more.begin(), more.end());
      emit(dtsp::format_verify(results), ver_out, common);
      bool ok = true;
      for (const auto& r : results) {
        if (r.failures) {
          std::cerr << "verify: " << r.name << " failed; first case: " << r.first_failure << '\n';
          ok = false;
        }
      }
      return ok ? 0 : 1;
    }
  } catch (const dtsp::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const dtsp::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
