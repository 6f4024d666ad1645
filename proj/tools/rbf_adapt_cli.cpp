#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "rbfadapt/adaptive.hpp"
#include "rbfadapt/presets.hpp"
#include "rbfadapt/report.hpp"
#include "rbfadapt/targets.hpp"

namespace {

using namespace rbfadapt;

constexpr int kExitNonConverged = 2;
constexpr int kExitUsage = 3;
constexpr int kExitNumerical = 4;

void write_out(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot open output file: " + path);
  f << content;
  f.flush();
  if (!f) throw ConfigError("write failed: " + path);
}

int table_threads() {
  const char* env = std::getenv("RBF_ADAPT_THREADS");
  if (!env) return 1;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 1) return 1;
  return static_cast<int>(v);
}

struct RunArgs {
  std::string target;
  std::string kernel;
  double theta_refine = 1e-6;
  double theta_coarse = 1e-8;
  int max_iter = 20;
  double eps_min = 1e-2;
  double eps_max = 1e2;
  double eps_tol = 1e-3;
  int n0 = 13;
  bool n0_given = false;
  std::string out;
  std::string nodes_out;
};

int cmd_run(const RunArgs& a) {
  const TargetId id = parse_target(a.target);
  const KernelFamily family = parse_family(a.kernel);
  const int dim = target_dimension(id);
  if (dim == 2 && a.n0_given)
    throw ConfigError("--n0 applies to 1D targets only; 2D runs start from the fixed 320-node layout");

  AdaptiveConfig cfg;
  cfg.theta_refine = a.theta_refine;
  cfg.theta_coarse = a.theta_coarse;
  cfg.max_iter = a.max_iter;
  cfg.shape.eps_min = a.eps_min;
  cfg.shape.eps_max = a.eps_max;
  cfg.shape.tol = a.eps_tol;

  const auto [lo, hi] = target_domain(id);
  const TargetFn f = target_callable(id);

  const auto t0 = std::chrono::steady_clock::now();
  const RunResult result = dim == 1 ? run_adaptive_1d(f, lo, hi, family, a.n0, cfg)
                                    : run_adaptive_2d(f, lo, hi, family, cfg);
  const auto t1 = std::chrono::steady_clock::now();
  const double time_s = std::chrono::duration<double>(t1 - t0).count();

  const RunReport report =
      make_report(target_name(id), family, dim, lo, hi, cfg, result, time_s);
  write_out(a.out, report_to_json(report));
  if (!a.nodes_out.empty()) write_out(a.nodes_out, nodes_csv(result.final_nodes));
  return result.converged ? 0 : kExitNonConverged;
}

int cmd_table(int id, const std::string& out) {
  const TablePreset p = preset(id);
  const std::vector<TableRowResult> rows = run_table(p, table_threads());
  write_out(out, table_csv(rows));
  for (const TableRowResult& r : rows)
    if (!r.result.converged) return kExitNonConverged;
  return 0;
}

struct ScanArgs {
  std::string target;
  std::string kernel;
  int n0 = 13;
  bool n0_given = false;
  int points = 33;
  double eps_min = 1e-2;
  double eps_max = 1e2;
  std::string out;
};

int cmd_mple_scan(const ScanArgs& a) {
  const TargetId id = parse_target(a.target);
  const KernelFamily family = parse_family(a.kernel);
  if (!(a.eps_min > 0.0 && a.eps_min < a.eps_max))
    throw ConfigError("scan interval must satisfy 0 < eps-min < eps-max");
  if (a.points < 2) throw ConfigError("--points must be at least 2");

  const auto [lo, hi] = target_domain(id);
  const int dim = target_dimension(id);
  if (dim == 2 && a.n0_given)
    throw ConfigError("--n0 applies to 1D targets only; 2D scans use the fixed 320-node layout");
  const PointSet pts = dim == 1 ? NodeSet1D::equispaced(lo, hi, a.n0).points()
                                : NodeSet2D::initial(lo, hi).points();
  const TargetFn f = target_callable(id);
  std::vector<double> y;
  y.reserve(pts.size());
  for (const Point& p : pts) y.push_back(f(p));

  const SymMatrix dist = distance_matrix(pts);
  const double t_lo = std::log(a.eps_min);
  const double t_hi = std::log(a.eps_max);
  std::vector<std::pair<double, double>> scan;
  scan.reserve(a.points);
  bool any_finite = false;
  for (int i = 0; i < a.points; ++i) {
    const double eps = std::exp(t_lo + (t_hi - t_lo) * i / (a.points - 1));
    const double cost = mple_cost_from_distances(family, eps, dist, y);
    any_finite = any_finite || std::isfinite(cost);
    scan.emplace_back(eps, cost);
  }
  write_out(a.out, scan_csv(scan));
  return any_finite ? 0 : kExitNumerical;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Adaptive RBF interpolation with likelihood-based shape selection"};
  app.require_subcommand(0, 1);

  RunArgs ra;
  CLI::App* run = app.add_subcommand("run", "Run one adaptive experiment");
  run->add_option("--target", ra.target, "Target function id (f1..f6)")->required();
  run->add_option("--kernel", ra.kernel, "Kernel family (ga, imq, m6, m4, m2)")->required();
  run->add_option("--theta-refine", ra.theta_refine, "Refinement threshold");
  run->add_option("--theta-coarse", ra.theta_coarse, "Coarsening threshold");
  run->add_option("--max-iter", ra.max_iter, "Iteration cap");
  run->add_option("--eps-min", ra.eps_min, "Shape search interval lower end");
  run->add_option("--eps-max", ra.eps_max, "Shape search interval upper end");
  run->add_option("--eps-tol", ra.eps_tol, "Shape search tolerance in log(eps)");
  CLI::Option* run_n0 = run->add_option("--n0", ra.n0, "Initial 1D node count");
  run->add_option("--out", ra.out, "Report path (stdout when omitted)");
  run->add_option("--nodes", ra.nodes_out, "Final node dump path");

  int table_id = 0;
  std::string table_out;
  CLI::App* table = app.add_subcommand("table", "Reproduce one results table");
  table->add_option("--id", table_id, "Preset id (1..12)")->required();
  table->add_option("--out", table_out, "CSV path (stdout when omitted)");

  ScanArgs sa;
  CLI::App* scan = app.add_subcommand("mple-scan", "Dump the shape-selection cost landscape");
  scan->add_option("--target", sa.target, "Target function id (f1..f6)")->required();
  scan->add_option("--kernel", sa.kernel, "Kernel family (ga, imq, m6, m4, m2)")->required();
  CLI::Option* scan_n0 = scan->add_option("--n0", sa.n0, "1D node count for the scan");
  scan->add_option("--points", sa.points, "Number of log-spaced samples");
  scan->add_option("--eps-min", sa.eps_min, "Scan interval lower end");
  scan->add_option("--eps-max", sa.eps_max, "Scan interval upper end");
  scan->add_option("--out", sa.out, "CSV path (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  ra.n0_given = run_n0->count() > 0;
  sa.n0_given = scan_n0->count() > 0;

  try {
    if (run->parsed()) return cmd_run(ra);
    if (table->parsed()) return cmd_table(table_id, table_out);
    if (scan->parsed()) return cmd_mple_scan(sa);
    std::cerr << app.help();
    return kExitUsage;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnknownPreset& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidDomain& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  }
}
