#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rbfadapt/adaptive.hpp"
#include "rbfadapt/presets.hpp"

namespace rbfadapt {

// Lossless serialization record for one adaptive run: configuration echo,
// final summary, full per-iteration history.
struct RunReport {
  std::string target;
  std::string kernel;
  int dimension = 0;
  double domain_a = 0.0;
  double domain_b = 0.0;
  double theta_refine = 0.0;
  double theta_coarse = 0.0;
  int max_iter = 0;
  int n0 = 0;
  double h_min = 0.0;  // effective spacing floor, dimension default resolved
  double eps_min = 0.0;
  double eps_max = 0.0;
  double eps_tol = 0.0;
  int eps_max_evals = 0;
  bool converged = false;
  int iterations = 0;
  int n_fin = 0;
  double eps_opt = 0.0;
  double mae = 0.0;
  double cond = 0.0;
  double time_s = 0.0;
  std::vector<IterationRecord> history;
};

RunReport make_report(const std::string& target, KernelFamily kernel, int dimension,
                      double a, double b, const AdaptiveConfig& cfg,
                      const RunResult& result, double time_s);

// Canonical JSON: fixed key order, doubles printed with 17 significant
// digits so values round-trip exactly, NaN as null, infinities as the
// strings "inf" and "-inf", time_s with 3 decimals. Writing, parsing and
// re-writing a report is byte-identical.
std::string report_to_json(const RunReport& report);
RunReport report_from_json(const std::string& text);

std::string nodes_csv(const PointSet& nodes);
std::string scan_csv(const std::vector<std::pair<double, double>>& scan);

struct TableRowResult {
  PresetRow row;
  RunResult result;
  double time_s = 0.0;
};

// Runs every row of a preset, at most `threads` in parallel. Rows are
// independent; the returned order is the preset order.
std::vector<TableRowResult> run_table(const TablePreset& preset, int threads);

// Header kernel,theta_refine,iter,n_fin,mae,cond,time_s and one row per
// preset entry.
std::string table_csv(const std::vector<TableRowResult>& rows);

}  // namespace rbfadapt
