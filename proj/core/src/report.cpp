#include "rbfadapt/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <future>
#include <limits>
#include <optional>

#include <json.hpp>

#include "rbfadapt/targets.hpp"

namespace rbfadapt {

namespace {

std::string g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// JSON has no literals for the IEEE specials; cond can legitimately be
// infinite and the added/removed residual extrema are NaN on quiet steps.
std::string json_num(double v) {
  if (std::isnan(v)) return "null";
  if (std::isinf(v)) return v > 0 ? "\"inf\"" : "\"-inf\"";
  return g17(v);
}

std::string json_time(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

double num_from_json(const nlohmann::json& j) {
  if (j.is_null()) return std::numeric_limits<double>::quiet_NaN();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    throw ConfigError("unexpected string where a number was required: " + s);
  }
  return j.get<double>();
}

}  // namespace

RunReport make_report(const std::string& target, KernelFamily kernel, int dimension,
                      double a, double b, const AdaptiveConfig& cfg,
                      const RunResult& result, double time_s) {
  RunReport r;
  r.target = target;
  r.kernel = family_name(kernel);
  r.dimension = dimension;
  r.domain_a = a;
  r.domain_b = b;
  r.theta_refine = cfg.theta_refine;
  r.theta_coarse = cfg.theta_coarse;
  r.max_iter = cfg.max_iter;
  r.n0 = result.history.empty() ? 0 : result.history.front().n_nodes;
  if (cfg.h_min > 0.0)
    r.h_min = cfg.h_min;
  else
    r.h_min = dimension == 1 ? (b - a) * 1e-6 : (b - a) * std::ldexp(1.0, -12);
  r.eps_min = cfg.shape.eps_min;
  r.eps_max = cfg.shape.eps_max;
  r.eps_tol = cfg.shape.tol;
  r.eps_max_evals = cfg.shape.max_evals;
  r.converged = result.converged;
  r.iterations = static_cast<int>(result.history.size());
  r.n_fin = static_cast<int>(result.final_nodes.size());
  if (!result.history.empty()) {
    r.eps_opt = result.history.back().eps_opt;
    r.cond = result.history.back().cond;
  }
  r.mae = result.mae;
  r.time_s = time_s;
  r.history = result.history;
  return r;
}

std::string report_to_json(const RunReport& r) {
  std::string s;
  s.reserve(1024 + 256 * r.history.size());
  s += "{\n";
  s += "  \"target\": \"" + r.target + "\",\n";
  s += "  \"kernel\": \"" + r.kernel + "\",\n";
  s += "  \"dimension\": " + std::to_string(r.dimension) + ",\n";
  s += "  \"domain_a\": " + json_num(r.domain_a) + ",\n";
  s += "  \"domain_b\": " + json_num(r.domain_b) + ",\n";
  s += "  \"theta_refine\": " + json_num(r.theta_refine) + ",\n";
  s += "  \"theta_coarse\": " + json_num(r.theta_coarse) + ",\n";
  s += "  \"max_iter\": " + std::to_string(r.max_iter) + ",\n";
  s += "  \"n0\": " + std::to_string(r.n0) + ",\n";
  s += "  \"h_min\": " + json_num(r.h_min) + ",\n";
  s += "  \"eps_min\": " + json_num(r.eps_min) + ",\n";
  s += "  \"eps_max\": " + json_num(r.eps_max) + ",\n";
  s += "  \"eps_tol\": " + json_num(r.eps_tol) + ",\n";
  s += "  \"eps_max_evals\": " + std::to_string(r.eps_max_evals) + ",\n";
  s += "  \"converged\": " + std::string(r.converged ? "true" : "false") + ",\n";
  s += "  \"iterations\": " + std::to_string(r.iterations) + ",\n";
  s += "  \"n_fin\": " + std::to_string(r.n_fin) + ",\n";
  s += "  \"eps_opt\": " + json_num(r.eps_opt) + ",\n";
  s += "  \"mae\": " + json_num(r.mae) + ",\n";
  s += "  \"cond\": " + json_num(r.cond) + ",\n";
  s += "  \"time_s\": " + json_time(r.time_s) + ",\n";
  s += "  \"history\": [\n";
  for (std::size_t i = 0; i < r.history.size(); ++i) {
    const IterationRecord& h = r.history[i];
    s += "    {\"k\": " + std::to_string(h.k);
    s += ", \"n_nodes\": " + std::to_string(h.n_nodes);
    s += ", \"eps_opt\": " + json_num(h.eps_opt);
    s += ", \"sigma2_opt\": " + json_num(h.sigma2_opt);
    s += ", \"n_refined\": " + std::to_string(h.n_refined);
    s += ", \"n_coarsened\": " + std::to_string(h.n_coarsened);
    s += ", \"n_skipped\": " + std::to_string(h.n_skipped);
    s += ", \"max_residual\": " + json_num(h.max_residual);
    s += ", \"min_added_residual\": " + json_num(h.min_added_residual);
    s += ", \"max_removed_residual\": " + json_num(h.max_removed_residual);
    s += ", \"max_node_residual\": " + json_num(h.max_node_residual);
    s += ", \"y_inf\": " + json_num(h.y_inf);
    s += ", \"cond\": " + json_num(h.cond);
    s += i + 1 < r.history.size() ? "},\n" : "}\n";
  }
  s += "  ]\n";
  s += "}\n";
  return s;
}

RunReport report_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  RunReport r;
  r.target = j.at("target").get<std::string>();
  r.kernel = j.at("kernel").get<std::string>();
  r.dimension = j.at("dimension").get<int>();
  r.domain_a = num_from_json(j.at("domain_a"));
  r.domain_b = num_from_json(j.at("domain_b"));
  r.theta_refine = num_from_json(j.at("theta_refine"));
  r.theta_coarse = num_from_json(j.at("theta_coarse"));
  r.max_iter = j.at("max_iter").get<int>();
  r.n0 = j.at("n0").get<int>();
  r.h_min = num_from_json(j.at("h_min"));
  r.eps_min = num_from_json(j.at("eps_min"));
  r.eps_max = num_from_json(j.at("eps_max"));
  r.eps_tol = num_from_json(j.at("eps_tol"));
  r.eps_max_evals = j.at("eps_max_evals").get<int>();
  r.converged = j.at("converged").get<bool>();
  r.iterations = j.at("iterations").get<int>();
  r.n_fin = j.at("n_fin").get<int>();
  r.eps_opt = num_from_json(j.at("eps_opt"));
  r.mae = num_from_json(j.at("mae"));
  r.cond = num_from_json(j.at("cond"));
  r.time_s = num_from_json(j.at("time_s"));
  for (const nlohmann::json& e : j.at("history")) {
    IterationRecord h;
    h.k = e.at("k").get<int>();
    h.n_nodes = e.at("n_nodes").get<int>();
    h.eps_opt = num_from_json(e.at("eps_opt"));
    h.sigma2_opt = num_from_json(e.at("sigma2_opt"));
    h.n_refined = e.at("n_refined").get<int>();
    h.n_coarsened = e.at("n_coarsened").get<int>();
    h.n_skipped = e.at("n_skipped").get<int>();
    h.max_residual = num_from_json(e.at("max_residual"));
    h.min_added_residual = num_from_json(e.at("min_added_residual"));
    h.max_removed_residual = num_from_json(e.at("max_removed_residual"));
    h.max_node_residual = num_from_json(e.at("max_node_residual"));
    h.y_inf = num_from_json(e.at("y_inf"));
    h.cond = num_from_json(e.at("cond"));
    r.history.push_back(h);
  }
  return r;
}

std::string nodes_csv(const PointSet& nodes) {
  std::string s;
  s.reserve(32 * nodes.size());
  for (const Point& p : nodes) {
    s += g17(p.x);
    if (nodes.dim() == 2) {
      s += ',';
      s += g17(p.y);
    }
    s += '\n';
  }
  return s;
}

std::string scan_csv(const std::vector<std::pair<double, double>>& scan) {
  std::string s = "epsilon,cost\n";
  for (const auto& [eps, cost] : scan) {
    s += g17(eps);
    s += ',';
    s += std::isinf(cost) ? "inf" : g17(cost);
    s += '\n';
  }
  return s;
}

namespace {

TableRowResult run_table_row(const TablePreset& preset, const PresetRow& row) {
  AdaptiveConfig cfg;
  cfg.theta_refine = row.theta_refine;
  cfg.theta_coarse = preset.theta_coarse;
  const auto [a, b] = target_domain(preset.target);
  const TargetFn f = target_callable(preset.target);

  const auto t0 = std::chrono::steady_clock::now();
  RunResult result = target_dimension(preset.target) == 1
                         ? run_adaptive_1d(f, a, b, row.kernel, preset.n0, cfg)
                         : run_adaptive_2d(f, a, b, row.kernel, cfg);
  const auto t1 = std::chrono::steady_clock::now();
  const double time_s = std::chrono::duration<double>(t1 - t0).count();
  return {row, std::move(result), time_s};
}

}  // namespace

std::vector<TableRowResult> run_table(const TablePreset& preset, int threads) {
  const int n = static_cast<int>(preset.rows.size());
  std::vector<std::optional<TableRowResult>> slots(n);
  if (threads < 1) threads = 1;
  if (threads == 1) {
    for (int i = 0; i < n; ++i) slots[i] = run_table_row(preset, preset.rows[i]);
  } else {
    // Strided chunks, results placed by row index so the output order stays
    // the preset order no matter which worker finishes first.
    const int workers = std::min(threads, n);
    std::vector<std::future<void>> futs;
    futs.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      futs.push_back(std::async(std::launch::async, [&, w] {
        for (int i = w; i < n; i += workers)
          slots[i] = run_table_row(preset, preset.rows[i]);
      }));
    }
    for (auto& f : futs) f.get();
  }
  std::vector<TableRowResult> out;
  out.reserve(n);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

std::string table_csv(const std::vector<TableRowResult>& rows) {
  std::string s = "kernel,theta_refine,iter,n_fin,mae,cond,time_s\n";
  char buf[64];
  for (const TableRowResult& r : rows) {
    s += family_name(r.row.kernel);
    std::snprintf(buf, sizeof buf, ",%g,", r.row.theta_refine);
    s += buf;
    s += std::to_string(r.result.history.size());
    s += ',';
    s += std::to_string(r.result.final_nodes.size());
    s += ',';
    s += g17(r.result.mae);
    s += ',';
    s += g17(r.result.history.back().cond);
    std::snprintf(buf, sizeof buf, ",%.3f\n", r.time_s);
    s += buf;
  }
  return s;
}

}  // namespace rbfadapt
