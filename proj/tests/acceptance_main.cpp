// Acceptance gate: reproduces the published experiment tables and audits the
// method's invariants end to end. Prints one PASS/FAIL line per criterion and
// exits with the number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "oracles.hpp"
#include "rbfadapt/adaptive.hpp"
#include "rbfadapt/mple.hpp"
#include "rbfadapt/report.hpp"
#include "rbfadapt/targets.hpp"

using namespace rbfadapt;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

int g_failures = 0;

void report(int criterion, const char* label, bool pass, const std::string& detail) {
  std::printf("%s: %2d. %s%s%s\n", pass ? "PASS" : "FAIL", criterion, label,
              detail.empty() ? "" : " :: ", detail.c_str());
  if (!pass) ++g_failures;
}

bool close_hybrid(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

struct Suite {
  TablePreset preset;
  std::vector<TableRowResult> rows;
};

Suite run_suite(int id, int threads) {
  TablePreset p = preset(id);
  std::vector<TableRowResult> rows = run_table(p, threads);
  return {std::move(p), std::move(rows)};
}

std::string row_digest(const Suite& s) {
  std::string d;
  char buf[160];
  for (const TableRowResult& r : s.rows) {
    std::snprintf(buf, sizeof buf, "%s n=%zu mae=%.3g it=%zu t=%.2fs; ",
                  family_name(r.row.kernel), r.result.final_nodes.size(),
                  r.result.mae, r.result.history.size(), r.time_s);
    d += buf;
  }
  if (!d.empty()) d.resize(d.size() - 2);
  return d;
}

// Criteria 1, 2, 4 share this shape: converged table rows with bounded
// error, conditioning, node counts and runtime.
bool check_table(const Suite& s, const std::vector<int>& n_ref, double mae_cap,
                 double cond_cap, double time_cap, double n_lo_factor,
                 double n_hi_factor, std::string& why) {
  bool ok = true;
  for (std::size_t i = 0; i < s.rows.size(); ++i) {
    const TableRowResult& r = s.rows[i];
    const char* kn = family_name(r.row.kernel);
    const int n_fin = static_cast<int>(r.result.final_nodes.size());
    if (!r.result.converged) {
      why += std::string(kn) + " did not converge; ";
      ok = false;
    }
    if (r.result.history.size() > 20) {
      why += std::string(kn) + " exceeded 20 iterations; ";
      ok = false;
    }
    if (!(r.result.mae <= mae_cap)) {
      why += std::string(kn) + " mae " + std::to_string(r.result.mae) + "; ";
      ok = false;
    }
    if (!(r.result.history.back().cond < cond_cap)) {
      why += std::string(kn) + " cond too large; ";
      ok = false;
    }
    if (n_fin < n_lo_factor * n_ref[i] || n_fin > n_hi_factor * n_ref[i]) {
      why += std::string(kn) + " n_fin " + std::to_string(n_fin) + " outside [" +
             std::to_string(n_lo_factor * n_ref[i]) + "," +
             std::to_string(n_hi_factor * n_ref[i]) + "]; ";
      ok = false;
    }
    if (!(r.time_s < time_cap)) {
      why += std::string(kn) + " took " + std::to_string(r.time_s) + "s; ";
      ok = false;
    }
  }
  return ok;
}

}  // namespace

int main() {
  const unsigned hw = std::thread::hardware_concurrency();
  const int par = hw >= 4 ? 3 : 1;

  // Everything downstream audits these stored runs.
  const Suite t1 = run_suite(1, 1);
  const Suite t2 = run_suite(2, 1);
  const Suite t3 = run_suite(3, 1);
  const Suite t8 = run_suite(8, par);
  const std::vector<const Suite*> suites{&t1, &t2, &t3, &t8};

  {
    std::string why;
    const bool ok = check_table(t1, {51, 50, 54, 99}, 2e-6, 1e15, 5.0, 0.5, 2.0, why);
    report(1, "interpolating the rational bump matches the published node counts",
           ok, ok ? row_digest(t1) : why);
  }
  {
    std::string why;
    const bool ok = check_table(t3, {29, 40, 43, 56}, 2e-5, 1e15, 5.0, 0.5, 2.0, why);
    report(2, "the oscillatory target reproduces its table within tolerance",
           ok, ok ? row_digest(t3) : why);
  }
  {
    std::string why;
    bool ok = true;
    for (std::size_t i = 0; i < t2.rows.size(); ++i) {
      const int n2 = static_cast<int>(t2.rows[i].result.final_nodes.size());
      const int n3 = static_cast<int>(t3.rows[i].result.final_nodes.size());
      if (n2 <= 100) {
        why += std::string(family_name(t2.rows[i].row.kernel)) + " n_fin " +
               std::to_string(n2) + " <= 100; ";
        ok = false;
      }
      if (n2 <= n3) {
        why += std::string(family_name(t2.rows[i].row.kernel)) +
               " steep front not denser than oscillation; ";
        ok = false;
      }
    }
    report(3, "the steep interior front demands far more nodes", ok,
           ok ? row_digest(t2) : why);
  }
  {
    std::string why;
    const bool ok = check_table(t8, {1522, 1442, 1300}, 2e-3, 1e16, 120.0,
                                700.0 / 1522.0, 3000.0 / 1300.0, why);
    report(4, "the 2D tanh sheet converges at production scale", ok,
           ok ? row_digest(t8) : why);
  }

  // Cost agreement against naive inverse-plus-determinant evaluation.
  {
    std::mt19937 rng(20240817);
    std::uniform_real_distribution<double> ueps(1.0, 5.0);
    const KernelFamily families[] = {KernelFamily::GA, KernelFamily::IMQ,
                                     KernelFamily::M6, KernelFamily::M4,
                                     KernelFamily::M2};
    bool ok = true;
    std::string why;
    for (int trial = 0; trial < 50 && ok; ++trial) {
      const int n = 2 + static_cast<int>(rng() % 11);
      const int dim = 1 + static_cast<int>(rng() % 2);
      const PointSet pts = oracles::random_separated_nodes(n, dim, 1e-3, rng);
      const std::vector<double> y = oracles::random_values(n, rng);
      const KernelFamily fam = families[trial % 5];
      const double eps = ueps(rng);

      const double got = mple_cost(fam, eps, pts, y);
      if (!std::isfinite(got)) {
        why = "instance " + std::to_string(trial) + " hit the singular sentinel";
        ok = false;
        break;
      }
      const SymMatrix a = kernel_matrix({fam, eps}, pts);
      const std::vector<double> x = oracles::gauss_jordan_solve(a, y);
      double q = 0.0;
      for (int i = 0; i < n; ++i) q += y[i] * x[i];
      const double naive = n * std::log(q) + oracles::lu_log_det(a);
      if (!close_hybrid(got, naive, 1e-8)) {
        why = "cost mismatch on instance " + std::to_string(trial);
        ok = false;
      }
      if (!close_hybrid(cholesky(a).log_det(), oracles::lu_log_det(a), 1e-8)) {
        why = "log-det mismatch on instance " + std::to_string(trial);
        ok = false;
      }
    }
    report(5, "profile-likelihood cost agrees with the naive evaluation", ok, why);
  }

  // The profiled variance minimizes the negative log-likelihood.
  {
    std::mt19937 rng(5150);
    bool ok = true;
    std::string why;
    for (int trial = 0; trial < 20 && ok; ++trial) {
      const int n = 3 + static_cast<int>(rng() % 9);
      const PointSet pts = oracles::random_separated_nodes(n, 1, 0.05, rng);
      const std::vector<double> y = oracles::random_values(n, rng);
      const SymMatrix a = kernel_matrix({KernelFamily::M4, 2.0 + 0.3 * trial}, pts);
      const auto f = try_cholesky(a);
      if (!f) {
        why = "instance " + std::to_string(trial) + " failed to factor";
        ok = false;
        break;
      }
      const double s2_opt = optimal_variance(*f, y);
      const double q = s2_opt * n;
      const double logdet = f->log_det();

      int best = -1, nearest = -1;
      double best_val = kInf, nearest_dist = kInf;
      for (int i = 0; i < 10000; ++i) {
        const double s2 = s2_opt * (0.5 + i / 9999.0);
        const double nll =
            n * std::log(2.0 * std::numbers::pi) + n * std::log(s2) + logdet + q / s2;
        if (nll < best_val) {
          best_val = nll;
          best = i;
        }
        if (std::abs(s2 - s2_opt) < nearest_dist) {
          nearest_dist = std::abs(s2 - s2_opt);
          nearest = i;
        }
      }
      if (best != nearest) {
        why = "grid minimum off by " + std::to_string(best - nearest) +
              " cells on instance " + std::to_string(trial);
        ok = false;
      }
    }
    report(6, "the profiled variance sits at the likelihood optimum", ok, why);
  }

  // Residual threshold invariants over every stored run, with an
  // independent recheck of the final check residuals.
  {
    bool ok = true;
    std::string why;
    int audited = 0;
    for (const Suite* s : suites) {
      const TargetFn f = target_callable(s->preset.target);
      for (const TableRowResult& r : s->rows) {
        const double theta_r = r.row.theta_refine;
        const double theta_c = s->preset.theta_coarse;
        for (const IterationRecord& rec : r.result.history) {
          ++audited;
          if (rec.n_refined > 0 && !(rec.min_added_residual > theta_r)) {
            why += "added node below refine threshold (preset " +
                   std::to_string(s->preset.id) + "); ";
            ok = false;
          }
          if (rec.n_coarsened > 0 && !(rec.max_removed_residual < theta_c)) {
            why += "removed node above coarse threshold (preset " +
                   std::to_string(s->preset.id) + "); ";
            ok = false;
          }
        }
        if (r.result.converged &&
            !(r.result.history.back().max_residual <= theta_r)) {
          why += "converged run left a residual above threshold; ";
          ok = false;
        }
        // Recheck the final state directly rather than trusting the record.
        if (r.result.converged) {
          double max_res = 0.0;
          if (r.result.set_1d) {
            const PointSet checks = r.result.set_1d->check_points();
            for (double v : residuals(r.result.final_interpolant, f, checks))
              max_res = std::max(max_res, v);
          } else if (r.result.set_2d) {
            const NodeSet2D::CheckSet cs = r.result.set_2d->check_points();
            for (double v : residuals(r.result.final_interpolant, f, cs.points))
              max_res = std::max(max_res, v);
          }
          if (!(max_res <= theta_r)) {
            why += "independent recheck found residual " + std::to_string(max_res) +
                   " (preset " + std::to_string(s->preset.id) + "); ";
            ok = false;
          }
        }
      }
    }
    report(7, "refinement and coarsening stayed inside their thresholds", ok,
           ok ? std::to_string(audited) + " iteration records audited" : why);
  }

  // Interpolation exactness wherever conditioning permits it.
  {
    bool ok = true;
    std::string why;
    int checked = 0;
    for (const Suite* s : suites) {
      for (const TableRowResult& r : s->rows) {
        for (const IterationRecord& rec : r.result.history) {
          if (!(rec.cond <= 1e12)) continue;
          ++checked;
          if (!(rec.max_node_residual <= 1e-6 * (1.0 + rec.y_inf))) {
            why += "node residual " + std::to_string(rec.max_node_residual) +
                   " at cond " + std::to_string(rec.cond) + "; ";
            ok = false;
          }
        }
      }
    }
    report(8, "fitted interpolants reproduce their data at the nodes", ok,
           ok ? std::to_string(checked) + " well-conditioned fits checked" : why);
  }

  // Bitwise determinism of the table pipeline, time column aside.
  {
    auto strip_time = [](const std::string& csv) {
      std::string out;
      std::size_t start = 0;
      while (start < csv.size()) {
        std::size_t end = csv.find('\n', start);
        if (end == std::string::npos) end = csv.size();
        const std::string line = csv.substr(start, end - start);
        const std::size_t cut = line.rfind(',');
        out += line.substr(0, cut);
        out += '\n';
        start = end + 1;
      }
      return out;
    };
    bool ok = true;
    std::string why;
    for (int id : {1, 3}) {
      const TablePreset p = preset(id);
      const std::string a = strip_time(table_csv(run_table(p, 1)));
      const std::string b = strip_time(table_csv(run_table(p, 1)));
      if (a != b) {
        why += "preset " + std::to_string(id) + " differed between runs; ";
        ok = false;
      }
    }
    report(9, "repeated table runs are byte-identical up to timing", ok, why);
  }

  std::printf("%d of 9 criteria passed\n", 9 - g_failures);
  return g_failures;
}
