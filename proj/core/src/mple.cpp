#include "rbfadapt/mple.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace rbfadapt {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool all_zero(std::span<const double> y) {
  for (double v : y)
    if (v != 0.0) return false;
  return true;
}

void validate(const ShapeSearchConfig& cfg) {
  if (!(cfg.eps_min > 0.0 && cfg.eps_min < cfg.eps_max))
    throw ConfigError("shape interval must satisfy 0 < eps_min < eps_max");
  if (!(cfg.tol > 0.0)) throw ConfigError("shape tolerance must be positive");
  if (cfg.max_evals < 10) throw ConfigError("max_evals must be at least 10");
}

struct CostEval {
  double cost;
  double quad;  // y^T A^-1 y, only meaningful when cost is finite
};

CostEval cost_eval(KernelFamily family, double eps, const SymMatrix& dist,
                   std::span<const double> y) {
  const SymMatrix a = kernel_matrix_from_distances(KernelSpec(family, eps), dist);
  const auto f = try_cholesky(a);
  if (!f) return {kInf, 0.0};
  const std::vector<double> z = f->solve(y);
  double q = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) q += y[i] * z[i];
  if (!(q > 0.0)) return {kInf, 0.0};
  const double n = static_cast<double>(y.size());
  return {n * std::log(q) + f->log_det(), q};
}

// Brent's bounded scalar minimization (golden section with parabolic steps).
// The parabolic step is only attempted when the three tracked values are
// finite, so the +infinity sentinel degrades gracefully to golden section.
template <typename F>
void minimize_scalar(F eval, double lo, double hi, double tol, int max_evals) {
  constexpr double golden = 0.3819660112501051;  // (3 - sqrt(5)) / 2
  const double sqrt_eps = std::sqrt(std::numeric_limits<double>::epsilon());

  double a = lo, b = hi;
  double x = a + golden * (b - a);
  double w = x, v = x;
  double fx = eval(x);
  double fw = fx, fv = fx;
  double d = 0.0, e = 0.0;
  int evals = 1;

  while (evals < max_evals) {
    const double m = 0.5 * (a + b);
    const double tol1 = sqrt_eps * std::abs(x) + tol / 3.0;
    const double tol2 = 2.0 * tol1;
    if (std::abs(x - m) <= tol2 - 0.5 * (b - a)) break;

    bool parabolic = false;
    if (std::abs(e) > tol1 && std::isfinite(fx) && std::isfinite(fw) &&
        std::isfinite(fv)) {
      // Fit a parabola through (x,fx), (w,fw), (v,fv).
      const double r = (x - w) * (fx - fv);
      double q = (x - v) * (fx - fw);
      double p = (x - v) * q - (x - w) * r;
      q = 2.0 * (q - r);
      if (q > 0.0) p = -p;
      q = std::abs(q);
      const double e_old = e;
      e = d;
      if (std::abs(p) < std::abs(0.5 * q * e_old) && p > q * (a - x) &&
          p < q * (b - x)) {
        d = p / q;
        const double u = x + d;
        if (u - a < tol2 || b - u < tol2) d = std::copysign(tol1, m - x);
        parabolic = true;
      }
    }
    if (!parabolic) {
      e = (x < m ? b : a) - x;
      d = golden * e;
    }

    const double u = x + (std::abs(d) >= tol1 ? d : std::copysign(tol1, d));
    const double fu = eval(u);
    ++evals;

    if (fu <= fx) {
      if (u < x) b = x; else a = x;
      v = w; fv = fw;
      w = x; fw = fx;
      x = u; fx = fu;
    } else {
      if (u < x) a = u; else b = u;
      if (fu <= fw || w == x) {
        v = w; fv = fw;
        w = u; fw = fu;
      } else if (fu <= fv || v == x || v == w) {
        v = u; fv = fu;
      }
    }
  }
}

}  // namespace

double mple_cost_from_distances(KernelFamily family, double eps,
                                const SymMatrix& dist, std::span<const double> values) {
  if (static_cast<int>(values.size()) != dist.size())
    throw DimensionMismatch("value count does not match distance matrix size");
  if (all_zero(values))
    throw AllZeroValues("profile likelihood is undefined for all-zero data");
  if (!(eps > 0.0)) throw InvalidShape("shape parameter must be positive");
  return cost_eval(family, eps, dist, values).cost;
}

double mple_cost(KernelFamily family, double eps, const PointSet& nodes,
                 std::span<const double> values) {
  return mple_cost_from_distances(family, eps, distance_matrix(nodes), values);
}

double optimal_variance(const CholeskyFactor& factor, std::span<const double> values) {
  const std::vector<double> z = factor.solve(values);
  double q = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) q += values[i] * z[i];
  return q / static_cast<double>(values.size());
}

MpleResult select_shape_from_distances(KernelFamily family, const SymMatrix& dist,
                                       std::span<const double> values,
                                       const ShapeSearchConfig& cfg) {
  validate(cfg);
  if (dist.size() < 2) throw DimensionMismatch("shape selection needs at least 2 nodes");
  if (all_zero(values))
    throw AllZeroValues("profile likelihood is undefined for all-zero data");

  const double t_lo = std::log(cfg.eps_min);
  const double t_hi = std::log(cfg.eps_max);

  int evals = 0;
  double best_eps = cfg.eps_min;
  double best_cost = kInf;
  double best_quad = 0.0;
  auto eval_at = [&](double eps) {
    const CostEval ce = cost_eval(family, eps, dist, values);
    ++evals;
    if (ce.cost < best_cost) {
      best_cost = ce.cost;
      best_eps = eps;
      best_quad = ce.quad;
    }
    return ce.cost;
  };

  const int n_probe = std::min(kShapeProbePoints, cfg.max_evals);
  std::vector<double> probe_t(n_probe);
  int best_idx = 0;
  double best_probe = kInf;
  for (int i = 0; i < n_probe; ++i) {
    probe_t[i] = t_lo + (t_hi - t_lo) * i / (n_probe - 1);
    const double c = eval_at(std::exp(probe_t[i]));
    if (c < best_probe) {
      best_probe = c;
      best_idx = i;
    }
  }
  if (!std::isfinite(best_cost))
    throw NoAdmissibleShape("every probed shape parameter was numerically singular");

  const int budget = cfg.max_evals - evals;
  const double bracket_lo = probe_t[std::max(0, best_idx - 1)];
  const double bracket_hi = probe_t[std::min(n_probe - 1, best_idx + 1)];
  if (budget > 2 && bracket_hi > bracket_lo) {
    minimize_scalar([&](double t) { return eval_at(std::exp(t)); }, bracket_lo,
                    bracket_hi, cfg.tol, budget);
  }

  return {best_eps, best_cost, best_quad / static_cast<double>(values.size()), evals};
}

MpleResult select_shape(KernelFamily family, const PointSet& nodes,
                        std::span<const double> values, const ShapeSearchConfig& cfg) {
  if (nodes.size() != values.size())
    throw DimensionMismatch("node and value counts differ");
  return select_shape_from_distances(family, distance_matrix(nodes), values, cfg);
}

}  // namespace rbfadapt
