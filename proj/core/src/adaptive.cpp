#include "rbfadapt/adaptive.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <utility>

namespace rbfadapt {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();

void validate(const AdaptiveConfig& cfg) {
  if (!(cfg.theta_coarse > 0.0 && cfg.theta_coarse < cfg.theta_refine))
    throw ConfigError("thresholds must satisfy 0 < theta_coarse < theta_refine");
  if (cfg.max_iter < 1) throw ConfigError("max_iter must be at least 1");
  if (cfg.h_min < 0.0) throw ConfigError("h_min must be non-negative");
}

double inf_norm(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double cond_or_inf(const SymMatrix& a) {
  try {
    return condition_number(a);
  } catch (const NotPositiveDefinite&) {
    // The factorization succeeded but the eigensolver's smallest value
    // crossed zero: the matrix sits at the edge of numerical rank.
    return kInf;
  }
}

struct FitData {
  Interpolant interp;
  double eps_opt;
  double sigma2_opt;
  double cond;
  double max_node_residual;
  double y_inf;
};

// Fit with the profile-likelihood-selected shape parameter. Exactly-zero
// data has no likelihood to profile; it gets the zero interpolant at a
// canonical epsilon (geometric mean of the interval, walking up the probe
// grid if that matrix does not factor).
FitData fit_step(const PointSet& pts, const std::vector<double>& y,
                 KernelFamily family, const ShapeSearchConfig& shape) {
  const double y_inf = inf_norm(y);

  if (y_inf == 0.0) {
    const double t_lo = std::log(shape.eps_min);
    const double t_hi = std::log(shape.eps_max);
    std::vector<double> candidates{std::sqrt(shape.eps_min * shape.eps_max)};
    for (int i = 0; i < kShapeProbePoints; ++i) {
      const double eps = std::exp(t_lo + (t_hi - t_lo) * i / (kShapeProbePoints - 1));
      if (eps > candidates.front()) candidates.push_back(eps);
    }
    for (double eps : candidates) {
      const KernelSpec spec(family, eps);
      const SymMatrix a = kernel_matrix(spec, pts);
      if (auto f = try_cholesky(a)) {
        Interpolant interp(spec, pts, y, std::vector<double>(y.size(), 0.0),
                           std::move(*f));
        return {std::move(interp), eps, 0.0, cond_or_inf(a), 0.0, 0.0};
      }
    }
    throw NoAdmissibleShape("no admissible shape parameter for the zero-data fit");
  }

  const SymMatrix dist = distance_matrix(pts);
  const MpleResult sel = select_shape_from_distances(family, dist, y, shape);
  const KernelSpec spec(family, sel.eps_opt);
  const SymMatrix a = kernel_matrix_from_distances(spec, dist);
  Interpolant interp = fit_with_matrix(spec, pts, y, a);

  double max_node_residual = 0.0;
  const std::vector<double> at_nodes = interp.evaluate(pts);
  for (std::size_t i = 0; i < y.size(); ++i)
    max_node_residual = std::max(max_node_residual, std::abs(at_nodes[i] - y[i]));

  return {std::move(interp), sel.eps_opt, sel.sigma2_opt, cond_or_inf(a),
          max_node_residual, y_inf};
}

std::vector<double> sample(const TargetFn& f, const PointSet& pts) {
  std::vector<double> y;
  y.reserve(pts.size());
  for (const Point& p : pts) y.push_back(f(p));
  return y;
}

IterationRecord base_record(const FitData& fit, int n_nodes) {
  IterationRecord rec;
  rec.n_nodes = n_nodes;
  rec.eps_opt = fit.eps_opt;
  rec.sigma2_opt = fit.sigma2_opt;
  rec.cond = fit.cond;
  rec.max_node_residual = fit.max_node_residual;
  rec.y_inf = fit.y_inf;
  rec.min_added_residual = kNaN;
  rec.max_removed_residual = kNaN;
  return rec;
}

}  // namespace

NodeSet1D::NodeSet1D(double a, double b, std::vector<double> xs)
    : a_(a), b_(b), xs_(std::move(xs)) {}

NodeSet1D NodeSet1D::equispaced(double a, double b, int n0) {
  if (!(a < b)) throw InvalidDomain("interval must satisfy a < b");
  if (n0 < 3) throw ConfigError("initial 1D node count must be at least 3");
  std::vector<double> xs(n0);
  for (int i = 0; i < n0; ++i) xs[i] = a + (b - a) * i / (n0 - 1);
  xs.front() = a;
  xs.back() = b;
  return NodeSet1D(a, b, std::move(xs));
}

PointSet NodeSet1D::check_points() const {
  std::vector<Point> pts;
  pts.reserve(xs_.size() - 1);
  for (std::size_t i = 0; i + 1 < xs_.size(); ++i)
    pts.push_back({0.5 * (xs_[i] + xs_[i + 1]), 0.0});
  return PointSet(1, std::move(pts));
}

void NodeSet1D::assign(std::vector<double> xs) {
  if (xs.size() < 2 || xs.front() != a_ || xs.back() != b_)
    throw Error("1D node set lost its endpoints");
  for (std::size_t i = 0; i + 1 < xs.size(); ++i)
    if (!(xs[i] < xs[i + 1])) throw Error("1D node set is not strictly increasing");
  xs_ = std::move(xs);
}

NodeSet2D NodeSet2D::initial(double a, double b) {
  NodeSet2D s = uniform(a, b, kInitialDepth);
  const double h = (b - a) / 16.0;
  s.boundary_.reserve(64);
  for (int i = 0; i < 16; ++i) s.boundary_.push_back({a + i * h, a});
  for (int i = 0; i < 16; ++i) s.boundary_.push_back({b, a + i * h});
  for (int i = 0; i < 16; ++i) s.boundary_.push_back({b - i * h, b});
  for (int i = 0; i < 16; ++i) s.boundary_.push_back({a, b - i * h});
  return s;
}

NodeSet2D NodeSet2D::uniform(double a, double b, int depth) {
  if (!(a < b)) throw InvalidDomain("interval must satisfy a < b");
  if (depth < 0 || depth > 20) throw ConfigError("cell depth out of range");
  NodeSet2D s(a, b);
  const int m = 1 << depth;
  for (int iy = 0; iy < m; ++iy)
    for (int ix = 0; ix < m; ++ix) s.cells_.insert({depth, ix, iy});
  return s;
}

double NodeSet2D::cell_side(int depth) const {
  return (b_ - a_) * std::ldexp(1.0, -depth);
}

Point NodeSet2D::cell_center(const CellKey& key) const {
  const double s = cell_side(key.depth);
  return {a_ + (key.ix + 0.5) * s, a_ + (key.iy + 0.5) * s};
}

PointSet NodeSet2D::points() const {
  std::vector<Point> pts = boundary_;
  pts.reserve(boundary_.size() + cells_.size());
  for (const CellKey& key : cells_) pts.push_back(cell_center(key));
  return PointSet(2, std::move(pts));
}

NodeSet2D::CheckSet NodeSet2D::check_points() const {
  std::vector<Point> pts;
  std::vector<CellKey> owner, child;
  for (const CellKey& key : cells_) {
    for (int dy = 0; dy < 2; ++dy) {
      for (int dx = 0; dx < 2; ++dx) {
        const CellKey c{key.depth + 1, 2 * key.ix + dx, 2 * key.iy + dy};
        if (cells_.contains(c)) continue;
        pts.push_back(cell_center(c));
        owner.push_back(key);
        child.push_back(c);
      }
    }
  }
  return {PointSet(2, std::move(pts)), std::move(owner), std::move(child)};
}

StepOutcome adapt_step_1d(NodeSet1D& nodes, const TargetFn& f, KernelFamily family,
                          const AdaptiveConfig& cfg) {
  validate(cfg);
  const double h_min = cfg.h_min > 0.0 ? cfg.h_min : (nodes.b() - nodes.a()) * 1e-6;

  PointSet pts = nodes.points();
  const std::vector<double> y = sample(f, pts);
  FitData fit = fit_step(pts, y, family, cfg.shape);

  const PointSet checks = nodes.check_points();
  const std::vector<double> xi = residuals(fit.interp, f, checks);

  const std::vector<double>& xs = nodes.xs();
  const int n = static_cast<int>(xs.size());

  IterationRecord rec = base_record(fit, n);

  // Refinement: flagged midpoints become nodes unless the halved gap falls
  // below the spacing floor.
  std::vector<double> added;
  double min_added = kInf;
  for (int i = 0; i < n - 1; ++i) {
    rec.max_residual = std::max(rec.max_residual, xi[i]);
    if (xi[i] > cfg.theta_refine) {
      if (0.5 * (xs[i + 1] - xs[i]) < h_min) {
        ++rec.n_skipped;
        continue;
      }
      added.push_back(checks[i].x);
      min_added = std::min(min_added, xi[i]);
    }
  }

  // Coarsening: an interior node goes only when both adjacent check
  // residuals are quiet. Endpoints are never candidates.
  std::vector<bool> keep(n, true);
  double max_removed = -kInf;
  for (int i = 1; i < n - 1; ++i) {
    if (xi[i - 1] < cfg.theta_coarse && xi[i] < cfg.theta_coarse) {
      keep[i] = false;
      ++rec.n_coarsened;
      max_removed = std::max(max_removed, std::max(xi[i - 1], xi[i]));
    }
  }

  rec.n_refined = static_cast<int>(added.size());
  if (!added.empty()) rec.min_added_residual = min_added;
  if (rec.n_coarsened > 0) rec.max_removed_residual = max_removed;

  // Apply both changes simultaneously: (X union X_refine) minus X_coarse.
  std::vector<double> next;
  next.reserve(n + added.size());
  std::size_t ai = 0;
  for (int i = 0; i < n; ++i) {
    while (ai < added.size() && added[ai] < xs[i]) next.push_back(added[ai++]);
    if (keep[i]) next.push_back(xs[i]);
  }
  while (ai < added.size()) next.push_back(added[ai++]);
  nodes.assign(std::move(next));

  return {rec, std::move(fit.interp), std::move(pts)};
}

StepOutcome adapt_step_2d(NodeSet2D& nodes, const TargetFn& f, KernelFamily family,
                          const AdaptiveConfig& cfg) {
  validate(cfg);
  const double side_floor =
      cfg.h_min > 0.0 ? cfg.h_min : (nodes.b() - nodes.a()) * std::ldexp(1.0, -12);

  PointSet pts = nodes.points();
  const std::vector<double> y = sample(f, pts);
  FitData fit = fit_step(pts, y, family, cfg.shape);

  const NodeSet2D::CheckSet cs = nodes.check_points();
  const std::vector<double> xi = residuals(fit.interp, f, cs.points);

  IterationRecord rec = base_record(fit, static_cast<int>(pts.size()));

  // Aggregate per owning cell: a cell with four quiet check points has four
  // inactive children and may be deactivated.
  struct CellAgg {
    int checks = 0;
    double max_residual = 0.0;
  };
  std::map<NodeSet2D::CellKey, CellAgg> agg;

  std::vector<NodeSet2D::CellKey> to_activate;
  double min_added = kInf;
  for (std::size_t i = 0; i < xi.size(); ++i) {
    rec.max_residual = std::max(rec.max_residual, xi[i]);
    CellAgg& a = agg[cs.owner[i]];
    ++a.checks;
    a.max_residual = std::max(a.max_residual, xi[i]);
    if (xi[i] > cfg.theta_refine) {
      if (nodes.cell_side(cs.child[i].depth) < side_floor) {
        ++rec.n_skipped;
        continue;
      }
      to_activate.push_back(cs.child[i]);
      min_added = std::min(min_added, xi[i]);
    }
  }

  std::vector<NodeSet2D::CellKey> to_remove;
  double max_removed = -kInf;
  for (const auto& [key, a] : agg) {
    if (a.checks == 4 && a.max_residual < cfg.theta_coarse) {
      to_remove.push_back(key);
      max_removed = std::max(max_removed, a.max_residual);
    }
  }

  rec.n_refined = static_cast<int>(to_activate.size());
  rec.n_coarsened = static_cast<int>(to_remove.size());
  if (!to_activate.empty()) rec.min_added_residual = min_added;
  if (!to_remove.empty()) rec.max_removed_residual = max_removed;

  for (const auto& key : to_activate) nodes.activate(key);
  for (const auto& key : to_remove) nodes.deactivate(key);

  return {rec, std::move(fit.interp), std::move(pts)};
}

namespace {

template <typename NodeSetT, typename StepFn>
RunResult run_loop(NodeSetT set, StepFn step, const TargetFn& f,
                   const AdaptiveConfig& cfg, const PointSet& grid) {
  std::vector<IterationRecord> history;
  std::optional<StepOutcome> last;
  std::optional<NodeSetT> fitted;
  bool converged = false;

  for (int k = 0; k < cfg.max_iter; ++k) {
    NodeSetT snapshot = set;
    StepOutcome out = step(set, f, cfg);
    out.record.k = k;
    history.push_back(out.record);
    const bool unchanged =
        out.record.n_refined == 0 && out.record.n_coarsened == 0;
    last = std::move(out);
    fitted = std::move(snapshot);
    if (unchanged) {
      // With skipped candidates the node set is stuck rather than resolved.
      converged = last->record.n_skipped == 0;
      break;
    }
  }

  const double mae = max_abs_error(last->interp, f, grid);
  RunResult r{std::move(last->interp),
              std::move(last->fitted_nodes),
              std::move(history),
              converged,
              mae,
              std::nullopt,
              std::nullopt};
  if constexpr (std::is_same_v<NodeSetT, NodeSet1D>)
    r.set_1d = std::move(fitted);
  else
    r.set_2d = std::move(fitted);
  return r;
}

}  // namespace

RunResult run_adaptive_1d(const TargetFn& f, double a, double b, KernelFamily family,
                          int n0, const AdaptiveConfig& cfg) {
  validate(cfg);
  return run_loop(
      NodeSet1D::equispaced(a, b, n0),
      [family](NodeSet1D& s, const TargetFn& fn, const AdaptiveConfig& c) {
        return adapt_step_1d(s, fn, family, c);
      },
      f, cfg, evaluation_grid_1d(a, b));
}

RunResult run_adaptive_2d(const TargetFn& f, double a, double b, KernelFamily family,
                          const AdaptiveConfig& cfg) {
  validate(cfg);
  return run_loop(
      NodeSet2D::initial(a, b),
      [family](NodeSet2D& s, const TargetFn& fn, const AdaptiveConfig& c) {
        return adapt_step_2d(s, fn, family, c);
      },
      f, cfg, evaluation_grid_2d(a, b));
}

}  // namespace rbfadapt
