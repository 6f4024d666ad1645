#pragma once

#include <compare>
#include <optional>
#include <set>
#include <vector>

#include "rbfadapt/interpolant.hpp"
#include "rbfadapt/mple.hpp"

namespace rbfadapt {

// Thresholds and budgets for residual sub-sampling. h_min = 0 selects the
// dimension default: minimum node gap (b-a)*1e-6 in 1D, minimum cell side
// (b-a)*2^-12 in 2D.
struct AdaptiveConfig {
  double theta_refine = 1e-6;
  double theta_coarse = 1e-8;
  int max_iter = 20;
  ShapeSearchConfig shape;
  double h_min = 0.0;
};

struct IterationRecord {
  int k = 0;
  int n_nodes = 0;
  double eps_opt = 0.0;
  double sigma2_opt = 0.0;
  int n_refined = 0;
  int n_coarsened = 0;
  // Refinement candidates rejected because they would violate the minimum
  // spacing; counted, never an error.
  int n_skipped = 0;
  double max_residual = 0.0;            // over this step's check points
  double min_added_residual = 0.0;      // NaN when nothing was added
  double max_removed_residual = 0.0;    // NaN when nothing was removed
  double max_node_residual = 0.0;       // |s(x_i) - y_i| over the fitted nodes
  double y_inf = 0.0;                   // ||y||_inf of the fitted data
  double cond = 0.0;                    // condition number of the fitted matrix
};

// Sorted 1D nodes; the interval endpoints are always present and are never
// removed by coarsening.
class NodeSet1D {
 public:
  static NodeSet1D equispaced(double a, double b, int n0);

  double a() const { return a_; }
  double b() const { return b_; }
  const std::vector<double>& xs() const { return xs_; }
  PointSet points() const { return PointSet::from_1d(xs_); }

  // Midpoints of consecutive nodes, one per gap.
  PointSet check_points() const;

  // Replaces the node set; used by the adaptive step to apply refinement and
  // coarsening simultaneously.
  void assign(std::vector<double> xs);

 private:
  NodeSet1D(double a, double b, std::vector<double> xs);
  double a_, b_;
  std::vector<double> xs_;
};

// 2D node structure: a set of active dyadic square cells over [a,b]^2, each
// carrying its center as an interpolation node, plus a static boundary frame.
// Cells never get coarser than the initial depth. A cell's check points are
// the centers of its inactive children, so refinement activates exactly the
// flagged child cells and coarsening deactivates a cell only when all four
// children are inactive and quiet.
class NodeSet2D {
 public:
  struct CellKey {
    int depth;
    int ix;
    int iy;
    auto operator<=>(const CellKey&) const = default;
  };

  static constexpr int kInitialDepth = 4;

  // 16 x 16 interior cells plus 64 boundary nodes (16 per edge, each edge
  // containing exactly one corner).
  static NodeSet2D initial(double a, double b);

  // Uniform interior-only structure at the given depth (no boundary frame).
  static NodeSet2D uniform(double a, double b, int depth);

  double a() const { return a_; }
  double b() const { return b_; }
  const std::set<CellKey>& cells() const { return cells_; }
  const std::vector<Point>& boundary() const { return boundary_; }
  std::size_t size() const { return boundary_.size() + cells_.size(); }

  double cell_side(int depth) const;
  Point cell_center(const CellKey& key) const;
  bool active(const CellKey& key) const { return cells_.contains(key); }

  // Boundary nodes first, then interior cell centers in key order.
  PointSet points() const;

  struct CheckSet {
    PointSet points;
    std::vector<CellKey> owner;  // active cell owning each check point
    std::vector<CellKey> child;  // the inactive child the point is center of
  };
  CheckSet check_points() const;

  void activate(const CellKey& key) { cells_.insert(key); }
  void deactivate(const CellKey& key) { cells_.erase(key); }

 private:
  NodeSet2D(double a, double b) : a_(a), b_(b) {}
  double a_ = 0.0, b_ = 0.0;
  std::set<CellKey> cells_;
  std::vector<Point> boundary_;
};

struct StepOutcome {
  IterationRecord record;
  Interpolant interp;     // fitted on the pre-update node set
  PointSet fitted_nodes;  // the nodes that fit used
};

// One residual sub-sampling step: select the shape parameter by profile
// likelihood, fit, evaluate check residuals, then apply refinement
// (residual > theta_refine) and coarsening (structure rule with residuals
// < theta_coarse) simultaneously. Mutates the node structure.
StepOutcome adapt_step_1d(NodeSet1D& nodes, const TargetFn& f, KernelFamily family,
                          const AdaptiveConfig& cfg);
StepOutcome adapt_step_2d(NodeSet2D& nodes, const TargetFn& f, KernelFamily family,
                          const AdaptiveConfig& cfg);

struct RunResult {
  Interpolant final_interpolant;
  PointSet final_nodes;
  std::vector<IterationRecord> history;
  bool converged = false;
  double mae = 0.0;
  // Final structure as fitted (exactly one is set, matching the dimension).
  std::optional<NodeSet1D> set_1d;
  std::optional<NodeSet2D> set_2d;
};

// Iterates adapt_step until a step changes nothing (converged) or max_iter
// is reached. A step that only skipped spacing-blocked candidates stops the
// loop as non-converged: further iterations cannot change the node set.
// mae is measured on the canonical evaluation grid for the dimension.
RunResult run_adaptive_1d(const TargetFn& f, double a, double b, KernelFamily family,
                          int n0, const AdaptiveConfig& cfg);
RunResult run_adaptive_2d(const TargetFn& f, double a, double b, KernelFamily family,
                          const AdaptiveConfig& cfg);

}  // namespace rbfadapt
