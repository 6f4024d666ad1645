#pragma once

#include <span>
#include <vector>

#include "rbfadapt/kernels.hpp"

namespace rbfadapt {

// Kernel interpolant s(x) = sum_j c_j phi(||x - x_j||). Immutable once fit;
// the Cholesky factor of the system matrix is retained for diagnostics.
class Interpolant {
 public:
  Interpolant(KernelSpec spec, PointSet nodes, std::vector<double> values,
              std::vector<double> coeffs, CholeskyFactor factor);

  double operator()(const Point& p) const;
  std::vector<double> evaluate(const PointSet& points) const;

  const KernelSpec& spec() const { return spec_; }
  const PointSet& nodes() const { return nodes_; }
  const std::vector<double>& values() const { return values_; }
  const std::vector<double>& coeffs() const { return coeffs_; }
  const CholeskyFactor& factor() const { return factor_; }

 private:
  KernelSpec spec_;
  PointSet nodes_;
  std::vector<double> values_;
  std::vector<double> coeffs_;
  CholeskyFactor factor_;
};

// Solves A c = y for the interpolation coefficients.
Interpolant fit(const KernelSpec& spec, const PointSet& nodes,
                std::span<const double> values);

// Same fit reusing an already assembled system matrix (must equal
// kernel_matrix(spec, nodes)).
Interpolant fit_with_matrix(const KernelSpec& spec, const PointSet& nodes,
                            std::span<const double> values, const SymMatrix& a);

// Pointwise |s(t) - f(t)| over test_points.
std::vector<double> residuals(const Interpolant& s, const TargetFn& f,
                              const PointSet& test_points);

// max_t |s(t) - f(t)|; throws EmptyEvaluationSet on an empty set.
double max_abs_error(const Interpolant& s, const TargetFn& f,
                     const PointSet& eval_points);

// Canonical error grids: 1000 equispaced points on [a,b]; an n x n tensor
// grid on [a,b]^2 (80 x 80 by default).
PointSet evaluation_grid_1d(double a, double b, int n = 1000);
PointSet evaluation_grid_2d(double a, double b, int n_side = 80);

}  // namespace rbfadapt
