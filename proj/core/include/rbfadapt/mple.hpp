#pragma once

#include <span>

#include "rbfadapt/kernels.hpp"

namespace rbfadapt {

// Search interval and budget for the shape parameter. tol is measured in
// log-epsilon; max_evals caps the total number of cost evaluations.
struct ShapeSearchConfig {
  double eps_min = 1e-2;
  double eps_max = 1e2;
  double tol = 1e-3;
  int max_evals = 100;
};

// Size of the log-spaced probe grid that brackets the minimum before the
// bounded minimizer refines it.
inline constexpr int kShapeProbePoints = 33;

struct MpleResult {
  double eps_opt;
  double cost_opt;
  double sigma2_opt;
  int evals;  // cost evaluations spent (probe grid + refinement)
};

// Maximum-profile-likelihood cost
//   MPLE(eps) = N log(y^T A^-1 y) + log det A,
// evaluated through one Cholesky factorization (log det A from the factor
// diagonal, the quadratic form from a triangular solve). Returns +infinity
// when the factorization fails or the quadratic form is not positive.
// Throws AllZeroValues if y == 0.
double mple_cost(KernelFamily family, double eps, const PointSet& nodes,
                 std::span<const double> values);
double mple_cost_from_distances(KernelFamily family, double eps,
                                const SymMatrix& dist, std::span<const double> values);

// Profile-optimal noise-free process variance sigma^2 = (y^T A^-1 y) / N.
double optimal_variance(const CholeskyFactor& factor, std::span<const double> values);

// Minimizes the MPLE cost over [eps_min, eps_max]: a log-spaced probe grid
// followed by golden-section/parabolic refinement in log-epsilon. The result
// is the best epsilon over every evaluation made, so cost_opt never exceeds
// the probe-grid minimum. Throws NoAdmissibleShape if every probe is
// +infinity.
MpleResult select_shape(KernelFamily family, const PointSet& nodes,
                        std::span<const double> values,
                        const ShapeSearchConfig& cfg = {});
MpleResult select_shape_from_distances(KernelFamily family, const SymMatrix& dist,
                                       std::span<const double> values,
                                       const ShapeSearchConfig& cfg = {});

}  // namespace rbfadapt
