#pragma once

#include <string>

#include "rbfadapt/linalg.hpp"
#include "rbfadapt/points.hpp"

namespace rbfadapt {

// Radial kernel families. GA and IMQ are infinitely smooth; M6/M4/M2 are
// Matern kernels with C^6/C^4/C^2 smoothness.
enum class KernelFamily { GA, IMQ, M6, M4, M2 };

// Lowercase names used by the CLI and the reports: ga, imq, m6, m4, m2.
const char* family_name(KernelFamily family);
KernelFamily parse_family(const std::string& name);

struct KernelSpec {
  KernelFamily family;
  double epsilon;

  KernelSpec(KernelFamily f, double eps) : family(f), epsilon(eps) {
    if (!(eps > 0.0)) throw InvalidShape("shape parameter must be positive");
  }
};

// phi(r) for r >= 0. With t = epsilon * r:
//   GA   exp(-t^2)
//   IMQ  (1 + t^2)^(-1/2)
//   M6   exp(-t) (t^3 + 6 t^2 + 15 t + 15)
//   M4   exp(-t) (t^2 + 3 t + 3)
//   M2   exp(-t) (t + 1)
double phi(const KernelSpec& spec, double r);

// Pairwise Euclidean distances. Throws DuplicateNodes if two nodes are
// closer than separation_floor.
SymMatrix distance_matrix(const PointSet& nodes, double separation_floor = 1e-12);

// Applies phi entrywise to a precomputed distance matrix.
SymMatrix kernel_matrix_from_distances(const KernelSpec& spec, const SymMatrix& dist);

// A_ij = phi(||x_i - x_j||); symmetric with constant diagonal phi(0).
SymMatrix kernel_matrix(const KernelSpec& spec, const PointSet& nodes,
                        double separation_floor = 1e-12);

}  // namespace rbfadapt
