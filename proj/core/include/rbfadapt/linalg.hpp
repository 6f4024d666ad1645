#pragma once

#include <optional>
#include <span>
#include <vector>

#include "rbfadapt/errors.hpp"

namespace rbfadapt {

// Dense symmetric matrix, full row-major storage. set() writes both halves,
// so entries(i,j) == entries(j,i) holds at all times.
class SymMatrix {
 public:
  explicit SymMatrix(int n);
  static SymMatrix identity(int n);

  int size() const { return n_; }
  double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  void set(int i, int j, double v) {
    a_[static_cast<std::size_t>(i) * n_ + j] = v;
    a_[static_cast<std::size_t>(j) * n_ + i] = v;
  }
  double max_abs_diag() const;

  const std::vector<double>& raw() const { return a_; }

 private:
  int n_;
  std::vector<double> a_;
};

// Lower-triangular Cholesky factor L with A = L*L^T, packed row-major.
class CholeskyFactor {
 public:
  int size() const { return n_; }
  double entry(int i, int j) const;  // L(i,j), j <= i

  // Solves A x = b via the two triangular systems.
  std::vector<double> solve(std::span<const double> b) const;

  // log det A = 2 * sum_i log L(i,i)
  double log_det() const;

 private:
  friend std::optional<CholeskyFactor> try_cholesky(const SymMatrix&);
  friend CholeskyFactor cholesky(const SymMatrix&);
  int n_ = 0;
  std::vector<double> l_;  // i*(i+1)/2 + j
};

// Factors A = L*L^T. A pivot <= n * eps_machine * max|A_ii| means the matrix
// is numerically singular or indefinite: try_cholesky returns nullopt,
// cholesky throws NotPositiveDefinite.
std::optional<CholeskyFactor> try_cholesky(const SymMatrix& a);
CholeskyFactor cholesky(const SymMatrix& a);

// All eigenvalues, ascending, via Householder tridiagonalization and
// implicit-shift QL. Intended for desk-scale n.
std::vector<double> symmetric_eigenvalues(const SymMatrix& a);

// Spectral condition number lambda_max / lambda_min of an SPD matrix.
// Throws NotPositiveDefinite if the smallest eigenvalue is not positive.
double condition_number(const SymMatrix& a);

}  // namespace rbfadapt
