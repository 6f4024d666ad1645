#include "rbfadapt/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace rbfadapt {

SymMatrix::SymMatrix(int n) : n_(n) {
  if (n <= 0) throw DimensionMismatch("matrix size must be positive");
  a_.assign(static_cast<std::size_t>(n) * n, 0.0);
}

SymMatrix SymMatrix::identity(int n) {
  SymMatrix m(n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1.0);
  return m;
}

double SymMatrix::max_abs_diag() const {
  double m = 0.0;
  for (int i = 0; i < n_; ++i) m = std::max(m, std::abs((*this)(i, i)));
  return m;
}

double CholeskyFactor::entry(int i, int j) const {
  return l_[static_cast<std::size_t>(i) * (i + 1) / 2 + j];
}

std::vector<double> CholeskyFactor::solve(std::span<const double> b) const {
  if (static_cast<int>(b.size()) != n_)
    throw DimensionMismatch("right-hand side length does not match matrix size");
  std::vector<double> x(b.begin(), b.end());
  // L z = b
  for (int i = 0; i < n_; ++i) {
    const double* row = &l_[static_cast<std::size_t>(i) * (i + 1) / 2];
    double s = x[i];
    for (int k = 0; k < i; ++k) s -= row[k] * x[k];
    x[i] = s / row[i];
  }
  // L^T x = z
  for (int i = n_ - 1; i >= 0; --i) {
    double s = x[i];
    for (int k = i + 1; k < n_; ++k)
      s -= l_[static_cast<std::size_t>(k) * (k + 1) / 2 + i] * x[k];
    x[i] = s / l_[static_cast<std::size_t>(i) * (i + 1) / 2 + i];
  }
  return x;
}

double CholeskyFactor::log_det() const {
  double s = 0.0;
  for (int i = 0; i < n_; ++i)
    s += std::log(l_[static_cast<std::size_t>(i) * (i + 1) / 2 + i]);
  return 2.0 * s;
}

namespace {

struct PivotFailure {
  int index;
  double pivot;
};

// Inner-product (row) Cholesky on the lower triangle. On failure the struct
// reports the offending pivot so cholesky() can build its message.
std::optional<PivotFailure> factorize(const SymMatrix& a, int n,
                                      std::vector<double>& l) {
  const double threshold =
      n * std::numeric_limits<double>::epsilon() * a.max_abs_diag();
  const std::vector<double>& src = a.raw();

  for (int i = 0; i < n; ++i) {
    double* ri = &l[static_cast<std::size_t>(i) * (i + 1) / 2];
    const double* ai = &src[static_cast<std::size_t>(i) * n];
    for (int j = 0; j < i; ++j) {
      const double* rj = &l[static_cast<std::size_t>(j) * (j + 1) / 2];
      double s = ai[j];
      for (int k = 0; k < j; ++k) s -= ri[k] * rj[k];
      ri[j] = s / rj[j];
    }
    double d = ai[i];
    for (int k = 0; k < i; ++k) d -= ri[k] * ri[k];
    if (d <= threshold) return PivotFailure{i, d};
    ri[i] = std::sqrt(d);
  }
  return std::nullopt;
}

}  // namespace

std::optional<CholeskyFactor> try_cholesky(const SymMatrix& a) {
  const int n = a.size();
  CholeskyFactor f;
  f.n_ = n;
  f.l_.resize(static_cast<std::size_t>(n) * (n + 1) / 2);
  if (factorize(a, n, f.l_)) return std::nullopt;
  return f;
}

CholeskyFactor cholesky(const SymMatrix& a) {
  const int n = a.size();
  CholeskyFactor f;
  f.n_ = n;
  f.l_.resize(static_cast<std::size_t>(n) * (n + 1) / 2);
  if (auto fail = factorize(a, n, f.l_))
    throw NotPositiveDefinite(fail->index, fail->pivot);
  return f;
}

namespace {

// Householder reduction of the lower triangle to tridiagonal form
// (eigenvalues only, no transform accumulation).
void tridiagonalize(std::vector<double>& a, int n, std::vector<double>& d,
                    std::vector<double>& e) {
  auto at = [&a, n](int i, int j) -> double& {
    return a[static_cast<std::size_t>(i) * n + j];
  };
  d.assign(n, 0.0);
  e.assign(n, 0.0);

  for (int i = n - 1; i >= 1; --i) {
    const int l = i - 1;
    double h = 0.0;
    if (l > 0) {
      double scale = 0.0;
      for (int k = 0; k <= l; ++k) scale += std::abs(at(i, k));
      if (scale == 0.0) {
        e[i] = at(i, l);
      } else {
        for (int k = 0; k <= l; ++k) {
          at(i, k) /= scale;
          h += at(i, k) * at(i, k);
        }
        double fv = at(i, l);
        double g = fv >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
        e[i] = scale * g;
        h -= fv * g;
        at(i, l) = fv - g;
        fv = 0.0;
        for (int j = 0; j <= l; ++j) {
          double gg = 0.0;
          for (int k = 0; k <= j; ++k) gg += at(j, k) * at(i, k);
          for (int k = j + 1; k <= l; ++k) gg += at(k, j) * at(i, k);
          e[j] = gg / h;
          fv += e[j] * at(i, j);
        }
        const double hh = fv / (h + h);
        for (int j = 0; j <= l; ++j) {
          const double fj = at(i, j);
          const double gj = e[j] - hh * fj;
          e[j] = gj;
          double* rowj = &a[static_cast<std::size_t>(j) * n];
          const double* rowi = &a[static_cast<std::size_t>(i) * n];
          for (int k = 0; k <= j; ++k) rowj[k] -= fj * e[k] + gj * rowi[k];
        }
      }
    } else {
      e[i] = at(i, l);
    }
  }
  for (int i = 0; i < n; ++i) d[i] = at(i, i);
}

// Implicit-shift QL on a symmetric tridiagonal matrix; d becomes the
// eigenvalues (unsorted).
void ql_implicit(std::vector<double>& d, std::vector<double>& e, int n) {
  constexpr int kMaxSweeps = 50;
  const double eps = std::numeric_limits<double>::epsilon();
  for (int i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;

  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m != l) {
        if (iter++ == kMaxSweeps)
          throw Error("eigenvalue iteration did not converge");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        int i = m - 1;
        for (; i >= l; --i) {
          double fv = s * e[i];
          const double b = c * e[i];
          r = std::hypot(fv, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = fv / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

}  // namespace

std::vector<double> symmetric_eigenvalues(const SymMatrix& a) {
  const int n = a.size();
  std::vector<double> work = a.raw();
  std::vector<double> d, e;
  if (n == 1) return {work[0]};
  tridiagonalize(work, n, d, e);
  ql_implicit(d, e, n);
  std::sort(d.begin(), d.end());
  return d;
}

double condition_number(const SymMatrix& a) {
  const std::vector<double> ev = symmetric_eigenvalues(a);
  const double lo = ev.front();
  const double hi = ev.back();
  if (lo <= 0.0) throw NotPositiveDefinite(0, lo);
  return hi / lo;
}

}  // namespace rbfadapt
