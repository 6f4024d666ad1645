#include "rbfadapt/interpolant.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace rbfadapt {

Interpolant::Interpolant(KernelSpec spec, PointSet nodes, std::vector<double> values,
                         std::vector<double> coeffs, CholeskyFactor factor)
    : spec_(spec),
      nodes_(std::move(nodes)),
      values_(std::move(values)),
      coeffs_(std::move(coeffs)),
      factor_(std::move(factor)) {
  if (nodes_.size() != values_.size() || nodes_.size() != coeffs_.size())
    throw DimensionMismatch("node, value and coefficient counts differ");
}

double Interpolant::operator()(const Point& p) const {
  const int dim = nodes_.dim();
  double s = 0.0;
  for (std::size_t j = 0; j < nodes_.size(); ++j)
    s += coeffs_[j] * phi(spec_, distance(p, nodes_[j], dim));
  return s;
}

std::vector<double> Interpolant::evaluate(const PointSet& points) const {
  if (points.dim() != nodes_.dim())
    throw DimensionMismatch("evaluation points and nodes have different dimensions");
  std::vector<double> out;
  out.reserve(points.size());
  for (const Point& p : points) out.push_back((*this)(p));
  return out;
}

Interpolant fit(const KernelSpec& spec, const PointSet& nodes,
                std::span<const double> values) {
  return fit_with_matrix(spec, nodes, values, kernel_matrix(spec, nodes));
}

Interpolant fit_with_matrix(const KernelSpec& spec, const PointSet& nodes,
                            std::span<const double> values, const SymMatrix& a) {
  if (nodes.size() != values.size())
    throw DimensionMismatch("node and value counts differ");
  CholeskyFactor f = cholesky(a);
  std::vector<double> c = f.solve(values);
  return Interpolant(spec, nodes, std::vector<double>(values.begin(), values.end()),
                     std::move(c), std::move(f));
}

std::vector<double> residuals(const Interpolant& s, const TargetFn& f,
                              const PointSet& test_points) {
  std::vector<double> r = s.evaluate(test_points);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = std::abs(r[i] - f(test_points[i]));
  return r;
}

double max_abs_error(const Interpolant& s, const TargetFn& f,
                     const PointSet& eval_points) {
  if (eval_points.size() == 0)
    throw EmptyEvaluationSet("cannot take a maximum over an empty evaluation set");
  const std::vector<double> r = residuals(s, f, eval_points);
  return *std::max_element(r.begin(), r.end());
}

PointSet evaluation_grid_1d(double a, double b, int n) {
  if (!(a < b)) throw InvalidDomain("interval must satisfy a < b");
  if (n < 2) throw ConfigError("evaluation grid needs at least 2 points");
  std::vector<Point> pts;
  pts.reserve(n);
  for (int i = 0; i < n; ++i)
    pts.push_back({a + (b - a) * i / (n - 1), 0.0});
  return PointSet(1, std::move(pts));
}

PointSet evaluation_grid_2d(double a, double b, int n_side) {
  if (!(a < b)) throw InvalidDomain("interval must satisfy a < b");
  if (n_side < 2) throw ConfigError("evaluation grid needs at least 2 points per side");
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(n_side) * n_side);
  for (int iy = 0; iy < n_side; ++iy) {
    const double y = a + (b - a) * iy / (n_side - 1);
    for (int ix = 0; ix < n_side; ++ix)
      pts.push_back({a + (b - a) * ix / (n_side - 1), y});
  }
  return PointSet(2, std::move(pts));
}

}  // namespace rbfadapt
