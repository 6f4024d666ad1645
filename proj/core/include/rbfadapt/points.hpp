#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "rbfadapt/errors.hpp"

namespace rbfadapt {

// Point in 1 or 2 dimensions; y is ignored when the owning set is 1D.
struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline double distance(const Point& p, const Point& q, int dim) {
  const double dx = p.x - q.x;
  if (dim == 1) return std::abs(dx);
  const double dy = p.y - q.y;
  return std::sqrt(dx * dx + dy * dy);
}

// Ordered set of points with a fixed dimension (1 or 2).
class PointSet {
 public:
  PointSet(int dim, std::vector<Point> pts) : dim_(dim), pts_(std::move(pts)) {
    if (dim_ != 1 && dim_ != 2) throw DimensionMismatch("point dimension must be 1 or 2");
  }

  static PointSet from_1d(const std::vector<double>& xs) {
    std::vector<Point> pts;
    pts.reserve(xs.size());
    for (double x : xs) pts.push_back({x, 0.0});
    return PointSet(1, std::move(pts));
  }

  int dim() const { return dim_; }
  std::size_t size() const { return pts_.size(); }
  const Point& operator[](std::size_t i) const { return pts_[i]; }
  const std::vector<Point>& points() const { return pts_; }

  auto begin() const { return pts_.begin(); }
  auto end() const { return pts_.end(); }

 private:
  int dim_;
  std::vector<Point> pts_;
};

// Scalar field sampled by the adaptive loop and the error grids.
using TargetFn = std::function<double(const Point&)>;

}  // namespace rbfadapt
