#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "frechetgap/error.hpp"

namespace frechetgap {

/// Euclidean distance between two points of equal dimension.
inline double distance(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) {
    throw input_error("distance: dimension mismatch (" +
                      std::to_string(p.size()) + " vs " +
                      std::to_string(q.size()) + ")");
  }
  double sum = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    const double diff = p[k] - q[k];
    sum += diff * diff;
  }
  return std::sqrt(sum);
}

/// A non-empty polygonal curve in R^dim, stored as a flat coordinate array.
class Curve {
 public:
  Curve(std::size_t dim, std::vector<double> coords)
      : dim_(dim), coords_(std::move(coords)) {
    if (dim_ == 0) throw input_error("curve: dimension must be >= 1");
    if (coords_.empty()) throw input_error("curve: no points");
    if (coords_.size() % dim_ != 0) {
      throw input_error("curve: coordinate count is not a multiple of dim");
    }
  }

  /// Builds from a list of points; all must share one dimension.
  static Curve from_points(const std::vector<std::vector<double>>& points) {
    if (points.empty()) throw input_error("curve: no points");
    const std::size_t dim = points.front().size();
    std::vector<double> coords;
    coords.reserve(points.size() * dim);
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (points[i].size() != dim) {
        throw input_error("curve: point " + std::to_string(i + 1) +
                          " has dimension " +
                          std::to_string(points[i].size()) + ", expected " +
                          std::to_string(dim));
      }
      coords.insert(coords.end(), points[i].begin(), points[i].end());
    }
    return Curve(dim, std::move(coords));
  }

  std::size_t size() const { return coords_.size() / dim_; }
  std::size_t dim() const { return dim_; }

  std::span<const double> operator[](std::size_t i) const {
    return {coords_.data() + i * dim_, dim_};
  }

  const std::vector<double>& coords() const { return coords_; }

  friend bool operator==(const Curve&, const Curve&) = default;

 private:
  std::size_t dim_;
  std::vector<double> coords_;
};

/// All-pairs distances d[i][j] between A[i] and B[j], row-major by A.
///
/// Can also be built directly from precomputed values, which lets callers use
/// a non-Euclidean metric.
class DistanceMatrix {
 public:
  DistanceMatrix(std::size_t rows, std::size_t cols, std::vector<double> values)
      : rows_(rows), cols_(cols), d_(std::move(values)) {
    if (rows_ == 0 || cols_ == 0) {
      throw input_error("distance matrix: empty dimension");
    }
    if (d_.size() != rows_ * cols_) {
      throw input_error("distance matrix: value count does not match shape");
    }
    for (double v : d_) {
      if (!(v >= 0.0) || !std::isfinite(v)) {
        throw input_error("distance matrix: entries must be finite and >= 0");
      }
    }
  }

  std::size_t rows() const { return rows_; }  // nA
  std::size_t cols() const { return cols_; }  // nB
  std::size_t size() const { return d_.size(); }

  double operator()(std::size_t i, std::size_t j) const {
    return d_[i * cols_ + j];
  }

  /// min{d(a_1,b_1), d(a_n,b_n)}: no feasible range has a larger lower limit.
  double min_endpoint() const {
    return std::min(d_.front(), d_.back());
  }

  const std::vector<double>& values() const { return d_; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> d_;
};

inline DistanceMatrix build_distance_matrix(const Curve& a, const Curve& b) {
  if (a.dim() != b.dim()) {
    throw input_error("distance matrix: curves have dimensions " +
                      std::to_string(a.dim()) + " and " +
                      std::to_string(b.dim()));
  }
  std::vector<double> d;
  d.reserve(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      d.push_back(distance(a[i], b[j]));
    }
  }
  return DistanceMatrix(a.size(), b.size(), std::move(d));
}

}  // namespace frechetgap
