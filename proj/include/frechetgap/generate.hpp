#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "frechetgap/curve.hpp"
#include "frechetgap/error.hpp"

namespace frechetgap {

enum class GenKind { offset_outlier, random_walk };

struct GenParams {
  GenKind kind = GenKind::random_walk;
  std::size_t n = 16;
  double offset_x = 0.0;
  double offset_y = 1.0;
  std::size_t outliers = 0;
  double magnitude = 8.0;
  std::uint64_t seed = 1;
};

namespace detail {

// std::*_distribution output is implementation-defined; these mappings keep
// generated curves identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform in [0, bound), bound >= 1.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    while (true) {
      const std::uint64_t x = engine_();
      if (x < limit) return x % bound;
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace detail

/// Synthetic curve pairs.
///
/// offset-outlier: B is a lattice walk from the origin with steps (1, dy),
/// dy in {-1, 0, 1}; A is B shifted by the offset, with `outliers` distinct
/// points pushed by (0, +/-magnitude). With no outliers A is an exact
/// translate of B.
///
/// random-walk: two independent walks with steps (1, dy), dy uniform in
/// [-1, 1]; A starts at the origin, B at the offset.
inline std::pair<Curve, Curve> generate(const GenParams& p) {
  if (p.n < 2) throw input_error("generate: n must be >= 2");
  if (p.outliers >= p.n) throw input_error("generate: outliers must be < n");
  if (!std::isfinite(p.offset_x) || !std::isfinite(p.offset_y) ||
      !std::isfinite(p.magnitude) || p.magnitude < 0.0) {
    throw input_error("generate: offset and magnitude must be finite, magnitude >= 0");
  }
  if (p.kind == GenKind::random_walk && p.outliers != 0) {
    throw input_error("generate: outliers apply to offset-outlier only");
  }
  detail::Rng rng(p.seed);
  std::vector<double> a(2 * p.n);
  std::vector<double> b(2 * p.n);

  if (p.kind == GenKind::offset_outlier) {
    double y = 0.0;
    for (std::size_t i = 0; i < p.n; ++i) {
      if (i > 0) y += static_cast<double>(rng.below(3)) - 1.0;
      b[2 * i] = static_cast<double>(i);
      b[2 * i + 1] = y;
      a[2 * i] = b[2 * i] + p.offset_x;
      a[2 * i + 1] = y + p.offset_y;
    }
    std::vector<std::size_t> order(p.n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    for (std::size_t k = 0; k < p.outliers; ++k) {
      const auto pick = k + static_cast<std::size_t>(rng.below(p.n - k));
      std::swap(order[k], order[pick]);
      const double sign = rng.below(2) == 0 ? 1.0 : -1.0;
      a[2 * order[k] + 1] += sign * p.magnitude;
    }
  } else {
    auto walk = [&](std::vector<double>& c, double x0, double y0) {
      double y = y0;
      for (std::size_t i = 0; i < p.n; ++i) {
        if (i > 0) y += 2.0 * rng.unit() - 1.0;
        c[2 * i] = x0 + static_cast<double>(i);
        c[2 * i + 1] = y;
      }
    };
    walk(a, 0.0, 0.0);
    walk(b, p.offset_x, p.offset_y);
  }
  return {Curve(2, std::move(a)), Curve(2, std::move(b))};
}

}  // namespace frechetgap
