#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "frechetgap/curve.hpp"
#include "frechetgap/decisions.hpp"
#include "frechetgap/error.hpp"
#include "frechetgap/range.hpp"

namespace frechetgap {

/// Sorted distinct pairwise distances.
inline std::vector<double> sorted_distinct(const DistanceMatrix& d) {
  std::vector<double> values = d.values();
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

/// Smallest distance delta for which [0, delta] is feasible for the variant:
/// the discrete Frechet distance, or its shortcut/weak analogue. Binary search
/// over the distinct distances; feasibility is monotone in delta.
///
/// `decisions`, when given, is incremented once per decision call.
inline double compute_threshold(const DistanceMatrix& d, Variant variant,
                                const std::vector<double>& values,
                                std::size_t* decisions = nullptr) {
  auto feasible = [&](double delta) {
    if (decisions) ++*decisions;
    return decide(variant, d, DistanceRange::threshold(delta)).feasible;
  };
  if (!feasible(values.back())) {
    throw internal_error(
        "compute_threshold: largest distance is infeasible for the variant");
  }
  std::size_t lo = 0;
  std::size_t hi = values.size() - 1;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (feasible(values[mid])) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return values[lo];
}

inline double compute_threshold(const DistanceMatrix& d, Variant variant) {
  return compute_threshold(d, variant, sorted_distinct(d));
}

/// The sorted distance array split into candidate lower limits (min side) and
/// candidate upper limits (max side).
///
/// values[0..min_top] is the min side: row r of the range matrix (zero-based)
/// is d^min_{r+1} = values[min_top - r], so row 0 is min{d11, dnn} and row m-1
/// the smallest distance. values[max_bottom..] is the max side: column c is
/// d^max_{c+1} = values[max_bottom + c], so column 0 is the threshold. Values
/// strictly between the two sides lie in every candidate range. A value can
/// sit on both sides when min{d11, dnn} >= threshold.
struct DistanceLadder {
  std::vector<double> values;
  std::size_t min_top = 0;
  std::size_t max_bottom = 0;
  double threshold = 0.0;
  Variant variant = Variant::strong;

  std::size_t m() const { return min_top + 1; }
  std::size_t k() const { return values.size() - max_bottom; }

  double row_value(std::size_t row) const { return values[min_top - row]; }
  double col_value(std::size_t col) const { return values[max_bottom + col]; }

  /// Position of v in `values`, if present.
  std::optional<std::size_t> index_of(double v) const {
    auto it = std::lower_bound(values.begin(), values.end(), v);
    if (it == values.end() || *it != v) return std::nullopt;
    return static_cast<std::size_t>(it - values.begin());
  }

  /// Row holding v, if v is on the min side.
  std::optional<std::size_t> row_of(double v) const {
    auto idx = index_of(v);
    if (!idx || *idx > min_top) return std::nullopt;
    return min_top - *idx;
  }

  /// Column holding v, if v is on the max side.
  std::optional<std::size_t> col_of(double v) const {
    auto idx = index_of(v);
    if (!idx || *idx < max_bottom) return std::nullopt;
    return *idx - max_bottom;
  }
};

inline DistanceLadder build_ladder(const DistanceMatrix& d, Variant variant,
                                   std::size_t* decisions = nullptr) {
  DistanceLadder ladder;
  ladder.variant = variant;
  ladder.values = sorted_distinct(d);
  ladder.threshold = compute_threshold(d, variant, ladder.values, decisions);
  ladder.min_top = *ladder.index_of(d.min_endpoint());
  ladder.max_bottom = *ladder.index_of(ladder.threshold);
  return ladder;
}

}  // namespace frechetgap
