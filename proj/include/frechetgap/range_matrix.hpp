#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "frechetgap/error.hpp"
#include "frechetgap/ladder.hpp"
#include "frechetgap/range.hpp"

namespace frechetgap {

/// Index rectangle [row_lo, row_hi] x [col_lo, col_hi] of the range matrix.
/// Cell (r, c) is the range [ladder.row_value(r), ladder.col_value(c)]; a
/// higher row index means a smaller lower limit, so cell (r, c) contains cell
/// (r', c') iff r' <= r and c' <= c. Bounds are signed so that empty views
/// (row_lo > row_hi or col_lo > col_hi) are representable.
struct RangeMatrixView {
  std::int64_t row_lo = 0;
  std::int64_t row_hi = -1;
  std::int64_t col_lo = 0;
  std::int64_t col_hi = -1;

  static RangeMatrixView full(const DistanceLadder& ladder) {
    return {0, static_cast<std::int64_t>(ladder.m()) - 1, 0,
            static_cast<std::int64_t>(ladder.k()) - 1};
  }

  std::int64_t rows() const { return std::max<std::int64_t>(0, row_hi - row_lo + 1); }
  std::int64_t cols() const { return std::max<std::int64_t>(0, col_hi - col_lo + 1); }
  bool empty() const { return rows() == 0 || cols() == 0; }
  /// Number of rows plus number of columns.
  std::int64_t size() const { return rows() + cols(); }

  bool contains_view(const RangeMatrixView& o) const {
    return o.empty() || (row_lo <= o.row_lo && o.row_hi <= row_hi &&
                         col_lo <= o.col_lo && o.col_hi <= col_hi);
  }

  friend bool operator==(const RangeMatrixView&, const RangeMatrixView&) = default;
};

enum class FixedClass : std::uint8_t { non_fixed, fixed_valid, fixed_invalid };

/// O(1) classification of distance values against one non-empty view, using
/// the view's four boundary values. Row values of the view form the contiguous
/// ladder interval [row value of row_hi, row value of row_lo]; column values
/// the interval [col value of col_lo, col value of col_hi].
class ViewClassifier {
 public:
  ViewClassifier(const DistanceLadder& ladder, const RangeMatrixView& view)
      : view_(view) {
    if (view.empty()) throw contract_violation("classifier: empty view");
    if (view.row_lo < 0 || view.col_lo < 0 ||
        view.row_hi >= static_cast<std::int64_t>(ladder.m()) ||
        view.col_hi >= static_cast<std::int64_t>(ladder.k())) {
      throw contract_violation("classifier: view outside the range matrix");
    }
    row_min_ = ladder.row_value(static_cast<std::size_t>(view.row_hi));
    row_max_ = ladder.row_value(static_cast<std::size_t>(view.row_lo));
    col_min_ = ladder.col_value(static_cast<std::size_t>(view.col_lo));
    col_max_ = ladder.col_value(static_cast<std::size_t>(view.col_hi));
  }

  FixedClass operator()(double v) const {
    if ((row_min_ <= v && v <= row_max_) || (col_min_ <= v && v <= col_max_)) {
      return FixedClass::non_fixed;
    }
    if (row_max_ < v && v < col_min_) return FixedClass::fixed_valid;
    return FixedClass::fixed_invalid;
  }

  /// True iff r is a cell of the view (lower limit a row value, upper limit a
  /// column value).
  bool has_cell(const DistanceRange& r) const {
    return row_min_ <= r.s && r.s <= row_max_ && col_min_ <= r.t &&
           r.t <= col_max_;
  }

  const RangeMatrixView& view() const { return view_; }

 private:
  RangeMatrixView view_;
  double row_min_ = 0.0;
  double row_max_ = 0.0;
  double col_min_ = 0.0;
  double col_max_ = 0.0;
};

/// Classifies a ladder value against a view; the value must be a pairwise
/// distance of the ladder.
inline FixedClass classify(const DistanceLadder& ladder,
                           const RangeMatrixView& view, double v) {
  if (!ladder.index_of(v)) {
    throw input_error("classify: " + std::to_string(v) +
                      " is not a ladder value");
  }
  return ViewClassifier(ladder, view)(v);
}

}  // namespace frechetgap
