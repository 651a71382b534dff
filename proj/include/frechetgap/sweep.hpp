#pragma once

#include <cstddef>

#include "frechetgap/curve.hpp"
#include "frechetgap/decisions.hpp"
#include "frechetgap/error.hpp"
#include "frechetgap/ladder.hpp"
#include "frechetgap/range.hpp"
#include "frechetgap/salg.hpp"

namespace frechetgap {

/// Smallest g over feasible ranges for the plain (strong) variant.
///
/// Two-pointer sweep over the ladder: the lower limit rises through the min
/// side from the smallest distance, and for each lower limit the upper limit
/// rises from the threshold until the range becomes feasible. The upper
/// pointer never moves back because shrinking a range from below cannot make
/// it feasible again. O(n^4) worst case with the O(n^2) decision.
///
/// The decision is a call to strong_decide; a structure supporting
/// single-position validity flips could replace it without touching the sweep.
template <MonotoneRangeScore G>
RangeSearchResult plain_range_search(const DistanceMatrix& d,
                                     const DistanceLadder& ladder, const G& g,
                                     SearchStats* stats = nullptr) {
  SearchStats local;
  SearchStats& st = stats ? *stats : local;
  st.m = ladder.m();
  st.k = ladder.k();

  const std::size_t m = ladder.m();
  const std::size_t k = ladder.k();
  std::size_t col = 0;
  bool found = false;
  double best_value = kInfinity;
  DistanceRange best;

  for (std::size_t step = 0; step < m; ++step) {
    const std::size_t row = m - 1 - step;  // ascending lower limit
    const double s = ladder.row_value(row);
    while (col < k) {
      const double t = ladder.col_value(col);
      if (s <= t) {
        ++st.decisions;
        if (strong_decide(d, DistanceRange(s, t)).feasible) break;
      }
      ++col;
    }
    if (col == k) break;  // even the largest upper limit fails from here on
    if constexpr (kContractChecks) {
      // The inherited pointer must not have skipped this row's minimal t.
      if (col > 0 && ladder.col_value(col - 1) >= s &&
          strong_decide(d, DistanceRange(s, ladder.col_value(col - 1))).feasible) {
        throw internal_error("plain sweep: upper pointer overshot");
      }
    }
    const double t = ladder.col_value(col);
    const double value = static_cast<double>(g(s, t));
    if (!found || value < best_value ||
        (value == best_value && (t < best.t || (t == best.t && s > best.s)))) {
      found = true;
      best_value = value;
      best = DistanceRange(s, t);
    }
  }
  if (!found) throw internal_error("plain sweep: no feasible range");

  Decision final = strong_decide(d, best);
  RangeSearchResult result;
  result.value = best_value;
  result.best = best;
  result.witness = std::move(*final.witness);
  return result;
}

template <MonotoneRangeScore G>
RangeSearchResult plain_range_search(const DistanceMatrix& d, const G& g,
                                     SearchStats* stats = nullptr) {
  return plain_range_search(d, build_ladder(d, Variant::strong), g, stats);
}

}  // namespace frechetgap
