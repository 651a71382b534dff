#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "frechetgap/decisions.hpp"
#include "frechetgap/ladder.hpp"
#include "frechetgap/range.hpp"
#include "frechetgap/range_matrix.hpp"

namespace frechetgap {

/// A decision structure that answers feasibility for the cells of one view in
/// time linear in its size, and that can shrink itself to any subview while
/// keeping every answer for that subview unchanged.
template <class D>
concept ContractibleDecider =
    std::copy_constructible<D> &&
    requires(const D& d, const DistanceRange& r, const ViewClassifier& v) {
      { d.decide(r) } -> std::same_as<Decision>;
      { d.contract(v) } -> std::same_as<D>;
      { d.size() } -> std::convertible_to<std::size_t>;
    };

template <class G>
concept MonotoneRangeScore = std::regular_invocable<const G&, double, double> &&
    std::convertible_to<std::invoke_result_t<const G&, double, double>, double>;

/// Decides with a raw decision procedure over the full matrix; contraction is
/// the identity. Valid for every cell, O(nA*nB) or O(nA+nB) per call.
class MatrixDecider {
 public:
  MatrixDecider(std::shared_ptr<const DistanceMatrix> d, Variant variant)
      : d_(std::move(d)), variant_(variant) {}

  Decision decide(const DistanceRange& r) const {
    return frechetgap::decide(variant_, *d_, r);
  }
  MatrixDecider contract(const ViewClassifier&) const { return *this; }
  std::size_t size() const { return d_->size(); }

 private:
  std::shared_ptr<const DistanceMatrix> d_;
  Variant variant_;
};

/// Wraps any decider so that contract() returns the wrapped decider itself.
/// Running the search through this isolates search bugs from contraction bugs.
template <ContractibleDecider D>
class UncontractedDecider {
 public:
  explicit UncontractedDecider(D inner)
      : inner_(std::make_shared<const D>(std::move(inner))) {}

  Decision decide(const DistanceRange& r) const { return inner_->decide(r); }
  UncontractedDecider contract(const ViewClassifier&) const { return *this; }
  std::size_t size() const { return inner_->size(); }

 private:
  std::shared_ptr<const D> inner_;
};

struct SearchStats {
  std::size_t m = 0;
  std::size_t k = 0;
  std::size_t decisions = 0;
  /// Summed size (rows + columns) of the views processed at each depth.
  std::vector<std::size_t> level_view_size;
  /// Summed decider size at each depth.
  std::vector<std::size_t> level_decider_size;
  /// Cells handed to a decider, in call order; filled only when requested.
  bool record_cells = false;
  std::vector<std::pair<std::int64_t, std::int64_t>> decided_cells;

  void add_level(std::size_t depth, std::size_t view_size,
                 std::size_t decider_size) {
    if (level_view_size.size() <= depth) {
      level_view_size.resize(depth + 1, 0);
      level_decider_size.resize(depth + 1, 0);
    }
    level_view_size[depth] += view_size;
    level_decider_size[depth] += decider_size;
  }

  /// Largest per-level total; bounded by m + k.
  std::size_t max_level_view_size() const {
    std::size_t best = 0;
    for (std::size_t s : level_view_size) best = std::max(best, s);
    return best;
  }
};

struct RangeSearchResult {
  double value = kInfinity;
  DistanceRange best;
  Walk witness;
};

/// Feasibility of a single cell. Cells whose lower limit exceeds the upper
/// limit hold no valid position and are infeasible without consulting `d`.
template <ContractibleDecider D>
bool cell_feasible(const DistanceLadder& ladder, const D& d, std::int64_t row,
                   std::int64_t col, SearchStats* stats = nullptr) {
  const double s = ladder.row_value(static_cast<std::size_t>(row));
  const double t = ladder.col_value(static_cast<std::size_t>(col));
  if (s > t) return false;
  if (stats) {
    ++stats->decisions;
    if (stats->record_cells) stats->decided_cells.emplace_back(row, col);
  }
  return d.decide(DistanceRange(s, t)).feasible;
}

/// Smallest column c in [view.col_lo, view.col_hi] whose cell in `row` is
/// feasible, or none. Feasibility is monotone along a row.
template <ContractibleDecider D>
std::optional<std::int64_t> middle_row_search(const RangeMatrixView& view,
                                              std::int64_t row, const D& d,
                                              const DistanceLadder& ladder,
                                              SearchStats* stats = nullptr) {
  std::int64_t lo = view.col_lo;
  std::int64_t hi = view.col_hi + 1;
  while (lo < hi) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (cell_feasible(ladder, d, row, mid, stats)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  if (lo > view.col_hi) return std::nullopt;
  return lo;
}

namespace detail {

template <ContractibleDecider D, MonotoneRangeScore G>
class RangeSearch {
 public:
  RangeSearch(const DistanceLadder& ladder, const G& g, SearchStats& stats)
      : ladder_(ladder), g_(g), stats_(stats) {}

  void run(const RangeMatrixView& view, const D& decider, std::size_t depth) {
    if (view.empty()) return;
    stats_.add_level(depth, static_cast<std::size_t>(view.size()),
                     decider.size());

    const std::int64_t row = view.row_lo + (view.row_hi - view.row_lo) / 2;
    const auto col = middle_row_search(view, row, decider, ladder_, &stats_);
    if (!col) {
      // Every row at or above `row` is contained in this row's last cell.
      visit({row + 1, view.row_hi, view.col_lo, view.col_hi}, decider,
            depth + 1);
      return;
    }
    offer(row, *col);
    // Larger lower limits with upper limit at least col; then smaller lower
    // limits with upper limit below col.
    visit({view.row_lo, row - 1, *col, view.col_hi}, decider, depth + 1);
    visit({row + 1, view.row_hi, view.col_lo, *col - 1}, decider, depth + 1);
  }

  std::optional<std::pair<std::int64_t, std::int64_t>> best_cell() const {
    return best_cell_;
  }
  double best_value() const { return best_value_; }

 private:
  void visit(const RangeMatrixView& child, const D& parent, std::size_t depth) {
    if (child.empty()) return;
    run(child, parent.contract(ViewClassifier(ladder_, child)), depth);
  }

  void offer(std::int64_t row, std::int64_t col) {
    const double s = ladder_.row_value(static_cast<std::size_t>(row));
    const double t = ladder_.col_value(static_cast<std::size_t>(col));
    const double value = static_cast<double>(g_(s, t));
    bool better = !best_cell_ || value < best_value_;
    if (best_cell_ && value == best_value_) {
      // Deterministic tie-break: smaller t, then larger s.
      const double bs = ladder_.row_value(static_cast<std::size_t>(best_cell_->first));
      const double bt = ladder_.col_value(static_cast<std::size_t>(best_cell_->second));
      better = t < bt || (t == bt && s > bs);
    }
    if (better) {
      best_value_ = value;
      best_cell_ = {row, col};
    }
  }

  const DistanceLadder& ladder_;
  const G& g_;
  SearchStats& stats_;
  double best_value_ = kInfinity;
  std::optional<std::pair<std::int64_t, std::int64_t>> best_cell_;
};

}  // namespace detail

/// Recursive sorted-matrix search for the feasible range minimizing g.
///
/// `root` must decide every cell of the full range matrix; it is contracted to
/// the full view first and then to each subview the recursion visits. The
/// returned witness comes from `root` on the winning range.
template <ContractibleDecider D, MonotoneRangeScore G>
RangeSearchResult search_smallest_range(const DistanceLadder& ladder,
                                        const D& root, const G& g,
                                        SearchStats* stats = nullptr) {
  SearchStats local;
  SearchStats& st = stats ? *stats : local;
  st.m = ladder.m();
  st.k = ladder.k();

  const RangeMatrixView full = RangeMatrixView::full(ladder);
  detail::RangeSearch<D, G> search(ladder, g, st);
  search.run(full, root.contract(ViewClassifier(ladder, full)), 0);

  const auto cell = search.best_cell();
  if (!cell) {
    throw internal_error("search_smallest_range: no feasible cell found");
  }
  RangeSearchResult result;
  result.value = search.best_value();
  result.best = DistanceRange(ladder.row_value(static_cast<std::size_t>(cell->first)),
                              ladder.col_value(static_cast<std::size_t>(cell->second)));
  Decision final = root.decide(result.best);
  if (!final.feasible || !final.witness) {
    throw internal_error("search_smallest_range: winning range rejected by root");
  }
  result.witness = std::move(*final.witness);
  return result;
}

/// Baseline: binary search in every row with the given decider (no
/// contraction). O(m log k) decisions.
template <ContractibleDecider D, MonotoneRangeScore G>
RangeSearchResult row_wise_search(const DistanceLadder& ladder, const D& d,
                                  const G& g, SearchStats* stats = nullptr) {
  SearchStats local;
  SearchStats& st = stats ? *stats : local;
  st.m = ladder.m();
  st.k = ladder.k();
  const RangeMatrixView full = RangeMatrixView::full(ladder);
  std::optional<std::pair<std::int64_t, std::int64_t>> best;
  double best_value = kInfinity;
  // Rows run from the largest lower limit downwards; the first feasible
  // column never moves right as the lower limit shrinks.
  RangeMatrixView rest = full;
  for (std::int64_t row = 0; row < static_cast<std::int64_t>(ladder.m()); ++row) {
    rest.row_lo = row;
    auto col = middle_row_search(rest, row, d, ladder, &st);
    if (!col) continue;
    rest.col_hi = *col;
    const double s = ladder.row_value(static_cast<std::size_t>(row));
    const double t = ladder.col_value(static_cast<std::size_t>(*col));
    const double value = static_cast<double>(g(s, t));
    if (!best || value < best_value) {
      best_value = value;
      best = {row, *col};
    }
  }
  if (!best) throw internal_error("row_wise_search: no feasible cell found");
  RangeSearchResult result;
  result.value = best_value;
  result.best = DistanceRange(ladder.row_value(static_cast<std::size_t>(best->first)),
                              ladder.col_value(static_cast<std::size_t>(best->second)));
  Decision final = d.decide(result.best);
  if (!final.feasible || !final.witness) {
    throw internal_error("row_wise_search: winning range rejected");
  }
  result.witness = std::move(*final.witness);
  return result;
}

}  // namespace frechetgap
