#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "frechetgap/curve.hpp"
#include "frechetgap/decisions.hpp"
#include "frechetgap/error.hpp"
#include "frechetgap/range.hpp"
#include "frechetgap/range_matrix.hpp"

namespace frechetgap {

/// Decision graph for the one-sided-shortcuts variant.
///
/// Each vertex is a position with two out-pointers: jump_b (the B-frog
/// advances; taken from valid vertices) and jump_a (the A-frog skips; taken
/// from invalid ones). Vertices are kept in reverse topological order, i.e.
/// by descending i+j, so the goal comes first and every edge points to a
/// smaller index. The goal's jump_b is a self-loop.
///
/// A contracted graph keeps only the vertices whose distance is non-fixed for
/// its view, plus start and goal. The greedy walk through it visits exactly the
/// surviving vertices of the walk through the full grid, for every cell of
/// that view.
class ShortcutGraph {
 public:
  static constexpr std::int32_t kNull = -1;

  struct Vertex {
    Position pos;
    double value = 0.0;
    std::int32_t jump_a = kNull;
    std::int32_t jump_b = kNull;
  };

  /// The full nA x nB grid graph with E_A and E_B edges only; jump_b of the
  /// last column goes straight to the goal, jump_a of the last row is null.
  static ShortcutGraph build_initial(const DistanceMatrix& d) {
    const auto rows = static_cast<std::int32_t>(d.rows());
    const auto cols = static_cast<std::int32_t>(d.cols());
    std::vector<std::int32_t> id(d.size());
    ShortcutGraph g;
    g.vertices_.reserve(d.size());
    for (std::int32_t sum = rows + cols - 2; sum >= 0; --sum) {
      const std::int32_t i_lo = std::max(0, sum - (cols - 1));
      const std::int32_t i_hi = std::min(rows - 1, sum);
      for (std::int32_t i = i_hi; i >= i_lo; --i) {
        const std::int32_t j = sum - i;
        id[static_cast<std::size_t>(i) * cols + j] =
            static_cast<std::int32_t>(g.vertices_.size());
        g.vertices_.push_back({{i, j}, d(i, j), kNull, kNull});
      }
    }
    const std::int32_t goal = 0;
    for (auto& v : g.vertices_) {
      const auto [i, j] = v.pos;
      v.jump_b = j + 1 < cols ? id[static_cast<std::size_t>(i) * cols + j + 1] : goal;
      v.jump_a = i + 1 < rows ? id[static_cast<std::size_t>(i + 1) * cols + j] : kNull;
    }
    g.goal_ = goal;
    g.start_ = static_cast<std::int32_t>(g.vertices_.size()) - 1;
    return g;
  }

  /// Child graph for the subview described by `cls`. Linear in size().
  ///
  /// Vertices are processed from the goal backwards; next[v] of a fixed vertex
  /// is the first non-fixed vertex (or the goal, or null) the greedy walk
  /// reaches from v. Pointers of surviving vertices that land on fixed ones are
  /// redirected through next, then fixed vertices other than start and goal
  /// are dropped.
  ShortcutGraph contract(const ViewClassifier& cls) const {
    const std::size_t n = vertices_.size();
    std::vector<std::uint8_t> fixed(n, 0);
    std::vector<std::int32_t> next(n, kNull);
    std::vector<Vertex> work = vertices_;

    auto through = [&](std::int32_t target) {
      if (target == kNull) return kNull;
      return fixed[static_cast<std::size_t>(target)] ? next[static_cast<std::size_t>(target)]
                                                     : target;
    };

    for (std::size_t idx = 0; idx < n; ++idx) {
      Vertex& v = work[idx];
      const auto self = static_cast<std::int32_t>(idx);
      const FixedClass c = cls(v.value);
      fixed[idx] = c != FixedClass::non_fixed;
      if (self == goal_) {
        next[idx] = goal_;
      } else if (fixed[idx]) {
        next[idx] = through(c == FixedClass::fixed_valid ? v.jump_b : v.jump_a);
      }
      if (!fixed[idx] || self == start_) {
        v.jump_b = through(v.jump_b);
        v.jump_a = through(v.jump_a);
      }
    }

    std::vector<std::int32_t> remap(n, kNull);
    ShortcutGraph child;
    child.view_ = cls;
    for (std::size_t idx = 0; idx < n; ++idx) {
      const auto self = static_cast<std::int32_t>(idx);
      if (fixed[idx] && self != start_ && self != goal_) continue;
      remap[idx] = static_cast<std::int32_t>(child.vertices_.size());
      child.vertices_.push_back(work[idx]);
    }
    for (auto& v : child.vertices_) {
      if (v.jump_a != kNull) v.jump_a = remap[static_cast<std::size_t>(v.jump_a)];
      if (v.jump_b != kNull) v.jump_b = remap[static_cast<std::size_t>(v.jump_b)];
    }
    child.start_ = remap[static_cast<std::size_t>(start_)];
    child.goal_ = remap[static_cast<std::size_t>(goal_)];
    return child;
  }

  /// Greedy decision. The witness lists the vertices walked through; on the
  /// initial graph this is the s-path of the raw greedy decision.
  Decision decide(const DistanceRange& r) const {
    if constexpr (kContractChecks) {
      if (view_ && !view_->has_cell(r)) {
        throw contract_violation("shortcut graph: range is not a cell of the view");
      }
    }
    const Vertex& s = vertices_[static_cast<std::size_t>(start_)];
    const Vertex& t = vertices_[static_cast<std::size_t>(goal_)];
    if (!contains(r, s.value) || !contains(r, t.value)) return Decision::no();
    Walk walk;
    std::int32_t v = start_;
    while (true) {
      const Vertex& cur = vertices_[static_cast<std::size_t>(v)];
      walk.push_back(cur.pos);
      if (v == goal_) return Decision::yes(std::move(walk));
      v = contains(r, cur.value) ? cur.jump_b : cur.jump_a;
      if (v == kNull) return Decision::no();
    }
  }

  ShortcutGraph contract_to(const DistanceLadder& ladder,
                            const RangeMatrixView& view) const {
    return contract(ViewClassifier(ladder, view));
  }

  std::size_t size() const { return vertices_.size(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  std::int32_t start() const { return start_; }
  std::int32_t goal() const { return goal_; }
  const std::optional<ViewClassifier>& view() const { return view_; }

  /// Index of the vertex at `p`, if it survives in this graph. Linear scan.
  std::optional<std::int32_t> find(Position p) const {
    for (std::size_t idx = 0; idx < vertices_.size(); ++idx) {
      if (vertices_[idx].pos == p) return static_cast<std::int32_t>(idx);
    }
    return std::nullopt;
  }

 private:
  std::vector<Vertex> vertices_;
  std::int32_t start_ = 0;
  std::int32_t goal_ = 0;
  std::optional<ViewClassifier> view_;
};

}  // namespace frechetgap
