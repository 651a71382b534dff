#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frechetgap/curve.hpp"
#include "frechetgap/error.hpp"
#include "frechetgap/range.hpp"

namespace frechetgap {

/// A frog position: i indexes A, j indexes B. Zero-based.
struct Position {
  std::int32_t i = 0;
  std::int32_t j = 0;
  friend bool operator==(const Position&, const Position&) = default;
};

using Walk = std::vector<Position>;

struct Decision {
  bool feasible = false;
  std::optional<Walk> witness;

  static Decision no() { return {}; }
  static Decision yes(Walk w) { return {true, std::move(w)}; }
};

enum class Variant { strong, shortcut, weak };

inline const char* to_string(Variant v) {
  switch (v) {
    case Variant::strong:
      return "plain";
    case Variant::shortcut:
      return "shortcut";
    case Variant::weak:
      return "weak";
  }
  return "?";
}

/// Directions of the weak-variant maze. North increments i, east increments j;
/// a right turn is (dir + 1) mod 4.
enum Direction : std::uint8_t { east = 0, south = 1, west = 2, north = 3 };

inline constexpr Direction turn_right(int d) {
  return static_cast<Direction>((d + 1) & 3);
}
inline constexpr Direction turn_left(int d) {
  return static_cast<Direction>((d + 3) & 3);
}
inline constexpr Direction reverse(int d) {
  return static_cast<Direction>((d + 2) & 3);
}
inline constexpr int kStepI[4] = {0, -1, 0, 1};
inline constexpr int kStepJ[4] = {1, 0, -1, 0};

/// Reachability of (nA,nB) through valid positions using forward moves
/// (+1,0), (0,+1), (+1,+1). O(nA*nB) dynamic programming; the witness is one
/// monotone path recovered from the reachability table.
inline Decision strong_decide(const DistanceMatrix& d, const DistanceRange& r) {
  const std::size_t rows = d.rows();
  const std::size_t cols = d.cols();
  std::vector<std::uint8_t> reach(rows * cols, 0);
  auto at = [cols](std::size_t i, std::size_t j) { return i * cols + j; };
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (!contains(r, d(i, j))) continue;
      if (i == 0 && j == 0) {
        reach[0] = 1;
        continue;
      }
      const bool from_a = i > 0 && reach[at(i - 1, j)];
      const bool from_b = j > 0 && reach[at(i, j - 1)];
      const bool from_ab = i > 0 && j > 0 && reach[at(i - 1, j - 1)];
      reach[at(i, j)] = from_a || from_b || from_ab;
    }
  }
  if (!reach.back()) return Decision::no();

  Walk walk;
  std::size_t i = rows - 1;
  std::size_t j = cols - 1;
  walk.push_back({static_cast<std::int32_t>(i), static_cast<std::int32_t>(j)});
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0 && reach[at(i - 1, j - 1)]) {
      --i;
      --j;
    } else if (i > 0 && reach[at(i - 1, j)]) {
      --i;
    } else {
      --j;
    }
    walk.push_back({static_cast<std::int32_t>(i), static_cast<std::int32_t>(j)});
  }
  std::reverse(walk.begin(), walk.end());
  return Decision::yes(std::move(walk));
}

/// Greedy one-sided-shortcut decision: the B-frog advances while the current
/// position is valid, the A-frog skips forward while it is not. O(nA + nB).
///
/// The witness is the s-path the frogs trace, including the skipped (invalid)
/// positions. On success at (i, nB) with i < nA the A-frog's final shortcut to
/// the goal is appended.
inline Decision shortcut_decide(const DistanceMatrix& d, const DistanceRange& r) {
  const std::size_t last_i = d.rows() - 1;
  const std::size_t last_j = d.cols() - 1;
  if (!contains(r, d(0, 0)) || !contains(r, d(last_i, last_j))) {
    return Decision::no();
  }
  Walk walk;
  std::size_t i = 0;
  std::size_t j = 0;
  while (true) {
    walk.push_back({static_cast<std::int32_t>(i), static_cast<std::int32_t>(j)});
    if (contains(r, d(i, j))) {
      if (j < last_j) {
        ++j;
      } else {
        if (i != last_i) {
          walk.push_back({static_cast<std::int32_t>(last_i),
                          static_cast<std::int32_t>(last_j)});
        }
        return Decision::yes(std::move(walk));
      }
    } else {
      if (i < last_i) {
        ++i;
      } else {
        return Decision::no();
      }
    }
  }
}

/// Weak reachability (backtracking allowed, no simultaneous jumps) decided by
/// the right-hand wall follower over the position grid. Starts in (1,1) facing
/// east with the hand on the southern wall; answers "no" once the walker is
/// back in its initial (room, direction) state. The witness is the sequence of
/// rooms walked through, which may revisit rooms.
inline Decision weak_decide(const DistanceMatrix& d, const DistanceRange& r) {
  const auto rows = static_cast<std::int32_t>(d.rows());
  const auto cols = static_cast<std::int32_t>(d.cols());
  if (!contains(r, d(0, 0)) || !contains(r, d(rows - 1, cols - 1))) {
    return Decision::no();
  }
  Walk walk{{0, 0}};
  if (rows == 1 && cols == 1) return Decision::yes(std::move(walk));

  std::int32_t i = 0;
  std::int32_t j = 0;
  Direction dir = east;
  // Every (room, direction) state is visited at most once per orbit.
  const std::size_t budget = 4 * d.size() + 4;
  for (std::size_t step = 0; step < budget; ++step) {
    const std::int32_t ni = i + kStepI[dir];
    const std::int32_t nj = j + kStepJ[dir];
    if (ni >= 0 && ni < rows && nj >= 0 && nj < cols &&
        contains(r, d(ni, nj))) {
      i = ni;
      j = nj;
      walk.push_back({i, j});
      if (i == rows - 1 && j == cols - 1) return Decision::yes(std::move(walk));
      dir = turn_right(dir);
    } else {
      dir = turn_left(dir);
    }
    if (i == 0 && j == 0 && dir == east) return Decision::no();
  }
  throw internal_error("weak_decide: wall follower exceeded its step budget");
}

inline Decision decide(Variant v, const DistanceMatrix& d,
                       const DistanceRange& r) {
  switch (v) {
    case Variant::strong:
      return strong_decide(d, r);
    case Variant::shortcut:
      return shortcut_decide(d, r);
    case Variant::weak:
      return weak_decide(d, r);
  }
  throw internal_error("decide: unknown variant");
}

}  // namespace frechetgap
