#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "frechetgap/curve.hpp"
#include "frechetgap/decisions.hpp"
#include "frechetgap/error.hpp"
#include "frechetgap/range.hpp"
#include "frechetgap/range_matrix.hpp"

namespace frechetgap {

/// Decision maze for the weak variant.
///
/// Rooms are positions; each room has four doors (indexed by Direction). In
/// the initial maze a door leads to the grid neighbour or is a wall. The
/// right-hand walker standing in room v facing d tries door d: if it leads to a
/// valid room it moves there and turns right, otherwise it turns left.
///
/// Contraction removes fixed rooms. Doors into fixed-invalid rooms become
/// walls. A connected set of fixed-valid rooms is open floor: entering it, the
/// walker hugs its boundary and tries, in a fixed cyclic order, every door
/// from the set to a surviving room until one leads to a valid room. That
/// order is stored once per boundary orbit as a cyclic list of attempts, and a
/// door into the set becomes a pointer to the attempt the walker tries first.
/// Each attempt also records the heading of the final move, since the walker's
/// next direction is a right turn from it.
class WeakMaze {
 public:
  static constexpr std::int32_t kNull = -1;

  struct Attempt {
    std::int32_t target = kNull;
    Direction heading = east;
  };

  /// Wall (target and cycle both null), direct door to `target` arriving with
  /// `heading`, or entry into boundary cycle `cycle` at `offset`.
  struct Door {
    std::int32_t target = kNull;
    std::int32_t cycle = kNull;
    std::int32_t offset = 0;
    Direction heading = east;

    bool is_wall() const { return target == kNull && cycle == kNull; }
    bool is_direct() const { return target != kNull; }
    bool is_boundary() const { return cycle != kNull; }
  };

  struct Room {
    Position pos;
    double value = 0.0;
    std::array<Door, 4> doors;
  };

  struct Cycle {
    std::int32_t begin = 0;
    std::int32_t length = 0;
  };

  struct Move {
    std::int32_t from = kNull;
    Direction door = east;
    std::int32_t to = kNull;
  };

  struct Trace {
    bool feasible = false;
    Walk rooms;
    std::vector<Move> moves;
  };

  /// Counters from the last contraction that produced this maze.
  struct ContractionStats {
    std::size_t micro_states = 0;
    std::size_t micro_steps = 0;
  };

  static WeakMaze build_initial(const DistanceMatrix& d) {
    const auto rows = static_cast<std::int32_t>(d.rows());
    const auto cols = static_cast<std::int32_t>(d.cols());
    WeakMaze mz;
    mz.rooms_.reserve(d.size());
    for (std::int32_t i = 0; i < rows; ++i) {
      for (std::int32_t j = 0; j < cols; ++j) {
        Room room{{i, j}, d(i, j), {}};
        for (int dir = 0; dir < 4; ++dir) {
          const std::int32_t ni = i + kStepI[dir];
          const std::int32_t nj = j + kStepJ[dir];
          if (ni < 0 || ni >= rows || nj < 0 || nj >= cols) continue;
          room.doors[dir].target = ni * cols + nj;
          room.doors[dir].heading = static_cast<Direction>(dir);
        }
        mz.rooms_.push_back(room);
      }
    }
    mz.start_ = 0;
    mz.goal_ = static_cast<std::int32_t>(mz.rooms_.size()) - 1;
    return mz;
  }

  /// Child maze for the subview described by `cls`. Linear in size().
  WeakMaze contract(const ViewClassifier& cls) const;

  WeakMaze contract_to(const DistanceLadder& ladder,
                       const RangeMatrixView& view) const {
    return contract(ViewClassifier(ladder, view));
  }

  /// First room reached through door `dir` of `room` under range r, with the
  /// heading of the final move; none if every attempt is invalid.
  std::optional<std::pair<std::int32_t, Direction>> resolve_door(
      std::int32_t room, Direction dir, const DistanceRange& r,
      std::size_t* attempts_made = nullptr) const {
    const Door& door = rooms_[static_cast<std::size_t>(room)].doors[dir];
    if (door.is_direct()) {
      if (attempts_made) ++*attempts_made;
      if (valid(door.target, r)) return std::pair{door.target, door.heading};
      return std::nullopt;
    }
    if (door.is_boundary()) {
      const Cycle& c = cycles_[static_cast<std::size_t>(door.cycle)];
      for (std::int32_t step = 0; step < c.length; ++step) {
        const Attempt& a =
            attempts_[static_cast<std::size_t>(c.begin + (door.offset + step) % c.length)];
        if (attempts_made) ++*attempts_made;
        if (valid(a.target, r)) return std::pair{a.target, a.heading};
      }
    }
    return std::nullopt;
  }

  /// Right-hand walk from the start room facing east. "no" once the walker is
  /// back in (start, east).
  Trace decide_traced(const DistanceRange& r, bool record_moves) const {
    if constexpr (kContractChecks) {
      if (view_ && !view_->has_cell(r)) {
        throw contract_violation("weak maze: range is not a cell of the view");
      }
    }
    Trace trace;
    if (!valid(start_, r) || !valid(goal_, r)) return trace;
    trace.rooms.push_back(rooms_[static_cast<std::size_t>(start_)].pos);
    if (start_ == goal_) {
      trace.feasible = true;
      return trace;
    }
    // Each walker state (room, direction) and each stored attempt is used at
    // most once before the walk closes.
    const std::size_t budget = 4 * rooms_.size() + attempts_.size() + 8;
    std::size_t work = 0;
    std::int32_t v = start_;
    Direction dir = east;
    while (true) {
      ++work;
      const auto hit = resolve_door(v, dir, r, &work);
      if (hit) {
        if (record_moves) trace.moves.push_back({v, dir, hit->first});
        v = hit->first;
        dir = turn_right(hit->second);
        trace.rooms.push_back(rooms_[static_cast<std::size_t>(v)].pos);
        if (v == goal_) {
          trace.feasible = true;
          return trace;
        }
      } else {
        dir = turn_left(dir);
      }
      if (v == start_ && dir == east) return trace;
      if (work > budget) {
        throw internal_error("weak maze: wall follower exceeded its step budget");
      }
    }
  }

  Decision decide(const DistanceRange& r) const {
    Trace t = decide_traced(r, false);
    if (!t.feasible) return Decision::no();
    return Decision::yes(std::move(t.rooms));
  }

  std::size_t size() const { return rooms_.size() + attempts_.size(); }
  std::size_t room_count() const { return rooms_.size(); }
  const std::vector<Room>& rooms() const { return rooms_; }
  const std::vector<Attempt>& attempts() const { return attempts_; }
  const std::vector<Cycle>& cycles() const { return cycles_; }
  std::int32_t start() const { return start_; }
  std::int32_t goal() const { return goal_; }
  const std::optional<ViewClassifier>& view() const { return view_; }
  const ContractionStats& contraction_stats() const { return stats_; }

  std::optional<std::int32_t> find(Position p) const {
    for (std::size_t idx = 0; idx < rooms_.size(); ++idx) {
      if (rooms_[idx].pos == p) return static_cast<std::int32_t>(idx);
    }
    return std::nullopt;
  }

 private:
  bool valid(std::int32_t room, const DistanceRange& r) const {
    return contains(r, rooms_[static_cast<std::size_t>(room)].value);
  }

  /// Builds a child maze by walking the boundary orbits of the merged
  /// fixed-valid regions over "micro-states": (fixed-valid room, direction)
  /// pairs and positions in the parent's attempt cycles. Passing through a
  /// fixed-valid room is free, fixed-invalid rooms block, and every attempt
  /// on a surviving room is recorded and treated as blocked so the walk keeps
  /// hugging the boundary. Each micro-state lies on exactly one orbit and is
  /// stepped through once.
  class Contraction;

  std::vector<Room> rooms_;
  std::vector<Attempt> attempts_;
  std::vector<Cycle> cycles_;
  std::int32_t start_ = 0;
  std::int32_t goal_ = 0;
  std::optional<ViewClassifier> view_;
  ContractionStats stats_;
};

class WeakMaze::Contraction {
 public:
  Contraction(const WeakMaze& parent, const ViewClassifier& cls)
      : p_(parent), cls_(cls) {}

  WeakMaze run() {
    classify_rooms();
    index_attempt_cycles();
    walk_orbits();
    return assemble();
  }

 private:
  enum Kind : std::uint8_t { live = 0, open = 1, closed = 2 };

  void classify_rooms() {
    const std::size_t n = p_.rooms_.size();
    kind_.assign(n, live);
    open_index_.assign(n, kNull);
    remap_.assign(n, kNull);
    std::int32_t opens = 0;
    std::int32_t lives = 0;
    for (std::size_t idx = 0; idx < n; ++idx) {
      const auto self = static_cast<std::int32_t>(idx);
      const FixedClass c = cls_(p_.rooms_[idx].value);
      if (self == p_.start_ || self == p_.goal_ || c == FixedClass::non_fixed) {
        kind_[idx] = live;
        remap_[idx] = lives++;
      } else if (c == FixedClass::fixed_valid) {
        kind_[idx] = open;
        open_index_[idx] = opens++;
      } else {
        kind_[idx] = closed;
      }
    }
    room_states_ = static_cast<std::size_t>(opens) * 4;
  }

  void index_attempt_cycles() {
    cycle_of_attempt_.assign(p_.attempts_.size(), kNull);
    for (std::size_t c = 0; c < p_.cycles_.size(); ++c) {
      const Cycle& cy = p_.cycles_[c];
      for (std::int32_t a = cy.begin; a < cy.begin + cy.length; ++a) {
        cycle_of_attempt_[static_cast<std::size_t>(a)] = static_cast<std::int32_t>(c);
      }
    }
  }

  std::size_t room_state(std::int32_t room, int dir) const {
    return static_cast<std::size_t>(open_index_[static_cast<std::size_t>(room)]) * 4 +
           static_cast<std::size_t>(dir);
  }
  std::size_t attempt_state(std::int32_t attempt) const {
    return room_states_ + static_cast<std::size_t>(attempt);
  }

  struct Step {
    std::size_t next = 0;
    std::optional<Attempt> record;
  };

  /// One attempt on `target` from the state `here` (room state or cycle
  /// position), continuing at `on_block` if the target blocks.
  Step attempt(std::int32_t target, Direction heading, std::size_t on_block) const {
    switch (kind_[static_cast<std::size_t>(target)]) {
      case open:
        return {room_state(target, turn_right(heading)), std::nullopt};
      case closed:
        return {on_block, std::nullopt};
      default:
        return {on_block, Attempt{target, heading}};
    }
  }

  Step step(std::size_t state) const {
    if (state < room_states_) {
      const std::size_t open_idx = state / 4;
      const int dir = static_cast<int>(state % 4);
      const std::int32_t room = open_rooms_[open_idx];
      const Door& door = p_.rooms_[static_cast<std::size_t>(room)].doors[dir];
      const std::size_t on_block = room_state(room, turn_left(dir));
      if (door.is_direct()) return attempt(door.target, door.heading, on_block);
      if (door.is_boundary()) {
        const Cycle& c = p_.cycles_[static_cast<std::size_t>(door.cycle)];
        return {attempt_state(c.begin + door.offset), std::nullopt};
      }
      return {on_block, std::nullopt};
    }
    const auto a = static_cast<std::int32_t>(state - room_states_);
    const Cycle& c =
        p_.cycles_[static_cast<std::size_t>(cycle_of_attempt_[static_cast<std::size_t>(a)])];
    const std::int32_t following = c.begin + (a - c.begin + 1) % c.length;
    const Attempt& at = p_.attempts_[static_cast<std::size_t>(a)];
    return attempt(at.target, at.heading, attempt_state(following));
  }

  void walk_orbits() {
    open_rooms_.assign(room_states_ / 4, kNull);
    for (std::size_t idx = 0; idx < p_.rooms_.size(); ++idx) {
      if (open_index_[idx] != kNull) {
        open_rooms_[static_cast<std::size_t>(open_index_[idx])] =
            static_cast<std::int32_t>(idx);
      }
    }
    const std::size_t total = room_states_ + p_.attempts_.size();
    orbit_of_.assign(total, kNull);
    records_before_.assign(total, 0);
    child_.stats_.micro_states = total;

    std::int32_t orbit = 0;
    for (std::size_t first = 0; first < total; ++first) {
      if (orbit_of_[first] != kNull) continue;
      const auto begin = static_cast<std::int32_t>(child_.attempts_.size());
      std::int32_t records = 0;
      std::size_t cur = first;
      do {
        if (orbit_of_[cur] != kNull) {
          throw internal_error("weak maze contraction: boundary walk is not a cycle");
        }
        orbit_of_[cur] = orbit;
        records_before_[cur] = records;
        const Step s = step(cur);
        ++child_.stats_.micro_steps;
        if (s.record) {
          child_.attempts_.push_back(*s.record);
          ++records;
        }
        cur = s.next;
      } while (cur != first);
      orbit_cycle_.push_back(records == 0 ? kNull
                                          : static_cast<std::int32_t>(child_.cycles_.size()));
      if (records > 0) child_.cycles_.push_back({begin, records});
      ++orbit;
    }
  }

  Door entry(std::size_t state) const {
    const std::int32_t cycle = orbit_cycle_[static_cast<std::size_t>(orbit_of_[state])];
    if (cycle == kNull) {
      throw internal_error("weak maze contraction: door enters an orbit with no exits");
    }
    Door d;
    d.cycle = cycle;
    d.offset = records_before_[state] % child_.cycles_[static_cast<std::size_t>(cycle)].length;
    return d;
  }

  WeakMaze assemble() {
    for (auto& a : child_.attempts_) a.target = remap_[static_cast<std::size_t>(a.target)];
    for (std::size_t idx = 0; idx < p_.rooms_.size(); ++idx) {
      if (kind_[idx] != live) continue;
      const Room& src = p_.rooms_[idx];
      Room room{src.pos, src.value, {}};
      for (int dir = 0; dir < 4; ++dir) {
        const Door& door = src.doors[dir];
        if (door.is_direct()) {
          const auto target = static_cast<std::size_t>(door.target);
          if (kind_[target] == live) {
            room.doors[dir].target = remap_[target];
            room.doors[dir].heading = door.heading;
          } else if (kind_[target] == open) {
            room.doors[dir] = entry(room_state(door.target, turn_right(door.heading)));
          }
        } else if (door.is_boundary()) {
          const Cycle& c = p_.cycles_[static_cast<std::size_t>(door.cycle)];
          room.doors[dir] = entry(attempt_state(c.begin + door.offset));
        }
      }
      child_.rooms_.push_back(room);
    }
    child_.start_ = remap_[static_cast<std::size_t>(p_.start_)];
    child_.goal_ = remap_[static_cast<std::size_t>(p_.goal_)];
    child_.view_ = cls_;
    return std::move(child_);
  }

  const WeakMaze& p_;
  const ViewClassifier& cls_;
  WeakMaze child_;
  std::vector<Kind> kind_;
  std::vector<std::int32_t> open_index_;
  std::vector<std::int32_t> open_rooms_;
  std::vector<std::int32_t> remap_;
  std::vector<std::int32_t> cycle_of_attempt_;
  std::vector<std::int32_t> orbit_of_;
  std::vector<std::int32_t> records_before_;
  std::vector<std::int32_t> orbit_cycle_;
  std::size_t room_states_ = 0;
};

inline WeakMaze WeakMaze::contract(const ViewClassifier& cls) const {
  return Contraction(*this, cls).run();
}

}  // namespace frechetgap
