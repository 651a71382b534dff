#include <gtest/gtest.h>

#include <random>

#include "frechetgap/decisions.hpp"
#include "frechetgap/error.hpp"
#include "frechetgap/ladder.hpp"
#include "frechetgap/weak_maze.hpp"
#include "instances.hpp"
#include "oracle.hpp"

namespace fg = frechetgap;
using fg::WeakMaze;
using fg::testing::curve;

namespace {

/// Moves of a parent walk collapsed onto the rooms that survive in `child`:
/// (room, departure door, next surviving room).
std::vector<WeakMaze::Move> collapse(const WeakMaze& parent, const WeakMaze& child,
                                     const std::vector<WeakMaze::Move>& moves) {
  std::vector<WeakMaze::Move> out;
  auto survivor = [&](std::int32_t room) {
    return child.find(parent.rooms()[static_cast<std::size_t>(room)].pos);
  };
  std::optional<WeakMaze::Move> open;
  for (const auto& m : moves) {
    if (!open) {
      const auto from = survivor(m.from);
      EXPECT_TRUE(from.has_value());
      open = WeakMaze::Move{from.value_or(WeakMaze::kNull), m.door, WeakMaze::kNull};
    }
    if (const auto to = survivor(m.to)) {
      open->to = *to;
      out.push_back(*open);
      open.reset();
    }
  }
  return out;
}

bool same_moves(const std::vector<WeakMaze::Move>& a, const std::vector<WeakMaze::Move>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k].from != b[k].from || a[k].door != b[k].door || a[k].to != b[k].to) return false;
  }
  return true;
}

}  // namespace

TEST(WeakMaze, TwoByTwoStructure) {
  const auto mz = WeakMaze::build_initial(fg::DistanceMatrix(2, 2, {1, 2, 3, 4}));
  ASSERT_EQ(mz.room_count(), 4u);
  int doors = 0;
  int walls = 0;
  for (const auto& room : mz.rooms()) {
    for (const auto& door : room.doors) {
      if (door.is_wall()) {
        ++walls;
      } else {
        ++doors;
      }
    }
  }
  EXPECT_EQ(doors, 8);
  EXPECT_EQ(walls, 8);
  const auto& first = mz.rooms()[static_cast<std::size_t>(mz.start())];
  EXPECT_TRUE(first.doors[fg::south].is_wall());
  EXPECT_TRUE(first.doors[fg::west].is_wall());
  const auto& last = mz.rooms()[static_cast<std::size_t>(mz.goal())];
  EXPECT_TRUE(last.doors[fg::north].is_wall());
  EXPECT_TRUE(last.doors[fg::east].is_wall());
  EXPECT_EQ(first.doors[fg::north].target, *mz.find({1, 0}));
  EXPECT_EQ(first.doors[fg::east].target, *mz.find({0, 1}));
}

TEST(WeakMaze, InitialMatchesWeakDecide) {
  std::mt19937_64 rng(10);
  for (int rep = 0; rep < 300; ++rep) {
    const auto inst = fg::testing::random_instance(rng, 1, 8);
    const auto mz = WeakMaze::build_initial(inst.d);
    const auto values = fg::oracle::all_values(inst.d);
    const double s = values[rep % values.size()];
    const double t = values[(rep * 5 + 3) % values.size()];
    const fg::DistanceRange r(std::min(s, t), std::max(s, t));
    const auto a = mz.decide(r);
    const auto b = fg::weak_decide(inst.d, r);
    ASSERT_EQ(a.feasible, b.feasible);
    if (a.feasible) {
      EXPECT_EQ(*a.witness, *b.witness);
    }
  }
}

TEST(WeakMaze, CollinearRootContraction) {
  const auto c = curve({{0, 0}, {1, 0}});
  const auto d = fg::build_distance_matrix(c, c);
  const auto l = fg::build_ladder(d, fg::Variant::weak);
  const auto root = WeakMaze::build_initial(d).contract_to(l, fg::RangeMatrixView::full(l));
  EXPECT_TRUE(root.decide({0, 1}).feasible);
  // [0, 0] lies below the threshold, so it is not a cell of the root view.
  if constexpr (fg::kContractChecks) {
    EXPECT_THROW(root.decide({0, 0}), fg::contract_violation);
  }
  EXPECT_FALSE(WeakMaze::build_initial(d).decide({0, 0}).feasible);
}

TEST(WeakMaze, SingleOpenRoomPassThrough) {
  // middle value 2 lies strictly between the only row (1) and column (5)
  const fg::DistanceMatrix d(1, 3, {1, 2, 5});
  const auto l = fg::build_ladder(d, fg::Variant::weak);
  ASSERT_EQ(l.m(), 1u);
  ASSERT_EQ(l.k(), 1u);
  const auto root = WeakMaze::build_initial(d).contract_to(l, fg::RangeMatrixView::full(l));
  ASSERT_EQ(root.room_count(), 2u);
  const auto u = *root.find({0, 0});
  const auto w = *root.find({0, 2});
  const auto hit = root.resolve_door(u, fg::east, {1, 5});
  ASSERT_TRUE(hit.has_value());
  EXPECT_EQ(hit->first, w);
  EXPECT_EQ(hit->second, fg::east);
  EXPECT_TRUE(root.decide({1, 5}).feasible);
}

TEST(WeakMaze, IdentityContraction) {
  const fg::DistanceMatrix d(2, 2, {1, 1, 1, 1});
  const auto l = fg::build_ladder(d, fg::Variant::weak);
  const auto mz = WeakMaze::build_initial(d);
  const auto c = mz.contract_to(l, fg::RangeMatrixView::full(l));
  ASSERT_EQ(c.room_count(), mz.room_count());
  EXPECT_TRUE(c.attempts().empty());
  for (std::size_t x = 0; x < mz.room_count(); ++x) {
    EXPECT_EQ(c.rooms()[x].pos, mz.rooms()[x].pos);
    for (int dir = 0; dir < 4; ++dir) {
      EXPECT_EQ(c.rooms()[x].doors[dir].target, mz.rooms()[x].doors[dir].target);
      EXPECT_EQ(c.rooms()[x].doors[dir].is_wall(), mz.rooms()[x].doors[dir].is_wall());
    }
  }
}

TEST(WeakMaze, NestedContractionSoundAndDirectionPreserving) {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 100; ++rep) {
    const auto inst = fg::testing::random_instance(rng, 2, 12);
    const auto l = fg::build_ladder(inst.d, fg::Variant::weak);
    auto view = fg::RangeMatrixView::full(l);
    WeakMaze parent = WeakMaze::build_initial(inst.d);
    const int depth = 1 + static_cast<int>(rng() % 4);
    for (int level = 0; level < depth; ++level) {
      view = level == 0 ? view : fg::testing::random_subview(rng, view);
      const fg::ViewClassifier cls(l, view);
      const WeakMaze child = parent.contract(cls);

      // structure: only non-fixed rooms plus start and goal survive
      for (const auto& room : child.rooms()) {
        const bool endpoint = room.pos == fg::Position{0, 0} ||
                              room.pos == fg::Position{static_cast<int>(inst.d.rows()) - 1,
                                                       static_cast<int>(inst.d.cols()) - 1};
        EXPECT_TRUE(endpoint || cls(room.value) == fg::FixedClass::non_fixed);
      }
      const auto& cs = child.contraction_stats();
      EXPECT_LE(cs.micro_steps, cs.micro_states);

      for (const auto& r : fg::testing::cells(l, view)) {
        const auto got = child.decide_traced(r, true);
        ASSERT_EQ(got.feasible, fg::weak_decide(inst.d, r).feasible) << "rep " << rep;
        const auto before = parent.decide_traced(r, true);
        if (!fg::contains(r, inst.d(0, 0)) ||
            !fg::contains(r, inst.d(inst.d.rows() - 1, inst.d.cols() - 1))) {
          continue;
        }
        EXPECT_TRUE(same_moves(collapse(parent, child, before.moves), got.moves)) << "rep " << rep;
      }
      parent = child;
    }
  }
}
