#include <gtest/gtest.h>

#include <random>

#include "frechetgap/range.hpp"
#include "instances.hpp"
#include "oracle.hpp"

namespace fg = frechetgap;
using fg::testing::curve;
using fg::testing::kSqrt2;

const fg::RangeScore kGap{fg::ScoreKind::gap};
const fg::RangeScore kRatio{fg::ScoreKind::ratio};

TEST(Oracle, IdenticalCurvesAtZero) {
  const auto c = curve({{0, 0}, {1, 0}, {1, 2}});
  const auto d = fg::build_distance_matrix(c, c);
  EXPECT_TRUE(fg::oracle::reach_strong(d, 0, 0));
  EXPECT_TRUE(fg::oracle::reach_shortcut(d, 0, 0));
  EXPECT_FALSE(fg::oracle::reach_weak(d, 0, 0));
  const auto one = fg::build_distance_matrix(curve({{1, 1}}), curve({{1, 1}}));
  EXPECT_TRUE(fg::oracle::reach_weak(one, 0, 0));
  const auto rep = curve({{1, 1}, {1, 1}, {1, 1}});
  EXPECT_TRUE(fg::oracle::reach_weak(fg::build_distance_matrix(rep, rep), 0, 0));
}

TEST(Oracle, SmallExamples) {
  const auto unit = fg::build_distance_matrix(curve({{0, 0}, {1, 0}}), curve({{0, 1}, {1, 1}}));
  EXPECT_TRUE(fg::oracle::reach_strong(unit, 1, 1));
  const auto col = curve({{0, 0}, {1, 0}});
  EXPECT_FALSE(fg::oracle::reach_weak(fg::build_distance_matrix(col, col), 0, 0));
}

TEST(Oracle, OutlierSmallestRange) {
  const auto d = fg::testing::outlier_matrix();
  const auto best = fg::oracle::brute_force_smallest_range(d, fg::Variant::shortcut, kGap);
  ASSERT_TRUE(best.found);
  EXPECT_NEAR(best.value, kSqrt2 - 1, 1e-12);
  EXPECT_EQ(best.s, 1.0);
  EXPECT_EQ(best.t, kSqrt2);
  const auto all = fg::oracle::all_pairs_smallest_range(d, fg::Variant::shortcut, kGap);
  EXPECT_EQ(all.value, best.value);

  const auto plain = fg::oracle::brute_force_smallest_range(d, fg::Variant::strong, kGap);
  EXPECT_EQ(plain.value, 8.0);
  EXPECT_EQ(fg::oracle::threshold(d, fg::Variant::strong), 9.0);
  EXPECT_EQ(fg::oracle::threshold(d, fg::Variant::shortcut), kSqrt2);
}

TEST(Oracle, IdenticalCurvesGapZero) {
  std::mt19937_64 rng(9);
  for (int rep = 0; rep < 10; ++rep) {
    const auto c = fg::testing::random_curve(rng, 5, rep % 2 == 0);
    const auto d = fg::build_distance_matrix(c, c);
    for (auto v : {fg::Variant::strong, fg::Variant::shortcut}) {
      const auto best = fg::oracle::brute_force_smallest_range(d, v, kGap);
      EXPECT_EQ(best.value, 0.0);
      EXPECT_EQ(best.s, 0.0);
      EXPECT_EQ(best.t, 0.0);
    }
  }
}

TEST(Oracle, SinglePointRatio) {
  const auto d = fg::build_distance_matrix(curve({{0, 0}}), curve({{3, 4}}));
  for (auto v : {fg::Variant::strong, fg::Variant::shortcut, fg::Variant::weak}) {
    const auto best = fg::oracle::brute_force_smallest_range(d, v, kRatio);
    EXPECT_EQ(best.value, 1.0);
    EXPECT_EQ(best.s, 5.0);
    EXPECT_EQ(best.t, 5.0);
  }
}

TEST(Oracle, LimitBoundsAndAllPairsAgreement) {
  std::mt19937_64 rng(77);
  for (int rep = 0; rep < 60; ++rep) {
    const auto inst = fg::testing::random_instance(rng, 1, 5);
    for (auto v : {fg::Variant::strong, fg::Variant::shortcut, fg::Variant::weak}) {
      for (const auto& g : {kGap, kRatio}) {
        const auto best = fg::oracle::brute_force_smallest_range(inst.d, v, g);
        const auto all = fg::oracle::all_pairs_smallest_range(inst.d, v, g);
        ASSERT_TRUE(best.found);
        EXPECT_EQ(best.value, all.value);
        EXPECT_LE(best.s, inst.d.min_endpoint());
        EXPECT_GE(best.t, fg::oracle::threshold(inst.d, v));
      }
    }
  }
}

TEST(Oracle, VariantHierarchy) {
  // Every strong path is an s-path. Weak paths have no diagonal moves, so no
  // such relation holds for them.
  std::mt19937_64 rng(21);
  for (int rep = 0; rep < 200; ++rep) {
    const auto inst = fg::testing::random_instance(rng, 1, 6);
    const auto values = fg::oracle::all_values(inst.d);
    const double s = values[rep % values.size()];
    for (double t : values) {
      if (t < s) continue;
      if (fg::oracle::reach_strong(inst.d, s, t)) {
        EXPECT_TRUE(fg::oracle::reach_shortcut(inst.d, s, t));
      }
    }
  }
}
