#include <gtest/gtest.h>

#include <cmath>

#include "frechetgap/error.hpp"
#include "frechetgap/range.hpp"

namespace fg = frechetgap;

TEST(Range, ContainsIsInclusive) {
  EXPECT_TRUE(fg::contains(fg::DistanceRange(1, 2), 1.0));
  EXPECT_TRUE(fg::contains(fg::DistanceRange(1, 2), 2.0));
  EXPECT_FALSE(fg::contains(fg::DistanceRange(1, 2), 0.999));
  EXPECT_FALSE(fg::contains(fg::DistanceRange(1, 2), 2.001));
  EXPECT_TRUE(fg::contains(fg::DistanceRange(0, 0), 0.0));
}

TEST(Range, RejectsInvalid) {
  EXPECT_THROW(fg::DistanceRange(2, 1), fg::input_error);
  EXPECT_THROW(fg::DistanceRange(-1, 1), fg::input_error);
  EXPECT_THROW(fg::DistanceRange(0, NAN), fg::input_error);
}

TEST(Range, Threshold) {
  const auto r = fg::DistanceRange::threshold(3.5);
  EXPECT_EQ(r.s, 0.0);
  EXPECT_EQ(r.t, 3.5);
}

TEST(Score, Gap) {
  const fg::RangeScore gap{fg::ScoreKind::gap};
  EXPECT_NEAR(gap(1.0, std::sqrt(2.0)), 0.41421356237309515, 1e-15);
  EXPECT_EQ(gap(3.0, 3.0), 0.0);
}

TEST(Score, Ratio) {
  const fg::RangeScore ratio{fg::ScoreKind::ratio};
  EXPECT_EQ(ratio(5.0, 5.0), 1.0);
  EXPECT_EQ(ratio(0.0, 1.0), fg::kInfinity);
  EXPECT_EQ(ratio(0.0, 0.0), 1.0);
  EXPECT_EQ(ratio(2.0, 3.0), 1.5);
}

TEST(Score, MonotoneUnderContainment) {
  const fg::RangeScore kinds[] = {{fg::ScoreKind::gap}, {fg::ScoreKind::ratio}};
  const double pts[] = {0.0, 0.5, 1.0, 2.0, 7.0};
  for (const auto& g : kinds) {
    for (double a : pts)
      for (double b : pts)
        for (double c : pts)
          for (double d : pts) {
            if (a <= b && c <= a && b <= d) {
              EXPECT_LE(g(a, b), g(c, d)) << a << ' ' << b << ' ' << c << ' ' << d;
            }
          }
  }
}
