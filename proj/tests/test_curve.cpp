#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "frechetgap/curve.hpp"
#include "frechetgap/error.hpp"
#include "frechetgap/io.hpp"
#include "instances.hpp"

namespace fg = frechetgap;
using fg::testing::curve;
using fg::testing::kSqrt2;

TEST(Distance, Basics) {
  const std::vector<double> o{0, 0};
  const std::vector<double> p{3, 4};
  const std::vector<double> q{0, 1};
  const std::vector<double> r{1, 0};
  EXPECT_EQ(fg::distance(o, o), 0.0);
  EXPECT_EQ(fg::distance(o, p), 5.0);
  EXPECT_DOUBLE_EQ(fg::distance(q, r), kSqrt2);
}

TEST(Distance, DimensionMismatchThrows) {
  const std::vector<double> a{0, 0};
  const std::vector<double> b{0, 0, 0};
  EXPECT_THROW(fg::distance(a, b), fg::input_error);
}

TEST(DistanceMatrix, UnitOffset) {
  const auto d = fg::build_distance_matrix(curve({{0, 0}, {1, 0}}), curve({{0, 1}, {1, 1}}));
  ASSERT_EQ(d.rows(), 2u);
  ASSERT_EQ(d.cols(), 2u);
  EXPECT_EQ(d(0, 0), 1.0);
  EXPECT_DOUBLE_EQ(d(0, 1), kSqrt2);
  EXPECT_DOUBLE_EQ(d(1, 0), kSqrt2);
  EXPECT_EQ(d(1, 1), 1.0);
  EXPECT_EQ(d.min_endpoint(), 1.0);
}

TEST(DistanceMatrix, SinglePair) {
  const auto d = fg::build_distance_matrix(curve({{0, 0}}), curve({{3, 4}}));
  EXPECT_EQ(d.size(), 1u);
  EXPECT_EQ(d(0, 0), 5.0);
}

TEST(DistanceMatrix, IdenticalCurvesHaveZeroDiagonal) {
  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 20; ++rep) {
    const auto c = fg::testing::random_curve(rng, 6, rep % 2 == 0);
    const auto d = fg::build_distance_matrix(c, c);
    for (std::size_t i = 0; i < c.size(); ++i) EXPECT_EQ(d(i, i), 0.0);
  }
}

TEST(DistanceMatrix, MatchesRecomputation) {
  std::mt19937_64 rng(11);
  const auto a = fg::testing::random_curve(rng, 5, false);
  const auto b = fg::testing::random_curve(rng, 7, false);
  const auto d = fg::build_distance_matrix(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      EXPECT_GE(d(i, j), 0.0);
      EXPECT_DOUBLE_EQ(d(i, j), std::hypot(a[i][0] - b[j][0], a[i][1] - b[j][1]));
    }
  }
}

TEST(DistanceMatrix, RejectsBadInput) {
  EXPECT_THROW(fg::DistanceMatrix(1, 1, {-1.0}), fg::input_error);
  EXPECT_THROW(fg::DistanceMatrix(1, 1, {NAN}), fg::input_error);
  EXPECT_THROW(fg::DistanceMatrix(1, 2, {1.0}), fg::input_error);
  EXPECT_THROW(fg::DistanceMatrix(0, 0, {}), fg::input_error);
  EXPECT_THROW(fg::build_distance_matrix(curve({{0, 0}}), curve({{0, 0, 0}})), fg::input_error);
}

TEST(Curve, RejectsRaggedAndEmpty) {
  EXPECT_THROW(curve({{0, 0}, {1}}), fg::input_error);
  EXPECT_THROW(curve({}), fg::input_error);
  EXPECT_THROW(fg::Curve(2, {1.0, 2.0, 3.0}), fg::input_error);
}

TEST(Io, CsvBasic) {
  const auto c = fg::parse_curve_csv("0,0\n1,0\n");
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c.dim(), 2u);
  EXPECT_EQ(c[1][0], 1.0);
  EXPECT_EQ(c[1][1], 0.0);
}

TEST(Io, CsvHeaderCommentsAndBlankLines) {
  const auto c = fg::parse_curve_csv("# x,y\n\n 1.5 , -2\r\n3,4e1\n\n");
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0][0], 1.5);
  EXPECT_EQ(c[0][1], -2.0);
  EXPECT_EQ(c[1][1], 40.0);
}

TEST(Io, CsvRaggedReportsLine) {
  try {
    fg::parse_curve_csv("0,0\n1\n");
    FAIL() << "expected input_error";
  } catch (const fg::input_error& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }
}

TEST(Io, CsvNonNumericReportsLine) {
  try {
    fg::parse_curve_csv("# header\n0,0\n1,abc\n");
    FAIL() << "expected input_error";
  } catch (const fg::input_error& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
  EXPECT_THROW(fg::parse_curve_csv("1,inf\n"), fg::input_error);
  EXPECT_THROW(fg::parse_curve_csv("1,,2\n"), fg::input_error);
}

TEST(Io, CsvEmpty) {
  EXPECT_THROW(fg::parse_curve_csv(""), fg::input_error);
  EXPECT_THROW(fg::parse_curve_csv("# only a header\n"), fg::input_error);
}

TEST(Io, Json) {
  const auto c = fg::parse_curve_json("[[0,0,0],[1,1,1]]");
  EXPECT_EQ(c.size(), 2u);
  EXPECT_EQ(c.dim(), 3u);
  EXPECT_EQ(c[1][2], 1.0);
  EXPECT_THROW(fg::parse_curve_json("[[0,0],[1]]"), fg::input_error);
  EXPECT_THROW(fg::parse_curve_json("[]"), fg::input_error);
  EXPECT_THROW(fg::parse_curve_json("[[0,\"x\"]]"), fg::input_error);
  EXPECT_THROW(fg::parse_curve_json("[[0,0]"), fg::input_error);
}

TEST(Io, CsvRoundTripIsExact) {
  std::mt19937_64 rng(3);
  const auto c = fg::testing::random_curve(rng, 10, false);
  EXPECT_EQ(fg::parse_curve_csv(fg::format_curve_csv(c)), c);
}

TEST(Io, MissingFile) {
  EXPECT_THROW(fg::read_curve("/nonexistent/curve.csv", fg::CurveFormat::csv), fg::input_error);
}
