#pragma once

#include <cmath>
#include <limits>
#include <string>

#include "frechetgap/error.hpp"

namespace frechetgap {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Closed distance interval [s, t] with 0 <= s <= t. A threshold delta is the
/// range [0, delta].
struct DistanceRange {
  double s = 0.0;
  double t = 0.0;

  DistanceRange() = default;
  DistanceRange(double lower, double upper) : s(lower), t(upper) {
    if (!(lower >= 0.0) || !(lower <= upper)) {
      throw input_error("range: need 0 <= s <= t, got [" +
                        std::to_string(lower) + ", " + std::to_string(upper) +
                        "]");
    }
  }

  static DistanceRange threshold(double delta) { return {0.0, delta}; }

  friend bool operator==(const DistanceRange&, const DistanceRange&) = default;
};

inline bool contains(const DistanceRange& r, double v) {
  return r.s <= v && v <= r.t;
}

enum class ScoreKind { gap, ratio };

inline const char* to_string(ScoreKind kind) {
  switch (kind) {
    case ScoreKind::gap:
      return "gap";
    case ScoreKind::ratio:
      return "ratio";
  }
  return "?";
}

/// Monotone range score g: g(a,b) <= g(c,d) whenever [a,b] is inside [c,d].
/// Searches take any callable with this shape; RangeScore covers the two
/// shipped kinds.
struct RangeScore {
  ScoreKind kind = ScoreKind::gap;

  double operator()(double s, double t) const {
    switch (kind) {
      case ScoreKind::gap:
        return t - s;
      case ScoreKind::ratio:
        // t/s is undefined at s = 0; +inf keeps monotonicity and 0/0 is a
        // perfect match.
        if (s == 0.0) return t == 0.0 ? 1.0 : kInfinity;
        return t / s;
    }
    return kInfinity;
  }
};

inline double score(RangeScore g, double s, double t) { return g(s, t); }

}  // namespace frechetgap
