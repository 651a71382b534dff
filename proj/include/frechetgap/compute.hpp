#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "frechetgap/curve.hpp"
#include "frechetgap/decisions.hpp"
#include "frechetgap/error.hpp"
#include "frechetgap/generate.hpp"
#include "frechetgap/ladder.hpp"
#include "frechetgap/range.hpp"
#include "frechetgap/salg.hpp"
#include "frechetgap/shortcut_graph.hpp"
#include "frechetgap/sweep.hpp"
#include "frechetgap/weak_maze.hpp"

namespace frechetgap {

enum class Measure { frechet, gap, ratio };
enum class Algorithm { automatic, naive, fast };

inline const char* to_string(Measure m) {
  switch (m) {
    case Measure::frechet:
      return "frechet";
    case Measure::gap:
      return "gap";
    case Measure::ratio:
      return "ratio";
  }
  return "?";
}

inline const char* to_string(Algorithm a) {
  switch (a) {
    case Algorithm::automatic:
      return "auto";
    case Algorithm::naive:
      return "naive";
    case Algorithm::fast:
      return "fast";
  }
  return "?";
}

struct ComputeRequest {
  Measure measure = Measure::gap;
  Variant variant = Variant::shortcut;
  Algorithm algorithm = Algorithm::automatic;
  bool emit_walk = false;
};

struct ComputeStats {
  std::size_t n_a = 0;
  std::size_t n_b = 0;
  std::size_t ladder_m = 0;
  std::size_t ladder_k = 0;
  std::size_t decisions = 0;
  std::int64_t elapsed_micros = 0;
};

struct ComputeResult {
  Measure measure = Measure::gap;
  Variant variant = Variant::shortcut;
  Algorithm algorithm = Algorithm::fast;  // as resolved
  double value = 0.0;
  std::optional<DistanceRange> range;
  std::optional<Walk> walk;
  ComputeStats stats;
};

class unsupported_algorithm : public input_error {
 public:
  using input_error::input_error;
};

/// Concrete algorithm for a request. Plain gap/ratio has only the sweep, so
/// asking for the fast path there is an error.
inline Algorithm resolve_algorithm(const ComputeRequest& req) {
  if (req.measure != Measure::frechet && req.variant == Variant::strong) {
    if (req.algorithm == Algorithm::fast) {
      throw unsupported_algorithm(
          "no fast algorithm for the plain variant's gap/ratio; use naive or auto");
    }
    return Algorithm::naive;
  }
  return req.algorithm == Algorithm::automatic ? Algorithm::fast : req.algorithm;
}

namespace detail {

/// Frechet-type threshold by linear scan over ascending distances.
inline double threshold_by_scan(const DistanceMatrix& d, Variant variant,
                                const std::vector<double>& values,
                                std::size_t& decisions) {
  for (double v : values) {
    ++decisions;
    if (decide(variant, d, DistanceRange::threshold(v)).feasible) return v;
  }
  throw internal_error("threshold scan: largest distance is infeasible");
}

}  // namespace detail

/// Runs one measure on a precomputed distance matrix.
inline ComputeResult compute(const ComputeRequest& req, const DistanceMatrix& d) {
  const auto started = std::chrono::steady_clock::now();
  ComputeResult out;
  out.measure = req.measure;
  out.variant = req.variant;
  out.algorithm = resolve_algorithm(req);
  out.stats.n_a = d.rows();
  out.stats.n_b = d.cols();

  std::size_t decisions = 0;
  const DistanceLadder ladder = build_ladder(d, req.variant, &decisions);
  out.stats.ladder_m = ladder.m();
  out.stats.ladder_k = ladder.k();

  if (req.measure == Measure::frechet) {
    out.value = out.algorithm == Algorithm::naive
                    ? detail::threshold_by_scan(d, req.variant, ladder.values, decisions)
                    : ladder.threshold;
    if (req.emit_walk) {
      out.walk = decide(req.variant, d, DistanceRange::threshold(out.value)).witness;
    }
  } else {
    const RangeScore g{req.measure == Measure::gap ? ScoreKind::gap : ScoreKind::ratio};
    SearchStats st;
    RangeSearchResult r;
    if (req.variant == Variant::strong) {
      r = plain_range_search(d, ladder, g, &st);
    } else if (out.algorithm == Algorithm::naive) {
      auto shared = std::make_shared<const DistanceMatrix>(d);
      r = row_wise_search(ladder, MatrixDecider(shared, req.variant), g, &st);
    } else if (req.variant == Variant::shortcut) {
      r = search_smallest_range(ladder, ShortcutGraph::build_initial(d), g, &st);
    } else {
      r = search_smallest_range(ladder, WeakMaze::build_initial(d), g, &st);
    }
    decisions += st.decisions;
    out.value = r.value;
    out.range = r.best;
    if (req.emit_walk) out.walk = std::move(r.witness);
  }
  out.stats.decisions = decisions;
  out.stats.elapsed_micros = std::chrono::duration_cast<std::chrono::microseconds>(
                                 std::chrono::steady_clock::now() - started)
                                 .count();
  return out;
}

inline ComputeResult compute(const ComputeRequest& req, const Curve& a, const Curve& b) {
  resolve_algorithm(req);  // reject before doing O(n^2) work
  return compute(req, build_distance_matrix(a, b));
}

/// JSON numbers cannot hold infinity; +inf is written as the string "inf".
inline nlohmann::ordered_json json_number(double v) {
  if (std::isinf(v)) return "inf";
  return v;
}

inline nlohmann::ordered_json to_json(const ComputeResult& r, bool timing = false) {
  nlohmann::ordered_json j;
  j["measure"] = to_string(r.measure);
  j["variant"] = to_string(r.variant);
  j["algorithm"] = to_string(r.algorithm);
  j["value"] = json_number(r.value);
  if (r.range) j["range"] = {{"s", r.range->s}, {"t", r.range->t}};
  if (r.walk) {
    auto walk = nlohmann::ordered_json::array();
    for (const Position& p : *r.walk) walk.push_back({p.i + 1, p.j + 1});
    j["walk"] = std::move(walk);
  }
  nlohmann::ordered_json stats;
  stats["nA"] = r.stats.n_a;
  stats["nB"] = r.stats.n_b;
  stats["ladderM"] = r.stats.ladder_m;
  stats["ladderK"] = r.stats.ladder_k;
  stats["decisions"] = r.stats.decisions;
  if (timing) stats["elapsedMicros"] = r.stats.elapsed_micros;
  j["stats"] = std::move(stats);
  return j;
}

struct BenchParams {
  std::vector<std::size_t> sizes;
  std::size_t trials = 3;
  Variant variant = Variant::shortcut;
  Measure measure = Measure::gap;
  std::uint64_t seed = 1;
  /// Naive runs are skipped for sizes above this.
  std::size_t naive_cutoff = 128;
};

struct BenchRow {
  std::size_t n = 0;
  std::optional<double> fast_ms;
  std::optional<double> naive_ms;
  std::optional<double> fast_ratio;   // vs. previous row
  std::optional<double> naive_ratio;  // vs. previous row
  std::size_t compared = 0;           // instances where both algorithms ran
  bool values_agree = true;
};

/// Instance used for trial `trial` at size `n`.
inline std::pair<Curve, Curve> bench_instance(std::size_t n, std::size_t trial,
                                              std::uint64_t seed) {
  GenParams p;
  p.kind = GenKind::random_walk;
  p.n = n;
  p.offset_x = 0.0;
  p.offset_y = 2.0;
  p.seed = seed * 1000003u + n * 7919u + trial;
  return generate(p);
}

inline std::vector<BenchRow> bench(const BenchParams& p) {
  if (p.trials == 0) throw input_error("bench: trials must be >= 1");
  if (p.sizes.empty()) throw input_error("bench: no sizes");
  if (!std::is_sorted(p.sizes.begin(), p.sizes.end()) ||
      std::adjacent_find(p.sizes.begin(), p.sizes.end()) != p.sizes.end()) {
    throw input_error("bench: sizes must be strictly ascending");
  }
  ComputeRequest fast_req{p.measure, p.variant, Algorithm::fast, false};
  ComputeRequest naive_req{p.measure, p.variant, Algorithm::naive, false};
  bool has_fast = true;
  try {
    resolve_algorithm(fast_req);
  } catch (const unsupported_algorithm&) {
    has_fast = false;
  }

  auto median = [](std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t h = v.size() / 2;
    return v.size() % 2 ? v[h] : 0.5 * (v[h - 1] + v[h]);
  };
  auto time_ms = [](const ComputeRequest& req, const DistanceMatrix& d, double& value) {
    const auto t0 = std::chrono::steady_clock::now();
    value = compute(req, d).value;
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
  };

  std::vector<BenchRow> rows;
  for (std::size_t n : p.sizes) {
    BenchRow row;
    row.n = n;
    std::vector<double> fast_t;
    std::vector<double> naive_t;
    const bool run_naive = n <= p.naive_cutoff;
    for (std::size_t trial = 0; trial < p.trials; ++trial) {
      const auto [a, b] = bench_instance(n, trial, p.seed);
      const DistanceMatrix d = build_distance_matrix(a, b);
      double fv = 0.0;
      double nv = 0.0;
      if (has_fast) fast_t.push_back(time_ms(fast_req, d, fv));
      if (run_naive) naive_t.push_back(time_ms(naive_req, d, nv));
      if (has_fast && run_naive) {
        ++row.compared;
        if (fv != nv) row.values_agree = false;
      }
    }
    if (!fast_t.empty()) row.fast_ms = median(fast_t);
    if (!naive_t.empty()) row.naive_ms = median(naive_t);
    if (!rows.empty()) {
      const BenchRow& prev = rows.back();
      if (row.fast_ms && prev.fast_ms && *prev.fast_ms > 0) {
        row.fast_ratio = *row.fast_ms / *prev.fast_ms;
      }
      if (row.naive_ms && prev.naive_ms && *prev.naive_ms > 0) {
        row.naive_ratio = *row.naive_ms / *prev.naive_ms;
      }
    }
    rows.push_back(row);
  }
  return rows;
}

inline nlohmann::ordered_json to_json(const BenchParams& p, const std::vector<BenchRow>& rows) {
  auto opt = [](const std::optional<double>& v) -> nlohmann::ordered_json {
    if (!v) return nullptr;
    return *v;
  };
  nlohmann::ordered_json j;
  j["measure"] = to_string(p.measure);
  j["variant"] = to_string(p.variant);
  j["trials"] = p.trials;
  j["seed"] = p.seed;
  j["naiveCutoff"] = p.naive_cutoff;
  auto arr = nlohmann::ordered_json::array();
  bool agree = true;
  for (const BenchRow& r : rows) {
    nlohmann::ordered_json row;
    row["n"] = r.n;
    row["fastMedianMs"] = opt(r.fast_ms);
    row["naiveMedianMs"] = opt(r.naive_ms);
    row["fastRatio"] = opt(r.fast_ratio);
    row["naiveRatio"] = opt(r.naive_ratio);
    row["compared"] = r.compared;
    row["valuesAgree"] = r.values_agree;
    agree = agree && r.values_agree;
    arr.push_back(std::move(row));
  }
  j["rows"] = std::move(arr);
  j["valuesAgree"] = agree;
  return j;
}

}  // namespace frechetgap
