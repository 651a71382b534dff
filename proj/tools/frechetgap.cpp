#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "frechetgap/frechetgap.hpp"

namespace fg = frechetgap;

namespace {

bool use_color() {
  const char* nc = std::getenv("NO_COLOR");
  if (nc && *nc) return false;
  return isatty(STDERR_FILENO) != 0;
}

void summary(const std::string& label, const std::string& text) {
  if (use_color()) {
    std::cerr << "\033[1;36m" << label << "\033[0m " << text << '\n';
  } else {
    std::cerr << label << ' ' << text << '\n';
  }
}

std::string fmt_double(double v, int precision = 17) {
  if (std::isinf(v)) return "inf";
  std::ostringstream os;
  os.precision(precision);
  os << v;
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw fg::input_error("cannot write '" + path + "'");
  out << text;
  if (!out) throw fg::input_error("failed writing '" + path + "'");
}

std::string format_curve(const fg::Curve& c, fg::CurveFormat format) {
  if (format == fg::CurveFormat::csv) return fg::format_curve_csv(c);
  auto doc = nlohmann::json::array();
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto p = c[i];
    doc.push_back(std::vector<double>(p.begin(), p.end()));
  }
  return doc.dump() + "\n";
}

const std::map<std::string, fg::Measure> kMeasures{
    {"frechet", fg::Measure::frechet}, {"gap", fg::Measure::gap}, {"ratio", fg::Measure::ratio}};
const std::map<std::string, fg::Variant> kVariants{
    {"plain", fg::Variant::strong}, {"shortcut", fg::Variant::shortcut}, {"weak", fg::Variant::weak}};
const std::map<std::string, fg::Algorithm> kAlgorithms{
    {"auto", fg::Algorithm::automatic}, {"naive", fg::Algorithm::naive}, {"fast", fg::Algorithm::fast}};
const std::map<std::string, fg::CurveFormat> kFormats{
    {"csv", fg::CurveFormat::csv}, {"json", fg::CurveFormat::json}};
const std::map<std::string, fg::GenKind> kKinds{
    {"offset-outlier", fg::GenKind::offset_outlier}, {"random-walk", fg::GenKind::random_walk}};

template <class T>
CLI::Option* add_choice(CLI::App* app, const std::string& name, T& target,
                        const std::map<std::string, T>& choices, const std::string& help) {
  std::vector<std::string> names;
  for (const auto& [key, _] : choices) names.push_back(key);
  return app
      ->add_option_function<std::string>(
          name, [&target, &choices](const std::string& v) { target = choices.at(v); }, help)
      ->check(CLI::IsMember(names));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete Frechet distance, gap and ratio between polygonal curves"};
  app.require_subcommand(1);

  // compute
  auto* compute = app.add_subcommand("compute", "Compute a measure between two curves");
  fg::ComputeRequest req;
  std::string path_a;
  std::string path_b;
  fg::CurveFormat format = fg::CurveFormat::csv;
  bool timing = false;
  add_choice(compute, "--measure", req.measure, kMeasures, "frechet | gap | ratio")
      ->required();
  add_choice(compute, "--variant", req.variant, kVariants, "plain | shortcut | weak")
      ->required();
  add_choice(compute, "--algorithm", req.algorithm, kAlgorithms, "auto | naive | fast");
  compute->add_option("--curve-a", path_a, "First curve")->required();
  compute->add_option("--curve-b", path_b, "Second curve")->required();
  add_choice(compute, "--format", format, kFormats, "csv | json");
  compute->add_flag("--emit-walk", req.emit_walk, "Include a witness walk (1-based)");
  compute->add_flag("--timing", timing, "Include elapsedMicros in stats");

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a synthetic curve pair");
  fg::GenParams gp;
  std::vector<double> offset{gp.offset_x, gp.offset_y};
  std::string out_a;
  std::string out_b;
  fg::CurveFormat gen_format = fg::CurveFormat::csv;
  add_choice(gen, "--kind", gp.kind, kKinds, "offset-outlier | random-walk")
      ->required();
  gen->add_option("--n", gp.n, "Points per curve")->required();
  gen->add_option("--offset", offset, "X,Y")->delimiter(',')->expected(2);
  gen->add_option("--outliers", gp.outliers, "Displaced points in A");
  gen->add_option("--magnitude", gp.magnitude, "Outlier displacement");
  gen->add_option("--seed", gp.seed, "RNG seed");
  gen->add_option("--out-a", out_a, "Output path for A")->required();
  gen->add_option("--out-b", out_b, "Output path for B")->required();
  add_choice(gen, "--format", gen_format, kFormats, "csv | json");

  // bench
  auto* bench = app.add_subcommand("bench", "Time fast and naive algorithms over sizes");
  fg::BenchParams bp;
  bench->add_option("--sizes", bp.sizes, "Ascending sizes, comma separated")
      ->required()
      ->delimiter(',');
  bench->add_option("--trials", bp.trials, "Trials per size");
  add_choice(bench, "--variant", bp.variant, kVariants, "plain | shortcut | weak");
  add_choice(bench, "--measure", bp.measure, kMeasures, "frechet | gap | ratio");
  bench->add_option("--seed", bp.seed, "RNG seed");
  bench->add_option("--naive-cutoff", bp.naive_cutoff, "Skip naive above this size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*compute) {
      const fg::Curve a = fg::read_curve(path_a, format);
      const fg::Curve b = fg::read_curve(path_b, format);
      const fg::ComputeResult r = fg::compute(req, a, b);
      std::cout << fg::to_json(r, timing).dump(2) << '\n';
      summary(std::string(fg::to_string(r.measure)) + "/" + fg::to_string(r.variant),
              "value=" + fmt_double(r.value) + " decisions=" + std::to_string(r.stats.decisions));
    } else if (*gen) {
      gp.offset_x = offset.at(0);
      gp.offset_y = offset.at(1);
      const auto [a, b] = fg::generate(gp);
      write_file(out_a, format_curve(a, gen_format));
      write_file(out_b, format_curve(b, gen_format));
      nlohmann::ordered_json j;
      j["kind"] = gp.kind == fg::GenKind::offset_outlier ? "offset-outlier" : "random-walk";
      j["n"] = gp.n;
      j["offset"] = {gp.offset_x, gp.offset_y};
      j["outliers"] = gp.outliers;
      j["magnitude"] = gp.magnitude;
      j["seed"] = gp.seed;
      j["outA"] = out_a;
      j["outB"] = out_b;
      std::cout << j.dump(2) << '\n';
      summary("gen", "wrote " + out_a + " and " + out_b);
    } else if (*bench) {
      const auto rows = fg::bench(bp);
      const auto j = fg::to_json(bp, rows);
      std::cout << j.dump(2) << '\n';
      for (const auto& r : rows) {
        summary("n=" + std::to_string(r.n),
                "fast=" + (r.fast_ms ? fmt_double(*r.fast_ms, 4) + "ms" : std::string("-")) +
                    " naive=" + (r.naive_ms ? fmt_double(*r.naive_ms, 4) + "ms" : std::string("-")) +
                    " ratio=" + (r.fast_ratio ? fmt_double(*r.fast_ratio, 3) : std::string("-")));
      }
      if (!j["valuesAgree"].get<bool>()) {
        summary("bench", "fast and naive values disagree");
        return 2;
      }
    }
  } catch (const fg::input_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
