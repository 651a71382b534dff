#pragma once

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "frechetgap/curve.hpp"
#include "frechetgap/error.hpp"

namespace frechetgap {

enum class CurveFormat { csv, json };

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto* ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

inline double parse_number(std::string_view token, std::size_t line) {
  token = trim(token);
  double value = 0.0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  if (!token.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc() || ptr != last || !std::isfinite(value)) {
    throw input_error("line " + std::to_string(line) + ": '" +
                      std::string(token) + "' is not a finite number");
  }
  return value;
}

}  // namespace detail

/// One point per line, comma-separated coordinates. Lines starting with '#'
/// and blank lines are skipped.
inline Curve parse_curve_csv(std::string_view text) {
  std::vector<double> coords;
  std::size_t dim = 0;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    const auto raw = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    const auto line = detail::trim(raw);
    if (line.empty() || line.front() == '#') continue;

    std::size_t count = 0;
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      const auto token = line.substr(start, comma == std::string_view::npos ? line.size() - start : comma - start);
      coords.push_back(detail::parse_number(token, line_no));
      ++count;
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (dim == 0) {
      dim = count;
    } else if (count != dim) {
      throw input_error("line " + std::to_string(line_no) + ": expected " +
                        std::to_string(dim) + " coordinates, got " +
                        std::to_string(count));
    }
  }
  if (coords.empty()) throw input_error("curve: no points");
  return Curve(dim, std::move(coords));
}

/// A JSON array of points, each an array of numbers.
inline Curve parse_curve_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw input_error(std::string("json: ") + e.what());
  }
  if (!doc.is_array() || doc.empty()) {
    throw input_error("json: expected a non-empty array of points");
  }
  std::vector<std::vector<double>> points;
  points.reserve(doc.size());
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& p = doc[i];
    if (!p.is_array() || p.empty()) {
      throw input_error("json: point " + std::to_string(i + 1) +
                        " is not a non-empty array");
    }
    std::vector<double> point;
    for (const auto& c : p) {
      if (!c.is_number()) {
        throw input_error("json: point " + std::to_string(i + 1) +
                          " has a non-numeric coordinate");
      }
      point.push_back(c.get<double>());
    }
    points.push_back(std::move(point));
  }
  return Curve::from_points(points);
}

inline Curve parse_curve(std::string_view text, CurveFormat format) {
  return format == CurveFormat::csv ? parse_curve_csv(text) : parse_curve_json(text);
}

inline Curve read_curve(const std::string& path, CurveFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_curve(buf.str(), format);
  } catch (const input_error& e) {
    throw input_error(path + ": " + e.what());
  }
}

/// CSV text using the shortest representation that round-trips exactly.
inline std::string format_curve_csv(const Curve& c) {
  std::string out;
  char buf[64];
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto p = c[i];
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (k) out += ',';
      const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, p[k]);
      out.append(buf, end);
    }
    out += '\n';
  }
  return out;
}

}  // namespace frechetgap
