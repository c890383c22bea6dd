#pragma once

// Tabular output: CSV with '#' metadata lines, or a JSON envelope.

#include <cmath>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace bernlab::cli {

/// Shortest-safe decimal text for v with 17 significant digits.
inline std::string format_g17(double v) {
  if (v == 0.0) return "0";  // folds -0
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct Table {
  std::vector<std::pair<std::string, std::string>> meta;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

}  // namespace detail

inline std::string to_csv(const Table& t) {
  std::string s;
  for (const auto& [k, v] : t.meta) s += "# " + k + ": " + v + "\n";
  for (std::size_t i = 0; i < t.columns.size(); ++i)
    s += (i ? "," : "") + detail::csv_field(t.columns[i]);
  s += "\r\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) s += (i ? "," : "") + format_g17(row[i]);
    s += "\r\n";
  }
  return s;
}

inline std::string to_json_text(const Table& t) {
  nlohmann::ordered_json meta = nlohmann::ordered_json::object();
  for (const auto& [k, v] : t.meta) meta[k] = v;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json r = nlohmann::ordered_json::array();
    for (double v : row) r.push_back(std::isfinite(v) ? nlohmann::ordered_json(v) : nlohmann::ordered_json(nullptr));
    rows.push_back(std::move(r));
  }
  nlohmann::ordered_json j{{"meta", meta}, {"columns", t.columns}, {"rows", rows}};
  return j.dump(2) + "\n";
}

}  // namespace bernlab::cli
