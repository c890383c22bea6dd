#pragma once

// Invocation settings for the command-line tool, with a JSON form that
// round-trips and rejects unknown keys.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace bernlab::cli {

struct config_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline double parse_number(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw config_error("not a number: '" + s + "'");
  }
  if (used != s.size() || !std::isfinite(v)) throw config_error("not a number: '" + s + "'");
  return v;
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

}  // namespace detail

/// "a", "a:b:step" or a comma-separated list of those.  Range values are
/// snapped to 1e-10 so that 0.1:1.9:0.1 yields 0.3 rather than
/// 0.30000000000000004.
inline std::vector<double> parse_range(const std::string& spec) {
  if (spec.empty()) throw config_error("empty range");
  std::vector<double> out;
  for (const auto& item : detail::split(spec, ',')) {
    auto f = detail::split(item, ':');
    if (f.size() == 1) {
      out.push_back(detail::parse_number(f[0]));
    } else if (f.size() == 3) {
      double a = detail::parse_number(f[0]);
      double b = detail::parse_number(f[1]);
      double h = detail::parse_number(f[2]);
      if (!(h > 0.0)) throw config_error("range step must be positive: '" + item + "'");
      if (b < a) throw config_error("range end precedes start: '" + item + "'");
      const long count = static_cast<long>(std::floor((b - a) / h + 1e-9)) + 1;
      if (count > 10000000) throw config_error("range too long: '" + item + "'");
      for (long i = 0; i < count; ++i) out.push_back(std::nearbyint((a + i * h) * 1e10) / 1e10);
    } else {
      throw config_error("expected a or a:b:step, got '" + item + "'");
    }
  }
  return out;
}

inline std::vector<int> parse_int_list(const std::string& spec) {
  std::vector<int> out;
  for (const auto& item : detail::split(spec, ',')) {
    double v = detail::parse_number(item);
    if (v != std::floor(v) || std::fabs(v) > 1e9) throw config_error("not an integer: '" + item + "'");
    out.push_back(static_cast<int>(v));
  }
  if (out.empty()) throw config_error("empty integer list");
  return out;
}

struct RunConfig {
  std::string command;  // verify | table | curve
  std::string target;   // suite, table or curve name
  std::string alpha;    // range spec; empty selects the target's default
  std::vector<int> n;
  std::string scheme = "P2";
  std::optional<double> tol;
  std::string out;  // empty writes to stdout
  std::string format = "csv";
  int jobs = 1;
  std::string x;
  std::optional<double> c1;
  std::optional<double> c2;
  int jmax = 10;

  bool operator==(const RunConfig&) const = default;

  void validate() const {
    static const std::set<std::string> suites{"identities", "limits", "asymptotics", "remez", "nearbest", "all"};
    static const std::set<std::string> tables{"c_constants", "interp_points", "convergence", "envelope"};
    static const std::set<std::string> curves{"H", "H1", "H_alpha", "G_alpha", "limit_error", "R_diag"};
    const std::set<std::string>* names = nullptr;
    if (command == "verify") names = &suites;
    else if (command == "table") names = &tables;
    else if (command == "curve") names = &curves;
    else throw config_error("unknown command '" + command + "'");
    if (!names->count(target)) throw config_error("unknown " + command + " target '" + target + "'");
    if (scheme != "P1" && scheme != "P2") throw config_error("scheme must be P1 or P2");
    if (format != "csv" && format != "json") throw config_error("format must be csv or json");
    if (jobs < 1) throw config_error("jobs must be at least 1");
    if (jmax < 1) throw config_error("jmax must be at least 1");
    if (tol && !(*tol >= 0.0)) throw config_error("tol must be nonnegative");
    for (int k : n)
      if (k < 1) throw config_error("n values must be positive");
    if (!alpha.empty()) parse_range(alpha);
    if (!x.empty()) parse_range(x);
  }
};

inline void to_json(nlohmann::json& j, const RunConfig& c) {
  j = nlohmann::json{{"command", c.command}, {"target", c.target}, {"alpha", c.alpha},
                     {"n", c.n},             {"scheme", c.scheme}, {"out", c.out},
                     {"format", c.format},   {"jobs", c.jobs},     {"x", c.x},
                     {"jmax", c.jmax}};
  j["tol"] = c.tol ? nlohmann::json(*c.tol) : nlohmann::json(nullptr);
  j["c1"] = c.c1 ? nlohmann::json(*c.c1) : nlohmann::json(nullptr);
  j["c2"] = c.c2 ? nlohmann::json(*c.c2) : nlohmann::json(nullptr);
}

inline void from_json(const nlohmann::json& j, RunConfig& c) {
  static const std::set<std::string> known{"command", "target", "alpha", "n",  "scheme", "tol", "out",
                                           "format",  "jobs",   "x",     "c1", "c2",     "jmax"};
  if (!j.is_object()) throw config_error("run config must be a JSON object");
  for (const auto& [key, _] : j.items())
    if (!known.count(key)) throw config_error("unknown config key '" + key + "'");
  RunConfig r;
  try {
    auto opt = [&](const char* key, std::optional<double>& dst) {
      if (j.contains(key) && !j.at(key).is_null()) dst = j.at(key).get<double>();
    };
    if (j.contains("command")) r.command = j.at("command").get<std::string>();
    if (j.contains("target")) r.target = j.at("target").get<std::string>();
    if (j.contains("alpha")) r.alpha = j.at("alpha").get<std::string>();
    if (j.contains("n")) r.n = j.at("n").get<std::vector<int>>();
    if (j.contains("scheme")) r.scheme = j.at("scheme").get<std::string>();
    if (j.contains("out")) r.out = j.at("out").get<std::string>();
    if (j.contains("format")) r.format = j.at("format").get<std::string>();
    if (j.contains("jobs")) r.jobs = j.at("jobs").get<int>();
    if (j.contains("x")) r.x = j.at("x").get<std::string>();
    if (j.contains("jmax")) r.jmax = j.at("jmax").get<int>();
    opt("tol", r.tol);
    opt("c1", r.c1);
    opt("c2", r.c2);
  } catch (const nlohmann::json::exception& e) {
    throw config_error(std::string("bad config value: ") + e.what());
  }
  r.validate();
  c = std::move(r);
}

inline RunConfig parse_run_config(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw config_error(std::string("malformed config: ") + e.what());
  }
  return j.get<RunConfig>();
}

inline std::string dump_run_config(const RunConfig& c) { return nlohmann::json(c).dump(2); }

}  // namespace bernlab::cli
