#pragma once

// The verify, table and curve commands, independent of argument parsing.

#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "bernlab/asymptotics.hpp"
#include "bernlab/chebinterp.hpp"
#include "bernlab/cli/checks.hpp"
#include "bernlab/cli/pool.hpp"
#include "bernlab/cli/run_config.hpp"
#include "bernlab/cli/table.hpp"
#include "bernlab/entire.hpp"
#include "bernlab/kernels.hpp"
#include "bernlab/nearbest.hpp"
#include "bernlab/version.hpp"

namespace bernlab::cli {

struct VerifyReport {
  std::string text;
  int checks = 0;
  int failed = 0;
};

inline VerifyReport run_verify(const RunConfig& cfg) {
  const auto groups = suite_groups(cfg.target);
  CheckOptions opt{cfg.tol};
  auto results = parallel_map(groups.size(), cfg.jobs, [&](std::size_t i) { return groups[i].run(opt); });
  VerifyReport rep;
  rep.text = "# bernlab " + std::string(version) + " verify " + cfg.target + "\n";
  if (cfg.tol) rep.text += "# tolerance override: " + format_g17(*cfg.tol) + "\n";
  for (std::size_t i = 0; i < groups.size(); ++i) {
    rep.text += "== " + groups[i].name + "\n";
    for (const auto& c : results[i]) {
      rep.text += render(c) + "\n";
      ++rep.checks;
      if (!c.pass) ++rep.failed;
    }
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "summary: %d checks, %d failed\n", rep.checks, rep.failed);
  rep.text += buf;
  return rep;
}

namespace detail {

inline std::vector<double> alphas_or(const RunConfig& cfg, const char* fallback) {
  return parse_range(cfg.alpha.empty() ? std::string(fallback) : cfg.alpha);
}

inline double single_alpha(const RunConfig& cfg, const char* fallback) {
  auto a = alphas_or(cfg, fallback);
  if (a.size() != 1) throw config_error("curve " + cfg.target + " takes a single alpha");
  return a.front();
}

inline Table with_meta(const RunConfig& cfg, std::vector<std::string> columns) {
  Table t;
  t.meta.push_back({"bernlab", std::string(version)});
  std::string run = cfg.command + " " + cfg.target;
  if (!cfg.alpha.empty()) run += " alpha=" + cfg.alpha;
  if (cfg.command == "table" && cfg.target == "convergence") run += " scheme=" + cfg.scheme;
  if (!cfg.x.empty()) run += " x=" + cfg.x;
  if (cfg.c1) run += " c1=" + format_g17(*cfg.c1);
  if (cfg.c2) run += " c2=" + format_g17(*cfg.c2);
  t.meta.push_back({"run", run});
  QuadConfig q;
  RemezConfig r;
  char tol[160];
  std::snprintf(tol, sizeof tol, "quad_rel_tol=%g remez_rel_tol=%g root_tol=1e-08 simplex_xtol=%g", q.rel_tol,
                r.rel_tol, NearBestConfig{}.xtol);
  t.meta.push_back({"tolerances", tol});
  t.columns = std::move(columns);
  return t;
}

// (c1, c2) from the flags if both are given, otherwise optimised.
inline std::pair<double, double> coefficients(const RunConfig& cfg, double alpha) {
  if (cfg.c1.has_value() != cfg.c2.has_value()) throw config_error("give both --c1 and --c2 or neither");
  if (cfg.c1) return {*cfg.c1, *cfg.c2};
  NearBestSolution s = optimize_c(alpha);
  return {s.c1, s.c2};
}

}  // namespace detail

inline Table run_table(const RunConfig& cfg) {
  const std::string& name = cfg.target;
  if (name == "c_constants") {
    auto alphas = detail::alphas_or(cfg, "0.1:1.9:0.1");
    Table t = detail::with_meta(cfg, {"alpha", "c1", "c2", "minimax"});
    auto sols = parallel_map(alphas.size(), cfg.jobs, [&](std::size_t i) { return optimize_c(alphas[i]); });
    for (const auto& s : sols) t.rows.push_back({s.alpha, s.c1, s.c2, s.minimax});
    return t;
  }
  if (name == "interp_points") {
    auto alphas = detail::alphas_or(cfg, "0.5,0.8,1");
    Table t = detail::with_meta(cfg, {"alpha", "j", "x_j"});
    auto pts = parallel_map(alphas.size(), cfg.jobs, [&](std::size_t i) {
      auto [c1, c2] = detail::coefficients(cfg, alphas[i]);
      return interp_points(alphas[i], c1, c2, cfg.jmax);
    });
    for (std::size_t i = 0; i < alphas.size(); ++i)
      for (std::size_t j = 0; j < pts[i].size(); ++j) t.rows.push_back({alphas[i], double(j + 1), pts[i][j]});
    return t;
  }
  if (name == "convergence") {
    auto alphas = detail::alphas_or(cfg, "0.5,1");
    std::vector<int> ns = cfg.n.empty() ? std::vector<int>{8, 16, 32, 64, 128, 256} : cfg.n;
    const Scheme scheme = *parse_scheme(cfg.scheme);
    Table t = detail::with_meta(cfg, {"alpha", "n", "scaled_error"});
    std::vector<std::pair<double, int>> jobs;
    for (double a : alphas)
      for (int n : ns) {
        if (!(2.0 * n > a)) throw config_error("convergence needs 2n > alpha");
        jobs.push_back({a, n});
      }
    auto errs = parallel_map(jobs.size(), cfg.jobs, [&](std::size_t i) {
      return sup_error(build_nodes(scheme, jobs[i].second), jobs[i].first).scaled_error;
    });
    for (std::size_t i = 0; i < jobs.size(); ++i) t.rows.push_back({jobs[i].first, double(jobs[i].second), errs[i]});
    return t;
  }
  if (name == "envelope") {
    auto alphas = detail::alphas_or(cfg, "2,4,8,16,32");
    Table t = detail::with_meta(cfg, {"alpha", "lower", "H1_at_alpha", "norm", "upper"});
    auto env = parallel_map(alphas.size(), cfg.jobs, [&](std::size_t i) { return envelope_bounds(alphas[i]); });
    for (const auto& e : env) t.rows.push_back({e.alpha, e.lower, e.point_value, e.norm, e.upper});
    return t;
  }
  throw config_error("unknown table '" + name + "'");
}

inline Table run_curve(const RunConfig& cfg) {
  const std::string& kind = cfg.target;
  if (kind == "R_diag") {
    auto alphas = detail::alphas_or(cfg, "2.4:20:0.05");
    Table t = detail::with_meta(cfg, {"alpha", "R"});
    auto v = parallel_map(alphas.size(), cfg.jobs, [&](std::size_t i) { return R_diag(alphas[i]); });
    for (std::size_t i = 0; i < alphas.size(); ++i) t.rows.push_back({alphas[i], v[i]});
    return t;
  }
  const auto xs = parse_range(cfg.x.empty() ? std::string("0:40:0.05") : cfg.x);
  for (double x : xs)
    if (x < 0.0) throw config_error("curve abscissae must be nonnegative");
  const double a = detail::single_alpha(cfg, "1");
  if (!(a > 0.0)) throw config_error("alpha must be positive");

  std::vector<std::string> cols;
  std::function<std::vector<double>(double)> eval;
  if (kind == "H") {
    cols = {"x", "H", "H1"};
    eval = [a](double x) { return std::vector<double>{kernel_eval(KernelKind::H, a, x), kernel_eval(KernelKind::H1, a, x)}; };
  } else if (kind == "H1") {
    cols = {"x", "H1"};
    eval = [a](double x) { return std::vector<double>{kernel_eval(KernelKind::H1, a, x)}; };
  } else if (kind == "H_alpha") {
    const bool even = 0.5 * a == std::floor(0.5 * a);
    cols = even ? std::vector<std::string>{"x", "integral"} : std::vector<std::string>{"x", "integral", "series"};
    eval = [a, even](double x) {
      std::vector<double> v{H_alpha_integral(a, x)};
      if (!even) v.push_back(H_alpha_series(a, x));
      return v;
    };
  } else if (kind == "G_alpha") {
    cols = {"x", "G_alpha"};
    eval = [a](double x) { return std::vector<double>{G_alpha(a, x)}; };
  } else if (kind == "limit_error") {
    auto [c1, c2] = detail::coefficients(cfg, a);
    cols = {"x", "error"};
    eval = [a, c1, c2](double x) {
      return std::vector<double>{x == 0.0 ? limit_error_at_zero(a, c2) : limit_error(a, c1, c2, x)};
    };
  } else {
    throw config_error("unknown curve '" + kind + "'");
  }
  Table t = detail::with_meta(cfg, cols);
  auto vals = parallel_map(xs.size(), cfg.jobs, [&](std::size_t i) { return eval(xs[i]); });
  for (std::size_t i = 0; i < xs.size(); ++i) {
    std::vector<double> row{xs[i]};
    row.insert(row.end(), vals[i].begin(), vals[i].end());
    t.rows.push_back(std::move(row));
  }
  return t;
}

inline std::string render_table(const Table& t, const RunConfig& cfg) {
  return cfg.format == "json" ? to_json_text(t) : to_csv(t);
}

}  // namespace bernlab::cli
