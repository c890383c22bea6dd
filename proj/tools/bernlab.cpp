#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "bernlab/cli/commands.hpp"
#include "bernlab/error.hpp"

namespace {

using bernlab::cli::RunConfig;

int write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text << std::flush;
    return 0;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open " << path << " for writing\n";
    return 2;
  }
  f << text;
  return f.good() ? 0 : 2;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--alpha", cfg.alpha, "alpha value, a:b:step range, or comma list");
  sub->add_option("--out", cfg.out, "output file (default stdout)");
  sub->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
}

void add_output(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
}

void add_coefficients(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--c1", cfg.c1, "near-best coefficient c1 (default: optimised)");
  sub->add_option("--c2", cfg.c2, "near-best coefficient c2 (default: optimised)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bernlab: numerics for interpolation and best approximation of |x|^alpha"};
  app.set_version_flag("--version", std::string(bernlab::version));
  app.require_subcommand(0, 1);
  app.fallthrough();

  RunConfig cfg;
  std::string config_path;
  bool print_config = false;
  app.add_option("--config", config_path, "read the run configuration from a JSON file")->check(CLI::ExistingFile);
  app.add_flag("--print-config", print_config, "print the resolved configuration as JSON and exit");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", cfg.target, "identities | limits | asymptotics | remez | nearbest | all")->required();
  verify->add_option("--tol", cfg.tol, "replace every check tolerance with this value");
  verify->add_option("--out", cfg.out, "output file (default stdout)");
  verify->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);

  auto* table = app.add_subcommand("table", "emit a numerical table");
  table->add_option("name", cfg.target, "c_constants | interp_points | convergence | envelope")->required();
  add_common(table, cfg);
  add_output(table, cfg);
  add_coefficients(table, cfg);
  std::string n_list;
  table->add_option("--n", n_list, "comma-separated n values");
  table->add_option("--scheme", cfg.scheme, "P1 or P2")->check(CLI::IsMember({"P1", "P2"}));
  table->add_option("--jmax", cfg.jmax, "number of interpolation points")->check(CLI::PositiveNumber);

  auto* curve = app.add_subcommand("curve", "sample a function on a grid");
  curve->add_option("kind", cfg.target, "H | H1 | H_alpha | G_alpha | limit_error | R_diag")->required();
  add_common(curve, cfg);
  add_output(curve, cfg);
  add_coefficients(curve, cfg);
  curve->add_option("--x", cfg.x, "abscissae: a:b:step range or comma list (default 0:40:0.05)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (!config_path.empty()) {
      std::ifstream f(config_path);
      std::stringstream ss;
      ss << f.rdbuf();
      cfg = bernlab::cli::parse_run_config(ss.str());
    } else {
      if (app.get_subcommands().empty()) throw bernlab::cli::config_error("a subcommand or --config is required");
      cfg.command = app.get_subcommands().front()->get_name();
      if (!n_list.empty()) cfg.n = bernlab::cli::parse_int_list(n_list);
      cfg.validate();
    }
    if (print_config) {
      std::cout << bernlab::cli::dump_run_config(cfg) << "\n";
      return 0;
    }

    if (cfg.command == "verify") {
      auto rep = bernlab::cli::run_verify(cfg);
      if (int rc = write_output(rep.text, cfg.out)) return rc;
      return rep.failed == 0 ? 0 : 1;
    }
    auto t = cfg.command == "table" ? bernlab::cli::run_table(cfg) : bernlab::cli::run_curve(cfg);
    return write_output(bernlab::cli::render_table(t, cfg), cfg.out);
  } catch (const bernlab::cli::config_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const bernlab::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
