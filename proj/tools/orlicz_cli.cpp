#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "orlicz/cli.hpp"
#include "orlicz/errors.hpp"

namespace {

using orlicz::cli::Command;
using orlicz::cli::RunConfig;

void add_weights(CLI::App* sub, RunConfig& c) {
  sub->add_option("--weights", c.weight_spec, "power-decay:beta=<b> | geometric:q=<q> | csv:<path>")->required();
  sub->add_option("--d", c.d, "truncation dimension for built-in weight families");
  sub->add_option("--tail-bound", c.tail_bound, "bound on weights past the last CSV entry (default 0)");
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig config;
  std::string n_range, m_range;

  CLI::App app{"Approximation quantities of diagonal operators between Orlicz sequence spaces"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--output,-o", config.output, "write the report to a file instead of stdout");

  const std::map<std::string, Command> commands{
      {"norm", Command::norm},   {"charseq", Command::charseq}, {"widths", Command::widths},
      {"sigma", Command::sigma}, {"verify", Command::verify},   {"table", Command::table},
  };

  auto* norm = app.add_subcommand("norm", "Luxemburg norm (and tail norm with --gamma) of a sequence");
  norm->add_option("--orlicz", config.orlicz_spec, "power:p=<p> | exp | power-log:p=<p> | spline:<path>")->required();
  norm->add_option("--x", config.x_path, "CSV file, one value per line");
  norm->add_option("--values", config.values, "inline comma-separated values");
  norm->add_option("--gamma", config.gamma, "1-based positions to remove, comma-separated");

  auto* charseq = app.add_subcommand("charseq", "characteristic levels eps_n and sizes delta_n of the weights");
  add_weights(charseq, config);

  auto* widths = app.add_subcommand("widths", "Kolmogorov widths d_m, basis widths D_n and E on g_{n-1}");
  add_weights(widths, config);
  widths->add_option("--orlicz", config.orlicz_spec, "source gauge M");
  widths->add_option("--target", config.target_spec, "target gauge N for D_n and E (default: M)");
  widths->add_option("--m-range", m_range, "a..b");
  widths->add_option("--n-range", n_range, "a..b");

  auto* sigma = app.add_subcommand("sigma", "best n-term approximation of T(B l_p) in l_M");
  add_weights(sigma, config);
  sigma->add_option("--orlicz", config.orlicz_spec, "target gauge M");
  sigma->add_option("--p", config.p, "source exponent p > 0")->required();
  sigma->add_option("--n", n_range, "single n");
  sigma->add_option("--n-range", n_range, "a..b");
  sigma->add_option("--patience", config.patience, "non-improving steps before a heuristic scan stops");
  sigma->add_option("--s-cap", config.s_cap, "largest s to scan (default d)");

  auto* table = app.add_subcommand("table", "all quantities over the given ranges as one CSV table");
  add_weights(table, config);
  table->add_option("--orlicz", config.orlicz_spec, "gauge M");
  table->add_option("--target", config.target_spec, "target gauge N for D_n and E (default: M)");
  table->add_option("--p", config.p, "include sigma_n rows for l_p -> l_M");
  table->add_option("--m-range", m_range, "a..b");
  table->add_option("--n-range", n_range, "a..b");
  table->add_option("--patience", config.patience);
  table->add_option("--s-cap", config.s_cap);

  auto* verify = app.add_subcommand("verify", "run every randomized oracle suite");
  verify->add_option("--seed", config.seed);
  verify->add_option("--trials", config.trials, "trials per inequality suite");

  try {
    app.parse(argc, argv);
    for (const auto& [name, cmd] : commands) {
      if (app.got_subcommand(name)) config.command = cmd;
    }
    if (!n_range.empty()) config.n_range = orlicz::parse_range(n_range);
    if (!m_range.empty()) config.m_range = orlicz::parse_range(m_range);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : orlicz::cli::kExitUsage;
  } catch (const orlicz::ParseError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return orlicz::cli::kExitUsage;
  }
  return orlicz::cli::run(config, std::cout, std::cerr);
}
