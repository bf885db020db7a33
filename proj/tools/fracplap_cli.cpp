// Command-line front end: evaluates the fractional p-Laplacian through its
// four representations, the discrete scheme, the spectral domain operator,
// and the seminorm characterizations, emitting CSV or JSON tables.

#include <fracplap/errors.hpp>
#include <fracplap/run.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

void add_common(CLI::App* cmd, fracplap::RunConfig& cfg) {
  cmd->add_option("--n", cfg.n, "dimension (1 or 2)");
  cmd->add_option("--s", cfg.s, "fractional order s in (0,1)");
  cmd->add_option("--p", cfg.p, "nonlinearity exponent p > 1");
  cmd->add_option("--function", cfg.function,
                  "gaussian | cosine | rational_bump | shifted_gaussian | bump");
  cmd->add_option("--points", cfg.points,
                  "evaluation points (n coordinates per point)");
  cmd->add_option("--tol", cfg.tol, "quadrature tolerance");
  cmd->add_option("--hermite-nodes", cfg.hermite_nodes,
                  "Gauss-Hermite node count");
  cmd->add_option("--output", cfg.output, "output path (default stdout)");
  cmd->add_option("--format", cfg.format, "csv | json");
  cmd->add_option("--seed", cfg.seed, "seed for randomized sampling");
}

int emit(const fracplap::RunConfig& cfg, const fracplap::Table& table) {
  const std::string text = table.render(cfg.format);
  if (cfg.output.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out) {
    std::cerr << "cannot open output file: " << cfg.output << "\n";
    return 2;
  }
  out << text;
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"fracplap: representations of the fractional p-Laplacian"};
  app.require_subcommand(1);

  fracplap::RunConfig cfg;
  bool batch = false; // batch commands report per-row failures in the table

  auto* constants = app.add_subcommand(
      "constants", "normalization constants C1..C4 over a parameter grid");
  add_common(constants, cfg);
  constants->add_option("--n-list", cfg.n_list, "dimensions");
  constants->add_option("--s-list", cfg.s_list, "s grid");
  constants->add_option("--p-list", cfg.p_list, "p grid");

  auto* compare = app.add_subcommand(
      "compare", "all four representations at the given points");
  add_common(compare, cfg);

  auto* limits =
      app.add_subcommand("limits", "s -> 1 or p -> 2 limit experiments");
  add_common(limits, cfg);
  limits->add_option("--mode", cfg.mode, "s_to_1 | p_to_2");
  limits->add_option("--s-list", cfg.s_list, "s grid (s_to_1)");
  limits->add_option("--p-list", cfg.p_list, "p grid (p_to_2)");

  auto* discrete = app.add_subcommand(
      "discrete", "finite-difference operator vs the continuum value");
  add_common(discrete, cfg);
  discrete->add_option("--h-list", cfg.h_list, "grid spacings");
  discrete->add_option("--delta-kappa", cfg.delta_kappa,
                       "delta = h^kappa (negative: delta = 0)");
  discrete->add_option("--stencil", cfg.stencil, "stencil radius");

  auto* spectral = app.add_subcommand(
      "spectral", "spectral vs restricted operator on (0, L)");
  add_common(spectral, cfg);
  spectral->add_option("--L-list", cfg.L_list, "interval lengths");
  spectral->add_option("--bump-radius", cfg.bump_radius,
                       "support radius of the centered bump");

  auto* seminorm = app.add_subcommand(
      "seminorm", "three Gagliardo seminorm characterizations");
  add_common(seminorm, cfg);
  seminorm->add_option("--s-list", cfg.s_list, "s grid");
  seminorm->add_option("--p-list", cfg.p_list, "p grid");

  auto* weights = app.add_subcommand(
      "weights-export", "finite-difference weight table (beta, weight)");
  add_common(weights, cfg);
  weights->add_option("--h-list", cfg.h_list, "spacing (first entry used)");
  weights->add_option("--delta-kappa", cfg.delta_kappa,
                      "delta = h^kappa (negative: delta = 0)");
  weights->add_option("--stencil", cfg.stencil, "stencil radius");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (constants->parsed())
    cfg.command = "constants";
  else if (compare->parsed())
    cfg.command = "compare";
  else if (limits->parsed())
    cfg.command = "limits";
  else if (discrete->parsed())
    cfg.command = "discrete";
  else if (spectral->parsed())
    cfg.command = "spectral";
  else if (seminorm->parsed())
    cfg.command = "seminorm";
  else if (weights->parsed())
    cfg.command = "weights-export";
  batch = compare->parsed() || discrete->parsed();

  try {
    return emit(cfg, fracplap::run_command(cfg));
  } catch (const fracplap::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const fracplap::Error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return batch ? 2 : 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
