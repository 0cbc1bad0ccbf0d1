#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "gfpca/commands.hpp"

namespace {

void add_graph_options(CLI::App* cmd, gfpca::cli::RunConfig& config) {
  cmd->add_option("--graph", config.graph_csv, "Edge-list CSV (src,dst,weight)");
  cmd->add_option("--coords", config.coords_csv,
                  "Coordinate CSV (id,x,y or id,lat,lon)");
  cmd->add_option("--knn", config.knn_k, "Neighbour count for --coords graphs")
      ->check(CLI::PositiveNumber);
}

void add_estimator_options(CLI::App* cmd, gfpca::cli::RunConfig& config) {
  cmd->add_option("--estimator", config.estimator,
                  "Spectral estimator: windowed or periodogram");
  cmd->add_option("--windows", config.windows, "Window count M");
  cmd->add_option("--window-variance", config.window_variance,
                  "Window variance nu");
  cmd->add_flag("--bias-correct", config.bias_correct,
                "Subtract the window-expectation excess");
  cmd->add_flag("!--no-psd-project", config.psd_project,
                "Disable clipping of negative spectral eigenvalues");
}

void add_rank_options(CLI::App* cmd, gfpca::cli::RunConfig& config) {
  cmd->add_option("--q", config.fixed_q, "Fixed number of components");
  cmd->add_option("--q-policy", config.q_policy,
                  "Rank policy: threshold, elbow or fixed");
  cmd->add_option("--q-threshold", config.q_threshold,
                  "Cumulative scree threshold t");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Principal component analysis in the graph frequency domain"};
  app.require_subcommand(1);

  gfpca::cli::RunConfig config;

  CLI::App* simulate =
      app.add_subcommand("simulate", "Run a bundled simulation scenario");
  simulate->add_option("--scenario", config.scenario, "karate or us-sensor")
      ->required();
  simulate->add_option("--seed", config.seed, "RNG seed");
  simulate->add_option("--noise", config.noise_override,
                       "Override the design noise sd");
  simulate->add_option("--coords", config.coords_csv,
                       "Coordinate CSV overriding the bundled sensor layout");
  simulate->add_option("--knn", config.knn_k, "Neighbour count");
  add_estimator_options(simulate, config);
  add_rank_options(simulate, config);
  simulate->add_option("--scaling-freq", config.scaling_freqs,
                       "Extra 1-based frequency indices to export scalings for");
  simulate->add_option("--out", config.out_dir, "Output directory");

  CLI::App* fit = app.add_subcommand("fit", "Fit a model to a signal CSV");
  add_graph_options(fit, config);
  fit->add_option("--signal", config.signal_csv, "Signal CSV")->required();
  fit->add_flag("--log1p", config.log1p, "Apply x -> log(1+x) first");
  fit->add_flag("--center,!--no-center", config.center,
                "Per-dimension centering (default on)");
  fit->add_option("--seed", config.seed, "RNG seed for the window ensemble");
  add_estimator_options(fit, config);
  add_rank_options(fit, config);
  fit->add_option("--scaling-freq", config.scaling_freqs,
                  "1-based frequency indices to export scalings for");
  fit->add_option("--out", config.out_dir, "Output directory");

  CLI::App* reconstruct =
      app.add_subcommand("reconstruct", "Reconstruct a signal with a model");
  add_graph_options(reconstruct, config);
  reconstruct->add_option("--model", config.model_file, "Model JSON file")
      ->required();
  reconstruct->add_option("--signal", config.signal_csv, "Signal CSV")
      ->required();
  reconstruct->add_option("--out", config.out_dir, "Output directory");

  CLI::App* baseline =
      app.add_subcommand("baseline", "Closed-form graph Laplacian PCA");
  add_graph_options(baseline, config);
  baseline->add_option("--signal", config.signal_csv, "Signal CSV")->required();
  baseline->add_option("--alpha", config.alpha, "Smoothness balance alpha");
  baseline->add_option("--q", config.fixed_q, "Component count");
  baseline->add_flag("--center,!--no-center", config.center,
                     "Per-dimension centering (default on)");
  baseline->add_option("--out", config.out_dir, "Output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (simulate->parsed())
    return gfpca::cli::run_simulate(config, std::cout, std::cerr);
  if (fit->parsed()) return gfpca::cli::run_fit(config, std::cout, std::cerr);
  if (reconstruct->parsed())
    return gfpca::cli::run_reconstruct(config, std::cout, std::cerr);
  if (baseline->parsed())
    return gfpca::cli::run_baseline(config, std::cout, std::cerr);
  return 2;
}
