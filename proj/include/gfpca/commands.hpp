#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gfpca/spectral.hpp"

namespace gfpca::cli {

/// Shared configuration for the CLI subcommands. Exit codes: 0 success,
/// 1 runtime/IO failure, 2 usage/validation error.
struct RunConfig {
  // inputs
  std::string scenario;      // simulate: karate | us-sensor
  std::string graph_csv;
  std::string coords_csv;
  std::string signal_csv;
  std::string model_file;
  int knn_k = 7;

  // estimation
  std::string estimator = "windowed";  // windowed | periodogram
  int windows = kDefaultWindowCount;
  double window_variance = kDefaultWindowVariance;
  bool bias_correct = false;
  bool psd_project = true;

  // rank selection
  std::string q_policy = "threshold";  // threshold | elbow | fixed
  double q_threshold = 0.95;
  int fixed_q = 0;                     // > 0 selects the fixed policy

  // preprocessing
  bool log1p = false;
  bool center = true;
  double noise_override = -1.0;        // simulate: < 0 keeps the design sd

  // misc
  std::uint64_t seed = 1;
  double alpha = 1.0;                  // baseline balance parameter
  std::vector<int> scaling_freqs;      // extra scaling exports (1-based)
  std::string out_dir = ".";
};

int run_simulate(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_fit(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_reconstruct(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_baseline(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace gfpca::cli
