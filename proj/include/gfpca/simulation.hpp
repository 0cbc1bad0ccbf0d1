#pragma once

#include <cstdint>

#include "gfpca/pca.hpp"

namespace gfpca {

/// One deterministic basis component of a synthetic signal dimension:
/// amplitude * v_{freq_index} with a 1-based frequency index.
struct SignalComponent {
  int freq_index = 1;
  double amplitude = 0.0;
};

/// Synthetic stationary signal design: per dimension a list of planted basis
/// components plus i.i.d. Gaussian vertex noise of sd noise_sd times the
/// per-dimension multiplier.
struct SyntheticModel {
  std::string graph_name;
  std::vector<std::vector<SignalComponent>> components;
  double noise_sd = 0.5;
  std::vector<double> noise_multipliers;  // empty means all ones
  std::uint64_t seed = 0;

  int dims() const { return static_cast<int>(components.size()); }
  double noise_sd_for(int dim) const {
    return noise_sd *
           (noise_multipliers.empty() ? 1.0 : noise_multipliers[dim]);
  }
};

/// 12-dimensional karate club design: dimensions 1-3 ride v_10, 4-6 ride
/// v_20, 7-9 ride both, 10-12 are pure noise; sd 0.5.
SyntheticModel karate_model();

/// 12-dimensional sensor network design over v_50, v_100 and v_150; the last
/// dimension is pure noise at twice the base sd. Warns on stderr when the
/// coordinate count differs from the bundled 218-site layout.
SyntheticModel us_sensor_model(int coord_count = 218);

/// Bundled 218-site sensor layout (planar x/y), also shipped as
/// data/us_sensor_coords.csv.
std::vector<std::array<double, 2>> us_sensor_coordinates();

/// One realization of the model on the given operator; reproducible from the
/// seed, with an independent stream per dimension.
MultivariateGraphSignal draw(const SyntheticModel& model,
                             const ShiftOperator& so, std::uint64_t seed);

/// Analytic spectral field of the model: P(lambda_l)_{ij} =
/// sum over shared components at l of c_i c_j, plus sigma_i^2 on the
/// diagonal. Exactly Hermitian PSD; the ground truth for oracle tests.
SpectralMatrixField exact_field(const SyntheticModel& model,
                                const ShiftOperator& so);

/// Average over `replicates` fresh draws of the total squared reconstruction
/// error at rank q under the fitted model's filters.
double monte_carlo_mse(const SyntheticModel& model,
                       const GFreqPCAModel& fitted, int q, int replicates,
                       std::uint64_t seed);

/// Serial reference for the Monte-Carlo kernel; identical output.
double monte_carlo_mse_serial(const SyntheticModel& model,
                              const GFreqPCAModel& fitted, int q,
                              int replicates, std::uint64_t seed);

}  // namespace gfpca
