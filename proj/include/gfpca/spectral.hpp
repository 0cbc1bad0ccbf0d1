#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "gfpca/graph.hpp"

namespace gfpca {

/// Graph (cross-)spectral density of a signal pair, one value per graph
/// frequency. row/col identify the pair (i, j); auto densities (i == i) are
/// real and nonnegative up to estimator noise.
struct SpectralDensity {
  Eigen::VectorXcd values;
  int row = 0;
  int col = 0;
};

/// M random windows of length n with i.i.d. Gaussian entries of mean 1 and
/// variance `variance`; reproducible from (count, variance, seed, n).
struct WindowEnsemble {
  int count = 0;
  double variance = 0.0;
  std::uint64_t seed = 0;
  Eigen::MatrixXd windows;  // n x count, one window per column
};

/// Window smoothing strength used across the library when none is given.
inline constexpr double kDefaultWindowVariance = 0.16;
inline constexpr int kDefaultWindowCount = 50;

/// Stream tag for deriving window seeds from a base seed; keeps window draws
/// decorrelated from signal-noise streams built on the same seed.
inline constexpr std::uint64_t kWindowSeedStream = 0x77696e646f777300ULL;

WindowEnsemble make_window_ensemble(int count, double variance,
                                    std::uint64_t seed, int n);

/// diag(V^H Sigma V) for a known (cross-)covariance matrix.
SpectralDensity exact_cross_spectrum(const Eigen::MatrixXcd& cov,
                                     const ShiftOperator& so);

/// (V^H x_i) .* conj(V^H x_j). Signals are assumed centered by the caller.
SpectralDensity cross_periodogram(const Eigen::VectorXcd& xi,
                                  const Eigen::VectorXcd& xj,
                                  const ShiftOperator& so);

/// Average of cross-periodograms of the windowed signals w_m .* x. With
/// correct_bias the exact window-expectation excess
/// variance * diag(V^H diag(x_i .* conj(x_j)) V) is subtracted, recovering an
/// estimate whose window-mean is the plain cross-periodogram; by default the
/// excess stays in as spectral smoothing, which is what tames the variance.
SpectralDensity windowed_cross_periodogram(const Eigen::VectorXcd& xi,
                                           const Eigen::VectorXcd& xj,
                                           const ShiftOperator& so,
                                           const WindowEnsemble& ensemble,
                                           bool correct_bias = false);

/// Squared coherence |p_xy|^2 / (p_xx p_yy); entries whose denominator falls
/// below the floor are flagged undefined instead of divided. floor < 0 picks
/// the default 1e-12 * max density.
struct Coherence {
  Eigen::VectorXd values;
  std::vector<bool> defined;
};

Coherence coherence(const SpectralDensity& pxy, const SpectralDensity& pxx,
                    const SpectralDensity& pyy, double floor = -1.0);

/// One p x p Hermitian spectral matrix P(lambda_l) per graph frequency.
struct SpectralMatrixField {
  std::vector<Eigen::MatrixXcd> matrices;
  std::vector<std::string> labels;  // dimension labels, empty or size p

  int frequencies() const { return static_cast<int>(matrices.size()); }
  int dims() const {
    return matrices.empty() ? 0 : static_cast<int>(matrices.front().rows());
  }
};

/// Estimator selector for assemble_spectral_matrices.
struct ExactSpectrum {
  // Full p x p grid of n x n cross-covariances, row-major: cov[i * p + j].
  std::vector<Eigen::MatrixXcd> covariances;
  int dims = 0;
};
struct Periodogram {};
struct Windowed {
  WindowEnsemble ensemble;
  bool correct_bias = false;
};
using Estimator = std::variant<ExactSpectrum, Periodogram, Windowed>;

/// Assembles all pairwise densities into per-frequency spectral matrices,
/// mirroring the upper triangle by conjugation. psd_project clips negative
/// eigenvalues of each matrix at zero (only windowed estimates need it).
SpectralMatrixField assemble_spectral_matrices(
    const MultivariateGraphSignal& signal, const ShiftOperator& so,
    const Estimator& estimator, bool psd_project = false);

/// Serial reference for the kernel above; identical output.
SpectralMatrixField assemble_spectral_matrices_serial(
    const MultivariateGraphSignal& signal, const ShiftOperator& so,
    const Estimator& estimator, bool psd_project = false);

/// max |offdiag(V^H Sigma V)| / max |diag(V^H Sigma V)|; zero exactly when
/// Sigma and the shift operator are simultaneously diagonalizable.
double stationarity_diagnostic(const Eigen::MatrixXcd& cov,
                               const ShiftOperator& so);

}  // namespace gfpca
