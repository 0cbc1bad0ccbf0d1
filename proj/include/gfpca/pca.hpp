#pragma once

#include <vector>

#include "gfpca/spectral.hpp"

namespace gfpca {

/// Per-frequency eigenstructure of a spectral matrix field. basis[l] holds
/// the unitary U(lambda_l) whose columns are ordered by descending eigenvalue
/// tau; rank q selects how many principal component graph signals are kept.
/// offsets holds the reconstruction offset vectors (one column per dimension)
/// for the current rank; set_rank keeps them consistent. Immutable otherwise.
struct GFreqPCAModel {
  ShiftOperator so;
  std::vector<Eigen::MatrixXcd> basis;  // U(lambda_l), p x p
  std::vector<Eigen::VectorXd> power;   // tau(lambda_l), descending, >= 0
  int q = 1;
  Eigen::MatrixXcd means;    // n x p, may be empty after deserialization
  Eigen::MatrixXcd offsets;  // n x p
  std::vector<std::string> labels;

  int frequencies() const { return static_cast<int>(basis.size()); }
  int dims() const {
    return basis.empty() ? 0 : static_cast<int>(basis.front().rows());
  }
};

/// Eigendecomposes every P(lambda_l) with descending eigenvalues, fixed
/// column phases and deterministic ordering inside ties. means supplies one
/// length-n mean vector per dimension (pass zeros for centered or zero-mean
/// data). Eigenvalues in (-1e-9, 0) are clipped to zero; more negative values
/// signal a broken estimate upstream and throw.
GFreqPCAModel fit(const SpectralMatrixField& field,
                  const Eigen::MatrixXcd& means, const ShiftOperator& so,
                  int q = -1);

/// Serial reference for the per-frequency eigensolve kernel; identical output.
GFreqPCAModel fit_serial(const SpectralMatrixField& field,
                         const Eigen::MatrixXcd& means,
                         const ShiftOperator& so, int q = -1);

/// Changes the kept rank and recomputes the reconstruction offsets.
void set_rank(GFreqPCAModel& model, int q);

struct QPolicy {
  enum class Kind { cumulative_threshold, elbow, fixed };
  Kind kind = Kind::cumulative_threshold;
  double threshold = 0.95;
  int fixed_q = 1;

  static QPolicy cumulative(double t) { return {Kind::cumulative_threshold, t, 1}; }
  static QPolicy elbow() { return {Kind::elbow, 0.0, 1}; }
  static QPolicy fixed(int q) { return {Kind::fixed, 0.0, q}; }
};

/// threshold: smallest q whose cumulative scree fraction reaches t;
/// elbow: argmax of the discrete second difference of the scree curve;
/// fixed: pass-through.
int select_q(const GFreqPCAModel& model, const QPolicy& policy);

/// Principal component graph signals Y (n x q): per frequency,
/// GFT(Y_i) = sum_k conj(u_i(lambda_l)[k]) GFT(X_k).
MultivariateGraphSignal transform(const GFreqPCAModel& model,
                                  const MultivariateGraphSignal& signal);

/// Reconstruction Xhat (n x p): per frequency,
/// GFT(Xhat_i) = sum_j u_j(lambda_l)[i] GFT(Y_j), plus the offset vectors.
MultivariateGraphSignal inverse_transform(const GFreqPCAModel& model,
                                          const MultivariateGraphSignal& pcs);

/// Minimum mean squared reconstruction error at rank q:
/// sum over frequencies of the eigenvalues beyond q.
double theoretical_error(const GFreqPCAModel& model, int q);

/// fraction_i = sum_l tau_i(lambda_l) / sum_l sum_j tau_j(lambda_l).
Eigen::VectorXd scree_fractions(const GFreqPCAModel& model);

/// tau_1 per frequency; the GPSD of the first principal component signal.
Eigen::VectorXd spectral_envelope(const GFreqPCAModel& model);

/// Unit-norm dominant eigenvector u_1 at a frequency (1-based index).
Eigen::VectorXcd optimal_scaling(const GFreqPCAModel& model, int freq_index);

/// GPSDs of the q principal component signals: density i is tau_i across
/// frequencies (cross densities between distinct components vanish).
std::vector<SpectralDensity> pc_spectra(const GFreqPCAModel& model);

/// Error-signal spectral field sum_{i>q} tau_i u_i u_i^H per frequency.
SpectralMatrixField error_spectrum(const GFreqPCAModel& model, int q);

struct AnalysisReport {
  Eigen::VectorXd envelope;               // length n
  Eigen::VectorXd scree;                  // length p, sums to 1
  Eigen::VectorXd cumulative;             // length p
  std::vector<double> theoretical_errors; // index q-1 -> error at rank q
};

AnalysisReport analyze(const GFreqPCAModel& model);

}  // namespace gfpca
