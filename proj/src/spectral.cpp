#include "gfpca/spectral.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <utility>

#include "gfpca/parallel.hpp"
#include "gfpca/rng.hpp"

namespace gfpca {

WindowEnsemble make_window_ensemble(int count, double variance,
                                    std::uint64_t seed, int n) {
  if (count < 1) throw std::invalid_argument("window ensemble: count must be >= 1");
  if (variance < 0.0)
    throw std::invalid_argument("window ensemble: variance must be >= 0");
  if (n < 1) throw std::invalid_argument("window ensemble: n must be >= 1");
  WindowEnsemble e;
  e.count = count;
  e.variance = variance;
  e.seed = seed;
  e.windows.resize(n, count);
  const double sd = std::sqrt(variance);
  for (int m = 0; m < count; ++m) {
    GaussianStream g(derive_seed(seed, static_cast<std::uint64_t>(m)));
    for (int u = 0; u < n; ++u) e.windows(u, m) = 1.0 + sd * g.next();
  }
  return e;
}

SpectralDensity exact_cross_spectrum(const Eigen::MatrixXcd& cov,
                                     const ShiftOperator& so) {
  const int n = so.n();
  if (cov.rows() != n || cov.cols() != n)
    throw std::invalid_argument("exact spectrum: covariance must be n x n");
  SpectralDensity d;
  d.values.resize(n);
  const Eigen::MatrixXcd t = cov * so.basis;
  for (int l = 0; l < n; ++l)
    d.values[l] = so.basis.col(l).cast<std::complex<double>>().dot(t.col(l));
  return d;
}

SpectralDensity cross_periodogram(const Eigen::VectorXcd& xi,
                                  const Eigen::VectorXcd& xj,
                                  const ShiftOperator& so) {
  if (xi.size() != so.n() || xj.size() != so.n())
    throw std::invalid_argument("periodogram: signal length does not match vertex count");
  SpectralDensity d;
  d.values = gft(xi, so).cwiseProduct(gft(xj, so).conjugate());
  return d;
}

namespace {

// variance * diag(V^H diag(xi .* conj(xj)) V), the window-expectation excess.
Eigen::VectorXcd window_bias(const Eigen::VectorXcd& xi,
                             const Eigen::VectorXcd& xj,
                             const ShiftOperator& so, double variance) {
  const Eigen::VectorXcd d = xi.cwiseProduct(xj.conjugate());
  const Eigen::MatrixXd v2 = so.basis.cwiseProduct(so.basis);
  return variance * (v2.transpose() * d);
}

}  // namespace

SpectralDensity windowed_cross_periodogram(const Eigen::VectorXcd& xi,
                                           const Eigen::VectorXcd& xj,
                                           const ShiftOperator& so,
                                           const WindowEnsemble& ensemble,
                                           bool correct_bias) {
  const int n = so.n();
  if (xi.size() != n || xj.size() != n)
    throw std::invalid_argument("windowed periodogram: signal length does not match vertex count");
  if (ensemble.count < 1 || ensemble.windows.cols() != ensemble.count)
    throw std::invalid_argument("windowed periodogram: empty window ensemble");
  if (ensemble.windows.rows() != n)
    throw std::invalid_argument("windowed periodogram: window length does not match vertex count");

  Eigen::VectorXcd acc = Eigen::VectorXcd::Zero(n);
  for (int m = 0; m < ensemble.count; ++m) {
    const Eigen::VectorXcd w =
        ensemble.windows.col(m).cast<std::complex<double>>();
    const Eigen::VectorXcd gi = gft(xi.cwiseProduct(w), so);
    const Eigen::VectorXcd gj = gft(xj.cwiseProduct(w), so);
    acc += gi.cwiseProduct(gj.conjugate());
  }
  SpectralDensity d;
  d.values = acc / static_cast<double>(ensemble.count);
  if (correct_bias)
    d.values -= window_bias(xi, xj, so, ensemble.variance);
  return d;
}

Coherence coherence(const SpectralDensity& pxy, const SpectralDensity& pxx,
                    const SpectralDensity& pyy, double floor) {
  const auto n = pxy.values.size();
  if (pxx.values.size() != n || pyy.values.size() != n)
    throw std::invalid_argument("coherence: density lengths differ");
  if (floor < 0.0) {
    const double peak =
        std::max(pxx.values.real().maxCoeff(), pyy.values.real().maxCoeff());
    floor = 1e-12 * peak;
  }
  Coherence c;
  c.values = Eigen::VectorXd::Zero(n);
  c.defined.assign(static_cast<std::size_t>(n), true);
  for (Eigen::Index l = 0; l < n; ++l) {
    const double dx = pxx.values[l].real();
    const double dy = pyy.values[l].real();
    if (dx < floor || dy < floor) {
      c.defined[static_cast<std::size_t>(l)] = false;
      continue;
    }
    c.values[l] = std::norm(pxy.values[l]) / (dx * dy);
  }
  return c;
}

namespace {

void clip_negative_eigenvalues(Eigen::MatrixXcd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
  Eigen::VectorXd ev = solver.eigenvalues().cwiseMax(0.0);
  m = solver.eigenvectors() * ev.asDiagonal() *
      solver.eigenvectors().adjoint();
  m = 0.5 * (m + m.adjoint().eval());
}

SpectralMatrixField assemble_impl(const MultivariateGraphSignal& signal,
                                  const ShiftOperator& so,
                                  const Estimator& estimator, bool psd_project,
                                  bool parallel) {
  const int n = so.n();
  const int p_signal = signal.dims();

  int p = p_signal;
  if (const auto* exact = std::get_if<ExactSpectrum>(&estimator)) {
    p = exact->dims;
    if (p < 1) throw std::invalid_argument("assemble: exact estimator needs dims >= 1");
    if (static_cast<int>(exact->covariances.size()) != p * p)
      throw std::invalid_argument("assemble: exact estimator needs a full p x p covariance grid");
    if (p_signal > 0 && p_signal != p)
      throw std::invalid_argument("assemble: signal dimension does not match covariance grid");
  } else {
    if (p < 1) throw std::invalid_argument("assemble: signal has no dimensions");
    if (signal.vertices() != n)
      throw std::invalid_argument("assemble: signal length does not match vertex count");
  }

  SpectralMatrixField field;
  field.labels = signal.labels;
  field.matrices.assign(n, Eigen::MatrixXcd::Zero(p, p));

  // Upper-triangle pairs, mirrored by conjugation below.
  const int pairs = p * (p + 1) / 2;
  std::vector<std::pair<int, int>> index(pairs);
  for (int i = 0, t = 0; i < p; ++i)
    for (int j = i; j < p; ++j) index[t++] = {i, j};

  std::vector<Eigen::VectorXcd> density(pairs);
  parallel_for(
      pairs,
      [&](int t) {
        const auto [i, j] = index[t];
        if (const auto* exact = std::get_if<ExactSpectrum>(&estimator)) {
          density[t] =
              exact_cross_spectrum(exact->covariances[i * p + j], so).values;
        } else if (std::holds_alternative<Periodogram>(estimator)) {
          density[t] =
              cross_periodogram(signal.values.col(i), signal.values.col(j), so)
                  .values;
        } else {
          const auto& w = std::get<Windowed>(estimator);
          density[t] = windowed_cross_periodogram(signal.values.col(i),
                                                  signal.values.col(j), so,
                                                  w.ensemble, w.correct_bias)
                           .values;
        }
      },
      parallel);

  for (int t = 0; t < pairs; ++t) {
    const auto [i, j] = index[t];
    for (int l = 0; l < n; ++l) {
      if (i == j) {
        field.matrices[l](i, i) = density[t][l].real();
      } else {
        field.matrices[l](i, j) = density[t][l];
        field.matrices[l](j, i) = std::conj(density[t][l]);
      }
    }
  }

  if (psd_project) {
    parallel_for(
        n, [&](int l) { clip_negative_eigenvalues(field.matrices[l]); },
        parallel);
  }
  return field;
}

}  // namespace

SpectralMatrixField assemble_spectral_matrices(
    const MultivariateGraphSignal& signal, const ShiftOperator& so,
    const Estimator& estimator, bool psd_project) {
  return assemble_impl(signal, so, estimator, psd_project, /*parallel=*/true);
}

SpectralMatrixField assemble_spectral_matrices_serial(
    const MultivariateGraphSignal& signal, const ShiftOperator& so,
    const Estimator& estimator, bool psd_project) {
  return assemble_impl(signal, so, estimator, psd_project, /*parallel=*/false);
}

double stationarity_diagnostic(const Eigen::MatrixXcd& cov,
                               const ShiftOperator& so) {
  const int n = so.n();
  if (cov.rows() != n || cov.cols() != n)
    throw std::invalid_argument("stationarity: covariance must be n x n");
  const Eigen::MatrixXcd t =
      so.basis.transpose().cast<std::complex<double>>() * cov *
      so.basis.cast<std::complex<double>>();
  double max_diag = 0.0;
  double max_off = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double a = std::abs(t(i, j));
      if (i == j)
        max_diag = std::max(max_diag, a);
      else
        max_off = std::max(max_off, a);
    }
  }
  if (max_diag == 0.0) return max_off == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return max_off / max_diag;
}

}  // namespace gfpca
