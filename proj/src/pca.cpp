#include "gfpca/pca.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "gfpca/parallel.hpp"

namespace gfpca {

namespace {

constexpr double kNegativeEigenvalueTol = 1e-9;

int argmax_modulus(const Eigen::VectorXcd& v) {
  int best = 0;
  double best_abs = std::abs(v[0]);
  for (int i = 1; i < v.size(); ++i) {
    const double a = std::abs(v[i]);
    if (a > best_abs) {
      best_abs = a;
      best = i;
    }
  }
  return best;
}

// Rotates each column so its largest-modulus entry is real positive, then
// orders columns inside groups of equal eigenvalues by that entry's index.
void normalize_columns(Eigen::VectorXd& values, Eigen::MatrixXcd& vectors) {
  const int p = static_cast<int>(values.size());
  std::vector<int> anchor(p);
  for (int j = 0; j < p; ++j) {
    const int k = argmax_modulus(vectors.col(j));
    const std::complex<double> pivot = vectors(k, j);
    const double mod = std::abs(pivot);
    if (mod > 0.0) vectors.col(j) *= std::conj(pivot) / mod;
    anchor[j] = k;
  }
  const double tie_tol = 1e-8 * std::max(1.0, std::abs(values[0]));
  int start = 0;
  while (start < p) {
    int end = start + 1;
    while (end < p && values[end - 1] - values[end] <= tie_tol) ++end;
    if (end - start > 1) {
      std::vector<int> order(end - start);
      for (int i = 0; i < end - start; ++i) order[i] = start + i;
      std::stable_sort(order.begin(), order.end(),
                       [&](int a, int b) { return anchor[a] < anchor[b]; });
      Eigen::MatrixXcd block(vectors.rows(), end - start);
      Eigen::VectorXd vals(end - start);
      for (int i = 0; i < end - start; ++i) {
        block.col(i) = vectors.col(order[i]);
        vals[i] = values[order[i]];
      }
      vectors.middleCols(start, end - start) = block;
      values.segment(start, end - start) = vals;
    }
    start = end;
  }
}

// Offset vectors mu_hat = mu - A mu with A(lambda_l) = U_q U_q^H, evaluated
// in the GFT domain.
Eigen::MatrixXcd compute_offsets(const std::vector<Eigen::MatrixXcd>& basis,
                                 int q, const Eigen::MatrixXcd& means,
                                 const ShiftOperator& so) {
  const int n = so.n();
  const int p = static_cast<int>(basis.front().rows());
  if (means.size() == 0) return Eigen::MatrixXcd::Zero(n, p);
  if (means.rows() != n || means.cols() != p)
    throw std::invalid_argument("fit: means must be n x p");
  Eigen::MatrixXcd mean_coeffs =
      so.basis.transpose().cast<std::complex<double>>() * means;  // n x p
  for (int l = 0; l < n; ++l) {
    const auto uq = basis[l].leftCols(q);
    const Eigen::VectorXcd m = mean_coeffs.row(l).transpose();
    mean_coeffs.row(l) = (m - uq * (uq.adjoint() * m)).transpose();
  }
  return so.basis.cast<std::complex<double>>() * mean_coeffs;
}

GFreqPCAModel fit_impl(const SpectralMatrixField& field,
                       const Eigen::MatrixXcd& means, const ShiftOperator& so,
                       int q, bool parallel) {
  const int n = so.n();
  const int p = field.dims();
  if (field.frequencies() != n)
    throw std::invalid_argument("fit: field frequency count does not match vertex count");
  if (p < 1) throw std::invalid_argument("fit: empty spectral field");
  if (q < 0) q = p;
  if (q < 1 || q > p) throw std::invalid_argument("fit: rank out of range");

  for (int l = 0; l < n; ++l) {
    const Eigen::MatrixXcd& m = field.matrices[l];
    if (m.rows() != p || m.cols() != p)
      throw std::invalid_argument("fit: ragged spectral field");
    if (!m.allFinite())
      throw std::invalid_argument("fit: spectral field has non-finite entries");
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale)
      throw std::invalid_argument("fit: spectral matrix is not Hermitian");
  }

  GFreqPCAModel model;
  model.so = so;
  model.labels = field.labels;
  model.basis.assign(n, Eigen::MatrixXcd());
  model.power.assign(n, Eigen::VectorXd());
  std::vector<double> min_eigenvalue(static_cast<std::size_t>(n), 0.0);

  // No exceptions may leave the loop body when it runs under OpenMP; the
  // PSD violation is flagged per frequency and raised afterwards.
  parallel_for(
      n,
      [&](int l) {
        const Eigen::MatrixXcd& m = field.matrices[l];
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
            0.5 * (m + m.adjoint()));
        Eigen::VectorXd tau = solver.eigenvalues().reverse();
        Eigen::MatrixXcd u = solver.eigenvectors().rowwise().reverse();
        min_eigenvalue[static_cast<std::size_t>(l)] = tau[p - 1];
        for (int i = 0; i < p; ++i)
          if (tau[i] < 0.0) tau[i] = 0.0;
        normalize_columns(tau, u);
        model.power[l] = std::move(tau);
        model.basis[l] = std::move(u);
      },
      parallel);

  for (double v : min_eigenvalue) {
    if (v < -kNegativeEigenvalueTol)
      throw std::runtime_error(
          "fit: spectral matrix has a significantly negative eigenvalue; "
          "estimate is not positive semi-definite");
  }

  model.q = q;
  model.means = means;
  model.offsets = compute_offsets(model.basis, q, means, so);
  return model;
}

}  // namespace

GFreqPCAModel fit(const SpectralMatrixField& field,
                  const Eigen::MatrixXcd& means, const ShiftOperator& so,
                  int q) {
  return fit_impl(field, means, so, q, /*parallel=*/true);
}

GFreqPCAModel fit_serial(const SpectralMatrixField& field,
                         const Eigen::MatrixXcd& means,
                         const ShiftOperator& so, int q) {
  return fit_impl(field, means, so, q, /*parallel=*/false);
}

void set_rank(GFreqPCAModel& model, int q) {
  if (q < 1 || q > model.dims())
    throw std::invalid_argument("set_rank: rank out of range");
  model.q = q;
  model.offsets = compute_offsets(model.basis, q, model.means, model.so);
}

int select_q(const GFreqPCAModel& model, const QPolicy& policy) {
  const int p = model.dims();
  switch (policy.kind) {
    case QPolicy::Kind::fixed:
      if (policy.fixed_q < 1 || policy.fixed_q > p)
        throw std::invalid_argument("select_q: fixed rank out of range");
      return policy.fixed_q;
    case QPolicy::Kind::cumulative_threshold: {
      if (!(policy.threshold > 0.0) || policy.threshold > 1.0)
        throw std::invalid_argument("select_q: threshold must lie in (0, 1]");
      const Eigen::VectorXd f = scree_fractions(model);
      double cum = 0.0;
      for (int i = 0; i < p; ++i) {
        cum += f[i];
        if (cum >= policy.threshold) return i + 1;
      }
      return p;
    }
    case QPolicy::Kind::elbow: {
      const Eigen::VectorXd f = scree_fractions(model);
      int best = 1;
      double best_curv = -std::numeric_limits<double>::infinity();
      for (int i = 1; i + 1 < p; ++i) {
        const double curv = f[i - 1] - 2.0 * f[i] + f[i + 1];
        if (curv > best_curv) {
          best_curv = curv;
          best = i + 1;
        }
      }
      return best;
    }
  }
  throw std::logic_error("select_q: unknown policy");
}

MultivariateGraphSignal transform(const GFreqPCAModel& model,
                                  const MultivariateGraphSignal& signal) {
  const int n = model.so.n();
  const int p = model.dims();
  const int q = model.q;
  if (signal.vertices() != n || signal.dims() != p)
    throw std::invalid_argument("transform: signal shape does not match model");

  Eigen::MatrixXcd coeffs =
      model.so.basis.transpose().cast<std::complex<double>>() * signal.values;
  Eigen::MatrixXcd pcs(n, q);
  for (int l = 0; l < n; ++l) {
    const auto uq = model.basis[l].leftCols(q);
    pcs.row(l) = (uq.adjoint() * coeffs.row(l).transpose()).transpose();
  }
  MultivariateGraphSignal out;
  out.values = model.so.basis.cast<std::complex<double>>() * pcs;
  out.labels.reserve(q);
  for (int i = 1; i <= q; ++i) out.labels.push_back("PC" + std::to_string(i));
  return out;
}

MultivariateGraphSignal inverse_transform(const GFreqPCAModel& model,
                                          const MultivariateGraphSignal& pcs) {
  const int n = model.so.n();
  const int p = model.dims();
  const int q = model.q;
  if (pcs.vertices() != n || pcs.dims() != q)
    throw std::invalid_argument("inverse_transform: component shape does not match model");

  Eigen::MatrixXcd coeffs =
      model.so.basis.transpose().cast<std::complex<double>>() * pcs.values;
  Eigen::MatrixXcd rec(n, p);
  for (int l = 0; l < n; ++l) {
    const auto uq = model.basis[l].leftCols(q);
    rec.row(l) = (uq * coeffs.row(l).transpose()).transpose();
  }
  MultivariateGraphSignal out;
  out.values = model.so.basis.cast<std::complex<double>>() * rec;
  if (model.offsets.size() != 0) out.values += model.offsets;
  out.labels = model.labels;
  return out;
}

double theoretical_error(const GFreqPCAModel& model, int q) {
  const int p = model.dims();
  if (q < 1 || q > p) throw std::invalid_argument("theoretical_error: rank out of range");
  double total = 0.0;
  for (const Eigen::VectorXd& tau : model.power)
    total += tau.tail(p - q).sum();
  return total;
}

Eigen::VectorXd scree_fractions(const GFreqPCAModel& model) {
  const int p = model.dims();
  Eigen::VectorXd sums = Eigen::VectorXd::Zero(p);
  for (const Eigen::VectorXd& tau : model.power) sums += tau;
  const double total = sums.sum();
  if (total <= 0.0)
    throw std::runtime_error("scree: spectral field carries no power");
  return sums / total;
}

Eigen::VectorXd spectral_envelope(const GFreqPCAModel& model) {
  const int n = model.frequencies();
  Eigen::VectorXd env(n);
  for (int l = 0; l < n; ++l) env[l] = model.power[l][0];
  return env;
}

Eigen::VectorXcd optimal_scaling(const GFreqPCAModel& model, int freq_index) {
  if (freq_index < 1 || freq_index > model.frequencies())
    throw std::invalid_argument("optimal_scaling: frequency index out of range");
  return model.basis[freq_index - 1].col(0);
}

std::vector<SpectralDensity> pc_spectra(const GFreqPCAModel& model) {
  const int n = model.frequencies();
  std::vector<SpectralDensity> out(static_cast<std::size_t>(model.q));
  for (int i = 0; i < model.q; ++i) {
    out[i].row = i;
    out[i].col = i;
    out[i].values.resize(n);
    for (int l = 0; l < n; ++l) out[i].values[l] = model.power[l][i];
  }
  return out;
}

SpectralMatrixField error_spectrum(const GFreqPCAModel& model, int q) {
  const int p = model.dims();
  if (q < 1 || q > p) throw std::invalid_argument("error_spectrum: rank out of range");
  const int n = model.frequencies();
  SpectralMatrixField field;
  field.labels = model.labels;
  field.matrices.assign(n, Eigen::MatrixXcd::Zero(p, p));
  for (int l = 0; l < n; ++l) {
    const auto tail_u = model.basis[l].rightCols(p - q);
    const Eigen::VectorXd tail_tau = model.power[l].tail(p - q);
    field.matrices[l] = tail_u * tail_tau.asDiagonal() * tail_u.adjoint();
  }
  return field;
}

AnalysisReport analyze(const GFreqPCAModel& model) {
  AnalysisReport report;
  report.envelope = spectral_envelope(model);
  report.scree = scree_fractions(model);
  report.cumulative = report.scree;
  for (int i = 1; i < report.cumulative.size(); ++i)
    report.cumulative[i] += report.cumulative[i - 1];
  const int p = model.dims();
  report.theoretical_errors.resize(static_cast<std::size_t>(p));
  for (int q = 1; q <= p; ++q)
    report.theoretical_errors[static_cast<std::size_t>(q - 1)] =
        theoretical_error(model, q);
  return report;
}

}  // namespace gfpca
