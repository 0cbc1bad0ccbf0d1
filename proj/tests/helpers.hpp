#pragma once

#include <complex>
#include <random>
#include <vector>

#include "gfpca/pca.hpp"
#include "gfpca/rng.hpp"

namespace gfpca::testing {

inline Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1.0});
  return make_graph(n, std::move(edges));
}

inline Graph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1.0});
  edges.push_back({0, n - 1, 1.0});
  return make_graph(n, std::move(edges));
}

/// Random connected weighted graph: a random spanning tree plus extra edges.
inline Graph random_graph(int n, std::mt19937_64& gen) {
  std::uniform_real_distribution<double> weight(0.2, 2.0);
  std::uniform_int_distribution<int> pick(0, n * n);
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) {
    const int j = static_cast<int>(gen() % static_cast<std::uint64_t>(i));
    edges.push_back({j, i, weight(gen)});
  }
  const int extra = n / 2;
  for (int t = 0; t < extra; ++t) {
    const int i = static_cast<int>(gen() % static_cast<std::uint64_t>(n));
    const int j = static_cast<int>(gen() % static_cast<std::uint64_t>(n));
    if (i == j) continue;
    const int a = std::min(i, j);
    const int b = std::max(i, j);
    bool dup = false;
    for (const Edge& e : edges) dup = dup || (e.src == a && e.dst == b);
    if (!dup) edges.push_back({a, b, weight(gen)});
  }
  return make_graph(n, std::move(edges));
}

inline Eigen::VectorXcd random_complex_vector(int n, std::mt19937_64& gen) {
  std::normal_distribution<double> normal;
  Eigen::VectorXcd v(n);
  for (int i = 0; i < n; ++i) v[i] = {normal(gen), normal(gen)};
  return v;
}

inline Eigen::VectorXd random_real_vector(int n, std::mt19937_64& gen) {
  std::normal_distribution<double> normal;
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v[i] = normal(gen);
  return v;
}

/// Hermitian PSD p x p matrix B B^H with complex Gaussian B.
inline Eigen::MatrixXcd random_psd_matrix(int p, std::mt19937_64& gen) {
  std::normal_distribution<double> normal;
  Eigen::MatrixXcd b(p, p);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) b(i, j) = {normal(gen), normal(gen)};
  Eigen::MatrixXcd m = b * b.adjoint();
  return 0.5 * (m + m.adjoint().eval());
}

inline SpectralMatrixField random_psd_field(const ShiftOperator& so, int p,
                                            std::mt19937_64& gen) {
  SpectralMatrixField field;
  field.matrices.reserve(static_cast<std::size_t>(so.n()));
  for (int l = 0; l < so.n(); ++l)
    field.matrices.push_back(random_psd_matrix(p, gen));
  return field;
}

/// Unitary matrix whose first column equals the given unit vector
/// (Gram-Schmidt completion over the standard basis).
inline Eigen::MatrixXcd unitary_from_first_column(const Eigen::VectorXcd& b) {
  const int p = static_cast<int>(b.size());
  Eigen::MatrixXcd u(p, p);
  u.col(0) = b / b.norm();
  int next = 0;
  for (int j = 1; j < p; ++j) {
    Eigen::VectorXcd candidate;
    while (true) {
      candidate = Eigen::VectorXcd::Zero(p);
      candidate[next++] = 1.0;
      for (int k = 0; k < j; ++k)
        candidate -= u.col(k) * u.col(k).dot(candidate);
      if (candidate.norm() > 1e-6) break;
    }
    u.col(j) = candidate / candidate.norm();
  }
  return u;
}

}  // namespace gfpca::testing
