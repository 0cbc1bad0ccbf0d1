#include <random>

#include "doctest.h"
#include "gfpca/glpca.hpp"
#include "helpers.hpp"

using namespace gfpca;
using gfpca::testing::random_graph;
using gfpca::testing::random_real_vector;

namespace {

Eigen::MatrixXd make_random_data(int n, int p, std::mt19937_64& gen) {
  Eigen::MatrixXd x(n, p);
  for (int j = 0; j < p; ++j) x.col(j) = random_real_vector(n, gen);
  return x;
}

Eigen::MatrixXd random_orthonormal(int n, int q, std::mt19937_64& gen) {
  const Eigen::MatrixXd g = make_random_data(n, q, gen);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  return Eigen::MatrixXd(qr.householderQ()).leftCols(q);
}

}  // namespace

TEST_CASE("alpha = 0 reduces to classical PCA") {
  std::mt19937_64 gen(103);
  const int n = 12, p = 4, q = 2;
  const ShiftOperator so = build_laplacian(random_graph(n, gen));
  const Eigen::MatrixXd x = make_random_data(n, p, gen);

  const GLPCAModel model = glpca_fit(x, so, 0.0, q);

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(x, Eigen::ComputeThinU);
  const Eigen::MatrixXd u = svd.matrixU().leftCols(q);
  // same subspace regardless of sign conventions
  const double gap = (model.components * model.components.transpose() -
                      u * u.transpose())
                         .cwiseAbs()
                         .maxCoeff();
  CHECK(gap < 1e-9);

  // objective equals the classical PCA residual sum of trailing squared
  // singular values
  double residual = 0.0;
  for (int i = q; i < std::min(n, p); ++i)
    residual += svd.singularValues()[i] * svd.singularValues()[i];
  CHECK(std::abs(model.objective - residual) <= 1e-9 * (1.0 + residual));
}

TEST_CASE("zero data yields the bottom Laplacian eigenvectors") {
  std::mt19937_64 gen(107);
  const int n = 10, q = 3;
  const ShiftOperator so = build_laplacian(random_graph(n, gen));
  const Eigen::MatrixXd x = Eigen::MatrixXd::Zero(n, 2);
  const double alpha = 2.5;

  const GLPCAModel model = glpca_fit(x, so, alpha, q);
  const double gap =
      (model.components - so.basis.leftCols(q)).cwiseAbs().maxCoeff();
  CHECK(gap < 1e-9);

  double expected = 0.0;
  for (int i = 0; i < q; ++i) expected += alpha * so.eigenvalues[i];
  CHECK(model.objective == doctest::Approx(expected).epsilon(1e-10));
}

TEST_CASE("closed form beats random feasible points") {
  std::mt19937_64 gen(109);
  const int n = 10, p = 3, q = 2;
  const ShiftOperator so = build_laplacian(random_graph(n, gen));
  const Eigen::MatrixXd x = make_random_data(n, p, gen);

  const GLPCAModel model = glpca_fit(x, so, 1.0, q);
  for (int t = 0; t < 1000; ++t) {
    const Eigen::MatrixXd rnd = random_orthonormal(n, q, gen);
    CHECK(model.objective <= glpca_objective(x, so, rnd, 1.0) + 1e-9);
  }
}

TEST_CASE("smoothness term is non-increasing in alpha") {
  std::mt19937_64 gen(113);
  const int n = 12, p = 4, q = 2;
  const ShiftOperator so = build_laplacian(random_graph(n, gen));
  const Eigen::MatrixXd x = make_random_data(n, p, gen);

  double prev = std::numeric_limits<double>::infinity();
  for (double alpha : {0.0, 0.1, 0.5, 1.0, 2.0, 5.0, 20.0, 100.0}) {
    const GLPCAModel model = glpca_fit(x, so, alpha, q);
    const double smooth =
        (model.components.transpose() * so.matrix * model.components).trace();
    CHECK(smooth <= prev + 1e-9);
    prev = smooth;
  }
}

TEST_CASE("invariants and validation") {
  std::mt19937_64 gen(127);
  const int n = 9, p = 3;
  const ShiftOperator so = build_laplacian(random_graph(n, gen));
  const Eigen::MatrixXd x = make_random_data(n, p, gen);

  const GLPCAModel model = glpca_fit(x, so, 0.7, 2);
  const double ortho = (model.components.transpose() * model.components -
                        Eigen::MatrixXd::Identity(2, 2))
                           .cwiseAbs()
                           .maxCoeff();
  CHECK(ortho < 1e-10);
  CHECK((model.loadings - x.transpose() * model.components).cwiseAbs().maxCoeff() <
        1e-12);

  CHECK_THROWS_AS(glpca_fit(x, so, -1.0, 2), std::invalid_argument);
  CHECK_THROWS_AS(glpca_fit(x, so, 1.0, 0), std::invalid_argument);
  CHECK_THROWS_AS(glpca_fit(x, so, 1.0, n + 1), std::invalid_argument);
  Eigen::MatrixXd bad = x;
  bad(0, 0) = std::nan("");
  CHECK_THROWS_AS(glpca_fit(bad, so, 1.0, 2), std::invalid_argument);
}
