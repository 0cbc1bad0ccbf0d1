#include <cmath>
#include <random>

#include "doctest.h"
#include "gfpca/graph.hpp"
#include "helpers.hpp"

using namespace gfpca;
using gfpca::testing::path_graph;
using gfpca::testing::random_complex_vector;
using gfpca::testing::random_graph;

TEST_CASE("laplacian of the 2-vertex path") {
  const ShiftOperator so = build_laplacian(path_graph(2));
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(so.eigenvalues[0]) < 1e-12);
  CHECK(so.eigenvalues[1] == doctest::Approx(2.0));
  CHECK(so.basis(0, 0) == doctest::Approx(s));
  CHECK(so.basis(1, 0) == doctest::Approx(s));
  CHECK(so.basis(0, 1) == doctest::Approx(s));
  CHECK(so.basis(1, 1) == doctest::Approx(-s));
}

TEST_CASE("laplacian of an edgeless graph is the zero operator") {
  const Graph g = make_graph(3, {});
  const ShiftOperator so = build_laplacian(g);
  CHECK(so.matrix.cwiseAbs().maxCoeff() == 0.0);
  CHECK(so.eigenvalues.cwiseAbs().maxCoeff() == 0.0);
  // tie ordering keeps the standard basis
  CHECK((so.basis - Eigen::MatrixXd::Identity(3, 3)).cwiseAbs().maxCoeff() ==
        doctest::Approx(0.0).scale(1.0));
}

TEST_CASE("karate club graph") {
  const Graph g = builtin_karate();
  CHECK(g.n == 34);
  CHECK(g.edge_count() == 78);

  const Eigen::MatrixXd w = adjacency_matrix(g);
  CHECK((w - w.transpose()).cwiseAbs().maxCoeff() == 0.0);

  const ShiftOperator so = build_laplacian(g);
  // connected: exactly one eigenvalue at zero, so the Laplacian has rank 33
  const double zero_tol = 1e-8 * so.eigenvalues[33];
  CHECK(std::abs(so.eigenvalues[0]) <= zero_tol);
  CHECK(so.eigenvalues[1] > zero_tol);
}

TEST_CASE("graph validation") {
  CHECK_THROWS_AS(make_graph(2, {{0, 0, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(make_graph(2, {{0, 5, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(make_graph(2, {{0, 1, -1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(make_graph(2, {{0, 1, std::nan("")}}), std::invalid_argument);
  CHECK_THROWS_AS(make_graph(3, {{0, 1, 1.0}, {1, 0, 1.0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_laplacian(make_graph(2, {{0, 1, 1.0}}, true)),
                  std::invalid_argument);
}

TEST_CASE("knn graph on three collinear points") {
  const std::vector<std::array<double, 2>> pts = {{0, 0}, {1, 0}, {2, 0}};
  const Graph g = knn_gaussian_graph(pts, 1);
  REQUIRE(g.edge_count() == 2);
  CHECK(g.edges[0].src == 0);
  CHECK(g.edges[0].dst == 1);
  CHECK(g.edges[1].src == 1);
  CHECK(g.edges[1].dst == 2);
  // ave = (1 + 1 + 2) / 3; w01 = exp(-1 / ave^2) = exp(-9/16)
  const double ave = 4.0 / 3.0;
  CHECK(g.edges[0].weight == doctest::Approx(std::exp(-1.0 / (ave * ave))));
  CHECK(g.edges[0].weight == doctest::Approx(std::exp(-9.0 / 16.0)));
}

TEST_CASE("knn graph with k = n-1 is complete") {
  std::mt19937_64 gen(7);
  std::vector<std::array<double, 2>> pts(6);
  std::uniform_real_distribution<double> u(0.0, 10.0);
  for (auto& p : pts) p = {u(gen), u(gen)};
  const Graph g = knn_gaussian_graph(pts, 5);
  CHECK(g.edge_count() == 15);
}

TEST_CASE("knn graph weights are symmetric and in (0, 1]") {
  std::mt19937_64 gen(11);
  std::vector<std::array<double, 2>> pts(30);
  std::uniform_real_distribution<double> u(0.0, 5.0);
  for (auto& p : pts) p = {u(gen), u(gen)};
  const Graph g = knn_gaussian_graph(pts, 4);
  const Eigen::MatrixXd w = adjacency_matrix(g);
  CHECK((w - w.transpose()).cwiseAbs().maxCoeff() == 0.0);
  for (const Edge& e : g.edges) {
    CHECK(e.weight > 0.0);
    CHECK(e.weight <= 1.0);
  }
}

TEST_CASE("knn graph allows duplicate points with unit weight") {
  const std::vector<std::array<double, 2>> pts = {{0, 0}, {0, 0}, {3, 0}};
  const Graph g = knn_gaussian_graph(pts, 1);
  bool found = false;
  for (const Edge& e : g.edges) {
    if (e.src == 0 && e.dst == 1) {
      found = true;
      CHECK(e.weight == 1.0);
    }
  }
  CHECK(found);
}

TEST_CASE("knn graph rejects k >= n") {
  const std::vector<std::array<double, 2>> pts = {{0, 0}, {1, 0}};
  CHECK_THROWS_AS(knn_gaussian_graph(pts, 2), std::invalid_argument);
}

TEST_CASE("haversine distance") {
  // one degree of latitude is about 111.2 km
  const double d = point_distance({0.0, 0.0}, {1.0, 0.0}, Metric::haversine);
  CHECK(d == doctest::Approx(111.19).epsilon(0.01));
}

TEST_CASE("gft maps eigenvectors to coordinate vectors") {
  const ShiftOperator so = build_laplacian(builtin_karate());
  const Eigen::VectorXcd coeffs =
      gft(so.basis.col(2).cast<std::complex<double>>(), so);
  Eigen::VectorXcd expected = Eigen::VectorXcd::Zero(34);
  expected[2] = 1.0;
  CHECK((coeffs - expected).cwiseAbs().maxCoeff() < 1e-12);

  CHECK(gft(Eigen::VectorXcd::Zero(34), so).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("gft on the 2-path matches hand inner products") {
  const ShiftOperator so = build_laplacian(path_graph(2));
  std::mt19937_64 gen(3);
  const Eigen::VectorXcd x = random_complex_vector(2, gen);
  const Eigen::VectorXcd coeffs = gft(x, so);
  const std::complex<double> c0 =
      (x[0] + x[1]) / std::sqrt(2.0);  // <v1, x> with v1 = (1,1)/sqrt(2)
  const std::complex<double> c1 = (x[0] - x[1]) / std::sqrt(2.0);
  CHECK(std::abs(coeffs[0] - c0) < 1e-14);
  CHECK(std::abs(coeffs[1] - c1) < 1e-14);
}

TEST_CASE("gft and igft are mutually inverse") {
  std::mt19937_64 gen(5);
  const ShiftOperator so = build_laplacian(random_graph(12, gen));
  for (int trial = 0; trial < 10; ++trial) {
    const Eigen::VectorXcd x = random_complex_vector(12, gen);
    CHECK((igft(gft(x, so), so) - x).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((gft(igft(x, so), so) - x).cwiseAbs().maxCoeff() < 1e-12);
  }
  // coordinate vector maps back to the eigenvector
  Eigen::VectorXcd e3 = Eigen::VectorXcd::Zero(12);
  e3[3] = 1.0;
  CHECK((igft(e3, so) - so.basis.col(3).cast<std::complex<double>>())
            .cwiseAbs()
            .maxCoeff() < 1e-14);
  CHECK(igft(Eigen::VectorXcd::Zero(12), so).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("gft rejects length mismatches") {
  const ShiftOperator so = build_laplacian(path_graph(3));
  CHECK_THROWS_AS(gft(Eigen::VectorXcd::Zero(2), so), std::invalid_argument);
  CHECK_THROWS_AS(igft(Eigen::VectorXcd::Zero(4), so), std::invalid_argument);
  CHECK_THROWS_AS(
      apply_filter(Eigen::VectorXcd::Zero(4), Eigen::VectorXcd::Zero(3), so),
      std::invalid_argument);
}

TEST_CASE("filtering: identity, projection, composition, linearity") {
  std::mt19937_64 gen(9);
  const ShiftOperator so = build_laplacian(random_graph(10, gen));
  const int n = 10;
  const Eigen::VectorXcd x = random_complex_vector(n, gen);

  const Eigen::VectorXcd ones = Eigen::VectorXcd::Ones(n);
  CHECK((apply_filter(ones, x, so) - x).cwiseAbs().maxCoeff() < 1e-12);

  Eigen::VectorXcd ind = Eigen::VectorXcd::Zero(n);
  ind[4] = 1.0;
  const Eigen::VectorXcd proj = apply_filter(ind, x, so);
  const Eigen::VectorXcd v4 = so.basis.col(4).cast<std::complex<double>>();
  CHECK((proj - v4 * v4.dot(x)).cwiseAbs().maxCoeff() < 1e-12);

  const Eigen::VectorXcd h1 = random_complex_vector(n, gen);
  const Eigen::VectorXcd h2 = random_complex_vector(n, gen);
  const Eigen::VectorXcd composed =
      apply_filter(h2, apply_filter(h1, x, so), so);
  const Eigen::VectorXcd direct = apply_filter(h1.cwiseProduct(h2), x, so);
  CHECK((composed - direct).cwiseAbs().maxCoeff() < 1e-12);

  const Eigen::VectorXcd y = random_complex_vector(n, gen);
  const std::complex<double> a{1.3, -0.2}, b{-0.7, 2.1};
  const Eigen::VectorXcd lhs = apply_filter(h1, a * x + b * y, so);
  const Eigen::VectorXcd rhs =
      a * apply_filter(h1, x, so) + b * apply_filter(h1, y, so);
  CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("shift operator invariants on random graphs") {
  std::mt19937_64 gen(13);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 4 + static_cast<int>(gen() % 12);
    const ShiftOperator so = build_laplacian(random_graph(n, gen));

    const double ortho =
        (so.basis.transpose() * so.basis - Eigen::MatrixXd::Identity(n, n))
            .cwiseAbs()
            .maxCoeff();
    CHECK(ortho < 1e-12 * n);

    const double recon =
        (so.matrix -
         so.basis * so.eigenvalues.asDiagonal() * so.basis.transpose())
            .cwiseAbs()
            .maxCoeff();
    CHECK(recon <= 1e-10 * (1.0 + so.matrix.cwiseAbs().maxCoeff()));

    for (int l = 0; l + 1 < n; ++l)
      CHECK(so.eigenvalues[l] <= so.eigenvalues[l + 1]);

    // phase convention: the largest-modulus entry of each eigenvector is > 0
    for (int l = 0; l < n; ++l) {
      Eigen::Index idx;
      so.basis.col(l).cwiseAbs().maxCoeff(&idx);
      CHECK(so.basis(idx, l) > 0.0);
    }
  }
}

TEST_CASE("shift operator rejects asymmetric and non-finite input") {
  Eigen::MatrixXd m(2, 2);
  m << 0.0, 1.0, 2.0, 0.0;
  CHECK_THROWS_AS(make_shift_operator(m), std::invalid_argument);
  m << 0.0, std::nan(""), std::nan(""), 0.0;
  CHECK_THROWS_AS(make_shift_operator(m), std::invalid_argument);
}

TEST_CASE("signal labels must match dimension count") {
  CHECK_THROWS_AS(make_signal(Eigen::MatrixXcd::Zero(3, 2), {"a"}),
                  std::invalid_argument);
  const MultivariateGraphSignal s =
      make_signal(Eigen::MatrixXcd::Zero(3, 2), {"a", "b"});
  CHECK(s.vertices() == 3);
  CHECK(s.dims() == 2);
}

