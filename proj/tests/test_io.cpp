#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "doctest.h"
#include "gfpca/io.hpp"
#include "gfpca/simulation.hpp"
#include "helpers.hpp"

using namespace gfpca;
using gfpca::testing::random_complex_vector;
using gfpca::testing::random_graph;
using gfpca::testing::random_psd_field;

namespace {

namespace fs = std::filesystem;

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("gfpca_io_" + std::to_string(std::rand()) +
            std::to_string(reinterpret_cast<std::uintptr_t>(this) % 100000));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

}  // namespace

TEST_CASE("format_double round trips exactly") {
  for (double v : {1.0 / 3.0, 0.1, 1e-308, 12345.6789e100, -0.0, 2.5e-17}) {
    const std::string s = format_double(v);
    CHECK(std::strtod(s.c_str(), nullptr) == v);
  }
}

TEST_CASE("edge csv round trip on the karate graph") {
  TempDir dir;
  const Graph g = builtin_karate();
  write_edge_csv(dir.path / "edges.csv", g);
  const Graph back = read_edge_csv(dir.path / "edges.csv");
  CHECK(back.n == g.n);
  REQUIRE(back.edge_count() == g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    CHECK(back.edges[e].src == g.edges[e].src);
    CHECK(back.edges[e].dst == g.edges[e].dst);
    CHECK(back.edges[e].weight == g.edges[e].weight);
  }
}

TEST_CASE("coordinate csv round trip with metric detection") {
  TempDir dir;
  const std::vector<std::array<double, 2>> pts = {{1.25, -3.5}, {0.0, 7.125}};

  write_coord_csv(dir.path / "xy.csv", pts, Metric::euclidean);
  const CoordinateTable xy = read_coord_csv(dir.path / "xy.csv");
  CHECK(xy.metric == Metric::euclidean);
  CHECK(xy.points == pts);

  write_coord_csv(dir.path / "ll.csv", pts, Metric::haversine);
  const CoordinateTable ll = read_coord_csv(dir.path / "ll.csv");
  CHECK(ll.metric == Metric::haversine);
  CHECK(ll.points == pts);
}

TEST_CASE("bundled sensor csv matches the embedded coordinates") {
  const CoordinateTable table =
      read_coord_csv(fs::path(GFPCA_DATA_DIR) / "us_sensor_coords.csv");
  const auto embedded = us_sensor_coordinates();
  REQUIRE(table.points.size() == embedded.size());
  CHECK(table.metric == Metric::euclidean);
  for (std::size_t i = 0; i < embedded.size(); ++i) {
    CHECK(table.points[i][0] == embedded[i][0]);
    CHECK(table.points[i][1] == embedded[i][1]);
  }
}

TEST_CASE("signal csv round trip preserves labels and values") {
  TempDir dir;
  std::mt19937_64 gen(131);
  MultivariateGraphSignal s;
  s.values = Eigen::MatrixXcd(6, 3);
  for (int j = 0; j < 3; ++j)
    s.values.col(j) = random_complex_vector(6, gen).real().cast<std::complex<double>>();
  s.labels = {"alpha", "beta", "gamma"};

  write_signal_csv(dir.path / "signal.csv", s);
  const MultivariateGraphSignal back = read_signal_csv(dir.path / "signal.csv");
  CHECK(back.labels == s.labels);
  CHECK((back.values - s.values).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("signal csv rejects duplicates and malformed input") {
  TempDir dir;
  {
    std::ofstream out(dir.path / "dup.csv");
    out << "a,a\n1,2\n";
  }
  CHECK_THROWS_AS(read_signal_csv(dir.path / "dup.csv"), std::invalid_argument);
  {
    std::ofstream out(dir.path / "ragged.csv");
    out << "a,b\n1,2\n3\n";
  }
  CHECK_THROWS_AS(read_signal_csv(dir.path / "ragged.csv"),
                  std::invalid_argument);
  {
    std::ofstream out(dir.path / "empty.csv");
  }
  CHECK_THROWS_AS(read_signal_csv(dir.path / "empty.csv"),
                  std::invalid_argument);
  {
    std::ofstream out(dir.path / "norows.csv");
    out << "a,b\n";
  }
  CHECK_THROWS_AS(read_signal_csv(dir.path / "norows.csv"),
                  std::invalid_argument);
  CHECK_THROWS_AS(read_signal_csv(dir.path / "missing.csv"),
                  std::runtime_error);
}

TEST_CASE("report csv round trips") {
  TempDir dir;
  std::mt19937_64 gen(137);
  const ShiftOperator so = build_laplacian(random_graph(7, gen));

  SpectralDensity d;
  d.values = random_complex_vector(7, gen);
  write_density_csv(dir.path / "density.csv", d, so);
  const SpectralDensity dback = read_density_csv(dir.path / "density.csv");
  CHECK((dback.values - d.values).cwiseAbs().maxCoeff() == 0.0);

  const Eigen::VectorXd env = random_complex_vector(7, gen).cwiseAbs();
  write_envelope_csv(dir.path / "envelope.csv", env, so);
  CHECK((read_envelope_csv(dir.path / "envelope.csv") - env)
            .cwiseAbs()
            .maxCoeff() == 0.0);

  Eigen::VectorXd fractions(4);
  fractions << 0.6, 0.25, 0.1, 0.05;
  write_scree_csv(dir.path / "scree.csv", fractions);
  const ScreeTable scree = read_scree_csv(dir.path / "scree.csv");
  CHECK((scree.fractions - fractions).cwiseAbs().maxCoeff() == 0.0);
  CHECK(scree.cumulative[3] == doctest::Approx(1.0));

  const Eigen::VectorXcd scaling = random_complex_vector(5, gen);
  write_scaling_csv(dir.path / "scaling.csv", scaling, {});
  CHECK((read_scaling_csv(dir.path / "scaling.csv") - scaling)
            .cwiseAbs()
            .maxCoeff() == 0.0);
}

TEST_CASE("model save and load round trip") {
  TempDir dir;
  std::mt19937_64 gen(139);
  const int n = 8, p = 3;
  const ShiftOperator so = build_laplacian(random_graph(n, gen));
  const SpectralMatrixField field = random_psd_field(so, p, gen);
  Eigen::MatrixXcd means(n, p);
  for (int j = 0; j < p; ++j) means.col(j) = random_complex_vector(n, gen);
  const GFreqPCAModel model = fit(field, means, so, 2);

  save_model(model, dir.path / "model.json");
  const GFreqPCAModel back = load_model(dir.path / "model.json", so);

  CHECK(back.q == model.q);
  for (int l = 0; l < n; ++l) {
    CHECK((back.power[l] - model.power[l]).cwiseAbs().maxCoeff() == 0.0);
    CHECK((back.basis[l] - model.basis[l]).cwiseAbs().maxCoeff() == 0.0);
  }
  CHECK((back.offsets - model.offsets).cwiseAbs().maxCoeff() == 0.0);

  // reconstruction through the loaded model matches the original
  MultivariateGraphSignal x;
  x.values = Eigen::MatrixXcd(n, p);
  for (int j = 0; j < p; ++j) x.values.col(j) = random_complex_vector(n, gen);
  const MultivariateGraphSignal rec_orig =
      inverse_transform(model, transform(model, x));
  const MultivariateGraphSignal rec_back =
      inverse_transform(back, transform(back, x));
  CHECK((rec_orig.values - rec_back.values).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("model load rejects a mismatched operator") {
  TempDir dir;
  std::mt19937_64 gen(149);
  const ShiftOperator so = build_laplacian(random_graph(8, gen));
  const GFreqPCAModel model =
      fit(random_psd_field(so, 2, gen), Eigen::MatrixXcd(), so, 1);
  save_model(model, dir.path / "model.json");

  const ShiftOperator other = build_laplacian(random_graph(8, gen));
  CHECK_THROWS_AS(load_model(dir.path / "model.json", other),
                  std::invalid_argument);
}

TEST_CASE("shift operator hashes separate different graphs") {
  const ShiftOperator a = build_laplacian(builtin_karate());
  const ShiftOperator b = build_laplacian(gfpca::testing::path_graph(34));
  CHECK(shift_operator_hash(a) != shift_operator_hash(b));
  const ShiftOperator a2 = build_laplacian(builtin_karate());
  CHECK(shift_operator_hash(a) == shift_operator_hash(a2));
}
