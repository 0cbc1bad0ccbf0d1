// Serial reference vs OpenMP kernels: spectral-matrix assembly, per-frequency
// eigensolves, and the Monte-Carlo reconstruction loop.

#include <benchmark/benchmark.h>

#include "gfpca/rng.hpp"
#include "gfpca/simulation.hpp"

namespace {

using namespace gfpca;

struct SensorFixture {
  ShiftOperator so;
  MultivariateGraphSignal signal;
  WindowEnsemble ensemble;
  SpectralMatrixField field;
  Eigen::MatrixXcd means;

  SensorFixture() {
    so = build_laplacian(knn_gaussian_graph(us_sensor_coordinates(), 7));
    signal = draw(us_sensor_model(), so, 1);
    for (int j = 0; j < signal.dims(); ++j)
      signal.values.col(j).array() -= signal.values.col(j).mean();
    ensemble = make_window_ensemble(kDefaultWindowCount, kDefaultWindowVariance,
                                    derive_seed(1, kWindowSeedStream), so.n());
    field = assemble_spectral_matrices_serial(signal, so,
                                              Windowed{ensemble, false}, true);
    means = Eigen::MatrixXcd::Zero(so.n(), signal.dims());
  }
};

const SensorFixture& sensor() {
  static const SensorFixture fixture;
  return fixture;
}

struct CycleFixture {
  ShiftOperator so;
  SyntheticModel model;
  GFreqPCAModel fitted;

  CycleFixture() {
    std::vector<Edge> edges;
    const int n = 16;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1.0});
    edges.push_back({0, n - 1, 1.0});
    so = build_laplacian(make_graph(n, std::move(edges)));
    model.graph_name = "cycle16";
    model.noise_sd = 0.5;
    model.components = {{{3, 2.0}}, {{3, 1.5}, {9, 0.8}}, {{9, 1.0}}, {}};
    fitted = fit_serial(exact_field(model, so),
                        Eigen::MatrixXcd::Zero(n, model.dims()), so, 1);
  }
};

const CycleFixture& cycle() {
  static const CycleFixture fixture;
  return fixture;
}

void BM_assemble_serial(benchmark::State& state) {
  const auto& f = sensor();
  for (auto _ : state) {
    auto field = assemble_spectral_matrices_serial(
        f.signal, f.so, Windowed{f.ensemble, false}, true);
    benchmark::DoNotOptimize(field);
  }
}
BENCHMARK(BM_assemble_serial)->Unit(benchmark::kMillisecond);

void BM_assemble_openmp(benchmark::State& state) {
  const auto& f = sensor();
  for (auto _ : state) {
    auto field = assemble_spectral_matrices(f.signal, f.so,
                                            Windowed{f.ensemble, false}, true);
    benchmark::DoNotOptimize(field);
  }
}
BENCHMARK(BM_assemble_openmp)->Unit(benchmark::kMillisecond);

void BM_fit_serial(benchmark::State& state) {
  const auto& f = sensor();
  for (auto _ : state) {
    auto model = fit_serial(f.field, f.means, f.so, 4);
    benchmark::DoNotOptimize(model);
  }
}
BENCHMARK(BM_fit_serial)->Unit(benchmark::kMillisecond);

void BM_fit_openmp(benchmark::State& state) {
  const auto& f = sensor();
  for (auto _ : state) {
    auto model = fit(f.field, f.means, f.so, 4);
    benchmark::DoNotOptimize(model);
  }
}
BENCHMARK(BM_fit_openmp)->Unit(benchmark::kMillisecond);

void BM_monte_carlo_serial(benchmark::State& state) {
  const auto& f = cycle();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        monte_carlo_mse_serial(f.model, f.fitted, 1, 2000, 7));
  }
}
BENCHMARK(BM_monte_carlo_serial)->Unit(benchmark::kMillisecond);

void BM_monte_carlo_openmp(benchmark::State& state) {
  const auto& f = cycle();
  for (auto _ : state) {
    benchmark::DoNotOptimize(monte_carlo_mse(f.model, f.fitted, 1, 2000, 7));
  }
}
BENCHMARK(BM_monte_carlo_openmp)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
