#include "gfpca/simulation.hpp"

#include <iostream>
#include <stdexcept>

#include "gfpca/parallel.hpp"
#include "gfpca/rng.hpp"

namespace gfpca {

SyntheticModel karate_model() {
  SyntheticModel m;
  m.graph_name = "karate";
  m.noise_sd = 0.5;
  m.components = {
      {{10, 1.0}},            // X1
      {{10, 2.5}},            // X2
      {{10, 3.5}},            // X3
      {{20, 2.0}},            // X4
      {{20, 1.7}},            // X5
      {{20, 3.2}},            // X6
      {{10, 2.1}, {20, 0.9}}, // X7
      {{10, 1.4}, {20, 2.0}}, // X8
      {{10, 2.5}, {20, 2.2}}, // X9
      {},                     // X10
      {},                     // X11
      {},                     // X12
  };
  return m;
}

SyntheticModel us_sensor_model(int coord_count) {
  if (coord_count != 218)
    std::cerr << "warning: us-sensor design expects 218 coordinates, got "
              << coord_count << "\n";
  SyntheticModel m;
  m.graph_name = "us-sensor";
  m.noise_sd = 0.5;
  m.components = {
      {{50, 3.0}},              // X1
      {{50, 1.5}},              // X2
      {{50, 2.0}},              // X3
      {{100, 2.0}},             // X4
      {{100, 4.0}},             // X5
      {{100, 3.0}},             // X6
      {{150, 5.0}},             // X7
      {{150, 2.0}},             // X8
      {{150, 1.5}},             // X9
      {{50, 2.0}, {100, 4.0}},  // X10
      {{100, 3.0}, {150, 2.5}}, // X11
      {},                       // X12
  };
  m.noise_multipliers = {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2};
  return m;
}

namespace {

void check_model(const SyntheticModel& model, const ShiftOperator& so) {
  const int n = so.n();
  if (model.dims() < 1)
    throw std::invalid_argument("synthetic model: no dimensions");
  if (model.noise_sd < 0.0)
    throw std::invalid_argument("synthetic model: negative noise sd");
  if (!model.noise_multipliers.empty() &&
      static_cast<int>(model.noise_multipliers.size()) != model.dims())
    throw std::invalid_argument("synthetic model: noise multiplier count mismatch");
  for (const auto& comps : model.components)
    for (const SignalComponent& c : comps)
      if (c.freq_index < 1 || c.freq_index > n)
        throw std::invalid_argument("synthetic model: frequency index out of range");
}

}  // namespace

MultivariateGraphSignal draw(const SyntheticModel& model,
                             const ShiftOperator& so, std::uint64_t seed) {
  check_model(model, so);
  const int n = so.n();
  const int p = model.dims();
  Eigen::MatrixXcd values = Eigen::MatrixXcd::Zero(n, p);
  for (int i = 0; i < p; ++i) {
    Eigen::VectorXd col = Eigen::VectorXd::Zero(n);
    for (const SignalComponent& c : model.components[i])
      col += c.amplitude * so.basis.col(c.freq_index - 1);
    const double sd = model.noise_sd_for(i);
    if (sd > 0.0) {
      GaussianStream g(derive_seed(seed, static_cast<std::uint64_t>(i)));
      for (int u = 0; u < n; ++u) col[u] += sd * g.next();
    }
    values.col(i) = col.cast<std::complex<double>>();
  }
  MultivariateGraphSignal s;
  s.values = std::move(values);
  s.labels.reserve(p);
  for (int i = 1; i <= p; ++i) s.labels.push_back("X" + std::to_string(i));
  return s;
}

SpectralMatrixField exact_field(const SyntheticModel& model,
                                const ShiftOperator& so) {
  check_model(model, so);
  const int n = so.n();
  const int p = model.dims();
  SpectralMatrixField field;
  field.matrices.assign(n, Eigen::MatrixXcd::Zero(p, p));
  field.labels.reserve(p);
  for (int i = 1; i <= p; ++i) field.labels.push_back("X" + std::to_string(i));

  for (int i = 0; i < p; ++i) {
    const double sd = model.noise_sd_for(i);
    for (int l = 0; l < n; ++l) field.matrices[l](i, i) = sd * sd;
    for (int j = 0; j < p; ++j) {
      for (const SignalComponent& ci : model.components[i]) {
        for (const SignalComponent& cj : model.components[j]) {
          if (ci.freq_index == cj.freq_index)
            field.matrices[ci.freq_index - 1](i, j) +=
                ci.amplitude * cj.amplitude;
        }
      }
    }
  }
  return field;
}

namespace {

double mse_impl(const SyntheticModel& model, const GFreqPCAModel& fitted,
                int q, int replicates, std::uint64_t seed, bool parallel) {
  if (replicates < 1)
    throw std::invalid_argument("monte carlo: replicates must be >= 1");
  if (model.dims() != fitted.dims())
    throw std::invalid_argument("monte carlo: model dimension does not match fit");
  GFreqPCAModel working = fitted;
  set_rank(working, q);
  check_model(model, working.so);  // validate before entering the OpenMP loop

  std::vector<double> errors(static_cast<std::size_t>(replicates), 0.0);
  parallel_for(
      replicates,
      [&](int r) {
        const MultivariateGraphSignal x =
            draw(model, working.so,
                 derive_seed(seed, static_cast<std::uint64_t>(r)));
        const MultivariateGraphSignal rec =
            inverse_transform(working, transform(working, x));
        errors[static_cast<std::size_t>(r)] =
            (x.values - rec.values).squaredNorm();
      },
      parallel);

  double total = 0.0;
  for (double e : errors) total += e;
  return total / static_cast<double>(replicates);
}

}  // namespace

double monte_carlo_mse(const SyntheticModel& model,
                       const GFreqPCAModel& fitted, int q, int replicates,
                       std::uint64_t seed) {
  return mse_impl(model, fitted, q, replicates, seed, /*parallel=*/true);
}

double monte_carlo_mse_serial(const SyntheticModel& model,
                              const GFreqPCAModel& fitted, int q,
                              int replicates, std::uint64_t seed) {
  return mse_impl(model, fitted, q, replicates, seed, /*parallel=*/false);
}

}  // namespace gfpca
