#include "gfpca/commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <set>
#include <stdexcept>

#include "gfpca/io.hpp"
#include "gfpca/rng.hpp"
#include "gfpca/simulation.hpp"

namespace gfpca::cli {

namespace {

namespace fs = std::filesystem;

QPolicy q_policy_from(const RunConfig& config) {
  if (config.fixed_q > 0 || config.q_policy == "fixed") {
    if (config.fixed_q < 1)
      throw std::invalid_argument("q policy 'fixed' requires --q >= 1");
    return QPolicy::fixed(config.fixed_q);
  }
  if (config.q_policy == "threshold") {
    if (!(config.q_threshold > 0.0) || config.q_threshold > 1.0)
      throw std::invalid_argument("--q-threshold must lie in (0, 1]");
    return QPolicy::cumulative(config.q_threshold);
  }
  if (config.q_policy == "elbow") return QPolicy::elbow();
  throw std::invalid_argument("unknown q policy '" + config.q_policy + "'");
}

Estimator estimator_from(const RunConfig& config, int n) {
  if (config.estimator == "periodogram") return Periodogram{};
  if (config.estimator == "windowed") {
    return Windowed{make_window_ensemble(config.windows, config.window_variance,
                                         derive_seed(config.seed, kWindowSeedStream),
                                         n),
                    config.bias_correct};
  }
  throw std::invalid_argument("unknown estimator '" + config.estimator + "'");
}

ShiftOperator operator_from_inputs(const RunConfig& config) {
  if (!config.graph_csv.empty())
    return build_laplacian(read_edge_csv(config.graph_csv));
  if (!config.coords_csv.empty()) {
    const CoordinateTable table = read_coord_csv(config.coords_csv);
    return build_laplacian(
        knn_gaussian_graph(table.points, config.knn_k, table.metric));
  }
  throw std::invalid_argument("either --graph or --coords is required");
}

// Per-dimension vertex means as constant columns; the centered signal keeps
// the labels.
struct Centered {
  MultivariateGraphSignal signal;
  Eigen::MatrixXcd means;
};

Centered center_signal(const MultivariateGraphSignal& signal, bool enabled) {
  const int n = signal.vertices();
  const int p = signal.dims();
  Centered c;
  c.signal = signal;
  c.means = Eigen::MatrixXcd::Zero(n, p);
  if (!enabled) return c;
  for (int j = 0; j < p; ++j) {
    const std::complex<double> mean = signal.values.col(j).mean();
    c.means.col(j).setConstant(mean);
    c.signal.values.col(j).array() -= mean;
  }
  return c;
}

fs::path prepare_out_dir(const RunConfig& config) {
  fs::path dir = config.out_dir.empty() ? fs::path(".") : fs::path(config.out_dir);
  fs::create_directories(dir);
  return dir;
}

Eigen::VectorXd column_norms(const Eigen::MatrixXcd& m) {
  Eigen::VectorXd norms(m.cols());
  for (int j = 0; j < m.cols(); ++j) norms[j] = m.col(j).norm();
  return norms;
}

void write_reports(const fs::path& dir, const GFreqPCAModel& model,
                   const AnalysisReport& report,
                   const std::vector<int>& scaling_freqs) {
  write_envelope_csv(dir / "envelope.csv", report.envelope, model.so);
  write_scree_csv(dir / "scree.csv", report.scree);
  for (int freq : scaling_freqs) {
    write_scaling_csv(dir / ("scalings_" + std::to_string(freq) + ".csv"),
                      optimal_scaling(model, freq), model.labels);
  }
}

void write_summary(const fs::path& dir, const std::string& heading,
                   const RunConfig& config, const GFreqPCAModel& model,
                   const AnalysisReport& report, double total_sq_residual) {
  std::ofstream out(dir / "summary.txt", std::ios::trunc);
  out << heading << '\n';
  out << "n: " << model.so.n() << "\n";
  out << "p: " << model.dims() << "\n";
  out << "seed: " << config.seed << "\n";
  out << "estimator: " << config.estimator << "\n";
  if (config.estimator == "windowed") {
    out << "windows: " << config.windows << "\n";
    out << "window_variance: " << format_double(config.window_variance) << "\n";
    out << "bias_correct: " << (config.bias_correct ? "yes" : "no") << "\n";
  }
  out << "psd_project: " << (config.psd_project ? "yes" : "no") << "\n";
  out << "q: " << model.q << "\n";
  out << "scree:";
  for (int i = 0; i < report.scree.size(); ++i)
    out << ' ' << format_double(report.scree[i]);
  out << "\n";
  out << "cumulative:";
  for (int i = 0; i < report.cumulative.size(); ++i)
    out << ' ' << format_double(report.cumulative[i]);
  out << "\n";
  out << "theoretical_error_at_q: "
      << format_double(report.theoretical_errors[static_cast<std::size_t>(model.q - 1)])
      << "\n";
  out << "total_squared_residual: " << format_double(total_sq_residual) << "\n";
}

int guarded(std::ostream& err, const std::function<void()>& body) {
  try {
    body();
    return 0;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int run_simulate(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    SyntheticModel model;
    ShiftOperator so;
    if (config.scenario == "karate") {
      so = build_laplacian(builtin_karate());
      model = karate_model();
    } else if (config.scenario == "us-sensor") {
      std::vector<std::array<double, 2>> coords;
      Metric metric = Metric::euclidean;
      if (!config.coords_csv.empty()) {
        const CoordinateTable table = read_coord_csv(config.coords_csv);
        coords = table.points;
        metric = table.metric;
      } else {
        coords = us_sensor_coordinates();
      }
      so = build_laplacian(knn_gaussian_graph(coords, config.knn_k, metric));
      model = us_sensor_model(static_cast<int>(coords.size()));
    } else {
      throw std::invalid_argument("unknown scenario '" + config.scenario +
                                  "' (expected karate or us-sensor)");
    }
    if (config.noise_override >= 0.0) model.noise_sd = config.noise_override;

    const MultivariateGraphSignal signal = draw(model, so, config.seed);
    const Centered centered = center_signal(signal, config.center);
    const SpectralMatrixField field =
        assemble_spectral_matrices(centered.signal, so,
                                   estimator_from(config, so.n()),
                                   config.psd_project);
    GFreqPCAModel fitted = fit(field, centered.means, so);
    set_rank(fitted, select_q(fitted, q_policy_from(config)));
    const AnalysisReport report = analyze(fitted);

    const MultivariateGraphSignal rec =
        inverse_transform(fitted, transform(fitted, signal));
    const Eigen::MatrixXcd residual = signal.values - rec.values;

    const fs::path dir = prepare_out_dir(config);
    std::set<int> freqs(config.scaling_freqs.begin(), config.scaling_freqs.end());
    for (const auto& comps : model.components)
      for (const SignalComponent& c : comps) freqs.insert(c.freq_index);
    write_reports(dir, fitted, report,
                  std::vector<int>(freqs.begin(), freqs.end()));
    write_residual_norms_csv(dir / "residual_norms.csv", column_norms(residual),
                             column_norms(signal.values), signal.labels);
    write_summary(dir, "simulate " + config.scenario, config, fitted, report,
                  residual.squaredNorm());

    out << "scenario: " << config.scenario << "\n";
    out << "q: " << fitted.q << "\n";
    out << "pc1_fraction: " << format_double(report.scree[0]) << "\n";
    out << "total_squared_residual: " << format_double(residual.squaredNorm())
        << "\n";
    out << "reports: " << dir.string() << "\n";
  });
}

int run_fit(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (config.signal_csv.empty())
      throw std::invalid_argument("--signal is required");
    const ShiftOperator so = operator_from_inputs(config);
    MultivariateGraphSignal signal = read_signal_csv(config.signal_csv);
    if (signal.vertices() != so.n())
      throw std::invalid_argument(
          "signal row count (" + std::to_string(signal.vertices()) +
          ") does not match graph vertex count (" + std::to_string(so.n()) +
          "); columns: " + std::to_string(signal.dims()));
    if (config.log1p) {
      for (int j = 0; j < signal.dims(); ++j) {
        for (int i = 0; i < signal.vertices(); ++i) {
          const double v = signal.values(i, j).real();
          if (v <= -1.0)
            throw std::invalid_argument("log1p transform needs values > -1");
          signal.values(i, j) = std::log1p(v);
        }
      }
    }

    const Centered centered = center_signal(signal, config.center);
    const SpectralMatrixField field =
        assemble_spectral_matrices(centered.signal, so,
                                   estimator_from(config, so.n()),
                                   config.psd_project);
    GFreqPCAModel fitted = fit(field, centered.means, so);
    set_rank(fitted, select_q(fitted, q_policy_from(config)));
    const AnalysisReport report = analyze(fitted);

    const MultivariateGraphSignal rec =
        inverse_transform(fitted, transform(fitted, signal));
    const Eigen::MatrixXcd residual = signal.values - rec.values;

    const fs::path dir = prepare_out_dir(config);
    save_model(fitted, dir / "model.json");
    write_reports(dir, fitted, report, config.scaling_freqs);
    write_residual_norms_csv(dir / "residual_norms.csv", column_norms(residual),
                             column_norms(signal.values), signal.labels);
    write_summary(dir, "fit", config, fitted, report, residual.squaredNorm());

    out << "q: " << fitted.q << "\n";
    out << "pc1_fraction: " << format_double(report.scree[0]) << "\n";
    out << "model: " << (dir / "model.json").string() << "\n";
  });
}

int run_reconstruct(const RunConfig& config, std::ostream& out,
                    std::ostream& err) {
  return guarded(err, [&] {
    if (config.model_file.empty())
      throw std::invalid_argument("--model is required");
    if (config.signal_csv.empty())
      throw std::invalid_argument("--signal is required");
    const ShiftOperator so = operator_from_inputs(config);
    const GFreqPCAModel model = load_model(config.model_file, so);
    const MultivariateGraphSignal signal = read_signal_csv(config.signal_csv);
    if (signal.vertices() != so.n() || signal.dims() != model.dims())
      throw std::invalid_argument(
          "signal shape (" + std::to_string(signal.vertices()) + " x " +
          std::to_string(signal.dims()) + ") does not match model (" +
          std::to_string(so.n()) + " x " + std::to_string(model.dims()) + ")");

    const MultivariateGraphSignal rec =
        inverse_transform(model, transform(model, signal));
    MultivariateGraphSignal residual = rec;
    residual.values = signal.values - rec.values;
    residual.labels = signal.labels;

    const fs::path dir = prepare_out_dir(config);
    write_signal_csv(dir / "xhat.csv", rec);
    write_signal_csv(dir / "residuals.csv", residual);
    write_residual_norms_csv(dir / "residual_norms.csv",
                             column_norms(residual.values),
                             column_norms(signal.values), signal.labels);

    out << "total_squared_residual: "
        << format_double(residual.values.squaredNorm()) << "\n";
    out << "reports: " << dir.string() << "\n";
  });
}

int run_baseline(const RunConfig& config, std::ostream& out,
                 std::ostream& err) {
  return guarded(err, [&] {
    if (config.signal_csv.empty())
      throw std::invalid_argument("--signal is required");
    const ShiftOperator so = operator_from_inputs(config);
    const MultivariateGraphSignal signal = read_signal_csv(config.signal_csv);
    if (signal.vertices() != so.n())
      throw std::invalid_argument(
          "signal row count (" + std::to_string(signal.vertices()) +
          ") does not match graph vertex count (" + std::to_string(so.n()) + ")");
    const int q = config.fixed_q > 0 ? config.fixed_q : 1;

    const Centered centered = center_signal(signal, config.center);
    const GLPCAModel model =
        glpca_fit(centered.signal.values.real(), so, config.alpha, q);

    const fs::path dir = prepare_out_dir(config);
    write_components_csv(dir / "components.csv", model);
    std::ofstream summary(dir / "summary.txt", std::ios::trunc);
    summary << "baseline glpca\n";
    summary << "alpha: " << format_double(config.alpha) << "\n";
    summary << "q: " << q << "\n";
    summary << "objective: " << format_double(model.objective) << "\n";

    out << "objective: " << format_double(model.objective) << "\n";
    out << "components: " << (dir / "components.csv").string() << "\n";
  });
}

}  // namespace gfpca::cli
