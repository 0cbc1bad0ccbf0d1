#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "gfpca/glpca.hpp"
#include "gfpca/pca.hpp"

namespace gfpca {

/// Round-trip-exact decimal rendering of a double (17 significant digits).
std::string format_double(double value);

// --- edge / coordinate / signal CSV -----------------------------------------

/// Reads `src,dst,weight` with 0-based integer indices; the vertex count is
/// one past the largest index mentioned.
Graph read_edge_csv(const std::filesystem::path& path);
void write_edge_csv(const std::filesystem::path& path, const Graph& graph);

struct CoordinateTable {
  std::vector<std::array<double, 2>> points;
  Metric metric = Metric::euclidean;  // haversine when the header is id,lat,lon
};

/// Reads `id,x,y` (euclidean) or `id,lat,lon` (haversine); ids must be
/// 0..n-1 in order.
CoordinateTable read_coord_csv(const std::filesystem::path& path);
void write_coord_csv(const std::filesystem::path& path,
                     const std::vector<std::array<double, 2>>& points,
                     Metric metric);

/// Reads an n x p table whose header row carries the dimension labels.
MultivariateGraphSignal read_signal_csv(const std::filesystem::path& path);
void write_signal_csv(const std::filesystem::path& path,
                      const MultivariateGraphSignal& signal);

// --- report CSV --------------------------------------------------------------

/// `freq_index,lambda,re,im`, frequency indices 1-based.
void write_density_csv(const std::filesystem::path& path,
                       const SpectralDensity& density,
                       const ShiftOperator& so);
SpectralDensity read_density_csv(const std::filesystem::path& path);

/// `freq_index,lambda,envelope`.
void write_envelope_csv(const std::filesystem::path& path,
                        const Eigen::VectorXd& envelope,
                        const ShiftOperator& so);
Eigen::VectorXd read_envelope_csv(const std::filesystem::path& path);

/// `pc,fraction,cumulative`.
void write_scree_csv(const std::filesystem::path& path,
                     const Eigen::VectorXd& fractions);
struct ScreeTable {
  Eigen::VectorXd fractions;
  Eigen::VectorXd cumulative;
};
ScreeTable read_scree_csv(const std::filesystem::path& path);

/// `dim,label,re,im,modulus` for one optimal scaling vector.
void write_scaling_csv(const std::filesystem::path& path,
                       const Eigen::VectorXcd& scaling,
                       const std::vector<std::string>& labels);
Eigen::VectorXcd read_scaling_csv(const std::filesystem::path& path);

/// `dim,label,residual_norm,signal_norm`.
void write_residual_norms_csv(const std::filesystem::path& path,
                              const Eigen::VectorXd& residual_norms,
                              const Eigen::VectorXd& signal_norms,
                              const std::vector<std::string>& labels);

/// `vertex,pc1..pcq` rows of the gLPCA component matrix Q.
void write_components_csv(const std::filesystem::path& path,
                          const GLPCAModel& model);
Eigen::MatrixXd read_components_csv(const std::filesystem::path& path);

// --- model files -------------------------------------------------------------

/// FNV-1a over the operator size and entry bytes; ties a saved model to the
/// shift operator it was fitted on.
std::string shift_operator_hash(const ShiftOperator& so);

/// JSON model document: q, per-frequency lambda/tau/U, offset vectors and the
/// shift operator hash.
void save_model(const GFreqPCAModel& model, const std::filesystem::path& path);

/// Loads a model and attaches the given operator; throws
/// std::invalid_argument when the stored hash does not match.
GFreqPCAModel load_model(const std::filesystem::path& path,
                         const ShiftOperator& so);

}  // namespace gfpca
