#pragma once

#include <Eigen/Dense>
#include <array>
#include <string>
#include <vector>

namespace gfpca {

struct Edge {
  int src = 0;
  int dst = 0;
  double weight = 1.0;
};

/// Weighted graph. Undirected graphs store each edge once with src < dst.
struct Graph {
  int n = 0;
  std::vector<Edge> edges;
  bool directed = false;
  std::vector<std::string> labels;              // empty or size n
  std::vector<std::array<double, 2>> coords;    // empty or size n

  int edge_count() const { return static_cast<int>(edges.size()); }
};

/// Validates vertex indices, nonnegative finite weights and the absence of
/// self-loops; normalizes undirected edges to src < dst and rejects
/// duplicates. Throws std::invalid_argument on violation.
Graph make_graph(int n, std::vector<Edge> edges, bool directed = false);

/// Dense weighted adjacency matrix (symmetric for undirected graphs).
Eigen::MatrixXd adjacency_matrix(const Graph& graph);

/// A real symmetric graph shift operator with its cached eigendecomposition
/// S = V diag(lambda) V^T. Eigenvalues ascend; each eigenvector is rotated so
/// its largest-modulus entry (lowest index on ties) is positive, and
/// eigenvectors inside a repeated eigenvalue are ordered by that entry's
/// index. Immutable after construction.
struct ShiftOperator {
  Eigen::MatrixXd matrix;        // S
  Eigen::VectorXd eigenvalues;   // ascending
  Eigen::MatrixXd basis;         // V, orthonormal columns

  int n() const { return static_cast<int>(matrix.rows()); }
};

/// Eigendecomposes a real symmetric matrix into a ShiftOperator and checks
/// the residual invariants (||SV - V Lambda|| and ||V^T V - I||).
ShiftOperator make_shift_operator(Eigen::MatrixXd matrix);

/// Combinatorial graph Laplacian L = D - W of an undirected graph.
ShiftOperator build_laplacian(const Graph& graph);

enum class Metric { euclidean, haversine };

double point_distance(const std::array<double, 2>& a,
                      const std::array<double, 2>& b, Metric metric);

/// Symmetric k-nearest-neighbour graph with Gaussian kernel weights
/// w_ij = exp(-d^2(i,j) / ave^2), where ave is the mean distance over all
/// unordered point pairs. An edge is present when either endpoint lists the
/// other among its k nearest. Haversine distances are in kilometres over
/// (lat, lon) degrees.
Graph knn_gaussian_graph(const std::vector<std::array<double, 2>>& coords,
                         int k, Metric metric = Metric::euclidean);

/// The 34-vertex, 78-edge Zachary karate club graph, unit weights.
Graph builtin_karate();

/// Columns are univariate signals on a common graph; values are complex with
/// real inputs embedded at zero imaginary part.
struct MultivariateGraphSignal {
  Eigen::MatrixXcd values;           // n x p
  std::vector<std::string> labels;   // empty or size p

  int vertices() const { return static_cast<int>(values.rows()); }
  int dims() const { return static_cast<int>(values.cols()); }
};

MultivariateGraphSignal make_signal(Eigen::MatrixXcd values,
                                    std::vector<std::string> labels = {});

/// Graph Fourier transform V^H x.
Eigen::VectorXcd gft(const Eigen::VectorXcd& x, const ShiftOperator& so);

/// Inverse transform V c.
Eigen::VectorXcd igft(const Eigen::VectorXcd& coeffs, const ShiftOperator& so);

/// Applies the graph filter V diag(freq_response) V^H to x.
Eigen::VectorXcd apply_filter(const Eigen::VectorXcd& freq_response,
                              const Eigen::VectorXcd& x,
                              const ShiftOperator& so);

}  // namespace gfpca
