#include "gfpca/graph.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <utility>

namespace gfpca {

namespace {

constexpr double kEarthRadiusKm = 6371.0;

double deg2rad(double deg) { return deg * 3.141592653589793238462643383279502884 / 180.0; }

}  // namespace

Graph make_graph(int n, std::vector<Edge> edges, bool directed) {
  if (n < 0) throw std::invalid_argument("graph: negative vertex count");
  std::set<std::pair<int, int>> seen;
  for (Edge& e : edges) {
    if (e.src < 0 || e.src >= n || e.dst < 0 || e.dst >= n)
      throw std::invalid_argument("graph: vertex index out of range");
    if (e.src == e.dst)
      throw std::invalid_argument("graph: self-loops are not allowed");
    if (!std::isfinite(e.weight) || e.weight < 0.0)
      throw std::invalid_argument("graph: edge weights must be finite and >= 0");
    if (!directed && e.src > e.dst) std::swap(e.src, e.dst);
    if (!seen.insert({e.src, e.dst}).second)
      throw std::invalid_argument("graph: duplicate edge");
  }
  Graph g;
  g.n = n;
  g.edges = std::move(edges);
  g.directed = directed;
  return g;
}

Eigen::MatrixXd adjacency_matrix(const Graph& graph) {
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(graph.n, graph.n);
  for (const Edge& e : graph.edges) {
    w(e.src, e.dst) = e.weight;
    if (!graph.directed) w(e.dst, e.src) = e.weight;
  }
  return w;
}

namespace {

int argmax_modulus(const Eigen::VectorXd& v) {
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

// Sign convention plus deterministic ordering inside repeated eigenvalues.
void normalize_eigenvectors(Eigen::VectorXd& values, Eigen::MatrixXd& vectors) {
  const int n = static_cast<int>(values.size());
  std::vector<int> anchor(n);
  for (int j = 0; j < n; ++j) {
    const int k = argmax_modulus(vectors.col(j));
    if (vectors(k, j) < 0.0) vectors.col(j) = -vectors.col(j);
    anchor[j] = k;
  }
  const double scale = std::max(std::abs(values[0]), std::abs(values[n - 1]));
  const double tie_tol = 1e-8 * std::max(1.0, scale);
  int start = 0;
  while (start < n) {
    int end = start + 1;
    while (end < n && values[end] - values[end - 1] <= tie_tol) ++end;
    if (end - start > 1) {
      std::vector<int> order(end - start);
      for (int i = 0; i < end - start; ++i) order[i] = start + i;
      std::stable_sort(order.begin(), order.end(),
                       [&](int a, int b) { return anchor[a] < anchor[b]; });
      Eigen::MatrixXd block(vectors.rows(), end - start);
      for (int i = 0; i < end - start; ++i) block.col(i) = vectors.col(order[i]);
      vectors.middleCols(start, end - start) = block;
    }
    start = end;
  }
}

}  // namespace

ShiftOperator make_shift_operator(Eigen::MatrixXd matrix) {
  if (matrix.rows() != matrix.cols())
    throw std::invalid_argument("shift operator: matrix must be square");
  if (!matrix.allFinite())
    throw std::invalid_argument("shift operator: matrix has non-finite entries");
  const double scale = std::max(1.0, matrix.cwiseAbs().maxCoeff());
  if ((matrix - matrix.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw std::invalid_argument("shift operator: only real symmetric operators are supported");
  matrix = 0.5 * (matrix + matrix.transpose().eval());

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(matrix);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("shift operator: eigendecomposition failed");

  ShiftOperator so;
  so.matrix = std::move(matrix);
  so.eigenvalues = solver.eigenvalues();
  so.basis = solver.eigenvectors();
  normalize_eigenvectors(so.eigenvalues, so.basis);

  const int n = so.n();
  const double smax = so.matrix.cwiseAbs().maxCoeff();
  const double recon = (so.matrix - so.basis * so.eigenvalues.asDiagonal() * so.basis.transpose())
                           .cwiseAbs()
                           .maxCoeff();
  if (recon > 1e-10 * (1.0 + smax))
    throw std::runtime_error("shift operator: eigendecomposition residual too large");
  const double ortho = (so.basis.transpose() * so.basis - Eigen::MatrixXd::Identity(n, n))
                           .cwiseAbs()
                           .maxCoeff();
  if (ortho > 1e-12 * n)
    throw std::runtime_error("shift operator: eigenvector basis not orthonormal");
  return so;
}

ShiftOperator build_laplacian(const Graph& graph) {
  if (graph.directed)
    throw std::invalid_argument("laplacian: directed graphs are not supported");
  const Eigen::MatrixXd w = adjacency_matrix(graph);
  Eigen::MatrixXd lap = Eigen::MatrixXd(w.rowwise().sum().asDiagonal()) - w;
  return make_shift_operator(std::move(lap));
}

double point_distance(const std::array<double, 2>& a,
                      const std::array<double, 2>& b, Metric metric) {
  if (metric == Metric::euclidean) {
    const double dx = a[0] - b[0];
    const double dy = a[1] - b[1];
    return std::sqrt(dx * dx + dy * dy);
  }
  // haversine on (lat, lon) degrees
  const double lat1 = deg2rad(a[0]);
  const double lat2 = deg2rad(b[0]);
  const double dlat = lat2 - lat1;
  const double dlon = deg2rad(b[1] - a[1]);
  const double s = std::sin(dlat / 2);
  const double t = std::sin(dlon / 2);
  const double h = s * s + std::cos(lat1) * std::cos(lat2) * t * t;
  return 2.0 * kEarthRadiusKm * std::asin(std::min(1.0, std::sqrt(h)));
}

Graph knn_gaussian_graph(const std::vector<std::array<double, 2>>& coords,
                         int k, Metric metric) {
  const int n = static_cast<int>(coords.size());
  if (k < 0) throw std::invalid_argument("knn graph: k must be >= 0");
  if (k >= n)
    throw std::invalid_argument("knn graph: k must be smaller than the point count");

  Eigen::MatrixXd dist(n, n);
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    dist(i, i) = 0.0;
    for (int j = i + 1; j < n; ++j) {
      const double d = point_distance(coords[i], coords[j], metric);
      dist(i, j) = d;
      dist(j, i) = d;
      sum += d;
    }
  }
  const double pairs = 0.5 * n * (n - 1);
  const double ave = pairs > 0 ? sum / pairs : 0.0;
  const double inv_ave2 = ave > 0.0 ? 1.0 / (ave * ave) : 0.0;

  std::set<std::pair<int, int>> selected;
  std::vector<std::pair<double, int>> order(n - 1);
  for (int i = 0; i < n; ++i) {
    int m = 0;
    for (int j = 0; j < n; ++j) {
      if (j != i) order[m++] = {dist(i, j), j};
    }
    std::stable_sort(order.begin(), order.end());
    for (int t = 0; t < k; ++t) {
      const int j = order[t].second;
      selected.insert({std::min(i, j), std::max(i, j)});
    }
  }

  std::vector<Edge> edges;
  edges.reserve(selected.size());
  for (const auto& [i, j] : selected) {
    const double d = dist(i, j);
    edges.push_back({i, j, std::exp(-d * d * inv_ave2)});
  }
  Graph g = make_graph(n, std::move(edges), /*directed=*/false);
  g.coords = coords;
  return g;
}

MultivariateGraphSignal make_signal(Eigen::MatrixXcd values,
                                    std::vector<std::string> labels) {
  if (!labels.empty() && static_cast<int>(labels.size()) != values.cols())
    throw std::invalid_argument("signal: label count must match dimension count");
  MultivariateGraphSignal s;
  s.values = std::move(values);
  s.labels = std::move(labels);
  return s;
}

Eigen::VectorXcd gft(const Eigen::VectorXcd& x, const ShiftOperator& so) {
  if (x.size() != so.n())
    throw std::invalid_argument("gft: signal length does not match vertex count");
  return so.basis.transpose() * x;
}

Eigen::VectorXcd igft(const Eigen::VectorXcd& coeffs, const ShiftOperator& so) {
  if (coeffs.size() != so.n())
    throw std::invalid_argument("igft: coefficient length does not match vertex count");
  return so.basis * coeffs;
}

Eigen::VectorXcd apply_filter(const Eigen::VectorXcd& freq_response,
                              const Eigen::VectorXcd& x,
                              const ShiftOperator& so) {
  if (freq_response.size() != so.n())
    throw std::invalid_argument("filter: frequency response length does not match vertex count");
  return igft(freq_response.cwiseProduct(gft(x, so)), so);
}

}  // namespace gfpca
