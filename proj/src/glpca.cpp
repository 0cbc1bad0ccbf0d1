#include "gfpca/glpca.hpp"

#include <cmath>
#include <stdexcept>

namespace gfpca {

namespace {

void fix_column_signs(Eigen::MatrixXd& m) {
  for (int j = 0; j < m.cols(); ++j) {
    int best = 0;
    double best_abs = std::abs(m(0, j));
    for (int i = 1; i < m.rows(); ++i) {
      const double a = std::abs(m(i, j));
      if (a > best_abs) {
        best_abs = a;
        best = i;
      }
    }
    if (m(best, j) < 0.0) m.col(j) = -m.col(j);
  }
}

}  // namespace

double glpca_objective(const Eigen::MatrixXd& data, const ShiftOperator& so,
                       const Eigen::MatrixXd& components, double alpha) {
  const Eigen::MatrixXd loadings = data.transpose() * components;  // p x q
  const double residual =
      (data.transpose() - loadings * components.transpose()).squaredNorm();
  const double smoothness =
      (components.transpose() * so.matrix * components).trace();
  return residual + alpha * smoothness;
}

GLPCAModel glpca_fit(const Eigen::MatrixXd& data, const ShiftOperator& so,
                     double alpha, int q) {
  const int n = so.n();
  if (data.rows() != n)
    throw std::invalid_argument("glpca: data row count does not match vertex count");
  if (!data.allFinite())
    throw std::invalid_argument("glpca: data has non-finite entries");
  if (alpha < 0.0) throw std::invalid_argument("glpca: alpha must be >= 0");
  if (q < 1 || q > n) throw std::invalid_argument("glpca: rank out of range");

  const Eigen::MatrixXd m =
      -(data * data.transpose()) + alpha * so.matrix;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("glpca: eigendecomposition failed");

  GLPCAModel model;
  model.components = solver.eigenvectors().leftCols(q);
  fix_column_signs(model.components);
  model.loadings = data.transpose() * model.components;
  model.alpha = alpha;
  model.objective = glpca_objective(data, so, model.components, alpha);
  return model;
}

}  // namespace gfpca
