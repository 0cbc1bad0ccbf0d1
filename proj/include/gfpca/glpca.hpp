#pragma once

#include "gfpca/graph.hpp"

namespace gfpca {

/// Closed-form graph Laplacian PCA: Q holds the bottom-q eigenvectors of
/// (-X X^T + alpha L); U = X^T Q; objective is
/// ||X^T - U Q^T||_F^2 + alpha tr(Q^T L Q).
struct GLPCAModel {
  Eigen::MatrixXd components;  // Q, n x q, orthonormal columns
  Eigen::MatrixXd loadings;    // U, p x q
  double alpha = 0.0;
  double objective = 0.0;
};

GLPCAModel glpca_fit(const Eigen::MatrixXd& data, const ShiftOperator& so,
                     double alpha, int q);

/// Objective value at an arbitrary feasible Q (orthonormal columns), with
/// U = X^T Q; used as the random-feasible-point optimality oracle.
double glpca_objective(const Eigen::MatrixXd& data, const ShiftOperator& so,
                       const Eigen::MatrixXd& components, double alpha);

}  // namespace gfpca
