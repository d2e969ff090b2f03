#pragma once

#include <Eigen/Dense>

namespace chargeplan {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Per-column centering and scaling learned from training data.
/// Zero-variance target columns are tolerated (scale 1, so they standardize
/// to zero and predictions fall back to the column mean).
struct Standardizer {
  Vector mean;
  Vector scale;

  Matrix apply(const Matrix& m) const;
  Vector apply_row(const Vector& v) const;
  Vector invert_row(const Vector& v) const;
};

/// Canonical projections between one covariate view and the target, plus the
/// least-squares map from canonical scores to standardized targets that turns
/// the fit into a regressor.
struct CcaModel {
  int components = 0;
  Matrix x_projection;     // d_x x k
  Matrix y_projection;     // d_y x k
  Vector correlations;     // k, in [-1, 1], nonincreasing
  Standardizer x_std;
  Standardizer y_std;
  Matrix score_to_target;  // k x d_y
};

/// k capped at min(d_x, d_y, rows - 1) and at `cap`.
int default_component_count(Eigen::Index dx, Eigen::Index dy, Eigen::Index rows,
                            int cap = 5);

/// Whitened cross-covariance CCA with ridge 1e-6 on the covariance diagonals.
/// Requires rows >= 3 and k >= 1; throws DegenerateData when a covariate
/// column has zero variance.
CcaModel fit_cca(const Matrix& x, const Matrix& y, int k);

/// Standardize, project to canonical scores, map to standardized targets,
/// de-standardize.
Vector cca_predict(const CcaModel& m, const Vector& x);

/// Row-wise batch prediction.
Matrix cca_predict_rows(const CcaModel& m, const Matrix& x);

}  // namespace chargeplan
