#pragma once

#include <span>
#include <vector>

#include "chargeplan/cca.hpp"

namespace chargeplan {

/// Weighted ensemble of per-view canonical-correlation regressors.
struct MdrModel {
  std::vector<CcaModel> submodels;  // one per covariate view
  std::vector<double> errors;       // e_i, internal-CV RMSE per view
  std::vector<double> weights;      // w_i, sum to 1
  bool has_negative_weight = false;
};

/// w_i = (1 - e_i / sum_j e_j) / (n - 1). Requires >= 2 entries; falls back
/// to uniform weights when the error sum is ~0 (all views fit perfectly).
std::vector<double> mdr_weights(std::span<const double> errors);

/// Per-view CCA fits; e_i from round-robin 5-fold cross-validation on the
/// training rows. Propagates DegenerateData from any view.
MdrModel fit_mdr(std::span<const Matrix> views, const Matrix& y, int k);

/// sum_i w_i * cca_predict(submodel_i, x_i).
Vector mdr_predict(const MdrModel& m, std::span<const Vector> xs);

/// Ordinary least squares on feature-wise concatenated views with intercept;
/// rank-deficient designs are handled by a minimum-norm solve.
struct LinearModel {
  Matrix coef;       // total feature dims x d_y
  Vector intercept;  // d_y
};
LinearModel fit_concat_linear(std::span<const Matrix> views, const Matrix& y);
Vector linear_predict(const LinearModel& m, std::span<const Vector> xs);

enum class RegressionKind { Mdr, ConcatLinear, UniformEnsemble };

struct LoocvReport {
  Vector per_column_rmse;  // one per target column
  double mean_rmse = 0.0;  // mean of the per-column values
};

/// Leave-one-out evaluation: train on all rows but one, predict the held-out
/// row, aggregate RMSE per target column. Requires rows >= 4.
LoocvReport loocv_rmse(std::span<const Matrix> views, const Matrix& y,
                       RegressionKind kind, int k);

}  // namespace chargeplan
