#include "chargeplan/mdr.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "chargeplan/errors.hpp"

namespace chargeplan {

namespace {

Matrix take_rows(const Matrix& m, std::span<const Eigen::Index> keep) {
  Matrix out(static_cast<Eigen::Index>(keep.size()), m.cols());
  for (std::size_t r = 0; r < keep.size(); ++r) out.row(r) = m.row(keep[r]);
  return out;
}

// Overall RMSE across all prediction cells of one view's K-fold CV,
// round-robin fold assignment (row i -> fold i % K).
double cross_validated_rmse(const Matrix& x, const Matrix& y, int k) {
  const Eigen::Index rows = x.rows();
  const int folds = static_cast<int>(std::min<Eigen::Index>(5, rows));
  double total_sq = 0.0;
  for (int f = 0; f < folds; ++f) {
    std::vector<Eigen::Index> train, test;
    for (Eigen::Index r = 0; r < rows; ++r)
      (r % folds == f ? test : train).push_back(r);
    const CcaModel m =
        fit_cca(take_rows(x, train), take_rows(y, train), k);
    for (Eigen::Index r : test) {
      const Vector pred = cca_predict(m, x.row(r).transpose());
      total_sq += (pred - y.row(r).transpose()).squaredNorm();
    }
  }
  return std::sqrt(total_sq / static_cast<double>(rows * y.cols()));
}

}  // namespace

std::vector<double> mdr_weights(std::span<const double> errors) {
  const std::size_t n = errors.size();
  if (n < 2) throw std::invalid_argument("mdr_weights: needs at least 2 views");
  const double sum = std::accumulate(errors.begin(), errors.end(), 0.0);
  if (sum < 1e-12)  // every view fits perfectly; the formula degenerates to 0/0
    return std::vector<double>(n, 1.0 / static_cast<double>(n));
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i)
    w[i] = (1.0 - errors[i] / sum) / static_cast<double>(n - 1);
  return w;
}

MdrModel fit_mdr(std::span<const Matrix> views, const Matrix& y, int k) {
  if (views.size() < 2) throw std::invalid_argument("fit_mdr: needs at least 2 views");
  if (y.rows() < 4) throw std::invalid_argument("fit_mdr: needs at least 4 rows");

  MdrModel model;
  for (const Matrix& x : views) {
    if (x.rows() != y.rows())
      throw std::invalid_argument("fit_mdr: view row counts must match the target");
    model.errors.push_back(cross_validated_rmse(x, y, k));
    model.submodels.push_back(fit_cca(x, y, k));
  }
  model.weights = mdr_weights(model.errors);
  model.has_negative_weight =
      std::any_of(model.weights.begin(), model.weights.end(),
                  [](double w) { return w < 0.0; });
  return model;
}

Vector mdr_predict(const MdrModel& m, std::span<const Vector> xs) {
  if (xs.size() != m.submodels.size())
    throw std::invalid_argument("mdr_predict: view count mismatch");
  Vector out = Vector::Zero(m.submodels.front().y_std.mean.size());
  for (std::size_t i = 0; i < xs.size(); ++i)
    out += m.weights[i] * cca_predict(m.submodels[i], xs[i]);
  return out;
}

LinearModel fit_concat_linear(std::span<const Matrix> views, const Matrix& y) {
  Eigen::Index total = 0;
  for (const Matrix& x : views) total += x.cols();
  Matrix design(y.rows(), total + 1);
  design.col(0).setOnes();
  Eigen::Index at = 1;
  for (const Matrix& x : views) {
    design.middleCols(at, x.cols()) = x;
    at += x.cols();
  }
  // Minimum-norm solve; collinear concatenated views stay well defined.
  const Matrix w = design.completeOrthogonalDecomposition().solve(y);
  LinearModel m;
  m.intercept = w.row(0).transpose();
  m.coef = w.bottomRows(total);
  return m;
}

Vector linear_predict(const LinearModel& m, std::span<const Vector> xs) {
  Eigen::Index total = 0;
  for (const Vector& x : xs) total += x.size();
  Vector cat(total);
  Eigen::Index at = 0;
  for (const Vector& x : xs) {
    cat.segment(at, x.size()) = x;
    at += x.size();
  }
  return m.coef.transpose() * cat + m.intercept;
}

LoocvReport loocv_rmse(std::span<const Matrix> views, const Matrix& y,
                       RegressionKind kind, int k) {
  const Eigen::Index rows = y.rows();
  if (rows < 4) throw std::invalid_argument("loocv_rmse: needs at least 4 rows");

  Vector column_sq = Vector::Zero(y.cols());
  for (Eigen::Index held = 0; held < rows; ++held) {
    std::vector<Eigen::Index> train;
    train.reserve(rows - 1);
    for (Eigen::Index r = 0; r < rows; ++r)
      if (r != held) train.push_back(r);

    std::vector<Matrix> train_views;
    train_views.reserve(views.size());
    for (const Matrix& x : views) train_views.push_back(take_rows(x, train));
    const Matrix train_y = take_rows(y, train);

    std::vector<Vector> held_rows;
    held_rows.reserve(views.size());
    for (const Matrix& x : views) held_rows.push_back(x.row(held).transpose());

    Vector pred;
    switch (kind) {
      case RegressionKind::Mdr:
        pred = mdr_predict(fit_mdr(train_views, train_y, k), held_rows);
        break;
      case RegressionKind::ConcatLinear:
        pred = linear_predict(fit_concat_linear(train_views, train_y), held_rows);
        break;
      case RegressionKind::UniformEnsemble: {
        pred = Vector::Zero(y.cols());
        for (std::size_t v = 0; v < views.size(); ++v)
          pred += cca_predict(fit_cca(train_views[v], train_y, k), held_rows[v]);
        pred /= static_cast<double>(views.size());
        break;
      }
    }
    column_sq += (pred - y.row(held).transpose()).array().square().matrix();
  }

  LoocvReport report;
  report.per_column_rmse =
      (column_sq / static_cast<double>(rows)).array().sqrt().matrix();
  report.mean_rmse = report.per_column_rmse.mean();
  return report;
}

}  // namespace chargeplan
