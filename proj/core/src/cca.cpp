#include "chargeplan/cca.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "chargeplan/errors.hpp"

namespace chargeplan {

namespace {

constexpr double kRidge = 1e-6;        // covariance diagonal regularization
constexpr double kVarianceFloor = 1e-12;

Standardizer make_standardizer(const Matrix& m, bool tolerate_constant) {
  const Eigen::Index n = m.rows();
  Standardizer s;
  s.mean = m.colwise().mean();
  s.scale = Vector::Ones(m.cols());
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    const double var =
        (m.col(j).array() - s.mean(j)).square().sum() / static_cast<double>(n - 1);
    const double sd = std::sqrt(std::max(var, 0.0));
    if (sd < kVarianceFloor) {
      if (!tolerate_constant)
        throw DegenerateData("covariate column " + std::to_string(j) +
                             " has zero variance");
      s.scale(j) = 1.0;  // constant target column: predictions fall back to the mean
    } else {
      s.scale(j) = sd;
    }
  }
  return s;
}

// Symmetric inverse square root with an eigenvalue floor.
Matrix inverse_sqrt(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> eig(m);
  Vector vals = eig.eigenvalues();
  for (Eigen::Index i = 0; i < vals.size(); ++i)
    vals(i) = 1.0 / std::sqrt(std::max(vals(i), kVarianceFloor));
  return eig.eigenvectors() * vals.asDiagonal() * eig.eigenvectors().transpose();
}

double pearson(const Vector& a, const Vector& b) {
  const double na = a.norm();
  const double nb = b.norm();
  if (na < kVarianceFloor || nb < kVarianceFloor) return 0.0;
  return std::clamp(a.dot(b) / (na * nb), -1.0, 1.0);
}

}  // namespace

Matrix Standardizer::apply(const Matrix& m) const {
  return (m.rowwise() - mean.transpose()).array().rowwise() /
         scale.transpose().array();
}

Vector Standardizer::apply_row(const Vector& v) const {
  return (v - mean).cwiseQuotient(scale);
}

Vector Standardizer::invert_row(const Vector& v) const {
  return v.cwiseProduct(scale) + mean;
}

int default_component_count(Eigen::Index dx, Eigen::Index dy, Eigen::Index rows,
                            int cap) {
  const Eigen::Index k = std::min({dx, dy, rows - 1, static_cast<Eigen::Index>(cap)});
  return static_cast<int>(std::max<Eigen::Index>(k, 1));
}

CcaModel fit_cca(const Matrix& x, const Matrix& y, int k) {
  if (x.rows() != y.rows())
    throw std::invalid_argument("fit_cca: row counts differ between views");
  if (x.rows() < 3) throw std::invalid_argument("fit_cca: needs at least 3 rows");
  if (k < 1) throw std::invalid_argument("fit_cca: component count must be >= 1");

  CcaModel model;
  model.x_std = make_standardizer(x, /*tolerate_constant=*/false);
  model.y_std = make_standardizer(y, /*tolerate_constant=*/true);
  const Matrix xs = model.x_std.apply(x);
  const Matrix ys = model.y_std.apply(y);

  const double denom = static_cast<double>(x.rows() - 1);
  const Matrix cxx = xs.transpose() * xs / denom +
                     kRidge * Matrix::Identity(x.cols(), x.cols());
  const Matrix cyy = ys.transpose() * ys / denom +
                     kRidge * Matrix::Identity(y.cols(), y.cols());
  const Matrix cxy = xs.transpose() * ys / denom;

  const Matrix wx = inverse_sqrt(cxx);
  const Matrix wy = inverse_sqrt(cyy);
  const Matrix target = wx * cxy * wy;

  Eigen::JacobiSVD<Matrix> svd(target, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const int k_eff =
      std::min<int>(k, static_cast<int>(std::min(x.cols(), y.cols())));

  model.components = k_eff;
  model.x_projection = wx * svd.matrixU().leftCols(k_eff);
  model.y_projection = wy * svd.matrixV().leftCols(k_eff);

  // Report the empirical correlation of the paired training scores; the
  // regularized singular values understate perfect correlations.
  const Matrix zx = xs * model.x_projection;
  const Matrix zy = ys * model.y_projection;
  model.correlations = Vector(k_eff);
  for (int c = 0; c < k_eff; ++c)
    model.correlations(c) = pearson(zx.col(c), zy.col(c));

  // Keep components in nonincreasing correlation order.
  std::vector<int> order(k_eff);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return model.correlations(a) > model.correlations(b);
  });
  Matrix xp(model.x_projection.rows(), k_eff), yp(model.y_projection.rows(), k_eff);
  Vector corr(k_eff);
  for (int c = 0; c < k_eff; ++c) {
    xp.col(c) = model.x_projection.col(order[c]);
    yp.col(c) = model.y_projection.col(order[c]);
    corr(c) = model.correlations(order[c]);
  }
  model.x_projection = std::move(xp);
  model.y_projection = std::move(yp);
  model.correlations = std::move(corr);

  const Matrix scores = xs * model.x_projection;
  model.score_to_target = scores.completeOrthogonalDecomposition().solve(ys);
  return model;
}

Vector cca_predict(const CcaModel& m, const Vector& x) {
  const Vector xs = m.x_std.apply_row(x);
  const Vector scores = m.x_projection.transpose() * xs;
  const Vector ys = m.score_to_target.transpose() * scores;
  return m.y_std.invert_row(ys);
}

Matrix cca_predict_rows(const CcaModel& m, const Matrix& x) {
  Matrix out(x.rows(), m.y_std.mean.size());
  for (Eigen::Index r = 0; r < x.rows(); ++r)
    out.row(r) = cca_predict(m, x.row(r).transpose()).transpose();
  return out;
}

}  // namespace chargeplan
