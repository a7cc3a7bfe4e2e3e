#include "gaussric/grassmann.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "gaussric/errors.hpp"

namespace gaussric {

namespace {

void require_compatible(const OrientedPlane& p, const OrientedPlane& q) {
  if (p.ambient_dim() != q.ambient_dim() || p.plane_dim() != q.plane_dim()) {
    throw GeometryError("incompatible planes: (" + std::to_string(p.plane_dim()) + "," +
                        std::to_string(p.ambient_dim()) + ") vs (" +
                        std::to_string(q.plane_dim()) + "," + std::to_string(q.ambient_dim()) +
                        ")");
  }
}

}  // namespace

OrientedPlane::OrientedPlane(Matrix basis) : basis_(std::move(basis)) {
  if (basis_.cols() < 1 || basis_.cols() > basis_.rows()) {
    throw GeometryError("oriented plane needs 1 <= m <= k, got m=" +
                        std::to_string(basis_.cols()) + " k=" + std::to_string(basis_.rows()));
  }
  const double defect = orthonormality_defect(basis_);
  if (!(defect <= kOrthonormalityTolerance)) {
    throw GeometryError("oriented plane basis is not orthonormal (defect " +
                        std::to_string(defect) + ")");
  }
}

OrientedPlane OrientedPlane::from_spanning(const Matrix& vectors) {
  if (vectors.cols() < 1 || vectors.cols() > vectors.rows()) {
    throw GeometryError("oriented plane needs 1 <= m <= k");
  }
  return OrientedPlane(oriented_gram_schmidt(vectors).q);
}

OrientedPlane OrientedPlane::reversed() const {
  Matrix b = basis_;
  if (b.cols() == 1) {
    b.col(0) *= -1.0;
  } else {
    b.col(0).swap(b.col(1));
  }
  return OrientedPlane(std::move(b));
}

Matrix overlap_matrix(const OrientedPlane& p, const OrientedPlane& q) {
  require_compatible(p, q);
  return p.basis().transpose() * q.basis();
}

PrincipalCosines principal_cosines(const OrientedPlane& p, const OrientedPlane& q) {
  const Matrix alpha = overlap_matrix(p, q);
  Eigen::JacobiSVD<Matrix> svd(alpha);
  PrincipalCosines out;
  out.values.reserve(static_cast<std::size_t>(alpha.rows()));
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
    out.values.push_back(std::clamp(svd.singularValues()(i), 0.0, 1.0));
  }
  std::sort(out.values.begin(), out.values.end(), std::greater<>());
  return out;
}

std::vector<double> principal_angles(const OrientedPlane& p, const OrientedPlane& q) {
  const PrincipalCosines cosines = principal_cosines(p, q);
  const Matrix residual = q.basis() - p.basis() * (p.basis().transpose() * q.basis());
  Eigen::JacobiSVD<Matrix> svd(residual);
  std::vector<double> sines(svd.singularValues().data(),
                            svd.singularValues().data() + svd.singularValues().size());
  std::sort(sines.begin(), sines.end());

  std::vector<double> angles(cosines.values.size());
  for (std::size_t i = 0; i < angles.size(); ++i) {
    const double c = cosines.values[i];
    const double s = std::clamp(sines[i], 0.0, 1.0);
    angles[i] = (c * c >= 0.5) ? std::asin(s) : std::acos(c);
  }
  std::sort(angles.begin(), angles.end());
  return angles;
}

double canonical_distance(const OrientedPlane& p, const OrientedPlane& q) {
  double sum = 0.0;
  for (double theta : principal_angles(p, q)) sum += theta * theta;
  return std::sqrt(sum);
}

double spherical_distance(const OrientedPlane& p, const OrientedPlane& q) {
  // cos d = prod cos theta_i. Far from 0 arccos is well conditioned; near 0
  // use 1 - cos d = -expm1(sum log cos theta_i) and d = 2 asin(sqrt((1 - cos d) / 2)).
  const std::vector<double> angles = principal_angles(p, q);
  double product = 1.0;
  for (double theta : angles) product *= std::cos(theta);
  if (product < 0.5) return std::acos(std::max(product, 0.0));
  double log_product = 0.0;
  for (double theta : angles) {
    const double s = std::sin(theta);
    log_product += 0.5 * std::log1p(-s * s);
  }
  const double one_minus_cos = 0.0 - std::expm1(log_product);
  return 2.0 * std::asin(std::sqrt(std::clamp(0.5 * one_minus_cos, 0.0, 1.0)));
}

MultiVector pluecker_embed(const OrientedPlane& p) {
  return wedge(p.basis());
}

}  // namespace gaussric
