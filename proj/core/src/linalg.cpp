#include "gaussric/linalg.hpp"

#include <cmath>

#include "gaussric/errors.hpp"

namespace gaussric {

namespace {

constexpr double kDependentColumn = 1e-14;

}  // namespace

OrientedQR oriented_gram_schmidt(const Matrix& vectors) {
  const Eigen::Index k = vectors.rows();
  const Eigen::Index m = vectors.cols();
  OrientedQR out{Matrix::Zero(k, m), Matrix::Zero(m, m)};
  for (Eigen::Index j = 0; j < m; ++j) {
    Vector v = vectors.col(j);
    const double scale = v.norm();
    for (int pass = 0; pass < 2; ++pass) {
      for (Eigen::Index i = 0; i < j; ++i) {
        const double c = out.q.col(i).dot(v);
        out.r(i, j) += c;
        v -= c * out.q.col(i);
      }
    }
    const double len = v.norm();
    if (!(len > kDependentColumn * std::max(1.0, scale))) {
      throw GeometryError("irregular point: dependent spanning vectors");
    }
    out.r(j, j) = len;
    out.q.col(j) = v / len;
  }
  return out;
}

double orthonormality_defect(const Matrix& basis) {
  const Matrix gram = basis.transpose() * basis;
  return max_abs(gram - Matrix::Identity(gram.rows(), gram.cols()));
}

double smallest_singular_value(const Matrix& a) {
  if (a.cols() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(a);
  return svd.singularValues().minCoeff();
}

double max_abs(const Matrix& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

Matrix orthogonal_complement(const Matrix& a) {
  const Eigen::Index k = a.rows();
  const Eigen::Index r = a.cols();
  Eigen::HouseholderQR<Matrix> qr(a);
  const Matrix full = qr.householderQ() * Matrix::Identity(k, k);
  return full.rightCols(k - r);
}

}  // namespace gaussric
