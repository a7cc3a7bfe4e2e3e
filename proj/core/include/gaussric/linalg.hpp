#pragma once

#include <Eigen/Dense>

namespace gaussric {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Thin QR factorisation `vectors = q * r` computed by Gram-Schmidt in
/// column order (with one re-orthogonalisation pass). The orientation of
/// the span is preserved: diag(r) > 0.
struct OrientedQR {
  Matrix q;  // k x m, orthonormal columns
  Matrix r;  // m x m, upper triangular
};

/// Throws GeometryError("irregular point") when a column is (numerically)
/// dependent on its predecessors.
OrientedQR oriented_gram_schmidt(const Matrix& vectors);

/// max_ij |<v_i, v_j> - delta_ij| over the columns of `basis`.
double orthonormality_defect(const Matrix& basis);

/// Smallest singular value of a tall matrix.
double smallest_singular_value(const Matrix& a);

/// max_ij |a_ij|; zero for empty matrices.
double max_abs(const Matrix& a);

/// Orthonormal basis of the orthogonal complement of the column span of `a`
/// (k x (k - rank) with rank = a.cols(); columns assumed independent).
Matrix orthogonal_complement(const Matrix& a);

}  // namespace gaussric
