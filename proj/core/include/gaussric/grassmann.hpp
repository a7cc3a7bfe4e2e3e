#pragma once

#include <vector>

#include "gaussric/exterior.hpp"
#include "gaussric/linalg.hpp"

namespace gaussric {

/// An oriented m-dimensional subspace of R^k, stored as an ordered
/// orthonormal basis (the columns of `basis()`). The ordering is the
/// orientation.
class OrientedPlane {
 public:
  static constexpr double kOrthonormalityTolerance = 1e-12;

  /// Throws GeometryError unless 1 <= m <= k and the columns are orthonormal
  /// within kOrthonormalityTolerance.
  explicit OrientedPlane(Matrix basis);

  /// Orientation-preserving Gram-Schmidt of arbitrary spanning vectors.
  static OrientedPlane from_spanning(const Matrix& vectors);

  int ambient_dim() const { return static_cast<int>(basis_.rows()); }
  int plane_dim() const { return static_cast<int>(basis_.cols()); }
  const Matrix& basis() const { return basis_; }

  /// Same subspace with the opposite orientation (first two basis vectors
  /// swapped; the single vector negated when m = 1).
  OrientedPlane reversed() const;

 private:
  Matrix basis_;
};

/// Principal cosines: singular values of the overlap matrix, clamped to
/// [0, 1], non-increasing.
struct PrincipalCosines {
  std::vector<double> values;
};

/// alpha_ij = <P.basis_i, Q.basis_j>. Throws GeometryError("incompatible
/// planes") on dimension mismatch. The same error applies to every function
/// below taking two planes.
Matrix overlap_matrix(const OrientedPlane& p, const OrientedPlane& q);

PrincipalCosines principal_cosines(const OrientedPlane& p, const OrientedPlane& q);

/// Principal angles in [0, pi/2], non-decreasing. Small angles come from
/// the sines (singular values of the part of Q orthogonal to P), large ones
/// from the cosines, so each angle is accurate to rounding.
std::vector<double> principal_angles(const OrientedPlane& p, const OrientedPlane& q);

/// sqrt(sum_i arccos^2 lambda_i), in [0, sqrt(m) pi/2]. Blind to orientation.
double canonical_distance(const OrientedPlane& p, const OrientedPlane& q);

/// arccos(prod_i lambda_i), in [0, pi/2]. Uses the unsigned product; the
/// orientation-aware counterpart is sphere_distance_embedded on the
/// Pluecker images.
double spherical_distance(const OrientedPlane& p, const OrientedPlane& q);

/// basis_1 ^ ... ^ basis_m, a unit decomposable multivector.
MultiVector pluecker_embed(const OrientedPlane& p);

}  // namespace gaussric
