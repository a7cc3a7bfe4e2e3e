#pragma once

#include <cstddef>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "gaussric/linalg.hpp"

namespace gaussric {

/// C(n, r); zero when r > n.
std::size_t binomial(int n, int r);

/// All strictly increasing multi-indices (0-based) of length `grade` drawn
/// from {0, ..., ambient_dim - 1}, in lexicographic order. This is the
/// coordinate order of every MultiVector.
std::vector<std::vector<int>> multi_indices(int ambient_dim, int grade);

/// An element of the exterior power Lambda^grade R^ambient_dim in the
/// lexicographic multi-index basis e_{i_1} ^ ... ^ e_{i_grade}.
class MultiVector {
 public:
  /// Throws GeometryError if coords.size() != C(ambient_dim, grade).
  MultiVector(int ambient_dim, int grade, Vector coords);

  static MultiVector zero(int ambient_dim, int grade);

  int ambient_dim() const { return ambient_dim_; }
  int grade() const { return grade_; }
  const Vector& coords() const { return coords_; }
  double norm() const { return coords_.norm(); }

  MultiVector operator-() const;
  MultiVector& operator+=(const MultiVector& other);
  MultiVector& operator-=(const MultiVector& other);
  MultiVector& operator*=(double s);

  friend MultiVector operator+(MultiVector a, const MultiVector& b) { return a += b; }
  friend MultiVector operator-(MultiVector a, const MultiVector& b) { return a -= b; }
  friend MultiVector operator*(double s, MultiVector a) { return a *= s; }

 private:
  void require_same_shape(const MultiVector& other) const;

  int ambient_dim_;
  int grade_;
  Vector coords_;
};

/// v_1 ^ ... ^ v_g for the columns of `vectors` (k x g). Each coordinate is
/// the g x g minor on the corresponding rows.
MultiVector wedge(const Matrix& vectors);

/// Canonical inner product on Lambda^m R^k (coordinate dot product). For
/// decomposables it equals det <xi_i, zeta_j>.
double lambda_inner(const MultiVector& u, const MultiVector& v);

/// Great-circle distance between unit multivectors, in [0, pi].
/// Throws GeometryError("not on sphere") if either norm deviates from 1 by
/// more than 1e-8.
double sphere_distance_embedded(const MultiVector& u, const MultiVector& v);

/// Unit multivector spanning the orthogonal complement of the unit
/// decomposable `w`, signed so that w ^ complement = +e_1 ^ ... ^ e_k.
/// Applying it twice yields (-1)^{g(k-g)} w.
MultiVector hodge_complement(const MultiVector& w);

/// Coordinates as a JSON array in lexicographic order.
void to_json(nlohmann::json& j, const MultiVector& v);

}  // namespace gaussric
