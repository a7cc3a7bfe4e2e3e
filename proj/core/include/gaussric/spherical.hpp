#pragma once

#include "gaussric/immersion.hpp"

namespace gaussric {

/// An immersion M^m -> S^{k-1} subset R^k viewed through the chain
/// M subset N = S^{k-1} subset E = R^k. n = k - 1 - m is the codimension of M
/// in the sphere, r = k - n.
class NestedImmersion {
 public:
  static constexpr double kRadiusTolerance = 1e-10;
  static constexpr double kTangencyTolerance = 1e-8;

  /// Throws GeometryError unless 1 <= m <= k - 1.
  explicit NestedImmersion(ParametrizedImmersion inner);

  const ParametrizedImmersion& inner() const { return inner_; }
  int ambient_dim() const { return inner_.ambient_dim; }
  int domain_dim() const { return inner_.domain_dim; }
  int sphere_codim() const { return inner_.ambient_dim - 1 - inner_.domain_dim; }
  int r() const { return inner_.ambient_dim - sphere_codim(); }

  /// Throws GeometryError("not on unit sphere") when | |x(u)| - 1 | exceeds
  /// kRadiusTolerance or a coordinate tangent has a radial component above
  /// kTangencyTolerance.
  void require_on_sphere(const Vector& u) const;

 private:
  ParametrizedImmersion inner_;
};

/// Second fundamental form of the unit sphere in R^k:
/// B_{N in E}(X, Y) = -<X, Y> x.
Vector sphere_second_form(const Vector& x_vec, const Vector& y_vec, const Vector& position);

/// The ambient second fundamental form of M in R^k split into the part
/// tangent to the sphere (B_{M in N}) and the sphere-radial part.
struct SecondFormPair {
  FundamentalData data;   // ambient data of M in R^k
  SecondForm in_sphere;   // B_{M in N}(Z_a, Z_b)
  SecondForm radial;      // <B_ab, x> x
  Vector in_sphere_trace; // tr B_{M in N}
};

SecondFormPair split_second_form(const NestedImmersion& nimm, const Vector& u);

/// psi = V_1 ^ ... ^ V_n, computed frame-free as the oriented complement of
/// x ^ Z_1 ^ ... ^ Z_m, so that (x, Z, V) is positively oriented in R^k.
MultiVector second_gauss_map(const NestedImmersion& nimm, const Vector& u);

/// <psi_*(Z_a), psi_*(Z_b)> from central differences of psi along the frame
/// curves. Neighbouring samples are sign-aligned before differencing.
Matrix pullback_metric_psi(const NestedImmersion& nimm, const Vector& u);

/// Curvature expression for the psi pullback with N the unit sphere:
///   <B_MN(X,Y), tr B_MN> - Ric_M(X,Y) + sum_i <B_NE(X,Y), B_NE(V_i,V_i)>
///   + sum_i <R_N(X,Z_i)Y, Z_i> - sum_i <R_N(X,V_i)Y, V_i>
/// with R_N(X,Y)Z = <X,Z>Y - <Y,Z>X, evaluated in frame components with a
/// pointwise V-frame.
Matrix second_gauss_pullback_rhs(const NestedImmersion& nimm, const Vector& u);

/// Sphere curvature tensor R_N(X,Y)Z = <X,Z>Y - <Y,Z>X.
Vector sphere_curvature(const Vector& x_vec, const Vector& y_vec, const Vector& z_vec);

/// Checks minimality in the sphere and psi^*(h) = (m-1)<,> - Ric at every
/// grid point, plus the curvature-expression cross check.
VerificationReport verify_corollary_sphere(const NestedImmersion& nimm, const GridSpec& grid,
                                           const Tolerances& tol = {});

}  // namespace gaussric
