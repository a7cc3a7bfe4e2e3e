#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gaussric/exterior.hpp"
#include "gaussric/finite_difference.hpp"
#include "gaussric/linalg.hpp"
#include "gaussric/report.hpp"

namespace gaussric {

enum class MinimalIn { euclidean, sphere, none };

const char* to_string(MinimalIn m);

/// hessian[a].col(b) = d^2 x / du_a du_b.
using Hessian = std::vector<Matrix>;

using PositionFn = std::function<Vector(const Vector&)>;
using JacobianFn = std::function<Matrix(const Vector&)>;
using HessianFn = std::function<Hessian(const Vector&)>;

/// A chart x: U subset R^m -> R^k. Jacobian and Hessian are optional; when
/// absent they are replaced by central differences. Evaluators must be
/// re-entrant.
struct ParametrizedImmersion {
  std::string name;
  int domain_dim = 0;
  int ambient_dim = 0;
  PositionFn position;
  JacobianFn jacobian;  // k x m, optional
  HessianFn hessian;    // optional
  /// Positive value forces a fixed step; zero selects default_step per
  /// coordinate.
  double finite_difference_step = 0.0;
  Box chart_domain;
  MinimalIn minimal_in = MinimalIn::none;

  bool has_analytic_derivatives() const { return jacobian && hessian; }
  double step(const Vector& u, int axis) const;
};

/// Symmetric m x m array of ambient vectors.
class SecondForm {
 public:
  SecondForm() = default;
  SecondForm(int m, int k);

  int dim() const { return m_; }
  Vector& operator()(int a, int b) { return entries_[index(a, b)]; }
  const Vector& operator()(int a, int b) const { return entries_[index(a, b)]; }

 private:
  std::size_t index(int a, int b) const { return static_cast<std::size_t>(a * m_ + b); }

  int m_ = 0;
  std::vector<Vector> entries_;
};

/// Per-point extrinsic data of an immersion, all in the oriented frame
/// Z_1..Z_m obtained by Gram-Schmidt of the coordinate tangents.
struct FundamentalData {
  Vector position;
  Matrix frame;             // k x m, columns Z_a
  Matrix frame_in_chart;    // m x m E with Z = J E
  Matrix metric;            // m x m chart metric g_ab
  SecondForm second_form;   // B(Z_a, Z_b), normal to the frame
  Vector mean_curvature;    // tr B = sum_a B(Z_a, Z_a)
  bool one_sided = false;   // a stencil fell back to one-sided differences
};

/// Ricci tensor in orthonormal-frame components (units 1/length^2).
struct RicciTensor {
  Matrix components;

  Vector eigenvalues() const;  // ascending
};

Vector evaluate_position(const ParametrizedImmersion& imm, const Vector& u);
/// Analytic jacobian when available, central differences otherwise.
Matrix evaluate_jacobian(const ParametrizedImmersion& imm, const Vector& u,
                         bool* one_sided = nullptr);
Hessian evaluate_hessian(const ParametrizedImmersion& imm, const Vector& u,
                         bool* one_sided = nullptr);

/// True when any finite-difference stencil used at u would leave the chart
/// domain; such points are reported in the "edge" category.
bool is_edge_point(const ParametrizedImmersion& imm, const Vector& u);

/// Oriented orthonormal tangent frame (k x m). Throws GeometryError on
/// points outside the chart or with a rank-deficient jacobian
/// ("irregular point", smallest singular value <= 1e-8).
Matrix tangent_frame(const ParametrizedImmersion& imm, const Vector& u);

FundamentalData fundamental_data(const ParametrizedImmersion& imm, const Vector& u);

/// Gauss equation: Ric(Z_a,Z_b) = <B_ab, tr B> - sum_c <B_ac, B_bc>.
RicciTensor ricci_extrinsic(const FundamentalData& fd);

/// Christoffel symbols from central differences of the chart metric,
/// coordinate Ricci tensor, converted to the orthonormal frame. Independent
/// of the second fundamental form.
RicciTensor ricci_intrinsic(const ParametrizedImmersion& imm, const Vector& u);

/// First Gauss map phi = Z_1 ^ ... ^ Z_m.
MultiVector gauss_map(const ParametrizedImmersion& imm, const Vector& u);

/// phi_*(X) = sum_i Z_1 ^ .. ^ B(X, Z_i) ^ .. ^ Z_m for X = sum_a x_a Z_a.
MultiVector gauss_map_differential(const FundamentalData& fd, const Vector& direction);

/// Central difference of phi along the curve whose velocity is frame
/// vector Z_axis.
MultiVector gauss_map_differential_fd(const ParametrizedImmersion& imm, const Vector& u,
                                      int axis);

/// <phi_*(Z_a), phi_*(Z_b)> in frame components.
Matrix pullback_metric_phi(const FundamentalData& fd);
Matrix pullback_metric_phi(const ParametrizedImmersion& imm, const Vector& u);

/// Checks minimality and phi^*(h) = -Ric at every grid point, together
/// with the full pullback identity, the Ricci oracle agreement and the
/// derivation formula. Failures are rows, never exceptions, except for
/// GeometryError on irregular points.
VerificationReport verify_corollary_minimal(const ParametrizedImmersion& imm,
                                            const GridSpec& grid,
                                            const Tolerances& tol = {});

}  // namespace gaussric

namespace gaussric {

/// Max pairwise canonical distance between Gauss-map planes sampled on a
/// sub-grid of at most `max_per_axis` points per axis (endpoints kept).
/// An evidence statistic only: it bounds nothing about the full image.
double gauss_image_dc_diameter(const ParametrizedImmersion& imm, const GridSpec& grid,
                               int max_per_axis = 21);

}  // namespace gaussric
