#include "gaussric/spherical.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gaussric/errors.hpp"

namespace gaussric {

namespace {

MultiVector psi_from_frame(const Vector& position, const Matrix& frame) {
  Matrix spanning(frame.rows(), frame.cols() + 1);
  spanning.col(0) = position;
  spanning.rightCols(frame.cols()) = frame;
  return hodge_complement(wedge(spanning));
}

MultiVector aligned(const MultiVector& v, const MultiVector& reference) {
  return lambda_inner(v, reference) < 0.0 ? -v : v;
}

}  // namespace

NestedImmersion::NestedImmersion(ParametrizedImmersion inner) : inner_(std::move(inner)) {
  if (inner_.domain_dim < 1 || inner_.domain_dim > inner_.ambient_dim - 1) {
    throw GeometryError("nested immersion needs 1 <= m <= k - 1");
  }
}

void NestedImmersion::require_on_sphere(const Vector& u) const {
  const Vector x = evaluate_position(inner_, u);
  if (!(std::abs(x.norm() - 1.0) <= kRadiusTolerance)) {
    throw GeometryError("not on unit sphere: |x| = " + std::to_string(x.norm()));
  }
  const Matrix j = evaluate_jacobian(inner_, u);
  for (Eigen::Index a = 0; a < j.cols(); ++a) {
    if (!(std::abs(j.col(a).dot(x)) <= kTangencyTolerance)) {
      throw GeometryError("not on unit sphere: tangent has a radial component");
    }
  }
}

Vector sphere_second_form(const Vector& x_vec, const Vector& y_vec, const Vector& position) {
  return -x_vec.dot(y_vec) * position;
}

Vector sphere_curvature(const Vector& x_vec, const Vector& y_vec, const Vector& z_vec) {
  return x_vec.dot(z_vec) * y_vec - y_vec.dot(z_vec) * x_vec;
}

SecondFormPair split_second_form(const NestedImmersion& nimm, const Vector& u) {
  nimm.require_on_sphere(u);
  SecondFormPair out;
  out.data = fundamental_data(nimm.inner(), u);
  const int m = nimm.domain_dim();
  const int k = nimm.ambient_dim();
  const Vector& x = out.data.position;
  out.in_sphere = SecondForm(m, k);
  out.radial = SecondForm(m, k);
  out.in_sphere_trace = Vector::Zero(k);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      const Vector& full = out.data.second_form(a, b);
      out.radial(a, b) = full.dot(x) * x;
      out.in_sphere(a, b) = full - out.radial(a, b);
    }
    out.in_sphere_trace += out.in_sphere(a, a);
  }
  return out;
}

MultiVector second_gauss_map(const NestedImmersion& nimm, const Vector& u) {
  nimm.require_on_sphere(u);
  const Vector x = evaluate_position(nimm.inner(), u);
  return psi_from_frame(x, tangent_frame(nimm.inner(), u));
}

Matrix pullback_metric_psi(const NestedImmersion& nimm, const Vector& u) {
  const ParametrizedImmersion& imm = nimm.inner();
  const int m = nimm.domain_dim();
  const FundamentalData fd = fundamental_data(imm, u);
  const MultiVector here = psi_from_frame(fd.position, fd.frame);

  double s = 0.0;
  for (int a = 0; a < m; ++a) s = std::max(s, imm.step(u, a));

  std::vector<MultiVector> derivatives;
  derivatives.reserve(static_cast<std::size_t>(m));
  for (int a = 0; a < m; ++a) {
    const Vector plus = u + s * fd.frame_in_chart.col(a);
    const Vector minus = u - s * fd.frame_in_chart.col(a);
    const bool plus_ok = imm.chart_domain.contains(plus);
    const bool minus_ok = imm.chart_domain.contains(minus);
    if (plus_ok && minus_ok) {
      derivatives.push_back((1.0 / (2.0 * s)) * (aligned(second_gauss_map(nimm, plus), here) -
                                                  aligned(second_gauss_map(nimm, minus), here)));
    } else if (plus_ok) {
      derivatives.push_back((1.0 / s) * (aligned(second_gauss_map(nimm, plus), here) - here));
    } else {
      derivatives.push_back((1.0 / s) * (here - aligned(second_gauss_map(nimm, minus), here)));
    }
  }
  Matrix g(m, m);
  for (int a = 0; a < m; ++a) {
    for (int b = a; b < m; ++b) {
      g(a, b) = lambda_inner(derivatives[a], derivatives[b]);
      g(b, a) = g(a, b);
    }
  }
  return g;
}

Matrix second_gauss_pullback_rhs(const NestedImmersion& nimm, const Vector& u) {
  const SecondFormPair pair = split_second_form(nimm, u);
  const int m = nimm.domain_dim();
  const int k = nimm.ambient_dim();
  const Vector& x = pair.data.position;
  const Matrix& z = pair.data.frame;

  Matrix spanning(k, m + 1);
  spanning.col(0) = x;
  spanning.rightCols(m) = z;
  const Matrix v = orthogonal_complement(spanning);  // k x n

  const Matrix ric = ricci_extrinsic(pair.data).components;
  Matrix rhs(m, m);
  for (int a = 0; a < m; ++a) {
    for (int b = a; b < m; ++b) {
      const Vector za = z.col(a);
      const Vector zb = z.col(b);
      double s = pair.in_sphere(a, b).dot(pair.in_sphere_trace) - ric(a, b);
      for (Eigen::Index i = 0; i < v.cols(); ++i) {
        const Vector vi = v.col(i);
        s += sphere_second_form(za, zb, x).dot(sphere_second_form(vi, vi, x));
        s -= sphere_curvature(za, vi, zb).dot(vi);
      }
      for (int i = 0; i < m; ++i) {
        s += sphere_curvature(za, z.col(i), zb).dot(z.col(i));
      }
      rhs(a, b) = s;
      rhs(b, a) = s;
    }
  }
  return rhs;
}

VerificationReport verify_corollary_sphere(const NestedImmersion& nimm, const GridSpec& grid,
                                           const Tolerances& tol) {
  grid.validate();
  const ParametrizedImmersion& imm = nimm.inner();
  if (grid.box.dim() != imm.domain_dim) {
    throw GeometryError("grid dimension does not match the chart of '" + imm.name + "'");
  }
  const int m = nimm.domain_dim();
  VerificationReport report;
  report.suite = "sphere";
  report.entry = imm.name;
  report.grid = grid;
  report.parameters = {{"minimal_in", to_string(imm.minimal_in)},
                       {"analytic_derivatives", imm.has_analytic_derivatives()},
                       {"m", m},
                       {"k", nimm.ambient_dim()},
                       {"n", nimm.sphere_codim()}};
  report.checks = {
      {"tr_b_in_sphere", imm.has_analytic_derivatives() ? tol.minimality : tol.minimality_fd},
      {"psi_pullback_identity", tol.identity},
      {"psi_pullback_vs_curvature", tol.identity},
      {"radial_part", tol.radial},
      {"psi_unit_norm", tol.unit_norm},
      {"ricci_oracle", tol.oracle},
  };

  for (std::size_t flat = 0; flat < grid.size(); ++flat) {
    ReportRow row;
    row.index = grid.index_of(flat);
    const Vector u = grid.point(row.index);
    row.point.assign(u.data(), u.data() + u.size());

    const SecondFormPair pair = split_second_form(nimm, u);
    const Matrix ric = ricci_extrinsic(pair.data).components;
    const Matrix ric_int = ricci_intrinsic(imm, u).components;
    const Matrix pullback = pullback_metric_psi(nimm, u);
    const Matrix rhs = second_gauss_pullback_rhs(nimm, u);
    const Matrix corollary = (m - 1) * Matrix::Identity(m, m) - ric;

    double radial_gap = 0.0;
    for (int a = 0; a < m; ++a) {
      for (int b = 0; b < m; ++b) {
        const double g_ab = a == b ? 1.0 : 0.0;
        radial_gap = std::max(radial_gap,
                              (pair.radial(a, b) + g_ab * pair.data.position).cwiseAbs().maxCoeff());
      }
    }

    bool stencil_left_chart = pair.data.one_sided || is_edge_point(imm, u);
    double s = 0.0;
    for (int a = 0; a < m; ++a) s = std::max(s, imm.step(u, a));
    for (int a = 0; a < m; ++a) {
      stencil_left_chart = stencil_left_chart ||
                           !imm.chart_domain.contains(u + s * pair.data.frame_in_chart.col(a)) ||
                           !imm.chart_domain.contains(u - s * pair.data.frame_in_chart.col(a));
    }
    row.edge = stencil_left_chart;

    row.residuals = {
        pair.in_sphere_trace.norm(),
        max_abs(pullback - corollary),
        max_abs(pullback - rhs),
        radial_gap,
        std::abs(second_gauss_map(nimm, u).norm() - 1.0),
        max_abs(ric_int - ric),
    };
    const Vector eig = RicciTensor{ric}.eigenvalues();
    row.values = {{"ricci_eig_min", eig.minCoeff()},
                  {"ricci_eig_max", eig.maxCoeff()},
                  {"ambient_tr_b", pair.data.mean_curvature.norm()}};
    report.rows.push_back(std::move(row));
  }
  report.finalize();
  return report;
}

}  // namespace gaussric
