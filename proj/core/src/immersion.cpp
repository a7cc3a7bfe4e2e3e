#include "gaussric/immersion.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gaussric/errors.hpp"
#include "gaussric/grassmann.hpp"

namespace gaussric {

namespace {

constexpr double kRegularityThreshold = 1e-8;

// Outer step used by the intrinsic Ricci oracle. Nesting a difference of
// a finite-difference jacobian amplifies rounding, so FD-only charts get a
// coarser outer step.
double intrinsic_step(const ParametrizedImmersion& imm, const Vector& u, int axis) {
  const double h = imm.step(u, axis);
  return imm.jacobian ? h : 10.0 * h;
}

double max_step(const ParametrizedImmersion& imm, const Vector& u) {
  double s = 0.0;
  for (int a = 0; a < imm.domain_dim; ++a) s = std::max(s, imm.step(u, a));
  return s;
}

void require_in_chart(const ParametrizedImmersion& imm, const Vector& u) {
  if (u.size() != imm.domain_dim || !imm.chart_domain.contains(u)) {
    throw GeometryError("point outside chart domain of '" + imm.name + "'");
  }
}

Matrix metric_at(const ParametrizedImmersion& imm, const Vector& u) {
  const Matrix j = evaluate_jacobian(imm, u);
  return j.transpose() * j;
}

// Flattened Christoffel symbols Gamma^l_ab at index (l*m + a)*m + b.
Vector christoffel_at(const ParametrizedImmersion& imm, const Vector& u) {
  const int m = imm.domain_dim;
  const Matrix g = metric_at(imm, u);
  const Matrix g_inv = g.inverse();
  const std::function<Matrix(const Vector&)> metric = [&imm](const Vector& p) {
    return metric_at(imm, p);
  };
  std::vector<Matrix> dg(static_cast<std::size_t>(m));
  for (int c = 0; c < m; ++c) {
    dg[c] = coordinate_derivative<Matrix>(metric, u, c, intrinsic_step(imm, u, c),
                                          imm.chart_domain);
  }
  Vector gamma = Vector::Zero(m * m * m);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      for (int l = 0; l < m; ++l) {
        double s = 0.0;
        for (int c = 0; c < m; ++c) {
          s += g_inv(l, c) * 0.5 * (dg[a](c, b) + dg[b](c, a) - dg[c](a, b));
        }
        gamma((l * m + a) * m + b) = s;
      }
    }
  }
  return gamma;
}

// Chart points u +- s E_axis used to difference along frame direction Z_axis.
struct FrameStencil {
  Vector plus;
  Vector minus;
  double step;
  bool plus_ok;
  bool minus_ok;
};

FrameStencil frame_stencil(const ParametrizedImmersion& imm, const Vector& u,
                           const Matrix& frame_in_chart, int axis) {
  const double s = max_step(imm, u);
  FrameStencil st{u + s * frame_in_chart.col(axis), u - s * frame_in_chart.col(axis), s, false,
                  false};
  st.plus_ok = imm.chart_domain.contains(st.plus);
  st.minus_ok = imm.chart_domain.contains(st.minus);
  return st;
}

}  // namespace

const char* to_string(MinimalIn m) {
  switch (m) {
    case MinimalIn::euclidean:
      return "euclidean";
    case MinimalIn::sphere:
      return "sphere";
    case MinimalIn::none:
      return "none";
  }
  return "none";
}

double ParametrizedImmersion::step(const Vector& u, int axis) const {
  return finite_difference_step > 0.0 ? finite_difference_step : default_step(u(axis));
}

SecondForm::SecondForm(int m, int k)
    : m_(m), entries_(static_cast<std::size_t>(m * m), Vector::Zero(k)) {}

Vector RicciTensor::eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<Matrix> es(components, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

Vector evaluate_position(const ParametrizedImmersion& imm, const Vector& u) {
  return imm.position(u);
}

Matrix evaluate_jacobian(const ParametrizedImmersion& imm, const Vector& u, bool* one_sided) {
  if (imm.jacobian) return imm.jacobian(u);
  Matrix j(imm.ambient_dim, imm.domain_dim);
  for (int a = 0; a < imm.domain_dim; ++a) {
    j.col(a) = coordinate_derivative<Vector>(imm.position, u, a, imm.step(u, a),
                                             imm.chart_domain, one_sided);
  }
  return j;
}

Hessian evaluate_hessian(const ParametrizedImmersion& imm, const Vector& u, bool* one_sided) {
  if (imm.hessian) return imm.hessian(u);
  const std::function<Matrix(const Vector&)> jac = [&imm, one_sided](const Vector& p) {
    return evaluate_jacobian(imm, p, one_sided);
  };
  Hessian h(static_cast<std::size_t>(imm.domain_dim));
  for (int a = 0; a < imm.domain_dim; ++a) {
    h[a] = coordinate_derivative<Matrix>(jac, u, a, imm.step(u, a), imm.chart_domain, one_sided);
  }
  // Nested differences are only symmetric up to rounding.
  for (int a = 0; a < imm.domain_dim; ++a) {
    for (int b = a + 1; b < imm.domain_dim; ++b) {
      const Vector avg = 0.5 * (h[a].col(b) + h[b].col(a));
      h[a].col(b) = avg;
      h[b].col(a) = avg;
    }
  }
  return h;
}

bool is_edge_point(const ParametrizedImmersion& imm, const Vector& u) {
  double reach = 0.0;
  for (int a = 0; a < imm.domain_dim; ++a) {
    reach = std::max(reach, 2.0 * intrinsic_step(imm, u, a) + 2.0 * imm.step(u, a));
  }
  return imm.chart_domain.near_boundary(u, reach);
}

Matrix tangent_frame(const ParametrizedImmersion& imm, const Vector& u) {
  require_in_chart(imm, u);
  const Matrix j = evaluate_jacobian(imm, u);
  if (!(smallest_singular_value(j) > kRegularityThreshold)) {
    throw GeometryError("irregular point of '" + imm.name + "'");
  }
  return oriented_gram_schmidt(j).q;
}

FundamentalData fundamental_data(const ParametrizedImmersion& imm, const Vector& u) {
  require_in_chart(imm, u);
  const int m = imm.domain_dim;
  const int k = imm.ambient_dim;
  FundamentalData fd;
  const Matrix j = evaluate_jacobian(imm, u, &fd.one_sided);
  if (!(smallest_singular_value(j) > kRegularityThreshold)) {
    throw GeometryError("irregular point of '" + imm.name + "'");
  }
  const OrientedQR qr = oriented_gram_schmidt(j);
  const Hessian hess = evaluate_hessian(imm, u, &fd.one_sided);

  fd.position = evaluate_position(imm, u);
  fd.frame = qr.q;
  fd.frame_in_chart =
      qr.r.triangularView<Eigen::Upper>().solve(Matrix::Identity(m, m));
  fd.metric = j.transpose() * j;
  fd.second_form = SecondForm(m, k);
  fd.mean_curvature = Vector::Zero(k);

  const Matrix normal_projector = Matrix::Identity(k, k) - qr.q * qr.q.transpose();
  const Matrix& e = fd.frame_in_chart;
  for (int a = 0; a < m; ++a) {
    for (int b = a; b < m; ++b) {
      Vector ambient = Vector::Zero(k);
      for (int c = 0; c < m; ++c) {
        for (int d = 0; d < m; ++d) {
          const double w = e(c, a) * e(d, b);
          if (w != 0.0) ambient += w * hess[c].col(d);
        }
      }
      const Vector normal = normal_projector * ambient;
      fd.second_form(a, b) = normal;
      fd.second_form(b, a) = normal;
    }
    fd.mean_curvature += fd.second_form(a, a);
  }
  return fd;
}

RicciTensor ricci_extrinsic(const FundamentalData& fd) {
  const int m = fd.second_form.dim();
  const SecondForm& b = fd.second_form;
  Matrix ric(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = i; j < m; ++j) {
      double s = b(i, j).dot(fd.mean_curvature);
      for (int c = 0; c < m; ++c) s -= b(i, c).dot(b(j, c));
      ric(i, j) = s;
      ric(j, i) = s;
    }
  }
  return RicciTensor{ric};
}

RicciTensor ricci_intrinsic(const ParametrizedImmersion& imm, const Vector& u) {
  require_in_chart(imm, u);
  const int m = imm.domain_dim;
  const Matrix j = evaluate_jacobian(imm, u);
  if (!(smallest_singular_value(j) > kRegularityThreshold)) {
    throw GeometryError("irregular point of '" + imm.name + "'");
  }
  const OrientedQR qr = oriented_gram_schmidt(j);
  const Matrix e = qr.r.triangularView<Eigen::Upper>().solve(Matrix::Identity(m, m));

  const Vector gamma = christoffel_at(imm, u);
  const std::function<Vector(const Vector&)> gamma_fn = [&imm](const Vector& p) {
    return christoffel_at(imm, p);
  };
  std::vector<Vector> d_gamma(static_cast<std::size_t>(m));
  for (int d = 0; d < m; ++d) {
    d_gamma[d] = coordinate_derivative<Vector>(gamma_fn, u, d, intrinsic_step(imm, u, d),
                                               imm.chart_domain);
  }
  auto G = [&](int l, int a, int b) { return gamma((l * m + a) * m + b); };
  auto dG = [&](int d, int l, int a, int b) { return d_gamma[d]((l * m + a) * m + b); };

  // Ric_bd = d_a G^a_db - d_d G^a_ab + G^a_ae G^e_db - G^a_de G^e_ab
  Matrix ric_chart = Matrix::Zero(m, m);
  for (int b = 0; b < m; ++b) {
    for (int d = 0; d < m; ++d) {
      double s = 0.0;
      for (int a = 0; a < m; ++a) {
        s += dG(a, a, d, b) - dG(d, a, a, b);
        for (int e2 = 0; e2 < m; ++e2) {
          s += G(a, a, e2) * G(e2, d, b) - G(a, d, e2) * G(e2, a, b);
        }
      }
      ric_chart(b, d) = s;
    }
  }
  Matrix ric = e.transpose() * ric_chart * e;
  ric = 0.5 * (ric + ric.transpose()).eval();
  return RicciTensor{ric};
}

MultiVector gauss_map(const ParametrizedImmersion& imm, const Vector& u) {
  return wedge(tangent_frame(imm, u));
}

MultiVector gauss_map_differential(const FundamentalData& fd, const Vector& direction) {
  const int m = fd.second_form.dim();
  const int k = static_cast<int>(fd.frame.rows());
  MultiVector out = MultiVector::zero(k, m);
  for (int i = 0; i < m; ++i) {
    Vector bx = Vector::Zero(k);
    for (int a = 0; a < m; ++a) bx += direction(a) * fd.second_form(a, i);
    Matrix replaced = fd.frame;
    replaced.col(i) = bx;
    out += wedge(replaced);
  }
  return out;
}

MultiVector gauss_map_differential_fd(const ParametrizedImmersion& imm, const Vector& u,
                                      int axis) {
  const FundamentalData fd = fundamental_data(imm, u);
  const FrameStencil st = frame_stencil(imm, u, fd.frame_in_chart, axis);
  if (st.plus_ok && st.minus_ok) {
    return (1.0 / (2.0 * st.step)) * (gauss_map(imm, st.plus) - gauss_map(imm, st.minus));
  }
  const MultiVector here = wedge(fd.frame);
  if (st.plus_ok) return (1.0 / st.step) * (gauss_map(imm, st.plus) - here);
  return (1.0 / st.step) * (here - gauss_map(imm, st.minus));
}

Matrix pullback_metric_phi(const FundamentalData& fd) {
  const int m = fd.second_form.dim();
  std::vector<MultiVector> images;
  images.reserve(static_cast<std::size_t>(m));
  for (int a = 0; a < m; ++a) {
    images.push_back(gauss_map_differential(fd, Vector::Unit(m, a)));
  }
  Matrix g(m, m);
  for (int a = 0; a < m; ++a) {
    for (int b = a; b < m; ++b) {
      g(a, b) = lambda_inner(images[a], images[b]);
      g(b, a) = g(a, b);
    }
  }
  return g;
}

Matrix pullback_metric_phi(const ParametrizedImmersion& imm, const Vector& u) {
  return pullback_metric_phi(fundamental_data(imm, u));
}

double gauss_image_dc_diameter(const ParametrizedImmersion& imm, const GridSpec& grid,
                               int max_per_axis) {
  grid.validate();
  std::vector<std::vector<int>> axis_indices(grid.resolution.size());
  for (std::size_t axis = 0; axis < grid.resolution.size(); ++axis) {
    const int r = grid.resolution[axis];
    const int stride = r <= max_per_axis ? 1 : (r - 1 + max_per_axis - 2) / (max_per_axis - 1);
    for (int i = 0; i < r; i += stride) axis_indices[axis].push_back(i);
    if (axis_indices[axis].back() != r - 1) axis_indices[axis].push_back(r - 1);
  }
  std::vector<OrientedPlane> planes;
  std::vector<int> index(grid.resolution.size(), 0);
  std::vector<std::size_t> cursor(grid.resolution.size(), 0);
  while (true) {
    for (std::size_t axis = 0; axis < index.size(); ++axis) index[axis] = axis_indices[axis][cursor[axis]];
    planes.emplace_back(tangent_frame(imm, grid.point(index)));
    std::size_t axis = index.size();
    while (axis-- > 0) {
      if (++cursor[axis] < axis_indices[axis].size()) break;
      cursor[axis] = 0;
    }
    if (axis == static_cast<std::size_t>(-1)) break;
  }
  double diameter = 0.0;
  for (std::size_t i = 0; i < planes.size(); ++i) {
    for (std::size_t j = i + 1; j < planes.size(); ++j) {
      diameter = std::max(diameter, canonical_distance(planes[i], planes[j]));
    }
  }
  return diameter;
}

VerificationReport verify_corollary_minimal(const ParametrizedImmersion& imm,
                                            const GridSpec& grid, const Tolerances& tol) {
  grid.validate();
  if (grid.box.dim() != imm.domain_dim) {
    throw GeometryError("grid dimension does not match the chart of '" + imm.name + "'");
  }
  const int m = imm.domain_dim;
  VerificationReport report;
  report.suite = "euclid";
  report.entry = imm.name;
  report.grid = grid;
  report.parameters = {{"minimal_in", to_string(imm.minimal_in)},
                       {"analytic_derivatives", imm.has_analytic_derivatives()}};
  report.checks = {
      {"tr_b", imm.has_analytic_derivatives() ? tol.minimality : tol.minimality_fd},
      {"phi_pullback_plus_ric", tol.identity},
      {"phi_pullback_full", tol.lemma},
      {"ricci_oracle", tol.oracle},
      {"derivation_vs_fd", tol.derivative},
  };

  for (std::size_t flat = 0; flat < grid.size(); ++flat) {
    ReportRow row;
    row.index = grid.index_of(flat);
    const Vector u = grid.point(row.index);
    row.point.assign(u.data(), u.data() + u.size());

    const FundamentalData fd = fundamental_data(imm, u);
    const RicciTensor ric_ext = ricci_extrinsic(fd);
    const RicciTensor ric_int = ricci_intrinsic(imm, u);
    const Matrix pullback = pullback_metric_phi(fd);

    Matrix second_trace(m, m);
    for (int a = 0; a < m; ++a) {
      for (int b = 0; b < m; ++b) second_trace(a, b) = fd.second_form(a, b).dot(fd.mean_curvature);
    }

    double derivation_gap = 0.0;
    bool stencil_left_chart = fd.one_sided;
    for (int a = 0; a < m; ++a) {
      const FrameStencil st = frame_stencil(imm, u, fd.frame_in_chart, a);
      stencil_left_chart = stencil_left_chart || !st.plus_ok || !st.minus_ok;
      const MultiVector exact = gauss_map_differential(fd, Vector::Unit(m, a));
      const MultiVector numeric = gauss_map_differential_fd(imm, u, a);
      derivation_gap = std::max(derivation_gap, (exact - numeric).norm());
    }

    row.edge = stencil_left_chart || is_edge_point(imm, u);
    row.residuals = {
        fd.mean_curvature.norm(),
        max_abs(pullback + ric_int.components),
        max_abs(pullback - (second_trace - ric_ext.components)),
        max_abs(ric_int.components - ric_ext.components),
        derivation_gap,
    };
    const Vector eig = ric_ext.eigenvalues();
    row.values = {{"ricci_eig_min", eig.minCoeff()},
                  {"ricci_eig_max", eig.maxCoeff()},
                  {"pullback_plus_ric_extrinsic", max_abs(pullback + ric_ext.components)}};
    report.rows.push_back(std::move(row));
  }
  report.summary.gauss_image_dc_diameter = gauss_image_dc_diameter(imm, grid);
  report.finalize();
  return report;
}

}  // namespace gaussric
