#include "gaussric/catalog.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "gaussric/errors.hpp"

namespace gaussric {

namespace {

using std::cos;
using std::cosh;
using std::sin;
using std::sinh;

constexpr double kPi = std::numbers::pi;

Vector vec(std::initializer_list<double> xs) {
  Vector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v(i++) = x;
  return v;
}

Matrix cols(std::initializer_list<Vector> columns) {
  Matrix m(columns.begin()->size(), static_cast<Eigen::Index>(columns.size()));
  Eigen::Index j = 0;
  for (const Vector& c : columns) m.col(j++) = c;
  return m;
}

Matrix diag2(double a, double b) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

GridSpec grid2(double u0, double u1, double v0, double v1, int n = 41) {
  return GridSpec{Box{{{u0, u1}, {v0, v1}}}, {n, n}};
}

GridSpec grid1(double u0, double u1, int n = 41) {
  return GridSpec{Box{{{u0, u1}}}, {n}};
}

// Hessian from the three distinct second derivatives of a surface chart.
Hessian surface_hessian(const Vector& xuu, const Vector& xuv, const Vector& xvv) {
  return {cols({xuu, xuv}), cols({xuv, xvv})};
}

CatalogEntry make_plane() {
  CatalogEntry e;
  e.name = "plane";
  e.description = "x(u,v) = (u, v, 0)";
  e.minimal_in = MinimalIn::euclidean;
  auto& imm = e.immersion;
  imm.domain_dim = 2;
  imm.ambient_dim = 3;
  imm.position = [](const Vector& u) { return vec({u(0), u(1), 0.0}); };
  imm.jacobian = [](const Vector&) { return cols({vec({1, 0, 0}), vec({0, 1, 0})}); };
  imm.hessian = [](const Vector&) {
    const Vector z = Vector::Zero(3);
    return surface_hessian(z, z, z);
  };
  imm.chart_domain = Box::unbounded(2);
  e.closed_forms.summary = "g = du^2 + dv^2, Ric = 0, tr B = 0";
  e.closed_forms.metric = [](const Vector&) { return Matrix(Matrix::Identity(2, 2)); };
  e.closed_forms.ricci = [](const Vector&) { return Matrix(Matrix::Zero(2, 2)); };
  e.closed_forms.mean_curvature_norm = [](const Vector&) { return 0.0; };
  e.default_grid = grid2(-1, 1, -1, 1);
  return e;
}

CatalogEntry make_catenoid() {
  CatalogEntry e;
  e.name = "catenoid";
  e.description = "x(u,v) = (cosh v cos u, cosh v sin u, v)";
  e.minimal_in = MinimalIn::euclidean;
  auto& imm = e.immersion;
  imm.domain_dim = 2;
  imm.ambient_dim = 3;
  imm.position = [](const Vector& p) {
    const double u = p(0), v = p(1);
    return vec({cosh(v) * cos(u), cosh(v) * sin(u), v});
  };
  imm.jacobian = [](const Vector& p) {
    const double u = p(0), v = p(1);
    return cols({vec({-cosh(v) * sin(u), cosh(v) * cos(u), 0}),
                 vec({sinh(v) * cos(u), sinh(v) * sin(u), 1})});
  };
  imm.hessian = [](const Vector& p) {
    const double u = p(0), v = p(1);
    return surface_hessian(vec({-cosh(v) * cos(u), -cosh(v) * sin(u), 0}),
                           vec({-sinh(v) * sin(u), sinh(v) * cos(u), 0}),
                           vec({cosh(v) * cos(u), cosh(v) * sin(u), 0}));
  };
  imm.chart_domain = Box::unbounded(2);
  e.closed_forms.summary = "g = cosh^2 v (du^2 + dv^2), K = -cosh^-4 v";
  e.closed_forms.metric = [](const Vector& p) {
    const double c2 = cosh(p(1)) * cosh(p(1));
    return diag2(c2, c2);
  };
  e.closed_forms.ricci = [](const Vector& p) {
    const double k = -std::pow(cosh(p(1)), -4);
    return diag2(k, k);
  };
  e.closed_forms.mean_curvature_norm = [](const Vector&) { return 0.0; };
  e.default_grid = grid2(0, 2 * kPi, -2, 2);
  return e;
}

CatalogEntry make_helicoid() {
  CatalogEntry e;
  e.name = "helicoid";
  e.description = "x(u,v) = (v cos u, v sin u, u)";
  e.minimal_in = MinimalIn::euclidean;
  auto& imm = e.immersion;
  imm.domain_dim = 2;
  imm.ambient_dim = 3;
  imm.position = [](const Vector& p) {
    const double u = p(0), v = p(1);
    return vec({v * cos(u), v * sin(u), u});
  };
  imm.jacobian = [](const Vector& p) {
    const double u = p(0), v = p(1);
    return cols({vec({-v * sin(u), v * cos(u), 1}), vec({cos(u), sin(u), 0})});
  };
  imm.hessian = [](const Vector& p) {
    const double u = p(0), v = p(1);
    return surface_hessian(vec({-v * cos(u), -v * sin(u), 0}), vec({-sin(u), cos(u), 0}),
                           Vector::Zero(3));
  };
  imm.chart_domain = Box::unbounded(2);
  e.closed_forms.summary = "g = (1 + v^2) du^2 + dv^2, K = -(1 + v^2)^-2";
  e.closed_forms.metric = [](const Vector& p) { return diag2(1 + p(1) * p(1), 1); };
  e.closed_forms.ricci = [](const Vector& p) {
    const double k = -1.0 / std::pow(1 + p(1) * p(1), 2);
    return diag2(k, k);
  };
  e.closed_forms.mean_curvature_norm = [](const Vector&) { return 0.0; };
  e.default_grid = grid2(-kPi, kPi, -2, 2);
  return e;
}

CatalogEntry make_enneper() {
  CatalogEntry e;
  e.name = "enneper";
  e.description = "x(u,v) = (u - u^3/3 + u v^2, -v + v^3/3 - v u^2, u^2 - v^2)";
  e.minimal_in = MinimalIn::euclidean;
  auto& imm = e.immersion;
  imm.domain_dim = 2;
  imm.ambient_dim = 3;
  imm.position = [](const Vector& p) {
    const double u = p(0), v = p(1);
    return vec({u - u * u * u / 3 + u * v * v, -v + v * v * v / 3 - v * u * u, u * u - v * v});
  };
  imm.jacobian = [](const Vector& p) {
    const double u = p(0), v = p(1);
    return cols({vec({1 - u * u + v * v, -2 * u * v, 2 * u}),
                 vec({2 * u * v, -1 + v * v - u * u, -2 * v})});
  };
  imm.hessian = [](const Vector& p) {
    const double u = p(0), v = p(1);
    return surface_hessian(vec({-2 * u, -2 * v, 2}), vec({2 * v, -2 * u, 0}),
                           vec({2 * u, 2 * v, -2}));
  };
  imm.chart_domain = Box::unbounded(2);
  e.closed_forms.summary = "g = (1 + u^2 + v^2)^2 (du^2 + dv^2), K = -4 (1 + u^2 + v^2)^-4";
  e.closed_forms.metric = [](const Vector& p) {
    const double s = std::pow(1 + p.squaredNorm(), 2);
    return diag2(s, s);
  };
  e.closed_forms.ricci = [](const Vector& p) {
    const double k = -4.0 / std::pow(1 + p.squaredNorm(), 4);
    return diag2(k, k);
  };
  e.closed_forms.mean_curvature_norm = [](const Vector&) { return 0.0; };
  e.default_grid = grid2(-1, 1, -1, 1);
  return e;
}

CatalogEntry make_holo_z2() {
  CatalogEntry e;
  e.name = "holo_z2";
  e.description = "z -> (z, z^2) in C^2 = R^4: x(u,v) = (u, v, u^2 - v^2, 2uv)";
  e.minimal_in = MinimalIn::euclidean;
  auto& imm = e.immersion;
  imm.domain_dim = 2;
  imm.ambient_dim = 4;
  imm.position = [](const Vector& p) {
    const double u = p(0), v = p(1);
    return vec({u, v, u * u - v * v, 2 * u * v});
  };
  imm.jacobian = [](const Vector& p) {
    const double u = p(0), v = p(1);
    return cols({vec({1, 0, 2 * u, 2 * v}), vec({0, 1, -2 * v, 2 * u})});
  };
  imm.hessian = [](const Vector&) {
    return surface_hessian(vec({0, 0, 2, 0}), vec({0, 0, 0, 2}), vec({0, 0, -2, 0}));
  };
  imm.chart_domain = Box::unbounded(2);
  e.closed_forms.summary = "g = (1 + 4|z|^2)(du^2 + dv^2), K = -8 (1 + 4|z|^2)^-3";
  e.closed_forms.metric = [](const Vector& p) {
    const double s = 1 + 4 * p.squaredNorm();
    return diag2(s, s);
  };
  e.closed_forms.ricci = [](const Vector& p) {
    const double k = -8.0 / std::pow(1 + 4 * p.squaredNorm(), 3);
    return diag2(k, k);
  };
  e.closed_forms.mean_curvature_norm = [](const Vector&) { return 0.0; };
  e.default_grid = grid2(-1, 1, -1, 1);
  return e;
}

ParametrizedImmersion sphere_chart(int ambient_dim) {
  ParametrizedImmersion imm;
  imm.domain_dim = 2;
  imm.ambient_dim = ambient_dim;
  auto pad = [ambient_dim](Vector v3) {
    Vector v = Vector::Zero(ambient_dim);
    v.head(3) = v3;
    return v;
  };
  imm.position = [pad](const Vector& p) {
    const double u = p(0), v = p(1);
    return pad(vec({cos(u) * cos(v), sin(u) * cos(v), sin(v)}));
  };
  imm.jacobian = [pad](const Vector& p) {
    const double u = p(0), v = p(1);
    return cols({pad(vec({-sin(u) * cos(v), cos(u) * cos(v), 0})),
                 pad(vec({-cos(u) * sin(v), -sin(u) * sin(v), cos(v)}))});
  };
  imm.hessian = [pad](const Vector& p) {
    const double u = p(0), v = p(1);
    return surface_hessian(pad(vec({-cos(u) * cos(v), -sin(u) * cos(v), 0})),
                           pad(vec({sin(u) * sin(v), -cos(u) * sin(v), 0})),
                           pad(vec({-cos(u) * cos(v), -sin(u) * cos(v), -sin(v)})));
  };
  imm.chart_domain = Box{{Interval{}, Interval{-kPi / 2, kPi / 2}}};
  return imm;
}

CatalogEntry make_round_sphere() {
  CatalogEntry e;
  e.name = "round_sphere";
  e.description = "unit S^2 in R^3, x(u,v) = (cos u cos v, sin u cos v, sin v); not minimal";
  e.minimal_in = MinimalIn::none;
  e.immersion = sphere_chart(3);
  e.closed_forms.summary = "g = cos^2 v du^2 + dv^2, Ric = 1, |tr B| = 2";
  e.closed_forms.metric = [](const Vector& p) { return diag2(cos(p(1)) * cos(p(1)), 1); };
  e.closed_forms.ricci = [](const Vector&) { return Matrix(Matrix::Identity(2, 2)); };
  e.closed_forms.mean_curvature_norm = [](const Vector&) { return 2.0; };
  e.default_grid = grid2(0, 2 * kPi, -1.2, 1.2);
  return e;
}

CatalogEntry make_great_sphere() {
  CatalogEntry e;
  e.name = "great_sphere";
  e.description = "totally geodesic S^2 in S^3 subset R^4";
  e.minimal_in = MinimalIn::sphere;
  e.immersion = sphere_chart(4);
  e.closed_forms.summary = "g = cos^2 v du^2 + dv^2, Ric = 1 = m - 1, B_{M in N} = 0";
  e.closed_forms.metric = [](const Vector& p) { return diag2(cos(p(1)) * cos(p(1)), 1); };
  e.closed_forms.ricci = [](const Vector&) { return Matrix(Matrix::Identity(2, 2)); };
  e.closed_forms.mean_curvature_norm = [](const Vector&) { return 2.0; };
  e.closed_forms.sphere_mean_curvature_norm = [](const Vector&) { return 0.0; };
  e.default_grid = grid2(0, 2 * kPi, -1.2, 1.2);
  return e;
}

CatalogEntry make_circle(const std::string& name, double theta, MinimalIn minimal_in) {
  CatalogEntry e;
  e.name = name;
  e.minimal_in = minimal_in;
  const double c = cos(theta), s = sin(theta);
  std::ostringstream desc;
  desc << "latitude circle at theta = " << theta << " in S^2 subset R^3";
  e.description = desc.str();
  auto& imm = e.immersion;
  imm.domain_dim = 1;
  imm.ambient_dim = 3;
  imm.position = [c, s](const Vector& p) { return vec({c * cos(p(0)), c * sin(p(0)), s}); };
  imm.jacobian = [c](const Vector& p) {
    return cols({vec({-c * sin(p(0)), c * cos(p(0)), 0})});
  };
  imm.hessian = [c](const Vector& p) {
    return Hessian{cols({vec({-c * cos(p(0)), -c * sin(p(0)), 0})})};
  };
  imm.chart_domain = Box::unbounded(1);
  e.closed_forms.summary = "g = cos^2 theta du^2, Ric = 0, |tr B_{M in N}| = |tan theta|";
  e.closed_forms.metric = [c](const Vector&) { return Matrix(Matrix::Constant(1, 1, c * c)); };
  e.closed_forms.ricci = [](const Vector&) { return Matrix(Matrix::Zero(1, 1)); };
  e.closed_forms.mean_curvature_norm = [c](const Vector&) { return 1.0 / std::abs(c); };
  e.closed_forms.sphere_mean_curvature_norm = [c, s](const Vector&) { return std::abs(s / c); };
  e.default_grid = grid1(0, 2 * kPi);
  return e;
}

CatalogEntry make_torus(const std::string& name, double a, MinimalIn minimal_in) {
  CatalogEntry e;
  e.name = name;
  e.minimal_in = minimal_in;
  const double b = std::sqrt(1 - a * a);
  std::ostringstream desc;
  desc << "product torus S^1(" << a << ") x S^1(" << b << ") in S^3 subset R^4";
  e.description = desc.str();
  auto& imm = e.immersion;
  imm.domain_dim = 2;
  imm.ambient_dim = 4;
  imm.position = [a, b](const Vector& p) {
    return vec({a * cos(p(0)), a * sin(p(0)), b * cos(p(1)), b * sin(p(1))});
  };
  imm.jacobian = [a, b](const Vector& p) {
    return cols({vec({-a * sin(p(0)), a * cos(p(0)), 0, 0}),
                 vec({0, 0, -b * sin(p(1)), b * cos(p(1))})});
  };
  imm.hessian = [a, b](const Vector& p) {
    return surface_hessian(vec({-a * cos(p(0)), -a * sin(p(0)), 0, 0}), Vector::Zero(4),
                           vec({0, 0, -b * cos(p(1)), -b * sin(p(1))}));
  };
  imm.chart_domain = Box::unbounded(2);
  e.closed_forms.summary =
      "g = a^2 du^2 + b^2 dv^2, Ric = 0, |tr B_{M in N}|^2 = (2a - 1/a)^2 + (2b - 1/b)^2";
  e.closed_forms.metric = [a, b](const Vector&) { return diag2(a * a, b * b); };
  e.closed_forms.ricci = [](const Vector&) { return Matrix(Matrix::Zero(2, 2)); };
  e.closed_forms.mean_curvature_norm = [a, b](const Vector&) {
    return std::sqrt(1 / (a * a) + 1 / (b * b));
  };
  e.closed_forms.sphere_mean_curvature_norm = [a, b](const Vector&) {
    return std::hypot(2 * a - 1 / a, 2 * b - 1 / b);
  };
  e.default_grid = grid2(0, 2 * kPi, 0, 2 * kPi);
  return e;
}

CatalogEntry finish(CatalogEntry e, bool in_sphere) {
  e.immersion.name = e.name;
  e.immersion.minimal_in = e.minimal_in;
  if (in_sphere) e.nested.emplace(e.immersion);
  return e;
}

constexpr double kDefaultSmallCircleTheta = kPi / 6;
constexpr double kDefaultTorusRadius = 0.6;

struct Registration {
  const char* name;
  const char* parameter;
  bool in_sphere;
};

// Registration order is the listing order.
constexpr Registration kRegistry[] = {
    {"plane", "", false},          {"catenoid", "", false},
    {"helicoid", "", false},       {"enneper", "", false},
    {"holo_z2", "", false},        {"round_sphere", "", false},
    {"great_circle", "", true},    {"great_sphere", "", true},
    {"clifford_torus", "", true},  {"small_circle", "theta", true},
    {"torus", "a", true},
};

CatalogEntry build(std::string_view base, std::optional<double> param, const std::string& name) {
  if (base == "plane") return finish(make_plane(), false);
  if (base == "catenoid") return finish(make_catenoid(), false);
  if (base == "helicoid") return finish(make_helicoid(), false);
  if (base == "enneper") return finish(make_enneper(), false);
  if (base == "holo_z2") return finish(make_holo_z2(), false);
  if (base == "round_sphere") return finish(make_round_sphere(), false);
  if (base == "great_sphere") return finish(make_great_sphere(), true);
  if (base == "great_circle") {
    CatalogEntry e = make_circle("great_circle", 0.0, MinimalIn::sphere);
    e.description = "equator of S^2 subset R^3 (totally geodesic)";
    return finish(std::move(e), true);
  }
  if (base == "clifford_torus") {
    CatalogEntry e = make_torus("clifford_torus", 1 / std::sqrt(2.0), MinimalIn::sphere);
    e.description = "Clifford torus (cos u, sin u, cos v, sin v)/sqrt2 in S^3";
    e.closed_forms.summary = "g = (du^2 + dv^2)/2, Ric = 0, B_{M in N} traceless";
    return finish(std::move(e), true);
  }
  if (base == "small_circle") {
    const double theta = param.value_or(kDefaultSmallCircleTheta);
    if (!(std::abs(theta) < kPi / 2)) {
      throw std::invalid_argument("small_circle(theta) needs |theta| < pi/2");
    }
    return finish(make_circle(name, theta, theta == 0.0 ? MinimalIn::sphere : MinimalIn::none),
                  true);
  }
  if (base == "torus") {
    const double a = param.value_or(kDefaultTorusRadius);
    if (!(a > 0.0 && a < 1.0)) throw std::invalid_argument("torus(a) needs 0 < a < 1");
    const bool clifford = std::abs(a - 1 / std::sqrt(2.0)) < 1e-15;
    return finish(make_torus(name, a, clifford ? MinimalIn::sphere : MinimalIn::none), true);
  }
  throw std::logic_error("unregistered catalog entry");
}

std::string valid_names() {
  std::string out;
  for (const Registration& r : kRegistry) {
    if (!out.empty()) out += ", ";
    out += r.name;
    if (*r.parameter) out += std::string("(") + r.parameter + ")";
  }
  return out;
}

}  // namespace

double SelfTestResult::worst() const {
  return std::max({metric, ricci, mean_curvature, jacobian_vs_fd, hessian_vs_fd});
}

SelfTestResult self_test(const CatalogEntry& entry, int points_per_axis) {
  SelfTestResult out;
  const ParametrizedImmersion& imm = entry.immersion;
  ParametrizedImmersion fd_only = imm;
  fd_only.jacobian = nullptr;
  fd_only.hessian = nullptr;
  ParametrizedImmersion fd_hessian = imm;
  fd_hessian.hessian = nullptr;

  GridSpec sample = entry.default_grid;
  for (int& r : sample.resolution) r = std::min(r, points_per_axis);
  for (std::size_t flat = 0; flat < sample.size(); ++flat) {
    const Vector u = sample.point(sample.index_of(flat));
    const Matrix j = evaluate_jacobian(imm, u);
    const FundamentalData fd = fundamental_data(imm, u);
    if (entry.closed_forms.metric) {
      out.metric = std::max(out.metric, max_abs(entry.closed_forms.metric(u) - j.transpose() * j));
    }
    if (entry.closed_forms.ricci) {
      const Matrix ref = entry.closed_forms.ricci(u);
      out.ricci = std::max({out.ricci, max_abs(ref - ricci_intrinsic(imm, u).components),
                            max_abs(ref - ricci_extrinsic(fd).components)});
    }
    if (entry.closed_forms.mean_curvature_norm) {
      out.mean_curvature =
          std::max(out.mean_curvature,
                   std::abs(entry.closed_forms.mean_curvature_norm(u) - fd.mean_curvature.norm()));
    }
    if (entry.closed_forms.sphere_mean_curvature_norm && entry.nested) {
      const SecondFormPair pair = split_second_form(*entry.nested, u);
      out.mean_curvature = std::max(out.mean_curvature,
                                    std::abs(entry.closed_forms.sphere_mean_curvature_norm(u) -
                                             pair.in_sphere_trace.norm()));
    }
    out.jacobian_vs_fd = std::max(out.jacobian_vs_fd, max_abs(j - evaluate_jacobian(fd_only, u)));
    const Hessian exact = evaluate_hessian(imm, u);
    const Hessian numeric = evaluate_hessian(fd_hessian, u);
    for (std::size_t a = 0; a < exact.size(); ++a) {
      out.hessian_vs_fd = std::max(out.hessian_vs_fd, max_abs(exact[a] - numeric[a]));
    }
  }
  return out;
}

Catalog::Catalog() {
  for (const Registration& r : kRegistry) {
    const CatalogEntry e = build(r.name, std::nullopt, r.name);
    const SelfTestResult result = self_test(e);
    if (!(result.worst() <= kSelfTestTolerance)) {
      throw std::logic_error(std::string("catalog self-test failed for ") + r.name);
    }
  }
}

const Catalog& Catalog::instance() {
  static const Catalog catalog;
  return catalog;
}

std::vector<EntryInfo> Catalog::list_entries() const {
  std::vector<EntryInfo> out;
  for (const Registration& r : kRegistry) {
    const CatalogEntry e = build(r.name, std::nullopt, r.name);
    out.push_back(EntryInfo{e.name, r.parameter, e.description, e.immersion.domain_dim,
                            e.immersion.ambient_dim, e.minimal_in, e.nested.has_value()});
  }
  return out;
}

std::vector<std::string> Catalog::names() const {
  std::vector<std::string> out;
  for (const Registration& r : kRegistry) out.emplace_back(r.name);
  return out;
}

CatalogEntry Catalog::get(std::string_view name) const {
  std::string_view base = name;
  std::optional<double> param;
  if (const auto open = name.find('('); open != std::string_view::npos) {
    if (name.back() != ')') {
      throw std::invalid_argument("malformed catalog entry '" + std::string(name) + "'");
    }
    base = name.substr(0, open);
    const std::string text(name.substr(open + 1, name.size() - open - 2));
    std::size_t used = 0;
    try {
      param = std::stod(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != text.size()) {
      throw std::invalid_argument("malformed parameter in '" + std::string(name) + "'");
    }
  }
  for (const Registration& r : kRegistry) {
    if (base != r.name) continue;
    if (param && !*r.parameter) {
      throw std::invalid_argument("catalog entry '" + std::string(base) + "' takes no parameter");
    }
    CatalogEntry e = build(base, param, std::string(name));
    if (param && !(self_test(e).worst() <= kSelfTestTolerance)) {
      throw std::logic_error("catalog self-test failed for " + std::string(name));
    }
    return e;
  }
  throw std::invalid_argument("unknown catalog entry '" + std::string(name) +
                              "'; valid names: " + valid_names());
}

}  // namespace gaussric
