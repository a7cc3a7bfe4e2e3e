#include <cmath>
#include <map>
#include <numbers>

#include <gtest/gtest.h>

#include "gaussric/catalog.hpp"
#include "gaussric/errors.hpp"
#include "gaussric/sampling.hpp"
#include "gaussric/spherical.hpp"
#include "oracles.hpp"

namespace gaussric {
namespace {

constexpr double kPi = std::numbers::pi;

const NestedImmersion& nested(const std::string& name) {
  static std::map<std::string, CatalogEntry> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, Catalog::instance().get(name)).first;
  return *it->second.nested;
}

Vector pt(std::initializer_list<double> xs) {
  Vector p(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) p(i++) = x;
  return p;
}

const std::vector<std::string> kSphereEntries{"great_circle", "great_sphere", "clifford_torus",
                                              "small_circle", "torus"};

std::vector<Vector> sample_points(const NestedImmersion& n) {
  if (n.domain_dim() == 1) return {pt({0.0}), pt({1.1}), pt({-2.5})};
  return {pt({0.0, 0.0}), pt({0.4, -0.7}), pt({2.2, 1.0})};
}

TEST(NestedImmersion, DimensionChecks) {
  ParametrizedImmersion imm = Catalog::instance().get("round_sphere").immersion;
  EXPECT_NO_THROW(NestedImmersion{imm});
  imm.ambient_dim = 2;
  EXPECT_THROW(NestedImmersion{imm}, GeometryError);
}

TEST(NestedImmersion, OffSphereRejected) {
  const NestedImmersion n(Catalog::instance().get("catenoid").immersion);
  try {
    n.require_on_sphere(pt({0.0, 0.5}));
    FAIL();
  } catch (const GeometryError& e) {
    EXPECT_NE(std::string(e.what()).find("not on unit sphere"), std::string::npos);
  }
  EXPECT_THROW(split_second_form(n, pt({0.0, 0.5})), GeometryError);
  EXPECT_THROW(second_gauss_map(n, pt({0.0, 0.5})), GeometryError);
}

TEST(NestedImmersion, Counts) {
  const auto& t = nested("clifford_torus");
  EXPECT_EQ(t.sphere_codim(), 1);
  EXPECT_EQ(t.r(), 3);
  EXPECT_EQ(nested("great_circle").sphere_codim(), 1);
}

TEST(SphereRules, Formulas) {
  const Vector x = pt({1, 0, 0});
  const Vector e2 = pt({0, 1, 0});
  const Vector e3 = pt({0, 0, 1});
  EXPECT_EQ(sphere_second_form(e2, e2, x), -x);
  EXPECT_EQ(sphere_second_form(e2, e3, x).norm(), 0.0);
  EXPECT_EQ(sphere_curvature(e2, e3, e2), e3);
  EXPECT_EQ(sphere_curvature(e2, e3, e3), -e2);
}

TEST(SplitSecondForm, Examples) {
  const SecondFormPair gc = split_second_form(nested("great_circle"), pt({0.7}));
  EXPECT_LT(gc.in_sphere(0, 0).norm(), 1e-12);

  const SecondFormPair ct = split_second_form(nested("clifford_torus"), pt({0.3, 1.2}));
  EXPECT_LE(ct.in_sphere_trace.norm(), 1e-8);
  EXPECT_NEAR(ct.data.mean_curvature.norm(), 2.0, 1e-12);

  const SecondFormPair sc = split_second_form(nested("small_circle"), pt({0.2}));
  EXPECT_NEAR(sc.in_sphere_trace.norm(), std::tan(kPi / 6), 1e-6);

  const SecondFormPair t6 = split_second_form(nested("torus"), pt({0.2, 0.1}));
  EXPECT_NEAR(t6.in_sphere_trace.norm(), std::hypot(2 * 0.6 - 1 / 0.6, 2 * 0.8 - 1 / 0.8), 1e-10);
}

TEST(SplitSecondForm, Invariants) {
  for (const auto& name : kSphereEntries) {
    const auto& n = nested(name);
    for (const Vector& u : sample_points(n)) {
      const SecondFormPair p = split_second_form(n, u);
      const int m = n.domain_dim();
      const Vector& x = p.data.position;
      for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
          EXPECT_LT((p.in_sphere(a, b) - p.in_sphere(b, a)).norm(), 1e-8);
          EXPECT_LT(std::abs(p.in_sphere(a, b).dot(x)), 1e-8);
          for (int c = 0; c < m; ++c) EXPECT_LT(std::abs(p.in_sphere(a, b).dot(p.data.frame.col(c))), 1e-8);
          const Vector expected = sphere_second_form(p.data.frame.col(a), p.data.frame.col(b), x);
          EXPECT_LT((p.radial(a, b) - expected).norm(), 1e-8) << name;
        }
      }
    }
  }
}

TEST(SecondGaussMap, Examples) {
  const auto& gs = nested("great_sphere");
  const MultiVector psi0 = second_gauss_map(gs, pt({0.0, 0.0}));
  for (const Vector& u : {pt({1.0, 0.3}), pt({-2.0, -1.0}), pt({3.0, 1.1})}) {
    EXPECT_LT((second_gauss_map(gs, u) - psi0).norm(), 1e-12);
  }
  EXPECT_NEAR(std::abs(psi0.coords()(3)), 1.0, 1e-15);

  const MultiVector ct = second_gauss_map(nested("clifford_torus"), pt({0.0, 0.0}));
  const Vector v = pt({-1, 0, 1, 0}) / std::sqrt(2.0);
  EXPECT_NEAR(std::abs(ct.coords().dot(v)), 1.0, 1e-14);

  const MultiVector eq = second_gauss_map(nested("great_circle"), pt({0.9}));
  EXPECT_NEAR(std::abs(eq.coords()(2)), 1.0, 1e-15);
  EXPECT_LT(std::hypot(eq.coords()(0), eq.coords()(1)), 1e-15);
}

TEST(SecondGaussMap, PositiveOrientationAndUnitNorm) {
  for (const auto& name : kSphereEntries) {
    const auto& n = nested(name);
    for (const Vector& u : sample_points(n)) {
      const MultiVector psi = second_gauss_map(n, u);
      EXPECT_NEAR(psi.norm(), 1.0, 1e-10);
      ASSERT_EQ(psi.grade(), 1);
      Matrix full(n.ambient_dim(), n.ambient_dim());
      full.col(0) = evaluate_position(n.inner(), u);
      full.middleCols(1, n.domain_dim()) = tangent_frame(n.inner(), u);
      full.col(n.ambient_dim() - 1) = psi.coords();
      EXPECT_NEAR(oracle::leibniz_det(full), 1.0, 1e-12) << name;
    }
  }
}

TEST(SecondGaussMap, GaugeFreedomOfNormalFrames) {
  auto rng = stream_rng(31, {});
  const auto& n = nested("great_circle");
  // Higher-codimension check: the equator of S^3 subset R^4 has n = 2.
  ParametrizedImmersion circle4;
  circle4.name = "circle4";
  circle4.domain_dim = 1;
  circle4.ambient_dim = 4;
  circle4.position = [](const Vector& u) { return pt({std::cos(u(0)), std::sin(u(0)), 0, 0}); };
  circle4.chart_domain = Box::unbounded(1);
  const NestedImmersion n4(circle4);
  for (const NestedImmersion* nim : {&n, &n4}) {
    for (int trial = 0; trial < 10; ++trial) {
      const Vector u = pt({0.3 * trial});
      Matrix span(nim->ambient_dim(), 2);
      span.col(0) = evaluate_position(nim->inner(), u);
      span.col(1) = tangent_frame(nim->inner(), u);
      const Matrix v = orthogonal_complement(span);
      const Matrix g = gaussian_matrix(static_cast<int>(v.cols()), static_cast<int>(v.cols()), rng);
      const Matrix q = Eigen::HouseholderQR<Matrix>(g).householderQ();
      const MultiVector psi = second_gauss_map(*nim, u);
      EXPECT_NEAR(std::abs(lambda_inner(wedge(v * q), psi)), 1.0, 1e-10);
    }
  }
}

TEST(PullbackMetricPsi, Examples) {
  EXPECT_LT(max_abs(pullback_metric_psi(nested("great_sphere"), pt({0.4, 0.2}))), 1e-12);
  for (const Vector& u : {pt({0.0, 0.0}), pt({1.0, 2.0})}) {
    EXPECT_LT(max_abs(pullback_metric_psi(nested("clifford_torus"), u) - Matrix::Identity(2, 2)), 1e-5);
  }
}

TEST(PullbackMetricPsi, IndependentOfPsiSign) {
  // Central differences of -psi along the frame curves, done here.
  const auto& n = nested("torus");
  const Vector u = pt({0.5, 0.9});
  const Matrix frame = tangent_frame(n.inner(), u);
  const Matrix jac = evaluate_jacobian(n.inner(), u);
  const Matrix e = jac.colPivHouseholderQr().solve(frame);
  const double h = 1e-5;
  std::vector<Vector> d;
  for (int a = 0; a < 2; ++a) {
    const Vector plus = -second_gauss_map(n, u + h * e.col(a)).coords();
    const Vector minus = -second_gauss_map(n, u - h * e.col(a)).coords();
    d.push_back((plus - minus) / (2 * h));
  }
  Matrix expected(2, 2);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) expected(a, b) = d[a].dot(d[b]);
  EXPECT_LT(max_abs(pullback_metric_psi(n, u) - expected), 1e-6);
}

TEST(SecondGaussPullbackRhs, Examples) {
  EXPECT_LT(max_abs(second_gauss_pullback_rhs(nested("great_sphere"), pt({0.4, 0.2}))), 1e-12);
  EXPECT_LT(max_abs(second_gauss_pullback_rhs(nested("clifford_torus"), pt({0.4, 0.2})) -
                    Matrix::Identity(2, 2)),
            1e-10);
}

TEST(SecondGaussPullbackRhs, AgreesWithPullbackEverywhere) {
  for (const auto& name : kSphereEntries) {
    const auto& n = nested(name);
    for (const Vector& u : sample_points(n)) {
      EXPECT_LT(max_abs(pullback_metric_psi(n, u) - second_gauss_pullback_rhs(n, u)), 1e-5) << name;
    }
  }
}

TEST(SecondGaussPullbackRhs, ReducesToMinusRicciPlusMetricWhenMinimal) {
  for (const std::string name : {"great_circle", "great_sphere", "clifford_torus"}) {
    const auto& n = nested(name);
    const int m = n.domain_dim();
    for (const Vector& u : sample_points(n)) {
      const Matrix ric = ricci_extrinsic(fundamental_data(n.inner(), u)).components;
      const Matrix expected = (m - 1.0) * Matrix::Identity(m, m) - ric;
      EXPECT_LT(max_abs(second_gauss_pullback_rhs(n, u) - expected), 1e-10) << name;
    }
  }
}

TEST(VerifyCorollarySphere, Outcomes) {
  auto run = [](const std::string& name) {
    const auto entry = Catalog::instance().get(name);
    GridSpec grid = entry.default_grid;
    for (int& r : grid.resolution) r = std::min(r, 9);
    return verify_corollary_sphere(*entry.nested, grid);
  };
  const auto ct = run("clifford_torus");
  EXPECT_TRUE(ct.summary.pass);
  EXPECT_LE(ct.summary.max_residual[ct.check_index("tr_b_in_sphere")], 1e-8);
  EXPECT_LE(ct.summary.max_residual[ct.check_index("psi_pullback_identity")], 1e-5);
  EXPECT_NEAR(*ct.summary.ricci_max, 0.0, 1e-12);

  const auto gs = run("great_sphere");
  EXPECT_TRUE(gs.summary.pass);
  EXPECT_NEAR(*gs.summary.ricci_min, 1.0, 1e-10);

  EXPECT_TRUE(run("great_circle").summary.pass);

  for (const std::string bad : {"torus", "torus(0.6)", "small_circle"}) {
    const auto r = run(bad);
    EXPECT_FALSE(r.summary.pass) << bad;
    EXPECT_GT(r.summary.max_residual[r.check_index("tr_b_in_sphere")], 0.1);
    EXPECT_LE(r.summary.max_residual[r.check_index("psi_pullback_vs_curvature")], 1e-5);
  }
}

}  // namespace
}  // namespace gaussric
