#include <cmath>
#include <numbers>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "gaussric/errors.hpp"
#include "gaussric/exterior.hpp"
#include "gaussric/sampling.hpp"
#include "oracles.hpp"

namespace gaussric {
namespace {

using oracle::unit;
constexpr double kPi = std::numbers::pi;

MultiVector wedge_of(std::initializer_list<Vector> vs) {
  return wedge(oracle::columns(std::vector<Vector>(vs)));
}

TEST(Binomial, Values) {
  EXPECT_EQ(binomial(4, 2), 6u);
  EXPECT_EQ(binomial(6, 3), 20u);
  EXPECT_EQ(binomial(3, 0), 1u);
  EXPECT_EQ(binomial(2, 3), 0u);
}

TEST(MultiIndices, LexicographicOrder) {
  const auto idx = multi_indices(4, 2);
  const std::vector<std::vector<int>> expected{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  EXPECT_EQ(idx, expected);
  EXPECT_EQ(multi_indices(5, 3), oracle::combinations(5, 3));
}

TEST(MultiVector, RejectsWrongLength) {
  EXPECT_THROW(MultiVector(4, 2, Vector::Zero(5)), GeometryError);
  EXPECT_NO_THROW(MultiVector(4, 2, Vector::Zero(6)));
}

TEST(MultiVector, Arithmetic) {
  const MultiVector a = wedge_of({unit(3, 0), unit(3, 1)});
  const MultiVector b = wedge_of({unit(3, 0), unit(3, 2)});
  EXPECT_NEAR((a + b).norm(), std::sqrt(2.0), 1e-15);
  EXPECT_EQ((a - a).norm(), 0.0);
  EXPECT_EQ((2.0 * a).coords()(0), 2.0);
  EXPECT_EQ((-a).coords()(0), -1.0);
  EXPECT_THROW(a + MultiVector::zero(4, 2), GeometryError);
}

TEST(LambdaInner, Examples) {
  const MultiVector e12 = wedge_of({unit(3, 0), unit(3, 1)});
  EXPECT_EQ(lambda_inner(e12, e12), 1.0);
  EXPECT_EQ(lambda_inner(e12, wedge_of({unit(3, 1), unit(3, 0)})), -1.0);
  const MultiVector u = wedge_of({unit(3, 0), (unit(3, 1) + unit(3, 2)) / std::sqrt(2.0)});
  EXPECT_NEAR(lambda_inner(e12, u), 1 / std::sqrt(2.0), 1e-15);
}

TEST(LambdaInner, ShapeMismatch) {
  EXPECT_THROW(lambda_inner(MultiVector::zero(3, 2), MultiVector::zero(3, 1)), GeometryError);
  EXPECT_THROW(lambda_inner(MultiVector::zero(3, 2), MultiVector::zero(4, 2)), GeometryError);
}

TEST(LambdaInner, EqualsDeterminantOfOverlap) {
  auto rng = stream_rng(21, {});
  for (int trial = 0; trial < 50; ++trial) {
    const int g = 1 + trial % 4;
    const int k = g + trial % 3;
    const Matrix xi = gaussian_matrix(k, g, rng);
    const Matrix zeta = gaussian_matrix(k, g, rng);
    EXPECT_NEAR(lambda_inner(wedge(xi), wedge(zeta)), oracle::leibniz_det(xi.transpose() * zeta),
                1e-10 * (1 + std::abs(oracle::leibniz_det(xi.transpose() * zeta))));
  }
}

TEST(SphereDistanceEmbedded, Examples) {
  const MultiVector e12 = wedge_of({unit(3, 0), unit(3, 1)});
  EXPECT_EQ(sphere_distance_embedded(e12, e12), 0.0);
  EXPECT_NEAR(sphere_distance_embedded(e12, -e12), kPi, 1e-15);
  EXPECT_NEAR(sphere_distance_embedded(e12, wedge_of({unit(3, 0), unit(3, 2)})), kPi / 2, 1e-15);
}

TEST(SphereDistanceEmbedded, RejectsNonUnit) {
  const MultiVector e12 = wedge_of({unit(3, 0), unit(3, 1)});
  try {
    sphere_distance_embedded(e12, 1.001 * e12);
    FAIL();
  } catch (const GeometryError& e) {
    EXPECT_EQ(std::string(e.what()).rfind("not on sphere", 0), 0u);
  }
  EXPECT_NO_THROW(sphere_distance_embedded(e12, (1 + 1e-9) * e12));
}

TEST(HodgeComplement, Examples) {
  Vector e3(3);
  e3 << 0, 0, 1;
  const MultiVector c1 = hodge_complement(wedge_of({unit(3, 0), unit(3, 1)}));
  EXPECT_EQ(c1.grade(), 1);
  EXPECT_EQ(c1.coords(), e3);
  Vector minus_e2(3);
  minus_e2 << 0, -1, 0;
  EXPECT_EQ(hodge_complement(wedge_of({unit(3, 0), unit(3, 2)})).coords(), minus_e2);
  const MultiVector c3 = hodge_complement(wedge_of({unit(4, 0), unit(4, 1)}));
  EXPECT_EQ(c3.coords(), wedge_of({unit(4, 2), unit(4, 3)}).coords());
}

TEST(HodgeComplement, MatchesDeterminantOracle) {
  auto rng = stream_rng(22, {});
  for (int k = 2; k <= 6; ++k) {
    for (int g = 1; g < k; ++g) {
      const Matrix w = random_plane(g, k, rng).basis();
      const MultiVector c = hodge_complement(wedge(w));
      EXPECT_LT((c.coords() - oracle::hodge(w)).norm(), 1e-12) << g << "/" << k;
      EXPECT_NEAR(c.norm(), 1.0, 1e-10);
      const MultiVector twice = hodge_complement(c);
      const double sign = ((g * (k - g)) % 2 == 0) ? 1.0 : -1.0;
      EXPECT_LT((twice.coords() - sign * wedge(w).coords()).norm(), 1e-12);
    }
  }
}

TEST(HodgeComplement, RejectsNonUnit) {
  EXPECT_THROW(hodge_complement(2.0 * wedge_of({unit(3, 0), unit(3, 1)})), GeometryError);
}

TEST(MultiVector, JsonIsCoordinateArray) {
  nlohmann::json j = wedge_of({unit(3, 1), unit(3, 0)});
  EXPECT_EQ(j, nlohmann::json::parse("[-1.0, 0.0, 0.0]"));
}

}  // namespace
}  // namespace gaussric
