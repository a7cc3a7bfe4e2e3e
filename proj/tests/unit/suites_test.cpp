#include <cmath>

#include <gtest/gtest.h>

#include "gaussric/catalog.hpp"
#include "gaussric/errors.hpp"
#include "gaussric/suites.hpp"
#include "oracles.hpp"

namespace gaussric {
namespace {

TEST(GrassmannFuzz, ZeroCountIsEmptyAndPasses) {
  const auto r = grassmann_fuzz(0, {{2, 4}}, 1);
  EXPECT_TRUE(r.rows.empty());
  EXPECT_TRUE(r.summary.pass);
}

TEST(GrassmannFuzz, PassesAndIsDeterministic) {
  const std::vector<PlaneDims> dims{{1, 3}, {2, 4}, {2, 5}, {3, 6}};
  const auto a = grassmann_fuzz(2000, dims, 7);
  const auto b = grassmann_fuzz(2000, dims, 7);
  EXPECT_TRUE(a.summary.pass);
  EXPECT_EQ(a.rows.size(), 4u);
  EXPECT_EQ(a.to_json().dump(), b.to_json().dump());
  EXPECT_EQ(a.to_csv(), b.to_csv());
  const auto c = grassmann_fuzz(2000, dims, 8);
  EXPECT_NE(a.to_json().dump(), c.to_json().dump());
  EXPECT_LE(a.rows[0].residuals[a.check_index("single_angle_equality")], 1e-12);
  EXPECT_GT(*a.rows[1].value("nonnegative_pairs"), 0.0);
  EXPECT_EQ(*a.rows[1].value("violations"), 0.0);
}

TEST(GrassmannFuzz, PrefixStable) {
  // Each sample has its own stream, so a shorter run is a prefix of a longer one.
  const auto small = grassmann_fuzz(50, {{2, 4}}, 3);
  const auto large = grassmann_fuzz(500, {{2, 4}}, 3);
  for (std::size_t c = 0; c < small.checks.size(); ++c) {
    EXPECT_LE(small.rows[0].residuals[c], large.rows[0].residuals[c]);
  }
}

TEST(GrassmannFuzz, ViolationsAreReported) {
  FuzzTolerances strict;
  strict.symmetry = -1.0;
  const auto r = grassmann_fuzz(30, {{2, 4}}, 5, strict);
  EXPECT_FALSE(r.summary.pass);
  ASSERT_FALSE(r.notes.empty());
  EXPECT_LE(r.notes.size(), 20u);
  EXPECT_NE(r.notes[0].find("seed=5"), std::string::npos);
}

TEST(GrassmannFuzz, RejectsBadDims) {
  EXPECT_THROW(grassmann_fuzz(3, {{4, 2}}, 0), GeometryError);
}

TEST(VerifyGaussImage, CatenoidPasses) {
  const auto e = Catalog::instance().get("catenoid");
  GridSpec g = e.default_grid;
  g.resolution = {9, 9};
  const auto r = verify_gauss_image(e.immersion, g);
  EXPECT_TRUE(r.summary.pass);
  EXPECT_EQ(r.suite, "grassmann");
}

TEST(ScanRicci, CatenoidMatchesClosedForm) {
  const auto e = Catalog::instance().get("catenoid");
  GridSpec g = e.default_grid;
  g.resolution = {9, 21};
  const auto r = scan_ricci(e.immersion, g, {1, 2, 3, 5}, e.closed_forms.ricci);
  EXPECT_TRUE(r.summary.pass);
  ASSERT_EQ(r.rows.size(), 4u);
  const double v[] = {1, 2, 3, 5};
  double previous = -1e300;
  for (std::size_t i = 0; i < 4; ++i) {
    const double mx = *r.rows[i].value("ricci_eig_max");
    EXPECT_NEAR(mx / oracle::catenoid_k(v[i]), 1.0, 1e-6);
    EXPECT_LT(mx, 0.0);
    EXPECT_GE(mx, previous);
    previous = mx;
  }
}

TEST(ScanRicci, HelicoidTrendsToZero) {
  const auto e = Catalog::instance().get("helicoid");
  GridSpec g = e.default_grid;
  g.resolution = {9, 21};
  const auto r = scan_ricci(e.immersion, g, {1, 2, 3});
  EXPECT_TRUE(r.summary.pass);
  EXPECT_NEAR(*r.rows[2].value("ricci_eig_max"), oracle::helicoid_k(3.0), 1e-9);
}

TEST(ScanRicci, PlaneIsDegenerate) {
  const auto e = Catalog::instance().get("plane");
  GridSpec g = e.default_grid;
  g.resolution = {5, 5};
  const auto r = scan_ricci(e.immersion, g, {1, 2});
  EXPECT_FALSE(r.summary.pass);
  EXPECT_EQ(*r.summary.ricci_max, 0.0);
  EXPECT_EQ(*r.rows[1].value("gauss_image_dc_diameter"), 0.0);
}

TEST(ScanRicci, NonIncreasingMaximumFails) {
  const auto e = Catalog::instance().get("catenoid");
  GridSpec g = e.default_grid;
  g.resolution = {5, 11};
  const auto r = scan_ricci(e.immersion, g, {3, 1});
  EXPECT_FALSE(r.summary.pass);
  EXPECT_GT(r.summary.max_residual[r.check_index("max_nondecreasing")], 0.0);
}

}  // namespace
}  // namespace gaussric
