#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "gaussric/immersion.hpp"
#include "gaussric/report.hpp"

namespace gaussric {

struct PlaneDims {
  int m = 0;
  int k = 0;
};

struct FuzzTolerances {
  double lemma = 1e-12;        // d_s <= d_c + tol
  double symmetry = 1e-12;     // |d(P,Q) - d(Q,P)|
  double determinant = 1e-10;  // <rho P, rho Q> = det alpha, |det alpha| = prod lambda
  double isometry = 1e-10;     // embedded distance = d_s where det alpha >= 0
  double single_angle = 1e-12; // d_s = d_c when m = 1
};

/// Random plane pairs per (m, k): distance comparison, symmetry, Pluecker
/// determinant identity and the isometry on the non-negative domain. One
/// report row per dims entry; violations are listed in the notes with the
/// (seed, m, k, sample) needed to reproduce them. Deterministic in `seed`.
VerificationReport grassmann_fuzz(std::size_t count, const std::vector<PlaneDims>& dims,
                                  std::uint64_t seed, const FuzzTolerances& tol = {});

/// The same distance identities evaluated on the Gauss image of an
/// immersion, between each grid point and its successor along every axis.
VerificationReport verify_gauss_image(const ParametrizedImmersion& imm, const GridSpec& grid,
                                      const FuzzTolerances& tol = {});

using RicciClosedForm = std::function<Matrix(const Vector&)>;

/// Ricci sign/sup scan on expanding boxes: for each extent V the last chart
/// axis ranges over [-V, V] (other axes as in `base`). Reports the max and
/// min frame-Ricci eigenvalue and the sampled Gauss-image diameter; checks
/// max eigenvalue < 0 and that the max is non-decreasing in V.
VerificationReport scan_ricci(const ParametrizedImmersion& imm, const GridSpec& base,
                              const std::vector<double>& extents,
                              const RicciClosedForm& closed_form = nullptr);

}  // namespace gaussric
