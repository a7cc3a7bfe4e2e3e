#include "gaussric/suites.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "gaussric/errors.hpp"
#include "gaussric/grassmann.hpp"
#include "gaussric/sampling.hpp"

namespace gaussric {

namespace {

constexpr std::size_t kMaxListedViolations = 20;

struct PairResiduals {
  double lemma = 0.0;
  double symmetry = 0.0;
  double determinant = 0.0;
  double isometry = 0.0;
  double single_angle = 0.0;
  bool nonnegative = false;
};

PairResiduals evaluate_pair(const OrientedPlane& p, const OrientedPlane& q) {
  PairResiduals r;
  const double dc = canonical_distance(p, q);
  const double ds = spherical_distance(p, q);
  r.lemma = std::max(0.0, ds - dc);
  r.symmetry = std::max(std::abs(dc - canonical_distance(q, p)),
                        std::abs(ds - spherical_distance(q, p)));

  const double det = overlap_matrix(p, q).determinant();
  const MultiVector rp = pluecker_embed(p);
  const MultiVector rq = pluecker_embed(q);
  double product = 1.0;
  for (double c : principal_cosines(p, q).values) product *= c;
  r.determinant = std::max(std::abs(lambda_inner(rp, rq) - det), std::abs(std::abs(det) - product));

  r.nonnegative = det >= 0.0;
  if (r.nonnegative) r.isometry = std::abs(sphere_distance_embedded(rp, rq) - ds);
  if (p.plane_dim() == 1) r.single_angle = std::abs(ds - dc);
  return r;
}

std::vector<Check> distance_checks(const FuzzTolerances& tol) {
  return {{"lemma_ds_le_dc", tol.lemma},
          {"symmetry", tol.symmetry},
          {"pluecker_determinant", tol.determinant},
          {"isometry_nonnegative", tol.isometry},
          {"single_angle_equality", tol.single_angle}};
}

}  // namespace

VerificationReport grassmann_fuzz(std::size_t count, const std::vector<PlaneDims>& dims,
                                  std::uint64_t seed, const FuzzTolerances& tol) {
  VerificationReport report;
  report.suite = "grassmann-fuzz";
  report.entry = "random-planes";
  report.checks = distance_checks(tol);
  nlohmann::json dims_json = nlohmann::json::array();
  for (const PlaneDims& d : dims) dims_json.push_back({d.m, d.k});
  report.parameters = {{"count", count}, {"seed", seed}, {"dims", dims_json}};

  if (count == 0) {
    report.finalize();
    return report;
  }
  std::size_t listed = 0;
  for (std::size_t di = 0; di < dims.size(); ++di) {
    const PlaneDims d = dims[di];
    if (d.m < 1 || d.m > d.k) throw GeometryError("fuzz dims need 1 <= m <= k");
    ReportRow row;
    row.index = {static_cast<int>(di)};
    row.point = {static_cast<double>(d.m), static_cast<double>(d.k)};
    row.residuals.assign(report.checks.size(), 0.0);
    std::size_t nonnegative = 0;
    std::size_t violations = 0;
    for (std::size_t i = 0; i < count; ++i) {
      std::mt19937_64 rng = stream_rng(seed, {static_cast<std::uint64_t>(d.m),
                                              static_cast<std::uint64_t>(d.k), i});
      const OrientedPlane p = random_plane(d.m, d.k, rng);
      const OrientedPlane q = random_plane(d.m, d.k, rng);
      const PairResiduals r = evaluate_pair(p, q);
      const double values[] = {r.lemma, r.symmetry, r.determinant, r.isometry, r.single_angle};
      bool violated = false;
      for (std::size_t c = 0; c < report.checks.size(); ++c) {
        row.residuals[c] = std::max(row.residuals[c], values[c]);
        violated = violated || !report.checks[c].accepts(values[c]);
      }
      if (r.nonnegative) ++nonnegative;
      if (violated) {
        ++violations;
        if (listed++ < kMaxListedViolations) {
          std::ostringstream os;
          os << "violation: seed=" << seed << " m=" << d.m << " k=" << d.k << " sample=" << i;
          report.notes.push_back(os.str());
        }
      }
    }
    row.values = {{"samples", static_cast<double>(count)},
                  {"nonnegative_pairs", static_cast<double>(nonnegative)},
                  {"violations", static_cast<double>(violations)}};
    report.rows.push_back(std::move(row));
  }
  report.finalize();
  return report;
}

VerificationReport verify_gauss_image(const ParametrizedImmersion& imm, const GridSpec& grid,
                                      const FuzzTolerances& tol) {
  grid.validate();
  if (grid.box.dim() != imm.domain_dim) {
    throw GeometryError("grid dimension does not match the chart of '" + imm.name + "'");
  }
  VerificationReport report;
  report.suite = "grassmann";
  report.entry = imm.name;
  report.grid = grid;
  report.checks = distance_checks(tol);
  report.parameters = {{"pairs", "grid point and its successor along each axis"}};

  const std::size_t n = grid.size();
  std::vector<OrientedPlane> planes;
  planes.reserve(n);
  for (std::size_t flat = 0; flat < n; ++flat) {
    planes.emplace_back(tangent_frame(imm, grid.point(grid.index_of(flat))));
  }
  for (std::size_t flat = 0; flat < n; ++flat) {
    ReportRow row;
    row.index = grid.index_of(flat);
    const Vector u = grid.point(row.index);
    row.point.assign(u.data(), u.data() + u.size());
    row.residuals.assign(report.checks.size(), 0.0);
    double neighbours = 0.0;
    double max_dc = 0.0;
    std::size_t stride = 1;
    for (std::size_t axis = grid.resolution.size(); axis-- > 0;) {
      if (row.index[axis] + 1 < grid.resolution[axis]) {
        const PairResiduals r = evaluate_pair(planes[flat], planes[flat + stride]);
        const double values[] = {r.lemma, r.symmetry, r.determinant, r.isometry,
                                 r.single_angle};
        for (std::size_t c = 0; c < report.checks.size(); ++c) {
          row.residuals[c] = std::max(row.residuals[c], values[c]);
        }
        max_dc = std::max(max_dc, canonical_distance(planes[flat], planes[flat + stride]));
        neighbours += 1.0;
      }
      stride *= static_cast<std::size_t>(grid.resolution[axis]);
    }
    row.values = {{"neighbours", neighbours}, {"max_neighbour_dc", max_dc}};
    report.rows.push_back(std::move(row));
  }
  report.summary.gauss_image_dc_diameter = gauss_image_dc_diameter(imm, grid);
  report.finalize();
  return report;
}

VerificationReport scan_ricci(const ParametrizedImmersion& imm, const GridSpec& base,
                              const std::vector<double>& extents,
                              const RicciClosedForm& closed_form) {
  base.validate();
  if (base.box.dim() != imm.domain_dim) {
    throw GeometryError("grid dimension does not match the chart of '" + imm.name + "'");
  }
  VerificationReport report;
  report.suite = "scan-ric";
  report.entry = imm.name;
  report.grid = base;
  report.checks = {{"max_eigenvalue_negative", 0.0, true}, {"max_nondecreasing", 0.0}};
  report.parameters = {{"extents", extents},
                       {"scanned_axis", imm.domain_dim - 1},
                       {"ricci", "extrinsic (Gauss equation), frame components"}};

  std::optional<double> previous_max;
  for (std::size_t i = 0; i < extents.size(); ++i) {
    const double extent = extents[i];
    if (!(extent > 0.0)) throw std::invalid_argument("scan extents must be positive");
    GridSpec grid = base;
    grid.box.ranges.back() = Interval{-extent, extent};

    double eig_max = -std::numeric_limits<double>::infinity();
    double eig_min = std::numeric_limits<double>::infinity();
    double closed_max = -std::numeric_limits<double>::infinity();
    for (std::size_t flat = 0; flat < grid.size(); ++flat) {
      const Vector u = grid.point(grid.index_of(flat));
      const Vector eig = ricci_extrinsic(fundamental_data(imm, u)).eigenvalues();
      eig_max = std::max(eig_max, eig.maxCoeff());
      eig_min = std::min(eig_min, eig.minCoeff());
      if (closed_form) {
        Eigen::SelfAdjointEigenSolver<Matrix> es(closed_form(u), Eigen::EigenvaluesOnly);
        closed_max = std::max(closed_max, es.eigenvalues().maxCoeff());
      }
    }
    const double diameter = gauss_image_dc_diameter(imm, grid);

    ReportRow row;
    row.index = {static_cast<int>(i)};
    row.point = {extent};
    row.residuals = {eig_max, previous_max ? std::max(0.0, *previous_max - eig_max) : 0.0};
    row.values = {{"ricci_eig_max", eig_max},
                  {"ricci_eig_min", eig_min},
                  {"gauss_image_dc_diameter", diameter}};
    if (closed_form) {
      row.values.emplace_back("closed_form_max", closed_max);
      row.values.emplace_back("relative_gap_to_closed_form",
                              closed_max != 0.0 ? std::abs(eig_max - closed_max) / std::abs(closed_max)
                                                : std::abs(eig_max));
    }
    report.summary.gauss_image_dc_diameter = diameter;
    previous_max = eig_max;
    report.rows.push_back(std::move(row));
  }
  report.finalize();
  return report;
}

}  // namespace gaussric
