#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "gaussric/finite_difference.hpp"

namespace gaussric {

inline constexpr const char* kReportSchema = "gaussric/1";

/// Sampling grid: a finite box and a per-axis point count. Endpoints are
/// included; a resolution of 1 samples the lower bound.
struct GridSpec {
  Box box;
  std::vector<int> resolution;

  std::size_t size() const;
  /// Multi-index of flat point `flat` (axis 0 varies slowest).
  std::vector<int> index_of(std::size_t flat) const;
  Vector point(const std::vector<int>& index) const;
  /// Throws std::invalid_argument on empty/unbounded boxes or zero counts.
  void validate() const;
};

/// Identity-check tolerances. The defaults are the ones every suite and
/// acceptance criterion is pinned to.
struct Tolerances {
  double identity = 1e-5;       // pullback identities, Lemma-7 cross check
  double minimality = 1e-8;     // |tr B| with analytic derivatives
  double minimality_fd = 1e-5;  // |tr B| with finite-difference derivatives
  double lemma = 1e-6;          // full first-Gauss-map pullback identity
  double oracle = 1e-5;         // intrinsic vs extrinsic Ricci
  double derivative = 1e-5;     // derivation formula vs finite differences
  double radial = 1e-8;         // sphere-radial part of B vs -<X,Y> x
  double unit_norm = 1e-10;     // norm of Gauss-map images
};

/// One named residual bound: pass iff residual <= tolerance, or
/// residual < tolerance when `strict`.
struct Check {
  std::string name;
  double tolerance = 0.0;
  bool strict = false;

  bool accepts(double residual) const {
    return strict ? residual < tolerance : residual <= tolerance;
  }
};

struct ReportRow {
  std::vector<int> index;
  std::vector<double> point;
  /// Rows whose stencils left the chart domain. They carry residuals but no
  /// pass flags and are excluded from the summary.
  bool edge = false;
  std::vector<double> residuals;  // aligned with VerificationReport::checks
  std::vector<std::pair<std::string, double>> values;  // unchecked diagnostics

  std::optional<double> value(const std::string& name) const;
};

struct ReportSummary {
  std::vector<double> max_residual;  // aligned with checks, non-edge rows only
  std::optional<double> ricci_min;
  std::optional<double> ricci_max;
  std::optional<double> gauss_image_dc_diameter;
  std::size_t rows = 0;
  std::size_t edge_rows = 0;
  std::size_t failed_rows = 0;
  bool pass = true;
};

class VerificationReport {
 public:
  std::string suite;
  std::string entry;
  std::optional<GridSpec> grid;
  std::vector<Check> checks;
  std::vector<ReportRow> rows;
  ReportSummary summary;
  nlohmann::json parameters = nlohmann::json::object();
  std::vector<std::string> notes;

  std::size_t check_index(const std::string& name) const;
  bool row_passes(const ReportRow& row) const;

  /// Recomputes the summary from the rows: max residual per check, the
  /// Ricci eigenvalue extremes (row values "ricci_eig_min"/"ricci_eig_max"),
  /// row counts and the overall pass flag. The Gauss-image diameter is left
  /// as set by the suite.
  void finalize();

  nlohmann::json to_json() const;
  /// One line per row: index, point, edge flag, residuals, then values.
  std::string to_csv() const;
};

/// Shortest round-trip text for a double ("%.17g" normalised).
std::string format_double(double x);

}  // namespace gaussric
