#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gaussric/immersion.hpp"
#include "gaussric/spherical.hpp"

namespace gaussric {

/// Reference formulas an entry is known to satisfy. Empty members are not
/// available for that entry.
struct ClosedForms {
  std::string summary;
  std::function<Matrix(const Vector&)> metric;               // chart components
  std::function<Matrix(const Vector&)> ricci;                // frame components
  std::function<double(const Vector&)> mean_curvature_norm;  // |tr B| in R^k
  std::function<double(const Vector&)> sphere_mean_curvature_norm;  // |tr B_{M in N}|
};

struct CatalogEntry {
  std::string name;
  std::string description;
  ParametrizedImmersion immersion;
  std::optional<NestedImmersion> nested;  // set for entries lying in S^{k-1}
  MinimalIn minimal_in = MinimalIn::none;
  ClosedForms closed_forms;
  GridSpec default_grid;
};

struct EntryInfo {
  std::string name;
  std::string parameter;  // "theta" / "a" for parametric families, else empty
  std::string description;
  int domain_dim = 0;
  int ambient_dim = 0;
  MinimalIn minimal_in = MinimalIn::none;
  bool in_sphere = false;
};

/// Largest residuals of an entry's closed forms and analytic derivatives
/// against the numerical machinery.
struct SelfTestResult {
  double metric = 0.0;
  double ricci = 0.0;
  double mean_curvature = 0.0;
  double jacobian_vs_fd = 0.0;
  double hessian_vs_fd = 0.0;

  double worst() const;
};

SelfTestResult self_test(const CatalogEntry& entry, int points_per_axis = 5);

/// Registry of exact immersions. Every entry passes self_test (<= 1e-6) when
/// the registry is constructed; read-only afterwards.
class Catalog {
 public:
  static constexpr double kSelfTestTolerance = 1e-6;

  static const Catalog& instance();

  /// Deterministic registration order.
  std::vector<EntryInfo> list_entries() const;

  /// Accepts "name" or "name(parameter)" for the parametric families
  /// small_circle(theta) and torus(a). Throws std::invalid_argument listing
  /// the valid names for unknown entries.
  CatalogEntry get(std::string_view name) const;

  std::vector<std::string> names() const;

 private:
  Catalog();
};

}  // namespace gaussric
