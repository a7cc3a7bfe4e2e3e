#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "gaussric/linalg.hpp"

namespace gaussric {

struct Interval {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();

  bool contains(double x) const { return lo <= x && x <= hi; }
  bool bounded() const { return std::isfinite(lo) && std::isfinite(hi); }
};

/// Axis-aligned box in parameter space; unbounded sides are allowed.
struct Box {
  std::vector<Interval> ranges;

  static Box unbounded(int dim) { return Box{std::vector<Interval>(static_cast<std::size_t>(dim))}; }

  int dim() const { return static_cast<int>(ranges.size()); }
  bool contains(const Vector& u) const;
  /// True when u is inside but closer than `reach` to a finite face.
  bool near_boundary(const Vector& u, double reach) const;
};

/// Default step for coordinate value x: max(1e-4, cbrt(eps) * (1 + |x|)).
double default_step(double x);

/// Derivative of f along coordinate `axis` at u. Central difference when
/// u +- h stays inside `domain`, otherwise a first-order one-sided
/// difference toward the interior. `one_sided` is set when the fallback was
/// taken.
template <typename T>
T coordinate_derivative(const std::function<T(const Vector&)>& f, const Vector& u, int axis,
                        double h, const Box& domain, bool* one_sided = nullptr) {
  Vector plus = u;
  Vector minus = u;
  plus(axis) += h;
  minus(axis) -= h;
  const bool plus_ok = domain.contains(plus);
  const bool minus_ok = domain.contains(minus);
  if (plus_ok && minus_ok) {
    return T((f(plus) - f(minus)) / (2.0 * h));
  }
  if (one_sided != nullptr) *one_sided = true;
  if (plus_ok) return T((f(plus) - f(u)) / h);
  return T((f(u) - f(minus)) / h);
}

}  // namespace gaussric
