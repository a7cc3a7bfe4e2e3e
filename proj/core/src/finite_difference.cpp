#include "gaussric/finite_difference.hpp"

#include <algorithm>
#include <cmath>

namespace gaussric {

bool Box::contains(const Vector& u) const {
  if (u.size() != static_cast<Eigen::Index>(ranges.size())) return false;
  for (std::size_t i = 0; i < ranges.size(); ++i) {
    if (!ranges[i].contains(u(static_cast<Eigen::Index>(i)))) return false;
  }
  return true;
}

bool Box::near_boundary(const Vector& u, double reach) const {
  for (std::size_t i = 0; i < ranges.size(); ++i) {
    const double x = u(static_cast<Eigen::Index>(i));
    if (x - ranges[i].lo < reach || ranges[i].hi - x < reach) return true;
  }
  return false;
}

double default_step(double x) {
  static const double kCbrtEps = std::cbrt(std::numeric_limits<double>::epsilon());
  return std::max(1e-4, kCbrtEps * (1.0 + std::abs(x)));
}

}  // namespace gaussric
