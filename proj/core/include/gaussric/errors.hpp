#pragma once

#include <stdexcept>

namespace gaussric {

/// Thrown when an input violates a geometric precondition: mismatched
/// dimensions, an irregular chart point, a point off the unit sphere.
class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gaussric
