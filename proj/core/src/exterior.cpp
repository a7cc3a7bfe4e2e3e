#include "gaussric/exterior.hpp"

#include <cmath>
#include <string>

#include <nlohmann/json.hpp>

#include "gaussric/errors.hpp"

namespace gaussric {

namespace {

constexpr double kUnitNormTolerance = 1e-8;

// Advances `idx` to the next increasing multi-index over {0..n-1}.
bool next_multi_index(std::vector<int>& idx, int n) {
  const int g = static_cast<int>(idx.size());
  int i = g - 1;
  while (i >= 0 && idx[i] == n - g + i) --i;
  if (i < 0) return false;
  ++idx[i];
  for (int j = i + 1; j < g; ++j) idx[j] = idx[j - 1] + 1;
  return true;
}

std::vector<int> first_multi_index(int grade) {
  std::vector<int> idx(grade);
  for (int i = 0; i < grade; ++i) idx[i] = i;
  return idx;
}

void require_unit(const MultiVector& v) {
  if (std::abs(v.norm() - 1.0) > kUnitNormTolerance) {
    throw GeometryError("not on sphere: multivector norm " + std::to_string(v.norm()));
  }
}

}  // namespace

std::size_t binomial(int n, int r) {
  if (r < 0 || n < 0 || r > n) return 0;
  r = std::min(r, n - r);
  std::size_t c = 1;
  for (int i = 1; i <= r; ++i) c = c * static_cast<std::size_t>(n - r + i) / static_cast<std::size_t>(i);
  return c;
}

std::vector<std::vector<int>> multi_indices(int ambient_dim, int grade) {
  std::vector<std::vector<int>> out;
  if (grade < 0 || grade > ambient_dim) return out;
  out.reserve(binomial(ambient_dim, grade));
  std::vector<int> idx = first_multi_index(grade);
  do {
    out.push_back(idx);
  } while (next_multi_index(idx, ambient_dim));
  return out;
}

MultiVector::MultiVector(int ambient_dim, int grade, Vector coords)
    : ambient_dim_(ambient_dim), grade_(grade), coords_(std::move(coords)) {
  if (grade < 0 || grade > ambient_dim) {
    throw GeometryError("invalid multivector grade " + std::to_string(grade) + " in dimension " +
                        std::to_string(ambient_dim));
  }
  if (static_cast<std::size_t>(coords_.size()) != binomial(ambient_dim, grade)) {
    throw GeometryError("multivector coordinate length " + std::to_string(coords_.size()) +
                        " != C(" + std::to_string(ambient_dim) + "," + std::to_string(grade) + ")");
  }
}

MultiVector MultiVector::zero(int ambient_dim, int grade) {
  return MultiVector(ambient_dim, grade,
                     Vector::Zero(static_cast<Eigen::Index>(binomial(ambient_dim, grade))));
}

MultiVector MultiVector::operator-() const {
  return MultiVector(ambient_dim_, grade_, -coords_);
}

MultiVector& MultiVector::operator+=(const MultiVector& other) {
  require_same_shape(other);
  coords_ += other.coords_;
  return *this;
}

MultiVector& MultiVector::operator-=(const MultiVector& other) {
  require_same_shape(other);
  coords_ -= other.coords_;
  return *this;
}

MultiVector& MultiVector::operator*=(double s) {
  coords_ *= s;
  return *this;
}

void MultiVector::require_same_shape(const MultiVector& other) const {
  if (ambient_dim_ != other.ambient_dim_ || grade_ != other.grade_) {
    throw GeometryError("multivector shape mismatch");
  }
}

MultiVector wedge(const Matrix& vectors) {
  const int k = static_cast<int>(vectors.rows());
  const int g = static_cast<int>(vectors.cols());
  if (g > k) throw GeometryError("wedge of more vectors than the ambient dimension");
  Vector coords(static_cast<Eigen::Index>(binomial(k, g)));
  if (g == 0) {
    coords(0) = 1.0;
    return MultiVector(k, 0, std::move(coords));
  }
  Matrix minor(g, g);
  std::vector<int> idx = first_multi_index(g);
  Eigen::Index slot = 0;
  do {
    for (int r = 0; r < g; ++r) minor.row(r) = vectors.row(idx[r]);
    coords(slot++) = minor.determinant();
  } while (next_multi_index(idx, k));
  return MultiVector(k, g, std::move(coords));
}

double lambda_inner(const MultiVector& u, const MultiVector& v) {
  if (u.ambient_dim() != v.ambient_dim() || u.grade() != v.grade()) {
    throw GeometryError("multivector shape mismatch");
  }
  return u.coords().dot(v.coords());
}

double sphere_distance_embedded(const MultiVector& u, const MultiVector& v) {
  if (u.ambient_dim() != v.ambient_dim() || u.grade() != v.grade()) {
    throw GeometryError("multivector shape mismatch");
  }
  require_unit(u);
  require_unit(v);
  // arccos<u,v> evaluated as 2 atan2(|u - v|, |u + v|), which keeps full
  // accuracy near 0 and pi.
  const Vector a = u.coords() / u.norm();
  const Vector b = v.coords() / v.norm();
  return 2.0 * std::atan2((a - b).norm(), (a + b).norm());
}

MultiVector hodge_complement(const MultiVector& w) {
  require_unit(w);
  const int k = w.ambient_dim();
  const int g = w.grade();
  if (g >= k) throw GeometryError("hodge complement requires grade < ambient dimension");
  // In lexicographic order the complement map I -> I^c reverses ranks.
  const Eigen::Index count = w.coords().size();
  Vector out(static_cast<Eigen::Index>(binomial(k, k - g)));
  std::vector<int> idx = first_multi_index(g);
  Eigen::Index rank = 0;
  do {
    // Parity of the shuffle (I, I^c): sum over i in I of #{j in I^c : j < i}.
    int inversions = 0;
    for (int p = 0; p < g; ++p) inversions += idx[p] - p;
    const double sign = (inversions % 2 == 0) ? 1.0 : -1.0;
    out(count - 1 - rank) = sign * w.coords()(rank);
    ++rank;
  } while (next_multi_index(idx, k));
  return MultiVector(k, k - g, std::move(out));
}

void to_json(nlohmann::json& j, const MultiVector& v) {
  j = nlohmann::json::array();
  for (Eigen::Index i = 0; i < v.coords().size(); ++i) j.push_back(v.coords()(i));
}

}  // namespace gaussric
