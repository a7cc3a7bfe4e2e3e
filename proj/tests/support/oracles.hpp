#pragma once

// Reference implementations used only by the tests. They share no code
// with the library beyond the Eigen types.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

inline Vector unit(int k, int i) {
  Vector e = Vector::Zero(k);
  e(i) = 1.0;
  return e;
}

inline Matrix columns(const std::vector<Vector>& vs) {
  Matrix m(vs.front().size(), static_cast<Eigen::Index>(vs.size()));
  for (std::size_t j = 0; j < vs.size(); ++j) m.col(static_cast<Eigen::Index>(j)) = vs[j];
  return m;
}

// Sum over permutations. Fine for n <= 7.
inline double leibniz_det(const Matrix& a) {
  const int n = static_cast<int>(a.rows());
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  double total = 0.0;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inversions;
    double term = (inversions % 2 == 0) ? 1.0 : -1.0;
    for (int i = 0; i < n; ++i) term *= a(i, perm[static_cast<std::size_t>(i)]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Increasing index tuples of size r from {0..n-1}, lexicographic.
inline std::vector<std::vector<int>> combinations(int n, int r) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == r) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Coordinates of the wedge of the columns of w, one Leibniz minor per
// multi-index.
inline Vector wedge(const Matrix& w) {
  const int k = static_cast<int>(w.rows());
  const int g = static_cast<int>(w.cols());
  const auto idx = combinations(k, g);
  Vector out(static_cast<Eigen::Index>(idx.size()));
  for (std::size_t c = 0; c < idx.size(); ++c) {
    Matrix minor(g, g);
    for (int i = 0; i < g; ++i) minor.row(i) = w.row(idx[c][static_cast<std::size_t>(i)]);
    out(static_cast<Eigen::Index>(c)) = leibniz_det(minor);
  }
  return out;
}

// Hodge star of wedge(w): coordinate J is det[w | e_J].
inline Vector hodge(const Matrix& w) {
  const int k = static_cast<int>(w.rows());
  const int g = static_cast<int>(w.cols());
  const auto idx = combinations(k, k - g);
  Vector out(static_cast<Eigen::Index>(idx.size()));
  for (std::size_t c = 0; c < idx.size(); ++c) {
    Matrix full(k, k);
    full.leftCols(g) = w;
    for (int j = 0; j < k - g; ++j) full.col(g + j) = unit(k, idx[c][static_cast<std::size_t>(j)]);
    out(static_cast<Eigen::Index>(c)) = leibniz_det(full);
  }
  return out;
}

// Principal cosines as square roots of the eigenvalues of alpha alpha^T.
inline std::vector<double> cosines_from_eigen(const Matrix& p, const Matrix& q) {
  const Matrix alpha = p.transpose() * q;
  const Matrix a = alpha * alpha.transpose();
  Eigen::SelfAdjointEigenSolver<Matrix> es(a);
  std::vector<double> out;
  for (int i = 0; i < es.eigenvalues().size(); ++i)
    out.push_back(std::sqrt(std::clamp(es.eigenvalues()(i), 0.0, 1.0)));
  std::sort(out.rbegin(), out.rend());
  return out;
}

inline double canonical_distance(const Matrix& p, const Matrix& q) {
  double s = 0.0;
  for (double c : cosines_from_eigen(p, q)) s += std::pow(std::acos(c), 2);
  return std::sqrt(s);
}

inline double spherical_distance(const Matrix& p, const Matrix& q) {
  double prod = 1.0;
  for (double c : cosines_from_eigen(p, q)) prod *= c;
  return std::acos(std::min(prod, 1.0));
}

// Gauss curvature closed forms.
inline double catenoid_k(double v) { return -std::pow(std::cosh(v), -4); }
inline double helicoid_k(double v) { return -std::pow(1.0 + v * v, -2); }
inline double enneper_k(double u, double v) { return -4.0 * std::pow(1.0 + u * u + v * v, -4); }
inline double holo_z2_k(double u, double v) { return -8.0 * std::pow(1.0 + 4.0 * (u * u + v * v), -3); }

}  // namespace oracle
