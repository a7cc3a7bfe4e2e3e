#include "gaussric/sampling.hpp"

#include <vector>

namespace gaussric {

std::mt19937_64 stream_rng(std::uint64_t seed, std::initializer_list<std::uint64_t> stream) {
  std::vector<std::uint32_t> words;
  words.reserve(2 * (stream.size() + 1));
  auto push = [&words](std::uint64_t x) {
    words.push_back(static_cast<std::uint32_t>(x & 0xffffffffu));
    words.push_back(static_cast<std::uint32_t>(x >> 32));
  };
  push(seed);
  for (std::uint64_t s : stream) push(s);
  std::seed_seq seq(words.begin(), words.end());
  return std::mt19937_64(seq);
}

Matrix gaussian_matrix(int rows, int cols, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix out(rows, cols);
  // Column-major fill keeps the draw order explicit.
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) out(i, j) = normal(rng);
  }
  return out;
}

OrientedPlane random_plane(int m, int k, std::mt19937_64& rng) {
  return OrientedPlane::from_spanning(gaussian_matrix(k, m, rng));
}

}  // namespace gaussric
