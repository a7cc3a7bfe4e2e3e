#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

#include "gaussric/grassmann.hpp"

namespace gaussric {

/// Generator for one reproducible stream: the same (seed, stream) always
/// yields the same sequence, independent of evaluation order.
std::mt19937_64 stream_rng(std::uint64_t seed, std::initializer_list<std::uint64_t> stream);

/// k x m matrix of independent standard normals.
Matrix gaussian_matrix(int rows, int cols, std::mt19937_64& rng);

/// Orthonormalised standard-normal matrix: a sample of the invariant
/// distribution on the oriented Grassmannian.
OrientedPlane random_plane(int m, int k, std::mt19937_64& rng);

}  // namespace gaussric
