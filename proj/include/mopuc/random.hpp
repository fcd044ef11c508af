#pragma once

#include <cstdint>
#include <random>

#include "mopuc/partition.hpp"
#include "mopuc/schur.hpp"

namespace mopuc {

using Rng = std::mt19937_64;

Matrix random_gaussian(std::size_t rows, std::size_t cols, Rng& rng);
Matrix random_unitary(std::size_t n, Rng& rng);
// Complex Gaussian rescaled to operator norm 0.9 r with r uniform in (0, 1).
Matrix random_contraction(std::size_t d, Rng& rng);
SchurParameterSequence random_parameters(std::size_t d, std::size_t length, std::uint64_t seed, bool terminal = false);

struct RandomOverlap {
  Matrix u;
  OverlapFactorization factors;
};

// Random partition of n indices (|C| = center) with U = (A (+) 1)(1 (+) B) for random unitaries A, B.
RandomOverlap random_overlapping_unitary(std::size_t n, std::size_t center, Rng& rng);
SubspacePartition random_partition(std::size_t n, std::size_t center, Rng& rng);

}  // namespace mopuc
