#pragma once

#include "mopuc/linalg.hpp"

namespace mopuc {

inline constexpr std::size_t path_length_cap = 8;

struct PathSum {
  cplx amplitude{0.0, 0.0};
  std::size_t paths = 0;   // complete paths summed
  std::size_t pruned = 0;  // branches skipped as negligible
};

// Sum over k_0 = from, k_1..k_{n-1} outside `avoid`, k_n = to of U(k_n,k_{n-1}) ... U(k_1,k_0).
PathSum path_amplitude_sum(const Matrix& u, std::size_t from, std::size_t to, const IndexSubspace& avoid,
                           std::size_t n, bool prune = true);

// Same sum over d x d blocks; `avoid` lists block indices.
Matrix block_path_amplitude_sum(const Matrix& u, std::size_t block_dim, std::size_t from, std::size_t to,
                                const std::vector<std::size_t>& avoid, std::size_t n, bool prune = true);

// a_{V,1..n} by explicit path enumeration.
std::vector<Matrix> oracle_first_return(const Matrix& u, const IndexSubspace& v, std::size_t n, bool prune = true);

}  // namespace mopuc
