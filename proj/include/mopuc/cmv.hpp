#pragma once

#include <string>

#include "mopuc/schur.hpp"

namespace mopuc {

enum class Family { cmv, cmv_hat, hessenberg, hessenberg_hat };

Family parse_family(const std::string& s);  // "C", "Chat", "H", "Hhat"
std::string family_name(Family f);
bool is_cmv(Family f);

// A window of n_blocks blocks of d x d. With a terminal parameter the operator is the finite
// matrix on all len+1 blocks; otherwise the window is closed by replacing alpha_{n_blocks-1} with 1.
struct BlockOperatorSpec {
  SchurParameterSequence params;
  Family family = Family::cmv;
  std::size_t n_blocks = 0;

  static BlockOperatorSpec finite(SchurParameterSequence p, Family f);
  static BlockOperatorSpec padded(SchurParameterSequence p, Family f, std::size_t n_blocks);
  bool padded_window() const { return !params.terminated(); }
  std::size_t block_dim() const { return params.dim(); }
  std::size_t dim() const { return n_blocks * params.dim(); }
};

struct BlockOperator {
  Matrix matrix;
  std::size_t block_dim = 0;
  std::size_t n_blocks = 0;
  bool padded = false;
};

Matrix theta(const Matrix& alpha);

// Finite operators on len+1 blocks for parameters alpha_0..alpha_{len-1} closed by `edge`.
Matrix finite_cmv(const std::vector<Matrix>& alphas, const Matrix& edge, bool hat);
Matrix finite_hessenberg(const std::vector<Matrix>& alphas, const Matrix& edge, bool hat);

BlockOperator build_operator(const BlockOperatorSpec& spec);
BlockOperator build_cmv(const BlockOperatorSpec& spec);
BlockOperator build_hessenberg(const BlockOperatorSpec& spec);

// Principal block submatrix on blocks j..k of the built window.
Matrix submatrix_range(const BlockOperatorSpec& spec, std::size_t j, std::size_t k);
// The unitary obtained from blocks j..k after setting alpha_{j-1} = -1 and alpha_k = 1.
Matrix unitary_truncation(const BlockOperatorSpec& spec, std::size_t j, std::size_t k);

}  // namespace mopuc

#include "mopuc/partition.hpp"

namespace mopuc {

// Factorization of the window through block j into two operators of the same family.
OverlapFactorization standard_overlap(const BlockOperatorSpec& spec, std::size_t j);

}  // namespace mopuc
