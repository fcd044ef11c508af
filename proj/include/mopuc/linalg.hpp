#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace mopuc {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

namespace tol {
inline constexpr double unitarity = 1e-10;
inline constexpr double rank_rel = 1e-9;
inline constexpr double series = 1e-8;
inline constexpr double eig_clamp = 1e-12;
inline constexpr double terminal = 1e-8;
inline constexpr double contraction_margin = 1e-10;
inline constexpr double contractivity = 1e-6;
inline constexpr double overlap_zero = 1e-10;
inline constexpr double prune = 1e-14;
}  // namespace tol

// Violated type invariants or preconditions on caller input.
class InvariantError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Two independent internal computations disagreed.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Strictly increasing coordinate indices below an ambient dimension.
class IndexSubspace {
 public:
  IndexSubspace() = default;
  IndexSubspace(std::vector<std::size_t> indices, std::size_t ambient);

  static IndexSubspace range(std::size_t first, std::size_t count, std::size_t ambient);
  static IndexSubspace blocks(std::size_t j, std::size_t k, std::size_t block_dim, std::size_t ambient);

  const std::vector<std::size_t>& indices() const { return idx_; }
  std::size_t size() const { return idx_.size(); }
  std::size_t ambient() const { return ambient_; }
  bool contains(std::size_t i) const;
  // Position of ambient index i inside this subspace, or npos.
  std::size_t position(std::size_t i) const;
  IndexSubspace complement() const;
  IndexSubspace united(const IndexSubspace& other) const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::vector<std::size_t> idx_;
  std::size_t ambient_ = 0;
};

Matrix projector(const IndexSubspace& v);
Matrix hermitian_psd_sqrt(const Matrix& m);
double operator_norm(const Matrix& m);
std::size_t numerical_rank(const Matrix& m, double rel_tol = tol::rank_rel, double abs_tol = 0.0);

struct UnitarityCheck {
  bool ok;
  double residual;
};
UnitarityCheck is_unitary(const Matrix& m, double tolerance = tol::unitarity);

// Rows/cols of m at the given subspaces.
Matrix restrict(const Matrix& m, const IndexSubspace& rows, const IndexSubspace& cols);
// Identity of size n with the block of positions `at` replaced by m.
Matrix embed(const Matrix& m, const IndexSubspace& at);
Matrix direct_sum(const std::vector<Matrix>& blocks);
Matrix nearest_unitary(const Matrix& m);

}  // namespace mopuc
