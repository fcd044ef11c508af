#pragma once

#include <optional>

#include "mopuc/cmv.hpp"

namespace mopuc {

// P U^n P restricted to V (negative n uses U^dagger).
Matrix spectral_moment(const Matrix& u, const IndexSubspace& v, long n);
std::vector<Matrix> spectral_moments(const Matrix& u, const IndexSubspace& v, std::size_t count);

struct PaddedWindow {
  std::size_t block_dim;
  std::size_t n_blocks;
};

struct ReturnAmplitudes {
  std::vector<Matrix> a;  // a[n-1] = a_{V,n}, n = 1..horizon
  bool exact = true;
};

// a_{V,n} = P U (P_perp U)^{n-1} P. For a padded window, `exact` reports edge independence.
ReturnAmplitudes first_return_amplitudes(const Matrix& u, const IndexSubspace& v, std::size_t horizon,
                                         std::optional<PaddedWindow> window = std::nullopt);
ReturnAmplitudes first_return_amplitudes(const BlockOperator& op, const IndexSubspace& v, std::size_t horizon);
bool window_exact(const PaddedWindow& w, const IndexSubspace& v, std::size_t horizon);
// Blocks needed so that amplitudes up to `horizon` around `last_block` ignore the window edge.
std::size_t required_blocks(std::size_t last_block, std::size_t horizon);

// P (U - z P_perp)^{-1} P restricted to V.
Matrix resolvent_schur(const Matrix& u, const IndexSubspace& v, cplx z);

struct SchurOfSubspace {
  MatrixSeries f;
  bool exact = true;
  double cross_check_residual = 0.0;
};

// Taylor coefficients of f_V from return amplitudes, cross-checked against the resolvent.
SchurOfSubspace schur_of_subspace(const Matrix& u, const IndexSubspace& v, std::size_t order,
                                  std::optional<PaddedWindow> window = std::nullopt, bool cross_check = true);
SchurOfSubspace schur_of_subspace(const BlockOperator& op, const IndexSubspace& v, std::size_t order,
                                  bool cross_check = true);

struct ReturnStatistics {
  std::vector<double> probability;  // p_n, n = 1..horizon
  std::vector<double> cumulative;
  double partial_expected_time = 0.0;
  bool exact = true;
};

// psi is given in the coordinates of V and must be a unit vector.
ReturnStatistics return_statistics(const Matrix& u, const IndexSubspace& v, const Vector& psi, std::size_t horizon,
                                   std::optional<PaddedWindow> window = std::nullopt);

}  // namespace mopuc
