#pragma once

#include <optional>
#include <string>

#include "mopuc/partition.hpp"
#include "mopuc/series.hpp"

namespace mopuc {

struct OverlapVerdict {
  bool overlapping = false;
  double leak_norm = 0.0;       // ||P_R U P_L||
  double leak_tolerance = 0.0;
  std::size_t coupling_rank = 0;  // rank of P_LC U P_CR
  std::size_t center_dim = 0;
  std::string reason;
};

OverlapVerdict check_overlap(const Matrix& u, const SubspacePartition& part, double rel_tol = tol::rank_rel);

// Builds the factors; center_rotation (a unitary on the center) selects another gauge.
OverlapFactorization construct_overlap(const Matrix& u, const SubspacePartition& part,
                                       const std::optional<Matrix>& center_rotation = std::nullopt);

// Returns U_C with a.u_lc^dagger b.u_lc = 1 (+) U_C and b.u_cr = (U_C^dagger (+) 1) a.u_cr.
Matrix verify_gauge(const OverlapFactorization& a, const OverlapFactorization& b, double tolerance = tol::unitarity);

struct FactorizedSchurCheck {
  MatrixSeries direct;    // f_V from U
  MatrixSeries factored;  // (1_{V_L} (+) f^R)(f^L (+) 1_{V_R})
  MatrixSeries f_left, f_right;
  double residual = 0.0;
  bool pass = false;
  double tolerance = tol::series;
  std::string note;
};

// V = v_left (+) center (+) v_right with v_left inside the left part and v_right inside the right part.
FactorizedSchurCheck abstract_khrushchev_check(const Matrix& u, const OverlapFactorization& fac,
                                               const IndexSubspace& v_left, const IndexSubspace& v_right,
                                               std::size_t order, double tolerance = tol::series);

// Embeds a series acting on `inner` (positions listed in increasing order) into the identity on `outer`.
MatrixSeries embed_series(const MatrixSeries& s, const IndexSubspace& inner, const IndexSubspace& outer);

}  // namespace mopuc
