#include "mopuc/overlap.hpp"

#include "mopuc/spectral.hpp"

namespace mopuc {

namespace {

// Positions of `sub` indices inside `outer` (both ambient coordinates).
IndexSubspace relative(const IndexSubspace& sub, const IndexSubspace& outer) {
  std::vector<std::size_t> pos;
  for (auto i : sub.indices()) {
    const auto p = outer.position(i);
    if (p == IndexSubspace::npos) throw InvariantError("index " + std::to_string(i) + " outside the enclosing set");
    pos.push_back(p);
  }
  return IndexSubspace(std::move(pos), outer.size());
}

// Columns of q, orthonormalized greedily by largest residual norm (ties to the lowest index).
Matrix pivoted_basis(const Matrix& q, std::size_t count) {
  Matrix res = q;
  Matrix basis(q.rows(), count);
  for (std::size_t k = 0; k < count; ++k) {
    Eigen::Index best = -1;
    double best_norm = 0.0;
    for (Eigen::Index c = 0; c < res.cols(); ++c) {
      const double n = res.col(c).norm();
      if (n > best_norm * (1.0 + 1e-12)) {
        best = c;
        best_norm = n;
      }
    }
    if (best < 0 || best_norm < 1e-8) throw InvariantError("coupling space is smaller than the center");
    Vector w = res.col(best) / best_norm;
    for (std::size_t i = 0; i < k; ++i) w -= basis.col(i) * basis.col(i).dot(w);
    w.normalize();
    basis.col(k) = w;
    for (Eigen::Index c = 0; c < res.cols(); ++c) res.col(c) -= w * w.dot(res.col(c));
  }
  return basis;
}

}  // namespace

MatrixSeries embed_series(const MatrixSeries& s, const IndexSubspace& inner, const IndexSubspace& outer) {
  const IndexSubspace at = relative(inner, outer);
  std::vector<Matrix> out;
  for (std::size_t n = 0; n <= s.order(); ++n) {
    Matrix m = n == 0 ? Matrix(Matrix::Identity(outer.size(), outer.size()))
                      : Matrix(Matrix::Zero(outer.size(), outer.size()));
    for (std::size_t r = 0; r < at.size(); ++r)
      for (std::size_t c = 0; c < at.size(); ++c) m(at.indices()[r], at.indices()[c]) = s[n](r, c);
    out.push_back(std::move(m));
  }
  return MatrixSeries(std::move(out));
}

OverlapVerdict check_overlap(const Matrix& u, const SubspacePartition& part, double rel_tol) {
  if (static_cast<std::size_t>(u.rows()) != part.ambient() || u.rows() != u.cols())
    throw InvariantError("partition does not match the operator");
  OverlapVerdict v;
  v.center_dim = part.center.size();
  v.leak_tolerance = tol::overlap_zero * std::max(1.0, u.norm());
  v.leak_norm = part.left.size() && part.right.size() ? operator_norm(restrict(u, part.right, part.left)) : 0.0;
  const Matrix k = restrict(u, part.left_center(), part.center_right());
  v.coupling_rank = numerical_rank(k, rel_tol, rel_tol);
  if (v.leak_norm > v.leak_tolerance)
    v.reason = "right-to-left block does not vanish";
  else if (v.coupling_rank != v.center_dim)
    v.reason = "coupling rank " + std::to_string(v.coupling_rank) + " differs from center dimension " +
               std::to_string(v.center_dim);
  v.overlapping = v.reason.empty();
  return v;
}

OverlapFactorization construct_overlap(const Matrix& u, const SubspacePartition& part,
                                       const std::optional<Matrix>& center_rotation) {
  const auto verdict = check_overlap(u, part);
  if (!verdict.overlapping) throw InvariantError("operator has no overlapping factorization: " + verdict.reason);
  const std::size_t n = part.ambient();
  const std::size_t c = part.center.size();
  const Matrix p_l = projector(part.left), p_c = projector(part.center), p_r = projector(part.right);
  const Matrix k = projector(part.left_center()) * u * projector(part.center_right());
  const Matrix kk = k.adjoint() * k;
  if ((kk * kk - kk).norm() > 1e-8) throw ConsistencyError("coupling is not a partial isometry");

  Matrix w = Matrix::Zero(n, n);
  if (c > 0) {
    const Matrix basis = pivoted_basis(kk, c);
    Matrix rot = Matrix::Identity(c, c);
    if (center_rotation) {
      if (center_rotation->rows() != static_cast<Eigen::Index>(c) || !is_unitary(*center_rotation).ok)
        throw InvariantError("center rotation must be a unitary on the center");
      rot = *center_rotation;
    }
    Matrix onto(n, c);
    onto.setZero();
    for (std::size_t i = 0; i < c; ++i) onto(part.center.indices()[i], i) = 1.0;
    w = onto * rot * basis.adjoint();
  }
  const Matrix right_full = p_l + w * kk + p_r * u;
  const Matrix left_full = u * p_l + k * w.adjoint() * p_c + p_r;
  OverlapFactorization f{part, restrict(left_full, part.left_center(), part.left_center()),
                         restrict(right_full, part.center_right(), part.center_right())};
  const double scale = std::max(1.0, std::sqrt(static_cast<double>(n)));
  if (!is_unitary(f.u_lc, tol::unitarity * scale).ok || !is_unitary(f.u_cr, tol::unitarity * scale).ok)
    throw ConsistencyError("constructed factors are not unitary");
  if ((f.product() - u).norm() > tol::unitarity * scale)
    throw ConsistencyError("constructed factors do not reproduce the operator");
  return f;
}

Matrix verify_gauge(const OverlapFactorization& a, const OverlapFactorization& b, double tolerance) {
  const auto& part = a.partition;
  const IndexSubspace lc = part.left_center(), cr = part.center_right();
  if (b.partition.left.indices() != part.left.indices() || b.partition.center.indices() != part.center.indices())
    throw InvariantError("factorizations use different partitions");
  const Matrix g = a.u_lc.adjoint() * b.u_lc;
  const IndexSubspace l_in = relative(part.left, lc), c_in = relative(part.center, lc);
  const Matrix expected_l = Matrix::Identity(part.left.size(), part.left.size());
  if ((restrict(g, l_in, l_in) - expected_l).norm() > tolerance ||
      (part.left.size() && part.center.size() &&
       (restrict(g, l_in, c_in).norm() > tolerance || restrict(g, c_in, l_in).norm() > tolerance)))
    throw ConsistencyError("left factors are not related by a center unitary");
  const Matrix uc = restrict(g, c_in, c_in);
  if (!is_unitary(uc, tolerance).ok) throw ConsistencyError("center gauge is not unitary");
  Matrix gauge_cr = Matrix::Identity(cr.size(), cr.size());
  const IndexSubspace c_in_cr = relative(part.center, cr);
  for (std::size_t r = 0; r < c_in_cr.size(); ++r)
    for (std::size_t s = 0; s < c_in_cr.size(); ++s)
      gauge_cr(c_in_cr.indices()[r], c_in_cr.indices()[s]) = std::conj(uc(s, r));
  if ((b.u_cr - gauge_cr * a.u_cr).norm() > tolerance)
    throw ConsistencyError("right factors are not related by the center gauge");
  return uc;
}

FactorizedSchurCheck abstract_khrushchev_check(const Matrix& u, const OverlapFactorization& fac,
                                               const IndexSubspace& v_left, const IndexSubspace& v_right,
                                               std::size_t order, double tolerance) {
  const auto& part = fac.partition;
  for (auto i : v_left.indices())
    if (!part.left.contains(i)) throw InvariantError("v_left must lie in the left part");
  for (auto i : v_right.indices())
    if (!part.right.contains(i)) throw InvariantError("v_right must lie in the right part");
  const IndexSubspace v_lc = v_left.united(part.center), v_cr = part.center.united(v_right);
  const IndexSubspace v = v_lc.united(v_right);
  const IndexSubspace lc = part.left_center(), cr = part.center_right();

  FactorizedSchurCheck out;
  out.tolerance = tolerance;
  out.direct = schur_of_subspace(u, v, order).f;
  out.f_left = schur_of_subspace(fac.u_lc, relative(v_lc, lc), order).f;
  out.f_right = schur_of_subspace(fac.u_cr, relative(v_cr, cr), order).f;
  const MatrixSeries right = embed_series(out.f_right, v_cr, v);
  const MatrixSeries left = embed_series(out.f_left, v_lc, v);
  out.factored = right * left;
  out.residual = max_coefficient_difference(out.direct, out.factored);
  out.pass = out.residual <= tolerance;
  if ((fac.product() - u).norm() > 1e-8) out.note = "factors do not reproduce the operator";
  else out.note = "factor Schur functions depend on the center gauge; their product does not";
  return out;
}

}  // namespace mopuc
