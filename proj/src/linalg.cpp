#include "mopuc/linalg.hpp"

#include <algorithm>

namespace mopuc {

IndexSubspace::IndexSubspace(std::vector<std::size_t> indices, std::size_t ambient)
    : idx_(std::move(indices)), ambient_(ambient) {
  for (std::size_t i = 0; i < idx_.size(); ++i) {
    if (idx_[i] >= ambient_)
      throw InvariantError("subspace index " + std::to_string(idx_[i]) + " out of range for dimension " +
                           std::to_string(ambient_));
    if (i > 0 && idx_[i] <= idx_[i - 1])
      throw InvariantError("subspace indices must be strictly increasing");
  }
}

IndexSubspace IndexSubspace::range(std::size_t first, std::size_t count, std::size_t ambient) {
  std::vector<std::size_t> v(count);
  for (std::size_t i = 0; i < count; ++i) v[i] = first + i;
  return IndexSubspace(std::move(v), ambient);
}

IndexSubspace IndexSubspace::blocks(std::size_t j, std::size_t k, std::size_t block_dim, std::size_t ambient) {
  if (k < j) throw InvariantError("block range requires j <= k");
  return range(j * block_dim, (k - j + 1) * block_dim, ambient);
}

bool IndexSubspace::contains(std::size_t i) const { return std::binary_search(idx_.begin(), idx_.end(), i); }

std::size_t IndexSubspace::position(std::size_t i) const {
  auto it = std::lower_bound(idx_.begin(), idx_.end(), i);
  if (it == idx_.end() || *it != i) return npos;
  return static_cast<std::size_t>(it - idx_.begin());
}

IndexSubspace IndexSubspace::complement() const {
  std::vector<std::size_t> out;
  out.reserve(ambient_ - idx_.size());
  for (std::size_t i = 0; i < ambient_; ++i)
    if (!contains(i)) out.push_back(i);
  return IndexSubspace(std::move(out), ambient_);
}

IndexSubspace IndexSubspace::united(const IndexSubspace& other) const {
  if (other.ambient_ != ambient_) throw InvariantError("subspaces live in different dimensions");
  std::vector<std::size_t> out;
  std::set_union(idx_.begin(), idx_.end(), other.idx_.begin(), other.idx_.end(), std::back_inserter(out));
  return IndexSubspace(std::move(out), ambient_);
}

Matrix projector(const IndexSubspace& v) {
  Matrix p = Matrix::Zero(v.ambient(), v.ambient());
  for (auto i : v.indices()) p(i, i) = 1.0;
  return p;
}

Matrix hermitian_psd_sqrt(const Matrix& m) {
  if (m.rows() != m.cols()) throw InvariantError("square matrix required");
  const double scale = std::max(1.0, m.norm());
  if ((m - m.adjoint()).norm() > tol::unitarity * scale) throw InvariantError("matrix is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> es(m);
  Eigen::VectorXd ev = es.eigenvalues();
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) < -tol::eig_clamp * scale) throw InvariantError("matrix is not positive semidefinite");
    ev(i) = ev(i) > 0 ? std::sqrt(ev(i)) : 0.0;
  }
  Matrix r = es.eigenvectors() * ev.cast<cplx>().asDiagonal() * es.eigenvectors().adjoint();
  return 0.5 * (r + r.adjoint());
}

double operator_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

std::size_t numerical_rank(const Matrix& m, double rel_tol, double abs_tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(m);
  const auto& s = svd.singularValues();
  if (s(0) == 0.0) return 0;
  const double cut = std::max(rel_tol * s(0), abs_tol);
  std::size_t r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > cut) ++r;
  return r;
}

UnitarityCheck is_unitary(const Matrix& m, double tolerance) {
  if (m.rows() != m.cols()) return {false, std::numeric_limits<double>::infinity()};
  const Matrix id = Matrix::Identity(m.rows(), m.cols());
  const double r = std::max((m.adjoint() * m - id).norm(), (m * m.adjoint() - id).norm());
  return {r <= tolerance, r};
}

Matrix restrict(const Matrix& m, const IndexSubspace& rows, const IndexSubspace& cols) {
  Matrix out(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) out(r, c) = m(rows.indices()[r], cols.indices()[c]);
  return out;
}

Matrix embed(const Matrix& m, const IndexSubspace& at) {
  if (static_cast<std::size_t>(m.rows()) != at.size() || m.rows() != m.cols())
    throw InvariantError("embedded block does not match subspace size");
  Matrix out = Matrix::Identity(at.ambient(), at.ambient());
  for (std::size_t r = 0; r < at.size(); ++r)
    for (std::size_t c = 0; c < at.size(); ++c) out(at.indices()[r], at.indices()[c]) = m(r, c);
  return out;
}

Matrix direct_sum(const std::vector<Matrix>& blocks) {
  Eigen::Index rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  Matrix out = Matrix::Zero(rows, cols);
  Eigen::Index r = 0, c = 0;
  for (const auto& b : blocks) {
    out.block(r, c, b.rows(), b.cols()) = b;
    r += b.rows();
    c += b.cols();
  }
  return out;
}

Matrix nearest_unitary(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

}  // namespace mopuc
