#include "mopuc/cmv.hpp"

namespace mopuc {

namespace {

void place(Matrix& m, std::size_t row_block, std::size_t col_block, std::size_t d, const Matrix& b) {
  m.block(row_block * d, col_block * d, b.rows(), b.cols()) = b;
}

// Window parameters alpha_0..alpha_{n-2} and the closing edge parameter.
std::pair<std::vector<Matrix>, Matrix> window_params(const BlockOperatorSpec& spec) {
  const auto& p = spec.params;
  const std::size_t d = p.dim();
  if (spec.n_blocks == 0) throw InvariantError("window needs at least one block");
  if (p.terminated()) {
    if (spec.n_blocks != p.size() + 1)
      throw InvariantError("finite operator has exactly len(alphas) + 1 blocks");
    return {p.alphas(), *p.terminal()};
  }
  if (p.size() + 1 < spec.n_blocks)
    throw InvariantError("window of " + std::to_string(spec.n_blocks) + " blocks needs " +
                         std::to_string(spec.n_blocks - 1) + " parameters");
  return {std::vector<Matrix>(p.alphas().begin(), p.alphas().begin() + (spec.n_blocks - 1)),
          Matrix::Identity(d, d)};
}

}  // namespace

Family parse_family(const std::string& s) {
  if (s == "C") return Family::cmv;
  if (s == "Chat") return Family::cmv_hat;
  if (s == "H") return Family::hessenberg;
  if (s == "Hhat") return Family::hessenberg_hat;
  throw InvariantError("unknown family '" + s + "' (expected C, Chat, H or Hhat)");
}

std::string family_name(Family f) {
  switch (f) {
    case Family::cmv: return "C";
    case Family::cmv_hat: return "Chat";
    case Family::hessenberg: return "H";
    case Family::hessenberg_hat: return "Hhat";
  }
  return "?";
}

bool is_cmv(Family f) { return f == Family::cmv || f == Family::cmv_hat; }

BlockOperatorSpec BlockOperatorSpec::finite(SchurParameterSequence p, Family f) {
  if (!p.terminated()) throw InvariantError("finite operator needs a terminal parameter");
  const std::size_t n = p.size() + 1;
  return {std::move(p), f, n};
}

BlockOperatorSpec BlockOperatorSpec::padded(SchurParameterSequence p, Family f, std::size_t n_blocks) {
  if (p.terminated()) return finite(std::move(p), f);
  return {std::move(p), f, n_blocks};
}

Matrix theta(const Matrix& alpha) {
  const Eigen::Index d = alpha.rows();
  Matrix t(2 * d, 2 * d);
  t.topLeftCorner(d, d) = alpha.adjoint();
  t.topRightCorner(d, d) = rho_left(alpha);
  t.bottomLeftCorner(d, d) = rho_right(alpha);
  t.bottomRightCorner(d, d) = -alpha;
  return t;
}

Matrix finite_cmv(const std::vector<Matrix>& alphas, const Matrix& edge, bool hat) {
  const std::size_t d = edge.rows();
  const std::size_t len = alphas.size();
  const std::size_t n = (len + 1) * d;
  Matrix l = Matrix::Zero(n, n), m = Matrix::Zero(n, n);
  place(m, 0, 0, d, Matrix::Identity(d, d));
  for (std::size_t i = 0; i < len; ++i) place(i % 2 == 0 ? l : m, i, i, d, theta(alphas[i]));
  place(len % 2 == 0 ? l : m, len, len, d, edge.adjoint());
  return hat ? Matrix(m * l) : Matrix(l * m);
}

Matrix finite_hessenberg(const std::vector<Matrix>& alphas, const Matrix& edge, bool hat) {
  const std::size_t d = edge.rows();
  const std::size_t len = alphas.size();
  const std::size_t n = (len + 1) * d;
  Matrix h = Matrix::Identity(n, n);
  place(h, len, len, d, edge.adjoint());
  for (std::size_t i = len; i-- > 0;) {
    Matrix f = Matrix::Identity(n, n);
    place(f, i, i, d, theta(alphas[i]));
    h = hat ? Matrix(h * f) : Matrix(f * h);
  }
  return h;
}

BlockOperator build_cmv(const BlockOperatorSpec& spec) {
  if (!is_cmv(spec.family)) throw InvariantError("family is not a CMV family");
  auto [alphas, edge] = window_params(spec);
  return {finite_cmv(alphas, edge, spec.family == Family::cmv_hat), spec.block_dim(), spec.n_blocks,
          spec.padded_window()};
}

BlockOperator build_hessenberg(const BlockOperatorSpec& spec) {
  if (is_cmv(spec.family)) throw InvariantError("family is not a Hessenberg family");
  if (!spec.params.terminated()) throw InvariantError("Hessenberg operators need a terminal parameter");
  auto [alphas, edge] = window_params(spec);
  return {finite_hessenberg(alphas, edge, spec.family == Family::hessenberg_hat), spec.block_dim(), spec.n_blocks,
          false};
}

BlockOperator build_operator(const BlockOperatorSpec& spec) {
  return is_cmv(spec.family) ? build_cmv(spec) : build_hessenberg(spec);
}

Matrix submatrix_range(const BlockOperatorSpec& spec, std::size_t j, std::size_t k) {
  if (j > k || k >= spec.n_blocks) throw InvariantError("block range out of window");
  const auto op = build_operator(spec);
  const std::size_t d = spec.block_dim();
  return op.matrix.block(j * d, j * d, (k - j + 1) * d, (k - j + 1) * d);
}

Matrix unitary_truncation(const BlockOperatorSpec& spec, std::size_t j, std::size_t k) {
  if (j >= k || k >= spec.n_blocks) throw InvariantError("truncation needs j < k < n_blocks");
  const auto& p = spec.params;
  if (k > p.size()) throw InvariantError("truncation needs parameters up to alpha_{k-1}");
  const std::vector<Matrix> inner(p.alphas().begin() + j, p.alphas().begin() + k);
  const Matrix id = Matrix::Identity(p.dim(), p.dim());
  switch (spec.family) {
    case Family::cmv: return finite_cmv(inner, id, j % 2 == 1);
    case Family::cmv_hat: return finite_cmv(inner, id, j % 2 == 0);
    case Family::hessenberg: return finite_hessenberg(inner, id, false);
    case Family::hessenberg_hat: return finite_hessenberg(inner, id, true);
  }
  return {};
}

}  // namespace mopuc

namespace mopuc {

SubspacePartition::SubspacePartition(IndexSubspace l, IndexSubspace c, IndexSubspace r)
    : left(std::move(l)), center(std::move(c)), right(std::move(r)) {
  const std::size_t n = center.ambient();
  if (left.ambient() != n || right.ambient() != n) throw InvariantError("partition parts live in different spaces");
  if (left.size() + center.size() + right.size() != n) throw InvariantError("partition does not cover the space");
  for (std::size_t i = 0; i < n; ++i) {
    const int hits = left.contains(i) + center.contains(i) + right.contains(i);
    if (hits != 1) throw InvariantError("partition parts overlap at index " + std::to_string(i));
  }
}

Matrix OverlapFactorization::left_factor() const { return embed(u_lc, partition.left_center()); }
Matrix OverlapFactorization::right_factor() const { return embed(u_cr, partition.center_right()); }

OverlapFactorization standard_overlap(const BlockOperatorSpec& spec, std::size_t j) {
  auto [alphas, edge] = window_params(spec);
  const std::size_t len = alphas.size();
  if (j > len) throw InvariantError("overlap site outside the window");
  if (!is_cmv(spec.family) && !spec.params.terminated())
    throw InvariantError("Hessenberg operators need a terminal parameter");
  const std::size_t d = spec.block_dim();
  const std::size_t n = spec.dim();
  const Matrix id = Matrix::Identity(d, d);
  const std::vector<Matrix> head(alphas.begin(), alphas.begin() + j), tail(alphas.begin() + j, alphas.end());
  const IndexSubspace below = IndexSubspace::range(0, j * d, n);
  const IndexSubspace above = IndexSubspace::range((j + 1) * d, n - (j + 1) * d, n);
  const IndexSubspace site = IndexSubspace::range(j * d, d, n);

  // head_first: the factor acting on blocks <= j is the left one.
  bool head_first = true;
  Matrix head_op, tail_op;
  const bool even = j % 2 == 0;
  switch (spec.family) {
    case Family::cmv:
      head_first = !even;
      head_op = finite_cmv(head, id, false);
      tail_op = finite_cmv(tail, edge, !even);
      break;
    case Family::cmv_hat:
      head_first = even;
      head_op = finite_cmv(head, id, true);
      tail_op = finite_cmv(tail, edge, even);
      break;
    case Family::hessenberg:
      head_op = finite_hessenberg(head, id, false);
      tail_op = finite_hessenberg(tail, edge, false);
      break;
    case Family::hessenberg_hat:
      head_first = false;
      head_op = finite_hessenberg(head, id, true);
      tail_op = finite_hessenberg(tail, edge, true);
      break;
  }
  if (head_first) return {SubspacePartition(below, site, above), head_op, tail_op};
  return {SubspacePartition(above, site, below), tail_op, head_op};
}

}  // namespace mopuc
