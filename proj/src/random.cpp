#include "mopuc/random.hpp"

#include <algorithm>

namespace mopuc {

Matrix random_gaussian(std::size_t rows, std::size_t cols, Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix m(rows, cols);
  for (std::size_t c = 0; c < cols; ++c)
    for (std::size_t r = 0; r < rows; ++r) {
      const double re = g(rng);
      const double im = g(rng);
      m(r, c) = cplx(re, im);
    }
  return m;
}

Matrix random_unitary(std::size_t n, Rng& rng) {
  const Matrix g = random_gaussian(n, n, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(n, n);
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (std::size_t i = 0; i < n; ++i) {
    const cplx v = r(i, i);
    if (std::abs(v) > 0) q.col(i) *= v / std::abs(v);
  }
  return q;
}

Matrix random_contraction(std::size_t d, Rng& rng) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const double r = unif(rng);
  const Matrix g = random_gaussian(d, d, rng);
  const double n = operator_norm(g);
  return n > 0 ? Matrix(g * (0.9 * r / n)) : g;
}

SchurParameterSequence random_parameters(std::size_t d, std::size_t length, std::uint64_t seed, bool terminal) {
  Rng rng(seed);
  std::vector<Matrix> alphas;
  for (std::size_t i = 0; i < length; ++i) alphas.push_back(random_contraction(d, rng));
  std::optional<Matrix> term;
  if (terminal) term = random_unitary(d, rng);
  return SchurParameterSequence(d, std::move(alphas), std::move(term));
}

SubspacePartition random_partition(std::size_t n, std::size_t center, Rng& rng) {
  if (center > n) throw InvariantError("center larger than the space");
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::uniform_int_distribution<std::size_t> split(0, n - center);
  const std::size_t n_left = split(rng);
  std::vector<std::size_t> l(perm.begin(), perm.begin() + n_left);
  std::vector<std::size_t> c(perm.begin() + n_left, perm.begin() + n_left + center);
  std::vector<std::size_t> r(perm.begin() + n_left + center, perm.end());
  std::sort(l.begin(), l.end());
  std::sort(c.begin(), c.end());
  std::sort(r.begin(), r.end());
  return SubspacePartition(IndexSubspace(l, n), IndexSubspace(c, n), IndexSubspace(r, n));
}

RandomOverlap random_overlapping_unitary(std::size_t n, std::size_t center, Rng& rng) {
  SubspacePartition part = random_partition(n, center, rng);
  const Matrix a = random_unitary(part.left_center().size(), rng);
  const Matrix b = random_unitary(part.center_right().size(), rng);
  OverlapFactorization f{part, a, b};
  return {f.product(), f};
}

}  // namespace mopuc
