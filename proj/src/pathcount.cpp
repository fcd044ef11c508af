#include "mopuc/pathcount.hpp"

#include <functional>

namespace mopuc {

namespace {

void check_length(std::size_t n) {
  if (n == 0) throw InvariantError("path length must be positive");
  if (n > path_length_cap) throw InvariantError("path length exceeds the enumeration cap of 8");
}

// successors[c] = rows r with a usable transition c -> r.
std::vector<std::vector<std::size_t>> successors(const Matrix& u, bool prune, std::size_t stride = 1) {
  const std::size_t n = u.rows() / stride;
  std::vector<std::vector<std::size_t>> out(n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) {
      const double mag = stride == 1 ? std::abs(u(r, c)) : u.block(r * stride, c * stride, stride, stride).norm();
      if (!prune || mag >= tol::prune) out[c].push_back(r);
    }
  return out;
}

}  // namespace

PathSum path_amplitude_sum(const Matrix& u, std::size_t from, std::size_t to, const IndexSubspace& avoid,
                           std::size_t n, bool prune) {
  check_length(n);
  const std::size_t dim = u.rows();
  if (from >= dim || to >= dim) throw InvariantError("path endpoint out of range");
  const auto next = successors(u, prune);
  PathSum s;
  std::function<void(std::size_t, cplx, std::size_t)> walk = [&](std::size_t at, cplx amp, std::size_t step) {
    if (step + 1 == n) {
      s.amplitude += u(to, at) * amp;
      ++s.paths;
      return;
    }
    for (auto r : next[at]) {
      if (avoid.contains(r)) continue;
      const cplx a = u(r, at) * amp;
      if (prune && std::abs(a) < tol::prune) {
        ++s.pruned;
        continue;
      }
      walk(r, a, step + 1);
    }
  };
  walk(from, 1.0, 0);
  return s;
}

Matrix block_path_amplitude_sum(const Matrix& u, std::size_t d, std::size_t from, std::size_t to,
                                const std::vector<std::size_t>& avoid, std::size_t n, bool prune) {
  check_length(n);
  if (d == 0 || u.rows() % d != 0) throw InvariantError("operator is not a whole number of blocks");
  const std::size_t blocks = u.rows() / d;
  if (from >= blocks || to >= blocks) throw InvariantError("path endpoint out of range");
  std::vector<bool> banned(blocks, false);
  for (auto b : avoid) {
    if (b >= blocks) throw InvariantError("avoided block out of range");
    banned[b] = true;
  }
  const auto next = successors(u, prune, d);
  auto blk = [&](std::size_t r, std::size_t c) { return u.block(r * d, c * d, d, d); };
  Matrix total = Matrix::Zero(d, d);
  std::function<void(std::size_t, const Matrix&, std::size_t)> walk = [&](std::size_t at, const Matrix& amp,
                                                                           std::size_t step) {
    if (step + 1 == n) {
      total += blk(to, at) * amp;
      return;
    }
    for (auto r : next[at]) {
      if (banned[r]) continue;
      Matrix a = blk(r, at) * amp;
      if (prune && a.norm() < tol::prune) continue;
      walk(r, a, step + 1);
    }
  };
  walk(from, Matrix::Identity(d, d), 0);
  return total;
}

std::vector<Matrix> oracle_first_return(const Matrix& u, const IndexSubspace& v, std::size_t n, bool prune) {
  check_length(n);
  if (static_cast<std::size_t>(u.rows()) != v.ambient()) throw InvariantError("subspace and operator sizes differ");
  const auto next = successors(u, prune);
  std::vector<Matrix> a(n, Matrix::Zero(v.size(), v.size()));
  for (std::size_t c = 0; c < v.size(); ++c) {
    std::function<void(std::size_t, cplx, std::size_t)> walk = [&](std::size_t at, cplx amp, std::size_t step) {
      for (std::size_t r = 0; r < v.size(); ++r) a[step](r, c) += u(v.indices()[r], at) * amp;
      if (step + 1 == n) return;
      for (auto k : next[at]) {
        if (v.contains(k)) continue;
        const cplx x = u(k, at) * amp;
        if (prune && std::abs(x) < tol::prune) continue;
        walk(k, x, step + 1);
      }
    };
    walk(v.indices()[c], 1.0, 0);
  }
  return a;
}

}  // namespace mopuc
