#include <doctest.h>

#include "helpers.hpp"
#include "mopuc/cmv.hpp"
#include "mopuc/pathcount.hpp"
#include "mopuc/random.hpp"
#include "mopuc/reference_cases.hpp"
#include "mopuc/spectral.hpp"

using namespace mopuc;
using testing::max_abs;

namespace {

// e_to^T U (Q U)^{n-1} e_from with Q the projector off `avoid`.
cplx operator_amplitude(const Matrix& u, std::size_t from, std::size_t to, const IndexSubspace& avoid,
                        std::size_t n) {
  const Matrix q = Matrix::Identity(u.rows(), u.cols()) - projector(avoid);
  Matrix w = u;
  for (std::size_t i = 1; i < n; ++i) w = u * q * w;
  return w(to, from);
}

}  // namespace

TEST_CASE("path sums equal operator products") {
  Rng rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t dim = 3 + rng() % 5;
    const Matrix u = random_unitary(dim, rng);
    const IndexSubspace avoid({rng() % dim}, dim);
    const std::size_t from = rng() % dim, to = rng() % dim;
    for (std::size_t n = 1; n <= 5; ++n) {
      const auto s = path_amplitude_sum(u, from, to, avoid, n);
      CHECK(std::abs(s.amplitude - operator_amplitude(u, from, to, avoid, n)) < 1e-12);
    }
    const Matrix u3 = u * u * u;
    CHECK(std::abs(path_amplitude_sum(u, from, to, IndexSubspace({}, dim), 3).amplitude - u3(to, from)) < 1e-12);
  }
}

TEST_CASE("path counts for dense operators") {
  Rng rng(2);
  const Matrix u = random_unitary(4, rng);
  const auto s = path_amplitude_sum(u, 0, 1, IndexSubspace({0}, 4), 4);
  CHECK(s.paths == 27);
  CHECK(s.pruned == 0);
}

TEST_CASE("pruning only drops negligible branches") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto p = random_parameters(1, 10, seed, true);
    const Matrix c = build_cmv(BlockOperatorSpec::finite(p, Family::cmv)).matrix;
    const IndexSubspace v({2}, 11);
    const auto pruned = oracle_first_return(c, v, 8, true);
    const auto full = oracle_first_return(c, v, 8, false);
    for (std::size_t n = 0; n < 8; ++n) CHECK(max_abs(pruned[n] - full[n]) < 1e-13);
    const auto s = path_amplitude_sum(c, 2, 2, v, 6, true);
    const auto t = path_amplitude_sum(c, 2, 2, v, 6, false);
    CHECK(s.paths < t.paths);
    CHECK(std::abs(s.amplitude - t.amplitude) < 1e-13);
  }
}

TEST_CASE("enumerated first returns match the operator") {
  Rng rng(3);
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t dim = 4 + rng() % 5;
    const Matrix u = random_unitary(dim, rng);
    const IndexSubspace v({0, dim - 1}, dim);
    const auto oracle = oracle_first_return(u, v, 6);
    const auto amps = first_return_amplitudes(u, v, 6).a;
    for (std::size_t n = 0; n < 6; ++n) CHECK(max_abs(oracle[n] - amps[n]) < 1e-12);
  }
}

TEST_CASE("block path sums") {
  const auto p = random_parameters(2, 6, 5, true);
  const Matrix c = build_cmv(BlockOperatorSpec::finite(p, Family::cmv)).matrix;
  const auto amps = first_return_amplitudes(c, IndexSubspace::blocks(1, 1, 2, 14), 6).a;
  for (std::size_t n = 1; n <= 6; ++n) CHECK(max_abs(block_path_amplitude_sum(c, 2, 1, 1, {1}, n) - amps[n - 1]) < 1e-12);
  Rng rng(4);
  const Matrix u = random_unitary(5, rng);
  for (std::size_t n = 1; n <= 4; ++n)
    CHECK(std::abs(block_path_amplitude_sum(u, 1, 0, 3, {2}, n)(0, 0) -
                   path_amplitude_sum(u, 0, 3, IndexSubspace({2}, 5), n).amplitude) < 1e-13);
  CHECK_THROWS_AS(block_path_amplitude_sum(u, 2, 0, 1, {}, 2), InvariantError);
}

TEST_CASE("split walk returns factor through the overlap") {
  const Matrix u = cases::split_walk();
  const auto fac = cases::split_walk_factors();
  const std::size_t cap = path_length_cap;
  std::vector<cplx> direct, left, right;
  for (std::size_t n = 1; n <= cap; ++n) {
    direct.push_back(path_amplitude_sum(u, 2, 2, IndexSubspace({2}, 6), n).amplitude);
    left.push_back(path_amplitude_sum(fac.u_lc, 2, 2, IndexSubspace({2}, 3), n).amplitude);
    right.push_back(path_amplitude_sum(fac.u_cr, 0, 0, IndexSubspace({0}, 4), n).amplitude);
  }
  // z a(z) = a_L(z) a_R(z)
  for (std::size_t n = 1; n < cap; ++n) {
    cplx conv = 0.0;
    for (std::size_t m = 1; m <= n; ++m) conv += left[m - 1] * right[n - m];
    CHECK(std::abs(direct[n - 1] - conv) < 1e-12);
  }
}

TEST_CASE("path length cap") {
  const Matrix u = Matrix::Identity(3, 3);
  CHECK_THROWS_AS(path_amplitude_sum(u, 0, 0, IndexSubspace({}, 3), path_length_cap + 1), InvariantError);
  CHECK_THROWS_AS(path_amplitude_sum(u, 0, 0, IndexSubspace({}, 3), 0), InvariantError);
  CHECK_THROWS_AS(oracle_first_return(u, IndexSubspace({0}, 3), 9), InvariantError);
  CHECK_NOTHROW(oracle_first_return(u, IndexSubspace({0}, 3), 8));
}
