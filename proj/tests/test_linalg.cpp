#include <doctest.h>

#include "helpers.hpp"
#include "mopuc/linalg.hpp"
#include "mopuc/random.hpp"

using namespace mopuc;

TEST_CASE("index subspaces validate ordering and range") {
  CHECK_THROWS_AS(IndexSubspace({1, 1}, 4), InvariantError);
  CHECK_THROWS_AS(IndexSubspace({2, 1}, 4), InvariantError);
  CHECK_THROWS_AS(IndexSubspace({4}, 4), InvariantError);
  IndexSubspace v({0, 2}, 4);
  CHECK(v.contains(2));
  CHECK(!v.contains(1));
  CHECK(v.position(2) == 1);
  CHECK(v.position(3) == IndexSubspace::npos);
  CHECK(v.complement().indices() == std::vector<std::size_t>{1, 3});
  CHECK(IndexSubspace::blocks(1, 2, 2, 8).indices() == std::vector<std::size_t>{2, 3, 4, 5});
}

TEST_CASE("projector is idempotent, Hermitian, and has trace |V|") {
  Rng rng(1);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 2 + t % 7;
    const auto part = random_partition(n, 1 + t % (n - 1), rng);
    const Matrix p = projector(part.center);
    CHECK(testing::max_abs(p * p - p) == 0.0);
    CHECK(testing::max_abs(p - p.adjoint()) == 0.0);
    CHECK(std::abs(p.trace() - cplx(part.center.size())) < 1e-15);
  }
}

TEST_CASE("square root of 1 - a^dagger a") {
  Rng rng(2);
  for (int t = 0; t < 30; ++t) {
    const Matrix a = random_contraction(1 + t % 4, rng);
    const Matrix m = Matrix::Identity(a.cols(), a.cols()) - a.adjoint() * a;
    const Matrix r = hermitian_psd_sqrt(m);
    CHECK(testing::max_abs(r * r - m) < 1e-12);
    CHECK(testing::max_abs(r - r.adjoint()) == 0.0);
    Eigen::SelfAdjointEigenSolver<Matrix> es(r);
    CHECK(es.eigenvalues().minCoeff() >= -1e-14);
  }
  Matrix z = Matrix::Zero(2, 2);
  CHECK(testing::max_abs(hermitian_psd_sqrt(z)) == 0.0);
  Matrix neg = Matrix::Identity(2, 2);
  neg(1, 1) = -0.5;
  CHECK_THROWS_AS(hermitian_psd_sqrt(neg), InvariantError);
  Matrix nonherm = Matrix::Identity(2, 2);
  nonherm(0, 1) = 1.0;
  CHECK_THROWS_AS(hermitian_psd_sqrt(nonherm), InvariantError);
}

TEST_CASE("numerical rank") {
  CHECK(numerical_rank(Matrix::Zero(3, 3)) == 0);
  CHECK(numerical_rank(Matrix::Identity(4, 4)) == 4);
  Matrix m = Matrix::Zero(3, 3);
  m(0, 0) = 1.0;
  m(1, 1) = 1e-12;
  CHECK(numerical_rank(m) == 1);
  m(1, 1) = 1e-6;
  CHECK(numerical_rank(m) == 2);
  Matrix tiny = Matrix::Zero(2, 2);
  tiny(0, 0) = 1e-17;
  CHECK(numerical_rank(tiny, 1e-9, 1e-9) == 0);
}

TEST_CASE("unitarity residual") {
  Rng rng(3);
  const Matrix u = random_unitary(6, rng);
  const auto c = is_unitary(u);
  CHECK(c.ok);
  CHECK(c.residual < 1e-13);
  Matrix bad = u;
  bad(0, 0) += 1e-6;
  CHECK(!is_unitary(bad).ok);
  CHECK(!is_unitary(Matrix::Zero(2, 3)).ok);
}

TEST_CASE("embedding and restriction are inverse on the block") {
  Rng rng(4);
  const Matrix u = random_unitary(3, rng);
  IndexSubspace at({1, 3, 4}, 6);
  const Matrix e = embed(u, at);
  CHECK(testing::max_abs(restrict(e, at, at) - u) == 0.0);
  CHECK(e(0, 0) == cplx(1.0));
  CHECK(e(0, 1) == cplx(0.0));
  CHECK(is_unitary(e).ok);
}
