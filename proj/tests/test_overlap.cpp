#include <doctest.h>

#include "helpers.hpp"
#include "mopuc/overlap.hpp"
#include "mopuc/random.hpp"
#include "mopuc/reference_cases.hpp"

using namespace mopuc;
using testing::max_abs;

namespace {

IndexSubspace pick(const IndexSubspace& s, std::size_t count) {
  return IndexSubspace(std::vector<std::size_t>(s.indices().begin(), s.indices().begin() + count), s.ambient());
}

}  // namespace

TEST_CASE("partitions validate") {
  CHECK_NOTHROW(SubspacePartition(IndexSubspace({0}, 3), IndexSubspace({1}, 3), IndexSubspace({2}, 3)));
  CHECK_THROWS_AS(SubspacePartition(IndexSubspace({0}, 3), IndexSubspace({0}, 3), IndexSubspace({2}, 3)),
                  InvariantError);
  CHECK_THROWS_AS(SubspacePartition(IndexSubspace({0}, 3), IndexSubspace({1}, 3), IndexSubspace({}, 3)),
                  InvariantError);
}

TEST_CASE("random overlapping unitaries are recognized and refactored") {
  Rng rng(42);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 3 + rng() % 14;
    const std::size_t c = 1 + rng() % std::min<std::size_t>(4, n - 1);
    const auto r = random_overlapping_unitary(n, c, rng);
    const auto verdict = check_overlap(r.u, r.factors.partition);
    CHECK(verdict.overlapping);
    CHECK(verdict.coupling_rank == c);
    const auto f = construct_overlap(r.u, r.factors.partition);
    CHECK(max_abs(f.product() - r.u) < 1e-12);
    CHECK(is_unitary(f.u_lc).ok);
    CHECK(is_unitary(f.u_cr).ok);
    const Matrix uc = verify_gauge(f, r.factors);
    CHECK(is_unitary(uc).ok);
  }
}

TEST_CASE("generic unitaries have no overlap") {
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix u = random_unitary(8, rng);
    const auto part = SubspacePartition(IndexSubspace({0, 1, 2}, 8), IndexSubspace({3, 4}, 8),
                                        IndexSubspace({5, 6, 7}, 8));
    const auto v = check_overlap(u, part);
    CHECK_FALSE(v.overlapping);
    CHECK(v.leak_norm > 1e-3);
    CHECK_THROWS_AS(construct_overlap(u, part), InvariantError);
  }
  // Perturbing a factorized unitary breaks the factorization.
  const auto r = random_overlapping_unitary(9, 2, rng);
  if (r.factors.partition.left.size() && r.factors.partition.right.size()) {
    const Matrix bumped = nearest_unitary(r.u + 1e-4 * random_gaussian(9, 9, rng));
    CHECK_FALSE(check_overlap(bumped, r.factors.partition).overlapping);
  }
}

TEST_CASE("center rotations move along the gauge orbit") {
  Rng rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const auto r = random_overlapping_unitary(10, 3, rng);
    const Matrix rot = random_unitary(3, rng);
    const auto a = construct_overlap(r.u, r.factors.partition);
    const auto b = construct_overlap(r.u, r.factors.partition, rot);
    CHECK(max_abs(b.product() - r.u) < 1e-12);
    const Matrix uc = verify_gauge(a, b);
    CHECK(max_abs(uc - rot.adjoint()) < 1e-10);
  }
  const auto r = random_overlapping_unitary(6, 2, rng);
  CHECK_THROWS_AS(construct_overlap(r.u, r.factors.partition, Matrix::Identity(3, 3)), InvariantError);
}

TEST_CASE("worked example factors are gauge equivalent to constructed ones") {
  for (const auto& f : {cases::grover_six_factors(), cases::grover_five_factors(), cases::split_walk_factors(),
                        cases::split_walk_second_factors()}) {
    const Matrix u = f.product();
    CHECK(check_overlap(u, f.partition).overlapping);
    const auto g = construct_overlap(u, f.partition);
    CHECK(is_unitary(verify_gauge(g, f)).ok);
  }
  CHECK(max_abs(cases::grover_six_factors().product() - cases::grover_six()) < 1e-14);
  CHECK(max_abs(cases::grover_five_factors().product() - cases::grover_five()) < 1e-14);
  CHECK(max_abs(cases::split_walk_second_factors().product() - cases::split_walk()) < 1e-12);
}

TEST_CASE("factorized Schur functions") {
  Rng rng(19);
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const auto r = random_overlapping_unitary(4 + rng() % 9, 1 + rng() % 3, rng);
    const auto& part = r.factors.partition;
    const auto vl = pick(part.left, std::min<std::size_t>(part.left.size(), rng() % 3));
    const auto vr = pick(part.right, std::min<std::size_t>(part.right.size(), rng() % 3));
    const auto check = abstract_khrushchev_check(r.u, construct_overlap(r.u, part), vl, vr, 12);
    CHECK(check.pass);
    CHECK(check.residual < 1e-8);
    ++checked;
  }
  CHECK(checked == 40);
  const auto r = random_overlapping_unitary(7, 2, rng);
  const auto& part = r.factors.partition;
  if (part.right.size())
    CHECK_THROWS_AS(abstract_khrushchev_check(r.u, r.factors, pick(part.right, 1), IndexSubspace({}, 7), 4),
                    InvariantError);
}

TEST_CASE("embedding series") {
  const auto s = MatrixSeries::scalar({0.5, 0.25});
  const auto e = embed_series(s, IndexSubspace({3}, 6), IndexSubspace({1, 3}, 6));
  CHECK(e.dim() == 2);
  CHECK(e[0](0, 0) == cplx(1.0));
  CHECK(e[0](1, 1) == cplx(0.5));
  CHECK(e[1](1, 1) == cplx(0.25));
  CHECK(e[1](0, 0) == cplx(0.0));
}
