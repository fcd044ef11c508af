#include <doctest.h>

#include "helpers.hpp"
#include "mopuc/cmv.hpp"
#include "mopuc/overlap.hpp"
#include "mopuc/random.hpp"
#include "mopuc/spectral.hpp"

using namespace mopuc;
using testing::max_abs;

namespace {

const Family all_families[] = {Family::cmv, Family::cmv_hat, Family::hessenberg, Family::hessenberg_hat};

}  // namespace

TEST_CASE("family names round trip") {
  for (Family f : all_families) CHECK(parse_family(family_name(f)) == f);
  CHECK_THROWS_AS(parse_family("X"), InvariantError);
}

TEST_CASE("theta is unitary") {
  Rng rng(1);
  for (std::size_t d = 1; d <= 3; ++d) CHECK(is_unitary(theta(random_contraction(d, rng))).ok);
}

TEST_CASE("operators are unitary") {
  for (Family f : all_families)
    for (std::size_t d = 1; d <= 3; ++d)
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto p = random_parameters(d, 6, 10 * d + seed, true);
        const auto op = build_operator(BlockOperatorSpec::finite(p, f));
        CHECK(op.matrix.rows() == static_cast<Eigen::Index>(7 * d));
        CHECK(is_unitary(op.matrix).ok);
      }
  const auto p = random_parameters(2, 9, 4);
  const auto op = build_cmv(BlockOperatorSpec::padded(p, Family::cmv, 6));
  CHECK(op.padded);
  CHECK(is_unitary(op.matrix).ok);
  CHECK_THROWS_AS(build_hessenberg(BlockOperatorSpec::padded(p, Family::hessenberg, 6)), InvariantError);
  CHECK_THROWS_AS(build_cmv(BlockOperatorSpec::padded(p, Family::cmv, 12)), InvariantError);
}

TEST_CASE("scalar CMV entries and five-diagonal shape") {
  const auto p = random_parameters(1, 8, 3, true);
  const Matrix c = build_cmv(BlockOperatorSpec::finite(p, Family::cmv)).matrix;
  auto a = [&](std::size_t i) { return p[i](0, 0); };
  auto rho = [&](std::size_t i) { return std::sqrt(1.0 - std::norm(a(i))); };
  CHECK(std::abs(c(0, 0) - std::conj(a(0))) < 1e-14);
  CHECK(std::abs(c(0, 1) - rho(0) * std::conj(a(1))) < 1e-14);
  CHECK(std::abs(c(0, 2) - rho(0) * rho(1)) < 1e-14);
  CHECK(std::abs(c(1, 0) - rho(0)) < 1e-14);
  CHECK(std::abs(c(1, 1) + a(0) * std::conj(a(1))) < 1e-14);
  CHECK(std::abs(c(2, 1) - rho(1) * std::conj(a(2))) < 1e-14);
  for (Eigen::Index i = 0; i < c.rows(); ++i)
    for (Eigen::Index k = 0; k < c.cols(); ++k)
      if (std::abs(i - k) > 2) CHECK(std::abs(c(i, k)) == 0.0);
}

TEST_CASE("hat operators are transposes for transposed parameters") {
  for (std::size_t d = 1; d <= 3; ++d) {
    const auto p = random_parameters(d, 5, 70 + d, true);
    const auto t = p.transposed();
    const Matrix c = build_cmv(BlockOperatorSpec::finite(p, Family::cmv)).matrix;
    const Matrix ch = build_cmv(BlockOperatorSpec::finite(t, Family::cmv_hat)).matrix;
    CHECK(max_abs(ch - c.transpose()) < 1e-14);
    const Matrix h = build_hessenberg(BlockOperatorSpec::finite(p, Family::hessenberg)).matrix;
    const Matrix hh = build_hessenberg(BlockOperatorSpec::finite(t, Family::hessenberg_hat)).matrix;
    CHECK(max_abs(hh - h.transpose()) < 1e-14);
  }
}

TEST_CASE("Hessenberg shape and entries") {
  const auto p = random_parameters(1, 2, 12, true);
  const Matrix h = build_hessenberg(BlockOperatorSpec::finite(p, Family::hessenberg)).matrix;
  const cplx a0 = p[0](0, 0), a1 = p[1](0, 0), g = (*p.terminal())(0, 0);
  const double r0 = std::sqrt(1 - std::norm(a0)), r1 = std::sqrt(1 - std::norm(a1));
  Matrix expected(3, 3);
  expected << std::conj(a0), r0 * std::conj(a1), r0 * r1 * std::conj(g),  //
      r0, -a0 * std::conj(a1), -a0 * r1 * std::conj(g),                  //
      0.0, r1, -a1 * std::conj(g);
  CHECK(max_abs(h - expected) < 1e-14);
  const auto q = random_parameters(2, 5, 13, true);
  const Matrix hq = build_hessenberg(BlockOperatorSpec::finite(q, Family::hessenberg)).matrix;
  for (std::size_t bi = 0; bi < 6; ++bi)
    for (std::size_t bk = 0; bk + 1 < bi; ++bk) CHECK(max_abs(hq.block(2 * bi, 2 * bk, 2, 2)) == 0.0);
}

TEST_CASE("first block realizes the Schur function of the parameters") {
  for (Family f : all_families)
    for (std::size_t d = 1; d <= 2; ++d) {
      const auto p = random_parameters(d, 5, 200 + d, true);
      const auto op = build_operator(BlockOperatorSpec::finite(p, f));
      const auto s = schur_of_subspace(op, IndexSubspace::blocks(0, 0, d, op.matrix.rows()), 12);
      const auto expected = f == Family::cmv_hat || f == Family::hessenberg_hat
                                ? synthesize(p.transposed(), 12).transposed()
                                : synthesize(p, 12);
      CHECK(max_coefficient_difference(s.f, expected) < 1e-10);
    }
}

TEST_CASE("unitary truncation equals substitution of unimodular parameters") {
  for (Family f : all_families)
    for (std::size_t d = 1; d <= 2; ++d) {
      const auto p = random_parameters(d, 7, 300 + d, true);
      const auto spec = BlockOperatorSpec::finite(p, f);
      const Matrix id = Matrix::Identity(d, d);
      for (std::size_t j = 0; j < 5; ++j)
        for (std::size_t k = j + 1; k < 7; ++k) {
          std::vector<Matrix> a = p.alphas();
          if (j > 0) a[j - 1] = -id;
          a[k] = id;
          const Matrix full = is_cmv(f) ? finite_cmv(a, *p.terminal(), f == Family::cmv_hat)
                                        : finite_hessenberg(a, *p.terminal(), f == Family::hessenberg_hat);
          const Matrix block = full.block(j * d, j * d, (k - j + 1) * d, (k - j + 1) * d);
          const Matrix t = unitary_truncation(spec, j, k);
          CHECK(is_unitary(t).ok);
          CHECK(max_abs(t - block) < 1e-14);
        }
    }
}

TEST_CASE("standard overlaps factor the operator") {
  for (Family f : all_families)
    for (std::size_t d = 1; d <= 2; ++d) {
      const auto p = random_parameters(d, 6, 400 + d, true);
      const auto spec = BlockOperatorSpec::finite(p, f);
      const Matrix u = build_operator(spec).matrix;
      for (std::size_t j = 0; j <= 6; ++j) {
        const auto fac = standard_overlap(spec, j);
        CHECK(fac.partition.center.size() == d);
        CHECK(max_abs(fac.product() - u) < 1e-13);
        CHECK(check_overlap(u, fac.partition).overlapping);
      }
    }
  const auto p = random_parameters(2, 10, 9);
  const auto spec = BlockOperatorSpec::padded(p, Family::cmv_hat, 7);
  const Matrix u = build_operator(spec).matrix;
  for (std::size_t j = 0; j < 7; ++j) CHECK(max_abs(standard_overlap(spec, j).product() - u) < 1e-13);
}
