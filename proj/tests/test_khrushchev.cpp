#include <doctest.h>

#include "helpers.hpp"
#include "mopuc/khrushchev.hpp"
#include "mopuc/random.hpp"
#include "mopuc/reference_cases.hpp"

using namespace mopuc;
using testing::max_abs;

TEST_CASE("site formula for both CMV families") {
  for (Family f : {Family::cmv, Family::cmv_hat})
    for (std::size_t d = 1; d <= 3; ++d)
      for (std::uint64_t seed = 0; seed < 3; ++seed) {
        const auto p = random_parameters(d, 40, 100 * d + seed);
        for (std::size_t j = 0; j <= 5; ++j) {
          const auto r = verify_site_formula(p, f, j);
          CHECK(r.pass);
          CHECK(r.exact);
          CHECK(r.residual < 1e-8);
        }
      }
}

TEST_CASE("site formula on a finite operator") {
  const auto p = random_parameters(2, 6, 9, true);
  for (std::size_t j = 0; j <= 6; ++j) CHECK(verify_site_formula(p, Family::cmv, j).pass);
}

TEST_CASE("constant term of a range Schur function is the adjoint block") {
  for (Family f : {Family::cmv, Family::cmv_hat})
    for (std::size_t d = 1; d <= 2; ++d) {
      const auto p = random_parameters(d, 40, 7 + d);
      for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = j + 1; k < j + 3; ++k) {
          const auto spec = verification_window(p, f, k, 6);
          const Matrix block = submatrix_range(spec, j, k);
          CHECK(max_abs(substitute_into_truncation(p, f, j, k, 6)[0] - block.adjoint()) < 1e-12);
        }
    }
}

TEST_CASE("range formula in all parities") {
  for (Family f : {Family::cmv, Family::cmv_hat})
    for (std::size_t d = 1; d <= 2; ++d) {
      const auto p = random_parameters(d, 40, 50 + d);
      for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t k = j + 1; k <= j + 2; ++k) {
          const auto r = verify_range_formula(p, f, j, k);
          CHECK(r.pass);
          CHECK(r.residual < 1e-8);
        }
    }
  CHECK_THROWS_AS(verify_range_formula(random_parameters(1, 40, 1), Family::cmv, 2, 2), InvariantError);
}

TEST_CASE("Hessenberg range formula") {
  for (Family f : {Family::hessenberg, Family::hessenberg_hat})
    for (std::size_t d = 1; d <= 2; ++d) {
      const auto p = random_parameters(d, 5, 60 + d, true);
      for (std::size_t j = 0; j < 5; ++j)
        for (std::size_t k = j + 1; k <= 5; ++k) CHECK(verify_hessenberg_formula(p, f, j, k).pass);
    }
  CHECK_THROWS_AS(verify_hessenberg_formula(random_parameters(1, 5, 1), Family::hessenberg, 0, 1), InvariantError);
}

TEST_CASE("path enumeration oracle agrees with the operator") {
  VerifyOptions opt;
  opt.oracle = true;
  const auto r = verify_site_formula(random_parameters(1, 40, 3), Family::cmv, 2, opt);
  REQUIRE(r.oracle_residual.has_value());
  CHECK(*r.oracle_residual < 1e-10);
  CHECK(r.pass);
}

TEST_CASE("insufficient parameters are reported") {
  const auto p = random_parameters(1, 10, 1);
  CHECK_THROWS_AS(iterate_series(p, 5, 12), InvariantError);
  CHECK_THROWS_AS(verify_site_formula(p, Family::cmv, 3), InvariantError);
  CHECK_THROWS_AS(site_formula(p, Family::hessenberg, 0, 4), InvariantError);
}

TEST_CASE("compressing to a coordinate vector gives that coordinate's Schur function") {
  Rng rng(13);
  const Matrix u = random_unitary(6, rng);
  const auto f2 = schur_of_subspace(u, IndexSubspace({1, 3}, 6), 10).f;
  Vector e(2);
  e << 0.0, 1.0;
  const auto direct = schur_of_subspace(u, IndexSubspace({3}, 6), 10).f;
  CHECK(max_coefficient_difference(compress_to_vector(f2, e).truncated(9), direct.truncated(9)) < 1e-10);
  CHECK_THROWS_AS(compress_to_vector(f2, Vector::Ones(2)), InvariantError);
}

TEST_CASE("superposition routes agree") {
  Rng rng(17);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto p = random_parameters(1, 48, 900 + seed);
    for (std::size_t j = 0; j < 4; ++j) {
      const double t = unif(rng) * 1.5, ph = unif(rng) * 6.0;
      const cplx beta = std::cos(t), gamma = std::polar(std::sin(t), ph);
      const auto r = verify_superposition(p, j, beta, gamma);
      CHECK(r.pass);
      CHECK(r.residual < 1e-8);
    }
  }
  CHECK_THROWS_AS(verify_superposition(random_parameters(1, 48, 1), 0, 0.5, 0.5), InvariantError);
  CHECK(cases::verify("superposition-extremes", 20, 1e-8).pass);
}

TEST_CASE("Hessenberg superposition closed form matches the operator") {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const auto p = random_parameters(1, 6, 40 + seed, true);
    for (std::size_t j = 0; j < 5; ++j) {
      const cplx beta(0.6, 0.0), gamma(0.0, 0.8);
      const auto a = hessenberg_superposition(p, j, beta, gamma, 10);
      const auto b = hessenberg_superposition_operator(p, j, beta, gamma, 10);
      CHECK(max_coefficient_difference(a, b) < 1e-8);
      CHECK(verify_hessenberg_superposition(p, j, beta, gamma).pass);
    }
  }
}
