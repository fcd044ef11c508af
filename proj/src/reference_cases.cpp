#include "mopuc/reference_cases.hpp"

#include <cmath>
#include <functional>
#include <map>

#include "mopuc/khrushchev.hpp"
#include "mopuc/random.hpp"
#include "mopuc/spectral.hpp"

namespace mopuc::cases {

namespace {

const double s2 = std::sqrt(2.0);

Matrix rows(std::initializer_list<std::initializer_list<double>> r) {
  Matrix m(r.size(), r.begin()->size());
  Eigen::Index i = 0;
  for (const auto& row : r) {
    Eigen::Index j = 0;
    for (double v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

IndexSubspace ids(std::vector<std::size_t> v, std::size_t n) { return IndexSubspace(std::move(v), n); }

using Poly = std::vector<cplx>;

// Matrix series whose (r, c) entry is num[r][c] / den.
MatrixSeries rational_matrix(const std::vector<std::vector<Poly>>& num, const Poly& den, std::size_t order) {
  const std::size_t d = num.size();
  MatrixSeries out(d, order);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) {
      const auto e = MatrixSeries::rational(num[r][c], den, order);
      for (std::size_t n = 0; n <= order; ++n) out[n](r, c) = e[n](0, 0);
    }
  return out.mark_schur();
}

MatrixSeries coin_pair_factor(std::size_t order) {
  return rational_matrix({{{-0.5, 0.5}, {0.5, 0.5}}, {{0.5, 0.5}, {-0.5, 0.5}}}, {1.0}, order);
}

MatrixSeries direct(const Matrix& u, std::size_t order, const std::vector<std::size_t>& v) {
  return schur_of_subspace(u, IndexSubspace(v, u.rows()), order).f;
}

struct Check {
  double residual = 0.0;
  std::vector<std::string> notes;
  void add(const std::string& what, double r) {
    residual = std::max(residual, r);
    notes.push_back(what + ": " + std::to_string(r));
  }
};

// Residual of the factored Schur function against the direct one for V = v_left + center + v_right.
double factored_residual(const Matrix& u, const OverlapFactorization& f, std::vector<std::size_t> v_left,
                         std::vector<std::size_t> v_right, std::size_t order) {
  const std::size_t n = u.rows();
  return abstract_khrushchev_check(u, f, ids(std::move(v_left), n), ids(std::move(v_right), n), order, 1.0).residual;
}

Check grover_six_site2_check(std::size_t order) {
  Check c;
  const Matrix u = grover_six();
  const auto fac = grover_six_factors();
  c.add("product of displayed factors", (fac.product() - u).norm());
  c.add("direct Schur function vs closed form",
        max_coefficient_difference(direct(u, order, {2}), grover_six_site2(order)));
  c.add("factored Schur function", factored_residual(u, fac, {}, {}, order));
  const auto built = construct_overlap(u, fac.partition);
  verify_gauge(fac, built);
  c.add("constructed factors reproduce U", (built.product() - u).norm());
  return c;
}

Check grover_six_sites23_check(std::size_t order) {
  Check c;
  const Matrix u = grover_six();
  const auto fac = grover_six_factors();
  c.add("direct Schur function vs closed form",
        max_coefficient_difference(direct(u, order, {2, 3}), grover_six_sites23(order)));
  c.add("factored Schur function", factored_residual(u, fac, {}, {3}, order));
  return c;
}

Check grover_five_center_check(std::size_t order) {
  Check c;
  const Matrix u = grover_five();
  const auto fac = grover_five_factors();
  c.add("product of displayed factors", (fac.product() - u).norm());
  c.add("direct Schur function vs closed form",
        max_coefficient_difference(direct(u, order, {1, 2}), grover_five_center(order)));
  c.add("factored Schur function", factored_residual(u, fac, {}, {}, order));
  return c;
}

Check split_walk_site2_check(std::size_t order) {
  Check c;
  const Matrix u = split_walk();
  const auto fac = split_walk_factors();
  c.add("product of displayed factors", (fac.product() - u).norm());
  const auto fl = schur_of_subspace(fac.u_lc, ids({2}, 3), order).f;
  const auto fr = schur_of_subspace(fac.u_cr, ids({0}, 4), order).f;
  c.add("left factor Schur function vs closed form", max_coefficient_difference(fl, split_walk_left(order)));
  c.add("right factor Schur function vs closed form", max_coefficient_difference(fr, split_walk_right(order)));
  c.add("direct vs right * left", max_coefficient_difference(direct(u, order, {2}), fr * fl));
  return c;
}

Check split_walk_sites24_check(std::size_t order) {
  Check c;
  const Matrix u = split_walk();
  const auto fac = split_walk_factors();
  const auto fr = schur_of_subspace(fac.u_cr, ids({0, 2}, 4), order).f;
  c.add("right factor Schur function vs closed form", max_coefficient_difference(fr, split_walk_right_sites24(order)));
  const auto fl = block_diag({split_walk_left(order), MatrixSeries::identity(1, order)});
  c.add("direct vs right * (left + 1)", max_coefficient_difference(direct(u, order, {2, 4}), fr * fl));
  return c;
}

Check split_walk_second_check(std::size_t order) {
  Check c;
  const Matrix u = split_walk();
  const auto fac = split_walk_second_factors();
  c.add("product of displayed factors", (fac.product() - u).norm());
  const auto verdict = check_overlap(u, fac.partition);
  if (!verdict.overlapping) c.add("overlap characterization failed", 1.0);
  c.add("factored Schur function at the center", factored_residual(u, fac, {}, {}, order));
  c.add("factored Schur function with a left site", factored_residual(u, fac, {4}, {}, order));
  return c;
}

Check hadamard_check(std::size_t order) {
  Check c;
  c.add("direct Schur function vs closed form",
        max_coefficient_difference(direct(hadamard(), order, {0}), hadamard_schur(order)));
  return c;
}

Check superposition_extremes_check(std::size_t order) {
  Check c;
  const auto p = random_parameters(1, 3 * order + 12, 2718);
  for (std::size_t j = 0; j < 4; ++j) {
    const auto left = site_formula(p, Family::cmv, j, order);
    const auto right = iterate_series(p, j + 1, order) * inverse_iterate_series(p, j + 1, order);
    for (auto route : {SuperpositionRoute::closed_form, SuperpositionRoute::binary_transform,
                       SuperpositionRoute::operator_compress}) {
      c.add("j=" + std::to_string(j) + " beta=1 " + route_name(route),
            max_coefficient_difference(scalar_superposition_schur(p, j, 1.0, 0.0, order, route), left));
      c.add("j=" + std::to_string(j) + " gamma=1 " + route_name(route),
            max_coefficient_difference(scalar_superposition_schur(p, j, 0.0, 1.0, order, route), right));
    }
  }
  return c;
}

const std::map<std::string, std::function<Check(std::size_t)>>& registry() {
  static const std::map<std::string, std::function<Check(std::size_t)>> r{
      {"hadamard-site0", hadamard_check},
      {"grover-six-site2", grover_six_site2_check},
      {"grover-six-sites23", grover_six_sites23_check},
      {"grover-five-center", grover_five_center_check},
      {"split-walk-site2", split_walk_site2_check},
      {"split-walk-sites24", split_walk_sites24_check},
      {"split-walk-second-overlap", split_walk_second_check},
      {"superposition-extremes", superposition_extremes_check},
  };
  return r;
}

}  // namespace

Matrix grover_coin3() { return rows({{-1, 2, 2}, {2, -1, 2}, {2, 2, -1}}) / 3.0; }

Matrix grover_coin4() { return rows({{-1, 1, 1, 1}, {1, -1, 1, 1}, {1, 1, -1, 1}, {1, 1, 1, -1}}) / 2.0; }

Matrix grover_six() {
  return rows({{-1. / 3, 2. / 3, -1. / 3, 1. / 3, 1. / 3, 1. / 3},
               {2. / 3, -1. / 3, -1. / 3, 1. / 3, 1. / 3, 1. / 3},
               {2. / 3, 2. / 3, 1. / 6, -1. / 6, -1. / 6, -1. / 6},
               {0, 0, 0.5, -0.5, 0.5, 0.5},
               {0, 0, 0.5, 0.5, -0.5, 0.5},
               {0, 0, 0.5, 0.5, 0.5, -0.5}});
}

Matrix grover_five() {
  return rows({{-1. / 3, 0, 0, 2. / 3, 2. / 3},
               {2. / 3, 0.5, -0.5, 1. / 6, 1. / 6},
               {2. / 3, -0.5, 0.5, 1. / 6, 1. / 6},
               {0, 0.5, 0.5, -0.5, 0.5},
               {0, 0.5, 0.5, 0.5, -0.5}});
}

OverlapFactorization grover_six_factors() {
  return {SubspacePartition(ids({0, 1}, 6), ids({2}, 6), ids({3, 4, 5}, 6)), grover_coin3(), grover_coin4()};
}

OverlapFactorization grover_five_factors() {
  return {SubspacePartition(ids({0}, 5), ids({1, 2}, 5), ids({3, 4}, 5)), grover_coin3(), grover_coin4()};
}

Matrix split_walk() {
  const double a = 0.5, b = 1 / s2, c = 0.5, d = 1 / s2;
  return rows({{a, -a, b * d, b * d, 0, 0},
               {b, b, 0, 0, 0, 0},
               {-a, a, b * d, b * d, 0, 0},
               {0, 0, c, -c, c, c},
               {0, 0, 0, 0, d, -d},
               {0, 0, -c, c, c, c}});
}

OverlapFactorization split_walk_factors() {
  const double a = 0.5, b = 1 / s2, c = 0.5, d = 1 / s2;
  return {SubspacePartition(ids({0, 1}, 6), ids({2}, 6), ids({3, 4, 5}, 6)),
          rows({{a, -a, b}, {b, b, 0}, {-a, a, b}}),
          rows({{d, d, 0, 0}, {c, -c, c, c}, {0, 0, d, -d}, {-c, c, c, c}})};
}

OverlapFactorization split_walk_second_factors() {
  const double a = 0.5, b = 1 / s2, c = 0.5, d = 1 / s2;
  return {SubspacePartition(ids({4, 5}, 6), ids({3}, 6), ids({0, 1, 2}, 6)),
          rows({{d, c, c}, {0, d, -d}, {-d, c, c}}),
          rows({{a, -a, a, a}, {b, b, 0, 0}, {-a, a, a, a}, {0, 0, b, -b}})};
}

Matrix hadamard() { return rows({{1, 1}, {1, -1}}) / s2; }

MatrixSeries hadamard_schur(std::size_t order) {
  return MatrixSeries::rational({1.0, s2}, {s2, 1.0}, order).mark_schur();
}

MatrixSeries grover_six_site2(std::size_t order) {
  return MatrixSeries::rational({1.0, -5.0, 6.0}, {6.0, -5.0, 1.0}, order).mark_schur();
}

MatrixSeries grover_six_sites23(std::size_t order) {
  const auto diag = rational_matrix({{{-1.0, 3.0}, {}}, {{}, {3.0, -1.0}}}, {3.0, -1.0}, order);
  return coin_pair_factor(order) * diag;
}

MatrixSeries grover_five_center(std::size_t order) {
  const auto second = rational_matrix({{{-1.0, 1.0}, {2.0, 2.0}}, {{2.0, 2.0}, {-1.0, 1.0}}}, {3.0, 1.0}, order);
  return coin_pair_factor(order) * second;
}

MatrixSeries split_walk_left(std::size_t order) {
  return MatrixSeries::rational({s2, -(1 + s2), 2.0}, {2.0, -(1 + s2), s2}, order).mark_schur();
}

MatrixSeries split_walk_right(std::size_t order) {
  const double t = 2 * s2;
  return MatrixSeries::rational({2.0, -(s2 - 1), -2.0, t}, {t, -2.0, -(s2 - 1), 2.0}, order).mark_schur();
}

MatrixSeries split_walk_right_sites24(std::size_t order) {
  return rational_matrix({{{-2.0, -1.0, 2.0}, {0.0, -1.0}}, {{0.0, -1.0}, {-2.0, 1.0, 2.0}}}, {-2 * s2, 0.0, s2},
                         order);
}

const std::vector<std::string>& names() {
  static const std::vector<std::string> n = [] {
    std::vector<std::string> out;
    for (const auto& [k, v] : registry()) out.push_back(k);
    return out;
  }();
  return n;
}

VerificationReport verify(const std::string& name, std::size_t order, double tolerance) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw InvariantError("unknown reference case '" + name + "'");
  const Check c = it->second(order);
  VerificationReport r;
  r.theorem = "example";
  r.family = name;
  r.order = order;
  r.tolerance = tolerance;
  r.residual = c.residual;
  r.pass = c.residual <= tolerance;
  r.formula_route = "closed forms and factor products";
  r.operator_route = "return amplitudes of the explicit unitary";
  r.notes = c.notes;
  return r;
}

}  // namespace mopuc::cases
