#include "mopuc/khrushchev.hpp"

#include <cmath>

#include "mopuc/pathcount.hpp"

namespace mopuc {

namespace {

constexpr std::size_t synthesis_margin = 2;
constexpr double oracle_tolerance = 1e-10;
constexpr std::size_t oracle_max_length = 6;

MatrixSeries identity_blocks(std::size_t blocks, std::size_t d, std::size_t order) {
  return MatrixSeries::identity(blocks * d, order);
}

Matrix truncation_matrix(const SchurParameterSequence& p, Family family, std::size_t j, std::size_t k) {
  BlockOperatorSpec spec{p, family, k + 1};
  return unitary_truncation(spec, j, k);
}

VerificationReport base_report(const std::string& theorem, const SchurParameterSequence& p, Family family,
                               std::optional<std::size_t> j, std::optional<std::size_t> k, const VerifyOptions& opt) {
  VerificationReport r;
  r.theorem = theorem;
  r.family = family_name(family);
  r.d = p.dim();
  r.j = j;
  r.k = k;
  r.order = opt.order;
  r.tolerance = opt.tolerance;
  return r;
}

// Operator-side f_V for blocks j..k plus the optional path-enumeration check.
MatrixSeries operator_route(const SchurParameterSequence& p, Family family, std::size_t j, std::size_t k,
                            const VerifyOptions& opt, VerificationReport& r) {
  const auto spec = verification_window(p, family, k, opt.order);
  const auto op = build_operator(spec);
  const auto v = IndexSubspace::blocks(j, k, p.dim(), op.matrix.rows());
  auto sos = schur_of_subspace(op, v, opt.order);
  r.exact = sos.exact;
  r.operator_route = "return amplitudes of " + family_name(family) + " window with " +
                     std::to_string(spec.n_blocks) + " blocks" + (op.padded ? " (padded)" : " (finite)");
  if (opt.oracle) {
    const std::size_t n = std::min(opt.order + 1, oracle_max_length);
    const auto direct = first_return_amplitudes(op, v, n).a;
    const auto paths = oracle_first_return(op.matrix, v, n);
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, (direct[i] - paths[i]).cwiseAbs().maxCoeff());
    r.oracle_residual = worst;
  }
  return std::move(sos.f);
}

void finish(VerificationReport& r, const MatrixSeries& formula, const MatrixSeries& op) {
  r.residual = max_coefficient_difference(formula, op);
  r.pass = r.exact && r.residual <= r.tolerance && (!r.oracle_residual || *r.oracle_residual <= oracle_tolerance);
  if (!r.exact) r.notes.push_back("operator window too small for edge-independent coefficients");
  if (r.oracle_residual && *r.oracle_residual > oracle_tolerance)
    r.notes.push_back("path enumeration disagrees with operator amplitudes");
}

void require_scalar(const SchurParameterSequence& p) {
  if (p.dim() != 1) throw InvariantError("superposition formulas are scalar (d = 1)");
}

void require_unit(cplx beta, cplx gamma) {
  if (std::abs(std::norm(beta) + std::norm(gamma) - 1.0) > 1e-10)
    throw InvariantError("superposition coefficients must satisfy |beta|^2 + |gamma|^2 = 1");
}

}  // namespace

MatrixSeries iterate_series(const SchurParameterSequence& p, std::size_t j, std::size_t order) {
  if (!p.terminated() && p.size() < j + order + 1)
    throw InvariantError("insufficient parameters: f_" + std::to_string(j) + " to order " + std::to_string(order) +
                         " needs " + std::to_string(j + order + 1));
  return synthesize(iterate(p, j), order + synthesis_margin).truncated(order).mark_schur();
}

MatrixSeries inverse_iterate_series(const SchurParameterSequence& p, std::size_t j, std::size_t order) {
  return synthesize(inverse_iterate(p, j), order + synthesis_margin).truncated(order).mark_schur();
}

BlockOperatorSpec verification_window(const SchurParameterSequence& p, Family family, std::size_t last_block,
                                      std::size_t order) {
  if (p.terminated()) {
    if (last_block > p.size()) throw InvariantError("block index beyond the finite operator");
    return BlockOperatorSpec::finite(p, family);
  }
  if (!is_cmv(family)) throw InvariantError("Hessenberg operators need a terminal parameter");
  const std::size_t n = required_blocks(last_block, order + 1);
  if (p.size() + 1 < n)
    throw InvariantError("insufficient parameters: window needs " + std::to_string(n - 1) + ", have " +
                         std::to_string(p.size()));
  return BlockOperatorSpec::padded(p, family, n);
}

MatrixSeries site_formula(const SchurParameterSequence& p, Family family, std::size_t j, std::size_t order) {
  if (!is_cmv(family)) throw InvariantError("site formula is stated for CMV families");
  const MatrixSeries f = iterate_series(p, j, order), b = inverse_iterate_series(p, j, order);
  const bool b_first = (j % 2 == 0) == (family == Family::cmv);
  MatrixSeries out = b_first ? b * f : f * b;
  return out.mark_schur();
}

MatrixSeries substitute_into_truncation(const SchurParameterSequence& p, Family family, std::size_t j,
                                        std::size_t k, std::size_t order) {
  if (j >= k) throw InvariantError("range formula needs j < k");
  const std::size_t d = p.dim(), m = k - j;
  const MatrixSeries f = iterate_series(p, k, order), b = inverse_iterate_series(p, j, order);
  const MatrixSeries t = MatrixSeries::constant(truncation_matrix(p, family, j, k).adjoint(), order);
  const MatrixSeries ones = identity_blocks(m, d, order);
  MatrixSeries out;
  if (family == Family::hessenberg) {
    out = block_diag({ones, f}) * t * block_diag({b, ones});
  } else if (family == Family::hessenberg_hat) {
    out = block_diag({b, ones}) * t * block_diag({ones, f});
  } else {
    bool even_j = j % 2 == 0, even_k = k % 2 == 0;
    if (family == Family::cmv_hat) {
      even_j = !even_j;
      even_k = !even_k;
    }
    std::vector<MatrixSeries> mixed{b};
    if (m > 1) mixed.push_back(identity_blocks(m - 1, d, order));
    mixed.push_back(f);
    if (even_j && even_k) out = block_diag({b, ones}) * t * block_diag({ones, f});
    else if (!even_j && !even_k) out = block_diag({ones, f}) * t * block_diag({b, ones});
    else if (even_j) out = block_diag(mixed) * t;
    else out = t * block_diag(mixed);
  }
  return out.mark_schur();
}

VerificationReport verify_site_formula(const SchurParameterSequence& p, Family family, std::size_t j,
                                       const VerifyOptions& opt) {
  auto r = base_report("site", p, family, j, std::nullopt, opt);
  const MatrixSeries formula = site_formula(p, family, j, opt.order);
  const bool b_first = (j % 2 == 0) == (family == Family::cmv);
  r.formula_route = b_first ? "b_j f_j" : "f_j b_j";
  finish(r, formula, operator_route(p, family, j, j, opt, r));
  return r;
}

VerificationReport verify_range_formula(const SchurParameterSequence& p, Family family, std::size_t j, std::size_t k,
                                        const VerifyOptions& opt) {
  if (!is_cmv(family)) throw InvariantError("range formula check uses a CMV family");
  auto r = base_report("range", p, family, j, k, opt);
  r.formula_route = "iterates substituted into the unitary truncation";
  finish(r, substitute_into_truncation(p, family, j, k, opt.order), operator_route(p, family, j, k, opt, r));
  return r;
}

VerificationReport verify_hessenberg_formula(const SchurParameterSequence& p, Family family, std::size_t j,
                                             std::size_t k, const VerifyOptions& opt) {
  if (is_cmv(family)) throw InvariantError("Hessenberg check uses family H or Hhat");
  if (!p.terminated()) throw InvariantError("Hessenberg operators need a terminal parameter");
  auto r = base_report("hessenberg", p, family, j, k, opt);
  r.formula_route = "iterates substituted into the Hessenberg truncation";
  finish(r, substitute_into_truncation(p, family, j, k, opt.order), operator_route(p, family, j, k, opt, r));
  const auto h = build_hessenberg(BlockOperatorSpec::finite(p, family));
  const auto unit = is_unitary(h.matrix);
  if (!unit.ok) {
    r.pass = false;
    r.notes.push_back("Hessenberg matrix unitarity residual " + std::to_string(unit.residual));
  }
  return r;
}

MatrixSeries compress_to_vector(const MatrixSeries& f_v, const Vector& psi) {
  if (static_cast<std::size_t>(psi.size()) != f_v.dim()) throw InvariantError("vector does not match the subspace");
  if (std::abs(psi.norm() - 1.0) > 1e-10) throw InvariantError("compression vector must be a unit vector");
  const MatrixSeries big_f = schur_to_caratheodory(f_v);
  std::vector<cplx> c;
  for (std::size_t n = 0; n <= big_f.order(); ++n) c.push_back(psi.dot(big_f[n] * psi));
  MatrixSeries out = caratheodory_to_schur(MatrixSeries::scalar(c));
  return out.mark_schur();
}

std::string route_name(SuperpositionRoute r) {
  switch (r) {
    case SuperpositionRoute::closed_form: return "closed-form";
    case SuperpositionRoute::binary_transform: return "binary-transform";
    case SuperpositionRoute::operator_compress: return "operator-compress";
  }
  return "?";
}

MatrixSeries scalar_superposition_schur(const SchurParameterSequence& p, std::size_t j, cplx beta, cplx gamma,
                                        std::size_t order, SuperpositionRoute route) {
  require_scalar(p);
  require_unit(beta, gamma);
  if (j >= p.size()) throw InvariantError("superposition needs alpha_j");
  if (route == SuperpositionRoute::operator_compress) {
    const auto spec = verification_window(p, Family::cmv, j + 1, order);
    const auto op = build_operator(spec);
    const auto sos = schur_of_subspace(op, IndexSubspace::blocks(j, j + 1, 1, op.matrix.rows()), order);
    if (!sos.exact) throw ConsistencyError("operator window too small");
    Vector psi(2);
    psi << beta, gamma;
    return compress_to_vector(sos.f, psi);
  }
  if (j % 2 == 1) {
    beta = std::conj(beta);
    gamma = std::conj(gamma);
  }
  const cplx a = p[j](0, 0);
  const double rho = std::sqrt(1.0 - std::norm(a));
  const MatrixSeries b = inverse_iterate_series(p, j, order), f = iterate_series(p, j + 1, order);
  const cplx bj = beta * a + gamma * rho, gj = beta * rho - gamma * std::conj(a);
  if (route == SuperpositionRoute::binary_transform) return binary_transform(std::conj(beta) * bj, std::conj(gamma) * gj, b, f);
  const MatrixSeries num = times_z(b * f).truncated(order) + (std::conj(beta) * bj) * b + (std::conj(gamma) * gj) * f;
  const MatrixSeries den =
      times_z((gamma * (std::conj(beta) * rho - std::conj(gamma) * a)) * b +
              (beta * (std::conj(beta) * std::conj(a) + std::conj(gamma) * rho)) * f)
          .truncated(order) +
      Matrix::Identity(1, 1);
  MatrixSeries out = num * inverse(den);
  return out.mark_schur();
}

MatrixSeries hessenberg_superposition(const SchurParameterSequence& p, std::size_t j, cplx beta, cplx gamma,
                                      std::size_t order) {
  require_scalar(p);
  require_unit(beta, gamma);
  if (j >= p.size()) throw InvariantError("superposition needs alpha_j");
  const cplx a = p[j](0, 0), bb = std::conj(beta), gg = std::conj(gamma);
  const double rho = std::sqrt(1.0 - std::norm(a));
  const MatrixSeries b = inverse_iterate_series(p, j, order), f = iterate_series(p, j + 1, order);
  const Matrix one = Matrix::Identity(1, 1);
  const MatrixSeries num = times_z(b * f).truncated(order) + bb * ((beta * a) * b + gamma * rho * one) +
                           gg * ((beta * rho) * b - gamma * std::conj(a) * one) * f;
  const MatrixSeries den = times_z(gamma * ((bb * rho) * one - (gg * a) * b) +
                                   beta * ((bb * std::conj(a)) * one + (gg * rho) * b) * f)
                               .truncated(order) +
                           one;
  MatrixSeries out = num * inverse(den);
  return out.mark_schur();
}

MatrixSeries hessenberg_superposition_operator(const SchurParameterSequence& p, std::size_t j, cplx beta, cplx gamma,
                                               std::size_t order) {
  require_scalar(p);
  require_unit(beta, gamma);
  if (!p.terminated()) throw InvariantError("Hessenberg operators need a terminal parameter");
  if (j + 1 > p.size()) throw InvariantError("superposition needs blocks j and j+1");
  const auto op = build_hessenberg(BlockOperatorSpec::finite(p, Family::hessenberg));
  const auto sos = schur_of_subspace(op, IndexSubspace::blocks(j, j + 1, 1, op.matrix.rows()), order);
  Vector psi(2);
  psi << beta, gamma;
  return compress_to_vector(sos.f, psi);
}

VerificationReport verify_superposition(const SchurParameterSequence& p, std::size_t j, cplx beta, cplx gamma,
                                        const VerifyOptions& opt) {
  auto r = base_report("superposition", p, Family::cmv, j, j + 1, opt);
  const auto closed = scalar_superposition_schur(p, j, beta, gamma, opt.order, SuperpositionRoute::closed_form);
  const auto binary = scalar_superposition_schur(p, j, beta, gamma, opt.order, SuperpositionRoute::binary_transform);
  const auto op = scalar_superposition_schur(p, j, beta, gamma, opt.order, SuperpositionRoute::operator_compress);
  r.formula_route = "closed-form and binary-transform";
  r.operator_route = "compressed CMV Schur function on blocks j..j+1";
  r.residual = std::max({max_coefficient_difference(closed, binary), max_coefficient_difference(closed, op),
                         max_coefficient_difference(binary, op)});
  r.pass = r.residual <= r.tolerance;
  return r;
}

VerificationReport verify_hessenberg_superposition(const SchurParameterSequence& p, std::size_t j, cplx beta,
                                                   cplx gamma, const VerifyOptions& opt) {
  auto r = base_report("hessenberg-superposition", p, Family::hessenberg, j, j + 1, opt);
  r.formula_route = "closed-form";
  r.operator_route = "compressed Hessenberg Schur function on blocks j..j+1";
  r.residual = max_coefficient_difference(hessenberg_superposition(p, j, beta, gamma, opt.order),
                                          hessenberg_superposition_operator(p, j, beta, gamma, opt.order));
  r.pass = r.residual <= r.tolerance;
  return r;
}

}  // namespace mopuc
