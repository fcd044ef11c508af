#include "mopuc/schur.hpp"

namespace mopuc {

SchurParameterSequence::SchurParameterSequence(std::size_t d, std::vector<Matrix> alphas,
                                               std::optional<Matrix> terminal)
    : d_(d), alphas_(std::move(alphas)), terminal_(std::move(terminal)) {
  if (d_ == 0) throw InvariantError("parameter dimension must be positive");
  for (std::size_t j = 0; j < alphas_.size(); ++j) {
    const auto& a = alphas_[j];
    if (static_cast<std::size_t>(a.rows()) != d_ || a.rows() != a.cols())
      throw InvariantError("parameter " + std::to_string(j) + " has wrong shape");
    const double n = operator_norm(a);
    if (n > 1.0 - tol::contraction_margin)
      throw InvariantError("parameter " + std::to_string(j) + " is not a strict contraction (norm " +
                           std::to_string(n) + ")");
  }
  if (terminal_) {
    if (static_cast<std::size_t>(terminal_->rows()) != d_ || terminal_->rows() != terminal_->cols())
      throw InvariantError("terminal parameter has wrong shape");
    if (!is_unitary(*terminal_).ok) throw InvariantError("terminal parameter is not unitary");
  }
}

SchurParameterSequence SchurParameterSequence::transposed() const {
  std::vector<Matrix> t;
  for (const auto& a : alphas_) t.push_back(a.transpose());
  std::optional<Matrix> term;
  if (terminal_) term = terminal_->transpose();
  return SchurParameterSequence(d_, std::move(t), std::move(term));
}

Matrix rho_left(const Matrix& alpha) {
  return hermitian_psd_sqrt(Matrix::Identity(alpha.cols(), alpha.cols()) - alpha.adjoint() * alpha);
}

Matrix rho_right(const Matrix& alpha) {
  return hermitian_psd_sqrt(Matrix::Identity(alpha.rows(), alpha.rows()) - alpha * alpha.adjoint());
}

SchurStep schur_step(const MatrixSeries& f) {
  const Matrix alpha = f[0];
  const double n = operator_norm(alpha);
  if (n > 1.0 + tol::terminal) throw InvariantError("non-contractive coefficient (norm " + std::to_string(n) + ")");
  if (n > 1.0 - tol::terminal) {
    if (!is_unitary(alpha, 1e-6).ok) throw InvariantError("boundary parameter is not unitary");
    return {nearest_unitary(alpha), std::nullopt};
  }
  if (f.order() == 0) throw InvariantError("series too short for another step");
  const std::size_t d = f.dim();
  const Matrix id = Matrix::Identity(d, d);
  MatrixSeries num = f - alpha;
  num[0].setZero();
  const MatrixSeries ratio = num * inverse(id - alpha.adjoint() * f);
  const Matrix rr_inv = rho_right(alpha).inverse();
  MatrixSeries next = rr_inv * divide_z(ratio) * rho_left(alpha);
  next.mark_schur(f.schur_flagged());
  return {alpha, std::move(next)};
}

SchurParameterSequence schur_forward(const MatrixSeries& f, std::size_t steps) {
  if (steps > f.order() + 1) throw InvariantError("more steps requested than the series order supports");
  std::vector<Matrix> alphas;
  MatrixSeries cur = f;
  for (std::size_t j = 0; j < steps; ++j) {
    const double n = operator_norm(cur[0]);
    if (n > 1.0 + tol::terminal) throw InvariantError("non-contractive coefficient (norm " + std::to_string(n) + ")");
    if (n > 1.0 - tol::terminal) return SchurParameterSequence(f.dim(), std::move(alphas), schur_step(cur).alpha);
    alphas.push_back(cur[0]);
    if (j + 1 == steps) break;
    cur = std::move(*schur_step(cur).next);
  }
  return SchurParameterSequence(f.dim(), std::move(alphas));
}

Seed synthesis_seed(const SchurParameterSequence& p) { return p.terminated() ? Seed::terminal : Seed::zero; }

MatrixSeries mobius_step(const Matrix& alpha, const MatrixSeries& f) {
  const std::size_t d = f.dim();
  const Matrix id = Matrix::Identity(d, d);
  const MatrixSeries g = times_z(rho_right(alpha) * f * rho_left(alpha).inverse()).truncated(f.order());
  MatrixSeries out = inverse(id + g * alpha.adjoint()) * (g + alpha);
  out.mark_schur(f.schur_flagged());
  return out;
}

MatrixSeries synthesize(const SchurParameterSequence& p, std::size_t order) {
  if (p.size() == 0 && !p.terminated()) throw InvariantError("synthesis needs a parameter or a terminal");
  const std::size_t d = p.dim();
  MatrixSeries f = p.terminated() ? MatrixSeries::constant(*p.terminal(), order) : MatrixSeries(d, order);
  f.mark_schur();
  for (std::size_t j = p.size(); j-- > 0;) f = mobius_step(p[j], f);
  return f;
}

SchurParameterSequence iterate(const SchurParameterSequence& p, std::size_t j) {
  if (j > p.size()) throw InvariantError("iterate index exceeds the number of parameters");
  return SchurParameterSequence(p.dim(), std::vector<Matrix>(p.alphas().begin() + j, p.alphas().end()),
                                p.terminal());
}

SchurParameterSequence inverse_iterate(const SchurParameterSequence& p, std::size_t j) {
  if (j > p.size()) throw InvariantError("inverse iterate index exceeds the number of parameters");
  std::vector<Matrix> out;
  for (std::size_t i = j; i-- > 0;) out.push_back(-p[i].adjoint());
  return SchurParameterSequence(p.dim(), std::move(out), Matrix::Identity(p.dim(), p.dim()));
}

MatrixSeries binary_transform(cplx u, cplx v, const MatrixSeries& g, const MatrixSeries& h) {
  if (g.dim() != 1 || h.dim() != 1) throw InvariantError("binary transform is scalar");
  if (std::abs(u) + std::abs(v) > 1.0 + 1e-12) throw InvariantError("binary transform needs |u| + |v| <= 1");
  const std::size_t order = std::min(g.order(), h.order());
  const MatrixSeries gt = g.truncated(order), ht = h.truncated(order);
  const MatrixSeries num = times_z(gt * ht).truncated(order) + u * gt + v * ht;
  const MatrixSeries den = times_z(std::conj(v) * gt + std::conj(u) * ht).truncated(order) +
                           Matrix::Identity(1, 1);
  MatrixSeries out = num * inverse(den);
  out.mark_schur();
  return out;
}

}  // namespace mopuc
