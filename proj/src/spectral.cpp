#include "mopuc/spectral.hpp"

#include <numbers>

namespace mopuc {

namespace {

void require_square(const Matrix& u, const IndexSubspace& v) {
  if (u.rows() != u.cols()) throw InvariantError("operator must be square");
  if (static_cast<std::size_t>(u.rows()) != v.ambient()) throw InvariantError("subspace and operator sizes differ");
  if (v.size() == 0) throw InvariantError("subspace must be non-empty");
}

constexpr std::size_t cross_check_terms = 64;

}  // namespace

Matrix spectral_moment(const Matrix& u, const IndexSubspace& v, long n) {
  require_square(u, v);
  Matrix cols = Matrix::Zero(u.rows(), v.size());
  for (std::size_t c = 0; c < v.size(); ++c) cols(v.indices()[c], c) = 1.0;
  const Matrix step = n >= 0 ? u : Matrix(u.adjoint());
  for (long i = 0; i < std::labs(n); ++i) cols = step * cols;
  return restrict(cols, v, IndexSubspace::range(0, v.size(), v.size()));
}

std::vector<Matrix> spectral_moments(const Matrix& u, const IndexSubspace& v, std::size_t count) {
  require_square(u, v);
  std::vector<Matrix> out;
  Matrix cols = Matrix::Zero(u.rows(), v.size());
  for (std::size_t c = 0; c < v.size(); ++c) cols(v.indices()[c], c) = 1.0;
  const IndexSubspace all = IndexSubspace::range(0, v.size(), v.size());
  for (std::size_t n = 0; n < count; ++n) {
    out.push_back(restrict(cols, v, all));
    cols = u * cols;
  }
  return out;
}

std::size_t required_blocks(std::size_t last_block, std::size_t horizon) { return last_block + 2 * horizon + 2; }

bool window_exact(const PaddedWindow& w, const IndexSubspace& v, std::size_t horizon) {
  if (v.size() == 0) return true;
  const std::size_t last = v.indices().back() / w.block_dim;
  if (last + 1 >= w.n_blocks) return false;
  const std::size_t margin = w.n_blocks - 1 - last;
  return 2 * horizon <= margin;
}

ReturnAmplitudes first_return_amplitudes(const Matrix& u, const IndexSubspace& v, std::size_t horizon,
                                         std::optional<PaddedWindow> window) {
  require_square(u, v);
  ReturnAmplitudes out;
  out.exact = !window || window_exact(*window, v, horizon);
  Matrix x(u.rows(), v.size());
  for (std::size_t c = 0; c < v.size(); ++c) x.col(c) = u.col(v.indices()[c]);
  const IndexSubspace all = IndexSubspace::range(0, v.size(), v.size());
  for (std::size_t n = 1; n <= horizon; ++n) {
    out.a.push_back(restrict(x, v, all));
    if (n == horizon) break;
    for (auto i : v.indices()) x.row(i).setZero();
    x = (u * x).eval();
  }
  return out;
}

ReturnAmplitudes first_return_amplitudes(const BlockOperator& op, const IndexSubspace& v, std::size_t horizon) {
  std::optional<PaddedWindow> w;
  if (op.padded) w = PaddedWindow{op.block_dim, op.n_blocks};
  return first_return_amplitudes(op.matrix, v, horizon, w);
}

Matrix resolvent_schur(const Matrix& u, const IndexSubspace& v, cplx z) {
  require_square(u, v);
  Matrix a = u;
  const IndexSubspace perp = v.complement();
  for (auto i : perp.indices()) a(i, i) -= z;
  Matrix rhs = Matrix::Zero(u.rows(), v.size());
  for (std::size_t c = 0; c < v.size(); ++c) rhs(v.indices()[c], c) = 1.0;
  const Matrix sol = a.partialPivLu().solve(rhs);
  return restrict(sol, v, IndexSubspace::range(0, v.size(), v.size()));
}

SchurOfSubspace schur_of_subspace(const Matrix& u, const IndexSubspace& v, std::size_t order,
                                  std::optional<PaddedWindow> window, bool cross_check) {
  const std::size_t terms = cross_check ? std::max(order + 1, cross_check_terms) : order + 1;
  auto amps = first_return_amplitudes(u, v, terms, std::nullopt);
  std::vector<Matrix> coeffs;
  for (std::size_t n = 0; n < terms; ++n) coeffs.push_back(amps.a[n].adjoint());
  MatrixSeries full(std::move(coeffs));
  SchurOfSubspace out;
  out.exact = !window || window_exact(*window, v, order + 1);
  if (cross_check) {
    double worst = 0.0;
    for (int i = 0; i < 8; ++i) {
      const cplx z = std::polar(i % 2 == 0 ? 0.5 : 0.25, 2.0 * std::numbers::pi * i / 8.0 + 0.1);
      worst = std::max(worst, (evaluate(full, z) - resolvent_schur(u, v, z)).cwiseAbs().maxCoeff());
    }
    out.cross_check_residual = worst;
    if (worst > tol::series)
      throw ConsistencyError("return-amplitude and resolvent Schur functions disagree by " + std::to_string(worst));
  }
  out.f = full.truncated(order);
  out.f.mark_schur();
  return out;
}

SchurOfSubspace schur_of_subspace(const BlockOperator& op, const IndexSubspace& v, std::size_t order,
                                  bool cross_check) {
  std::optional<PaddedWindow> w;
  if (op.padded) w = PaddedWindow{op.block_dim, op.n_blocks};
  return schur_of_subspace(op.matrix, v, order, w, cross_check);
}

ReturnStatistics return_statistics(const Matrix& u, const IndexSubspace& v, const Vector& psi, std::size_t horizon,
                                   std::optional<PaddedWindow> window) {
  if (static_cast<std::size_t>(psi.size()) != v.size()) throw InvariantError("state must live in the subspace");
  if (std::abs(psi.norm() - 1.0) > 1e-10) throw InvariantError("state must be a unit vector");
  const auto amps = first_return_amplitudes(u, v, horizon, window);
  ReturnStatistics st;
  st.exact = amps.exact;
  double acc = 0.0;
  for (std::size_t n = 1; n <= horizon; ++n) {
    const double p = (amps.a[n - 1] * psi).squaredNorm();
    acc += p;
    st.probability.push_back(p);
    st.cumulative.push_back(acc);
    st.partial_expected_time += static_cast<double>(n) * p;
  }
  return st;
}

}  // namespace mopuc
