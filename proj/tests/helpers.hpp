#pragma once

#include <complex>
#include <vector>

#include "mopuc/linalg.hpp"
#include "mopuc/random.hpp"
#include "mopuc/series.hpp"

namespace testing {

using mopuc::cplx;
using mopuc::Matrix;
using mopuc::MatrixSeries;

inline double max_abs(const Matrix& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

// Plain scalar polynomial arithmetic, independent of MatrixSeries.
using Poly = std::vector<cplx>;

inline Poly poly_mul(const Poly& a, const Poly& b, std::size_t order) {
  Poly out(order + 1, 0.0);
  for (std::size_t i = 0; i < a.size() && i <= order; ++i)
    for (std::size_t j = 0; j < b.size() && i + j <= order; ++j) out[i + j] += a[i] * b[j];
  return out;
}

inline Poly poly_div(const Poly& num, const Poly& den, std::size_t order) {
  Poly out(order + 1, 0.0);
  for (std::size_t n = 0; n <= order; ++n) {
    cplx acc = n < num.size() ? num[n] : 0.0;
    for (std::size_t i = 1; i <= n && i < den.size(); ++i) acc -= den[i] * out[n - i];
    out[n] = acc / den[0];
  }
  return out;
}

inline Poly coeffs(const MatrixSeries& s, std::size_t r = 0, std::size_t c = 0) {
  Poly p;
  for (std::size_t n = 0; n <= s.order(); ++n) p.push_back(s[n](r, c));
  return p;
}

inline double poly_diff(const Poly& a, const Poly& b) {
  double m = 0;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

// Scalar Schur algorithm on plain coefficient lists.
inline std::vector<cplx> scalar_schur_parameters(Poly f, std::size_t steps) {
  std::vector<cplx> out;
  for (std::size_t s = 0; s < steps; ++s) {
    const cplx a = f[0];
    out.push_back(a);
    if (std::abs(a) > 1 - 1e-8 || f.size() < 2) break;
    Poly num = f;
    num[0] -= a;
    Poly den(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) den[i] = -std::conj(a) * f[i];
    den[0] += 1.0;
    Poly q = poly_div(num, den, f.size() - 1);
    f.assign(q.begin() + 1, q.end());
  }
  return out;
}

// Scalar backward recursion f_j = (a + z f_{j+1}) / (1 + conj(a) z f_{j+1}).
inline Poly scalar_synthesize(const std::vector<cplx>& alphas, cplx tail, std::size_t order) {
  Poly f(order + 1, 0.0);
  f[0] = tail;
  for (std::size_t j = alphas.size(); j-- > 0;) {
    Poly zf(order + 1, 0.0);
    for (std::size_t i = 0; i < order; ++i) zf[i + 1] = f[i];
    Poly num = zf, den(order + 1, 0.0);
    num[0] += alphas[j];
    for (std::size_t i = 0; i <= order; ++i) den[i] = std::conj(alphas[j]) * zf[i];
    den[0] += 1.0;
    f = poly_div(num, den, order);
  }
  return f;
}

inline MatrixSeries random_series(std::size_t d, std::size_t order, mopuc::Rng& rng, double scale = 1.0) {
  std::vector<Matrix> c;
  for (std::size_t n = 0; n <= order; ++n) c.push_back(scale * mopuc::random_gaussian(d, d, rng));
  return MatrixSeries(std::move(c));
}

}  // namespace testing
