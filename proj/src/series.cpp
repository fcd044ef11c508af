#include "mopuc/series.hpp"

#include <cmath>
#include <iomanip>
#include <istream>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>
#include <tuple>

namespace mopuc {

namespace {

void require_same_dim(const MatrixSeries& a, const MatrixSeries& b) {
  if (a.dim() != b.dim()) throw InvariantError("series dimensions differ");
}

void require_dim(const MatrixSeries& a, const Matrix& m) {
  if (static_cast<std::size_t>(m.rows()) != a.dim() || m.rows() != m.cols())
    throw InvariantError("matrix does not match series dimension");
}

}  // namespace

MatrixSeries::MatrixSeries(std::size_t dim, std::size_t order)
    : dim_(dim), c_(order + 1, Matrix::Zero(dim, dim)) {}

MatrixSeries::MatrixSeries(std::vector<Matrix> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) throw InvariantError("series needs at least one coefficient");
  dim_ = c_[0].rows();
  for (const auto& m : c_)
    if (static_cast<std::size_t>(m.rows()) != dim_ || m.rows() != m.cols())
      throw InvariantError("series coefficients must be square and of equal size");
}

MatrixSeries MatrixSeries::constant(const Matrix& c, std::size_t order) {
  MatrixSeries s(c.rows(), order);
  s[0] = c;
  return s;
}

MatrixSeries MatrixSeries::identity(std::size_t dim, std::size_t order) {
  return constant(Matrix::Identity(dim, dim), order);
}

MatrixSeries MatrixSeries::scalar(const std::vector<cplx>& coeffs) {
  std::vector<Matrix> c;
  for (auto v : coeffs) c.push_back(Matrix::Constant(1, 1, v));
  return MatrixSeries(std::move(c));
}

MatrixSeries MatrixSeries::rational(const std::vector<cplx>& num, const std::vector<cplx>& den, std::size_t order) {
  if (den.empty() || std::abs(den[0]) == 0.0) throw InvariantError("denominator must not vanish at z = 0");
  std::vector<cplx> out(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    cplx acc = n < num.size() ? num[n] : cplx(0);
    for (std::size_t i = 1; i <= n && i < den.size(); ++i) acc -= den[i] * out[n - i];
    out[n] = acc / den[0];
  }
  return scalar(out);
}

MatrixSeries MatrixSeries::truncated(std::size_t order) const {
  if (order > this->order()) throw InvariantError("cannot extend a truncated series");
  MatrixSeries s = *this;
  s.c_.resize(order + 1);
  return s;
}

MatrixSeries MatrixSeries::entry(std::size_t r, std::size_t c) const {
  std::vector<Matrix> out;
  for (const auto& m : c_) out.push_back(Matrix::Constant(1, 1, m(r, c)));
  return MatrixSeries(std::move(out));
}

MatrixSeries MatrixSeries::transposed() const {
  MatrixSeries s = *this;
  for (auto& m : s.c_) m = m.transpose().eval();
  return s;
}

MatrixSeries operator+(const MatrixSeries& a, const MatrixSeries& b) {
  require_same_dim(a, b);
  MatrixSeries s(a.dim(), std::min(a.order(), b.order()));
  for (std::size_t n = 0; n <= s.order(); ++n) s[n] = a[n] + b[n];
  return s;
}

MatrixSeries operator-(const MatrixSeries& a, const MatrixSeries& b) {
  require_same_dim(a, b);
  MatrixSeries s(a.dim(), std::min(a.order(), b.order()));
  for (std::size_t n = 0; n <= s.order(); ++n) s[n] = a[n] - b[n];
  return s;
}

MatrixSeries mul(const MatrixSeries& a, const MatrixSeries& b) {
  require_same_dim(a, b);
  const std::size_t order = std::min(a.order(), b.order());
  MatrixSeries s(a.dim(), order);
  for (std::size_t n = 0; n <= order; ++n)
    for (std::size_t i = 0; i <= n; ++i) s[n].noalias() += a[i] * b[n - i];
  return s;
}

MatrixSeries operator*(const MatrixSeries& a, const MatrixSeries& b) { return mul(a, b); }

MatrixSeries operator*(const Matrix& m, const MatrixSeries& a) {
  require_dim(a, m);
  MatrixSeries s = a;
  s.mark_schur(false);
  for (std::size_t n = 0; n <= s.order(); ++n) s[n] = m * a[n];
  return s;
}

MatrixSeries operator*(const MatrixSeries& a, const Matrix& m) {
  require_dim(a, m);
  MatrixSeries s = a;
  s.mark_schur(false);
  for (std::size_t n = 0; n <= s.order(); ++n) s[n] = a[n] * m;
  return s;
}

MatrixSeries operator*(cplx v, const MatrixSeries& a) {
  MatrixSeries s = a;
  s.mark_schur(false);
  for (std::size_t n = 0; n <= s.order(); ++n) s[n] *= v;
  return s;
}

MatrixSeries operator+(const MatrixSeries& a, const Matrix& m) {
  require_dim(a, m);
  MatrixSeries s = a;
  s.mark_schur(false);
  s[0] += m;
  return s;
}

MatrixSeries operator-(const MatrixSeries& a, const Matrix& m) {
  require_dim(a, m);
  MatrixSeries s = a;
  s.mark_schur(false);
  s[0] -= m;
  return s;
}

MatrixSeries operator+(const Matrix& m, const MatrixSeries& a) { return a + m; }

MatrixSeries operator-(const Matrix& m, const MatrixSeries& a) { return cplx(-1.0) * a + m; }

MatrixSeries inverse(const MatrixSeries& a) {
  Eigen::FullPivLU<Matrix> lu(a[0]);
  if (!lu.isInvertible()) throw InvariantError("constant coefficient is singular");
  const Matrix c0inv = lu.inverse();
  Eigen::JacobiSVD<Matrix> svd(a[0]);
  const auto& sv = svd.singularValues();
  if (sv(sv.size() - 1) <= 1e-13 * sv(0))
    throw InvariantError("constant coefficient is numerically singular");
  MatrixSeries s(a.dim(), a.order());
  s[0] = c0inv;
  for (std::size_t n = 1; n <= a.order(); ++n) {
    Matrix acc = Matrix::Zero(a.dim(), a.dim());
    for (std::size_t i = 1; i <= n; ++i) acc.noalias() += a[i] * s[n - i];
    s[n] = -c0inv * acc;
  }
  return s;
}

MatrixSeries par_dagger(const MatrixSeries& a) {
  MatrixSeries s = a;
  for (std::size_t n = 0; n <= s.order(); ++n) s[n] = a[n].adjoint();
  return s;
}

MatrixSeries times_z(const MatrixSeries& a) {
  MatrixSeries s(a.dim(), a.order() + 1);
  for (std::size_t n = 0; n <= a.order(); ++n) s[n + 1] = a[n];
  return s;
}

MatrixSeries divide_z(const MatrixSeries& a, double zero_tol) {
  if (a.order() == 0) throw InvariantError("cannot divide an order-0 series by z");
  if (a[0].norm() > zero_tol * std::max(1.0, a[1].norm()))
    throw InvariantError("constant coefficient does not vanish");
  MatrixSeries s(a.dim(), a.order() - 1);
  for (std::size_t n = 0; n < a.order(); ++n) s[n] = a[n + 1];
  return s;
}

MatrixSeries block_diag(const std::vector<MatrixSeries>& blocks) {
  if (blocks.empty()) throw InvariantError("empty direct sum");
  std::size_t order = blocks[0].order();
  for (const auto& b : blocks) order = std::min(order, b.order());
  std::vector<Matrix> coeffs(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    std::vector<Matrix> parts;
    for (const auto& b : blocks) parts.push_back(b[n]);
    coeffs[n] = direct_sum(parts);
  }
  return MatrixSeries(std::move(coeffs));
}

Matrix evaluate(const MatrixSeries& a, cplx z) {
  Matrix acc = a[a.order()];
  for (std::size_t n = a.order(); n-- > 0;) acc = (z * acc + a[n]).eval();
  return acc;
}

MatrixSeries schur_to_caratheodory(const MatrixSeries& f) {
  const std::size_t d = f.dim();
  const Matrix id = Matrix::Identity(d, d);
  const MatrixSeries zf = times_z(f);
  return (id + zf) * inverse(id - zf);
}

MatrixSeries caratheodory_to_schur(const MatrixSeries& F) {
  const std::size_t d = F.dim();
  const Matrix id = Matrix::Identity(d, d);
  if ((F[0] - id).norm() > 1e-10 * std::max(1.0, F.coefficients().back().norm()))
    throw InvariantError("Caratheodory series must have constant coefficient 1");
  MatrixSeries g = (F - id) * inverse(F + id);
  g[0].setZero();
  return divide_z(g);
}

double max_coefficient_difference(const MatrixSeries& a, const MatrixSeries& b) {
  require_same_dim(a, b);
  double m = 0.0;
  for (std::size_t n = 0; n <= std::min(a.order(), b.order()); ++n)
    m = std::max(m, (a[n] - b[n]).cwiseAbs().maxCoeff());
  return m;
}

bool series_equal(const MatrixSeries& a, const MatrixSeries& b, double tolerance) {
  return max_coefficient_difference(a, b) <= tolerance;
}

const std::vector<cplx>& contractivity_grid() {
  static const std::vector<cplx> grid = [] {
    std::vector<cplx> g;
    for (int i = 0; i < 8; ++i) {
      const double t = 2.0 * std::numbers::pi * i / 8.0;
      g.push_back(std::polar(0.3, t + 0.2));
      g.push_back(std::polar(0.6, t));
    }
    return g;
  }();
  return grid;
}

double max_sampled_norm(const MatrixSeries& f) {
  double m = 0.0;
  for (auto z : contractivity_grid()) m = std::max(m, operator_norm(evaluate(f, z)));
  return m;
}

bool is_contractive(const MatrixSeries& f, double tolerance) { return max_sampled_norm(f) <= 1.0 + tolerance; }

void write_csv(std::ostream& os, const MatrixSeries& a) {
  std::ostringstream buf;
  buf << std::setprecision(17);
  buf << "n,row,col,re,im\n";
  for (std::size_t n = 0; n <= a.order(); ++n)
    for (std::size_t r = 0; r < a.dim(); ++r)
      for (std::size_t c = 0; c < a.dim(); ++c)
        buf << n << ',' << r << ',' << c << ',' << a[n](r, c).real() << ',' << a[n](r, c).imag() << '\n';
  os << buf.str();
}

MatrixSeries read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw InvariantError("empty series CSV");
  if (line.rfind("n,row,col,re,im", 0) != 0) throw InvariantError("series CSV header must be n,row,col,re,im");
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, cplx> entries;
  std::size_t max_n = 0, max_rc = 0;
  while (std::getline(is, line)) {
    if (line.empty() || line == "\r") continue;
    std::istringstream ls(line);
    std::string f[5];
    for (int i = 0; i < 5; ++i)
      if (!std::getline(ls, f[i], ',')) throw InvariantError("malformed series CSV row: " + line);
    try {
      const std::size_t n = std::stoul(f[0]), r = std::stoul(f[1]), c = std::stoul(f[2]);
      entries[{n, r, c}] = cplx(std::stod(f[3]), std::stod(f[4]));
      max_n = std::max(max_n, n);
      max_rc = std::max({max_rc, r, c});
    } catch (const std::logic_error&) {
      throw InvariantError("malformed series CSV row: " + line);
    }
  }
  if (entries.empty()) throw InvariantError("series CSV has no coefficients");
  MatrixSeries s(max_rc + 1, max_n);
  for (const auto& [key, v] : entries) s[std::get<0>(key)](std::get<1>(key), std::get<2>(key)) = v;
  return s;
}

}  // namespace mopuc
