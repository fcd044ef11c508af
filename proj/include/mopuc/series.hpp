#pragma once

#include <iosfwd>
#include <vector>

#include "mopuc/linalg.hpp"

namespace mopuc {

// Truncated power series sum_{n=0}^{order} c_n z^n with square dim x dim coefficients.
class MatrixSeries {
 public:
  MatrixSeries() = default;
  MatrixSeries(std::size_t dim, std::size_t order);
  explicit MatrixSeries(std::vector<Matrix> coeffs);

  static MatrixSeries constant(const Matrix& c, std::size_t order);
  static MatrixSeries identity(std::size_t dim, std::size_t order);
  static MatrixSeries scalar(const std::vector<cplx>& coeffs);
  // Taylor coefficients of num(z)/den(z) for polynomial coefficient lists (lowest degree first).
  static MatrixSeries rational(const std::vector<cplx>& num, const std::vector<cplx>& den, std::size_t order);

  std::size_t dim() const { return dim_; }
  std::size_t order() const { return c_.empty() ? 0 : c_.size() - 1; }
  const Matrix& operator[](std::size_t n) const { return c_[n]; }
  Matrix& operator[](std::size_t n) { return c_[n]; }
  const std::vector<Matrix>& coefficients() const { return c_; }

  bool schur_flagged() const { return schur_; }
  MatrixSeries& mark_schur(bool flag = true) {
    schur_ = flag;
    return *this;
  }

  MatrixSeries truncated(std::size_t order) const;
  // Entry (r, c) as a scalar series.
  MatrixSeries entry(std::size_t r, std::size_t c) const;
  MatrixSeries transposed() const;

 private:
  std::size_t dim_ = 0;
  std::vector<Matrix> c_;
  bool schur_ = false;
};

MatrixSeries operator+(const MatrixSeries& a, const MatrixSeries& b);
MatrixSeries operator-(const MatrixSeries& a, const MatrixSeries& b);
MatrixSeries operator*(const MatrixSeries& a, const MatrixSeries& b);
MatrixSeries operator*(const Matrix& m, const MatrixSeries& a);
MatrixSeries operator*(const MatrixSeries& a, const Matrix& m);
MatrixSeries operator*(cplx s, const MatrixSeries& a);
MatrixSeries operator+(const MatrixSeries& a, const Matrix& m);
MatrixSeries operator-(const MatrixSeries& a, const Matrix& m);
MatrixSeries operator+(const Matrix& m, const MatrixSeries& a);
MatrixSeries operator-(const Matrix& m, const MatrixSeries& a);

MatrixSeries mul(const MatrixSeries& a, const MatrixSeries& b);
MatrixSeries inverse(const MatrixSeries& a);
// Coefficient-wise adjoint: f^dagger(conj z) as a series in z.
MatrixSeries par_dagger(const MatrixSeries& a);
// Multiply by z, extending the order by one.
MatrixSeries times_z(const MatrixSeries& a);
// Divide by z; the constant coefficient must vanish. Order drops by one.
MatrixSeries divide_z(const MatrixSeries& a, double zero_tol = 1e-12);
MatrixSeries block_diag(const std::vector<MatrixSeries>& blocks);
Matrix evaluate(const MatrixSeries& a, cplx z);

MatrixSeries schur_to_caratheodory(const MatrixSeries& f);
MatrixSeries caratheodory_to_schur(const MatrixSeries& F);

// Largest entry-wise coefficient difference over the common order.
double max_coefficient_difference(const MatrixSeries& a, const MatrixSeries& b);
bool series_equal(const MatrixSeries& a, const MatrixSeries& b, double tolerance = tol::series);

// Sixteen fixed sample points inside the disc used for contractivity checks.
const std::vector<cplx>& contractivity_grid();
double max_sampled_norm(const MatrixSeries& f);
bool is_contractive(const MatrixSeries& f, double tolerance = tol::contractivity);

void write_csv(std::ostream& os, const MatrixSeries& a);
MatrixSeries read_csv(std::istream& is);

}  // namespace mopuc
