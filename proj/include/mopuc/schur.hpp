#pragma once

#include <optional>
#include <vector>

#include "mopuc/series.hpp"

namespace mopuc {

// alpha_0, alpha_1, ... (strict contractions) optionally closed by a unitary terminal parameter.
class SchurParameterSequence {
 public:
  SchurParameterSequence() = default;
  SchurParameterSequence(std::size_t d, std::vector<Matrix> alphas, std::optional<Matrix> terminal = std::nullopt);

  std::size_t dim() const { return d_; }
  std::size_t size() const { return alphas_.size(); }
  const std::vector<Matrix>& alphas() const { return alphas_; }
  const Matrix& operator[](std::size_t j) const { return alphas_[j]; }
  const std::optional<Matrix>& terminal() const { return terminal_; }
  bool terminated() const { return terminal_.has_value(); }
  SchurParameterSequence transposed() const;

 private:
  std::size_t d_ = 0;
  std::vector<Matrix> alphas_;
  std::optional<Matrix> terminal_;
};

Matrix rho_left(const Matrix& alpha);   // (1 - alpha^dagger alpha)^{1/2}
Matrix rho_right(const Matrix& alpha);  // (1 - alpha alpha^dagger)^{1/2}

struct SchurStep {
  Matrix alpha;
  std::optional<MatrixSeries> next;  // empty when alpha is terminal
};

// One forward step f -> (f(0), f_1). f_1 has order one less than f.
SchurStep schur_step(const MatrixSeries& f);
// Parameters alpha_0..alpha_{steps-1}, stopping early at a terminal parameter.
SchurParameterSequence schur_forward(const MatrixSeries& f, std::size_t steps);

enum class Seed { zero, terminal };
Seed synthesis_seed(const SchurParameterSequence& p);
MatrixSeries synthesize(const SchurParameterSequence& p, std::size_t order);

// Parameters of the j-th iterate f_j and of the j-th inverse iterate b_j.
SchurParameterSequence iterate(const SchurParameterSequence& p, std::size_t j);
SchurParameterSequence inverse_iterate(const SchurParameterSequence& p, std::size_t j);

// Backward step: the Schur function with first parameter alpha and first iterate f.
MatrixSeries mobius_step(const Matrix& alpha, const MatrixSeries& f);
// Scalar (z g h + u g + v h) / (1 + conj(v) z g + conj(u) z h), requiring |u| + |v| <= 1.
MatrixSeries binary_transform(cplx u, cplx v, const MatrixSeries& g, const MatrixSeries& h);

}  // namespace mopuc
