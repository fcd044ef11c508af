#pragma once

#include "mopuc/cmv.hpp"
#include "mopuc/report.hpp"
#include "mopuc/spectral.hpp"

namespace mopuc {

struct VerifyOptions {
  std::size_t order = 12;
  double tolerance = tol::series;
  bool oracle = false;  // cross-check operator amplitudes by path enumeration
};

// f_j and b_j, synthesized two orders beyond `order` and truncated.
MatrixSeries iterate_series(const SchurParameterSequence& p, std::size_t j, std::size_t order);
MatrixSeries inverse_iterate_series(const SchurParameterSequence& p, std::size_t j, std::size_t order);

// The operator window used to realize f_{[j,k]} exactly up to `order`.
BlockOperatorSpec verification_window(const SchurParameterSequence& p, Family family, std::size_t last_block,
                                      std::size_t order);

// Product of b_j and f_j in the order dictated by the family and the parity of j.
MatrixSeries site_formula(const SchurParameterSequence& p, Family family, std::size_t j, std::size_t order);
// f_j and b_j substituted into the unitary truncation on blocks j..k.
MatrixSeries substitute_into_truncation(const SchurParameterSequence& p, Family family, std::size_t j,
                                        std::size_t k, std::size_t order);

VerificationReport verify_site_formula(const SchurParameterSequence& p, Family family, std::size_t j,
                                       const VerifyOptions& opt = {});
VerificationReport verify_range_formula(const SchurParameterSequence& p, Family family, std::size_t j, std::size_t k,
                                        const VerifyOptions& opt = {});
VerificationReport verify_hessenberg_formula(const SchurParameterSequence& p, Family family, std::size_t j,
                                             std::size_t k, const VerifyOptions& opt = {});

// Scalar Schur function of the vector psi: F_psi = <psi, F_V psi>, f_psi = (F_psi - 1) / (z (F_psi + 1)).
MatrixSeries compress_to_vector(const MatrixSeries& f_v, const Vector& psi);

enum class SuperpositionRoute { closed_form, binary_transform, operator_compress };
std::string route_name(SuperpositionRoute r);

// Scalar Schur function of |beta chi_j + gamma chi_{j+1}|^2 dmu for the CMV basis.
MatrixSeries scalar_superposition_schur(const SchurParameterSequence& p, std::size_t j, cplx beta, cplx gamma,
                                        std::size_t order, SuperpositionRoute route);
// Same for |beta phi_j + gamma phi_{j+1}|^2 dmu, closed form.
MatrixSeries hessenberg_superposition(const SchurParameterSequence& p, std::size_t j, cplx beta, cplx gamma,
                                      std::size_t order);
// Operator route for the Hessenberg superposition (requires a terminal parameter).
MatrixSeries hessenberg_superposition_operator(const SchurParameterSequence& p, std::size_t j, cplx beta, cplx gamma,
                                               std::size_t order);

VerificationReport verify_superposition(const SchurParameterSequence& p, std::size_t j, cplx beta, cplx gamma,
                                        const VerifyOptions& opt = {});
VerificationReport verify_hessenberg_superposition(const SchurParameterSequence& p, std::size_t j, cplx beta,
                                                   cplx gamma, const VerifyOptions& opt = {});

}  // namespace mopuc
