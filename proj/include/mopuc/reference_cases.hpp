#pragma once

#include <string>
#include <vector>

#include "mopuc/overlap.hpp"
#include "mopuc/report.hpp"

namespace mopuc::cases {

// Six-site unitary built from a 3x3 and a 4x4 Grover coin overlapping on one site.
Matrix grover_six();
// Five-site unitary built from the same coins overlapping on two sites.
Matrix grover_five();
Matrix grover_coin3();
Matrix grover_coin4();
OverlapFactorization grover_six_factors();
OverlapFactorization grover_five_factors();

// Six-site split walk with two different overlapping factorizations.
Matrix split_walk();
OverlapFactorization split_walk_factors();
OverlapFactorization split_walk_second_factors();

Matrix hadamard();

// Closed forms, Taylor-expanded to `order`.
MatrixSeries hadamard_schur(std::size_t order);
MatrixSeries grover_six_site2(std::size_t order);
MatrixSeries grover_six_sites23(std::size_t order);
MatrixSeries grover_five_center(std::size_t order);
MatrixSeries split_walk_left(std::size_t order);
MatrixSeries split_walk_right(std::size_t order);
MatrixSeries split_walk_right_sites24(std::size_t order);

const std::vector<std::string>& names();
VerificationReport verify(const std::string& name, std::size_t order = 20, double tolerance = 1e-10);

}  // namespace mopuc::cases
