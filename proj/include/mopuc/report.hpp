#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mopuc {

struct VerificationReport {
  std::string theorem;
  std::string family;
  std::size_t d = 0;
  std::optional<std::size_t> j, k;
  std::size_t order = 0;
  std::optional<std::uint64_t> seed;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  bool exact = true;
  std::optional<double> oracle_residual;
  std::string formula_route;
  std::string operator_route;
  std::vector<std::string> notes;
};

}  // namespace mopuc
