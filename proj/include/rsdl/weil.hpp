#pragma once

#include <cstdint>
#include <vector>

#include "rsdl/characters.hpp"

namespace rsdl {

inline constexpr double kWeilTolerance = 1e-8;
/// Largest accepted coefficient mismatch between L and prod (1 - rho_i t).
inline constexpr double kWeilResidualLimit = 1e-30;

struct WeilReport {
  std::size_t degree = 0;
  std::vector<double> root_moduli;  // |rho_i|, increasing
  double sqrt_q = 0;
  double tolerance = kWeilTolerance;
  double max_ratio = 0;  // max |rho_i| / sqrt(q)
  double residual = 0;
  bool pass = true;
};

/// Inverse roots rho_i of L(chi, t) = prod (1 - rho_i t) from the eigenvalues
/// of the companion matrix of t^D L(1/t), computed with about 80 significant
/// digits. Passes when every |rho_i| <= sqrt(q) (1 + tolerance).
/// Throws NumericalInstability when the roots fail to reproduce the
/// coefficients.
WeilReport weil_check(const LFunction& L, std::uint32_t q, double tolerance = kWeilTolerance);

}  // namespace rsdl
