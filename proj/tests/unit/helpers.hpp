#pragma once

#include <vector>

#include "../oracles.hpp"
#include "rsdl/field.hpp"
#include "rsdl/poly.hpp"

namespace testing_helpers {

inline oracle::Gf gf_of(const rsdl::Field& F) { return oracle::Gf(F.p(), F.e(), F.modulus()); }

inline std::vector<oracle::u32> coeffs_of(const rsdl::Poly& f) { return {f.coeffs().begin(), f.coeffs().end()}; }

inline const std::vector<std::uint32_t>& small_orders() {
  static const std::vector<std::uint32_t> qs{2, 3, 4, 5, 7, 8, 9};
  return qs;
}

}  // namespace testing_helpers
