#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "rsdl/bigmath.hpp"
#include "rsdl/poly.hpp"

namespace rsdl {

/// One N_2 (or N_2^*) instance: brute-force ordered count, the same count
/// through characters of the one-units mod x^{m+1}, main term and bound.
struct N2Report {
  long q = 0, p = 0, d = 0, m = 0, r = 0, k = 0;  // k = d - m
  std::string target;
  bool star = false;                 // points restricted to F_q^*
  std::uint64_t oracle = 0;          // ordered count by enumeration
  std::optional<std::int64_t> via_characters;
  mpq_class main_term;
  UpperReal bound;
  bool holds = false;
  /// d - r >= m: the count equals the main term exactly.
  bool exact_case = false;
  /// #{chi != 1 in G : ord(chi) <= r}
  std::uint64_t small_order_characters = 0;
  /// ((q^m - S)/q^m) ((m-1) sqrt q + r - 1)_r + (S/q^m) (q/p + (m-1) sqrt q + r - 1)_r, for m >= 1.
  std::optional<double> w_of_s;

  bool characters_agree() const { return !via_characters || *via_characters == static_cast<std::int64_t>(oracle); }
};

/// `target` must have constant term 1 and degree <= m. Requires r <= d.
N2Report n2_character_pipeline(const Poly& target, std::size_t r, std::size_t d, std::size_t m, bool star,
                               const Exec& exec = {}, unsigned precision_bits = kDefaultPrecisionBits,
                               bool use_characters = true);

/// The ordered count computed as q^{-m} sum_{chi in G} conj(chi(target)) A(chi) B(chi),
/// with A from the class form of the distinct-coordinate sieve and B the
/// character sum over P_{d-r}.
std::int64_t n2_via_characters(const Poly& target, std::size_t r, std::size_t d, std::size_t m, bool star,
                               const Exec& exec = {});

}  // namespace rsdl
