#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "rsdl/cyclotomic.hpp"
#include "rsdl/error.hpp"
#include "rsdl/poly.hpp"

namespace rsdl {

/// F_q[x]/(f) for a monic f of degree n >= 1. A residue is stored as the
/// index sum_i c_i q^i of its reduced coefficient vector.
class ResidueRing {
 public:
  using Res = std::uint32_t;

  /// Throws InvalidArgument unless f is monic of degree >= 1, BudgetExceeded
  /// when q^n exceeds the budget.
  explicit ResidueRing(const Poly& modulus, const Exec& exec = {});

  const Field& field() const { return modulus_.field(); }
  const Poly& modulus() const { return modulus_; }
  std::size_t degree() const { return n_; }
  std::uint64_t size() const { return size_; }

  Res from_poly(const Poly& g) const;
  Poly to_poly(Res r) const;
  std::vector<Elem> digits(Res r) const;
  Res from_digits(const std::vector<Elem>& d) const;
  Res mul(Res a, Res b) const;
  Res pow(Res a, std::uint64_t e) const;
  Res one() const { return 1; }
  /// The constant residue c.
  Res scalar(Elem c) const { return c; }
  bool is_unit(Res r) const;
  /// True when f = x^n; then the one-units {h : h(0) = 1} form a subgroup.
  bool is_power_of_x() const;

  /// Units in increasing residue order.
  std::vector<Res> units() const;
  /// Residues with constant term 1 (requires f = x^n).
  std::vector<Res> one_units() const;
  /// q^n prod_P (1 - q^{-deg P}) over the distinct monic irreducible factors P of f.
  std::uint64_t unit_count_formula() const;

 private:
  Poly modulus_;
  std::size_t n_;
  std::uint64_t size_;
  std::vector<Elem> reduce_top_;  // x^n mod f, n coefficients
};

/// A finite abelian group of ring units written as a direct product of
/// cyclic groups of prime-power order.
struct AbelianGroup {
  std::shared_ptr<const ResidueRing> ring;
  std::vector<ResidueRing::Res> elements;   // increasing
  std::vector<ResidueRing::Res> generators;
  std::vector<std::uint32_t> orders;        // order of each generator
  std::uint32_t exponent = 1;               // lcm of the orders
  /// For each residue, its coordinate vector flattened in mixed radix, or -1.
  std::vector<std::int64_t> code;

  std::uint64_t order() const { return elements.size(); }
  bool contains(ResidueRing::Res r) const { return r < code.size() && code[r] >= 0; }
  std::vector<std::uint32_t> coordinates(ResidueRing::Res r) const;
};

/// Decomposes the subgroup formed by `elements` (which must be closed under
/// multiplication) and verifies that the generator products enumerate it
/// exactly once. Throws InvalidArgument when the decomposition check fails.
AbelianGroup decompose(std::shared_ptr<const ResidueRing> ring, std::vector<ResidueRing::Res> elements);

/// Order of a unit.
std::uint64_t element_order(const ResidueRing& ring, ResidueRing::Res r);

/// Characters of the unit group of a residue ring, extended by zero to
/// non-units. Character i is given by exponents e_j in [0, n_j) and maps the
/// unit with coordinates a_j to zeta^{sum_j a_j e_j (N / n_j)}, N the group
/// exponent. Character 0 is trivial.
class CharacterGroup {
 public:
  /// Every character of (F_q[x]/(f))^*.
  static CharacterGroup full(std::shared_ptr<const ResidueRing> ring);
  /// The characters with chi(F_q^*) = 1.
  static CharacterGroup trivial_on_scalars(std::shared_ptr<const ResidueRing> ring);

  const ResidueRing& ring() const { return *units_.ring; }
  const AbelianGroup& units() const { return units_; }
  std::uint32_t root_order() const { return units_.exponent; }
  std::size_t size() const { return chars_.size(); }
  const std::vector<std::uint32_t>& exponents(std::size_t chi) const { return chars_[chi]; }

  bool is_trivial(std::size_t chi) const;
  /// Exponent of zeta in chi(r), or -1 when r is not a unit.
  std::int64_t value_exponent(std::size_t chi, ResidueRing::Res r) const;
  /// chi(r) exactly (0 for non-units).
  Cyclo value(std::size_t chi, ResidueRing::Res r) const;
  /// Multiplicative order of chi.
  std::uint64_t order_of(std::size_t chi) const;
  /// Index of chi^t in this group.
  std::size_t power(std::size_t chi, std::uint64_t t) const;
  std::size_t product(std::size_t a, std::size_t b) const;

 private:
  CharacterGroup(AbelianGroup units, std::vector<std::vector<std::uint32_t>> chars);
  std::size_t index_of(const std::vector<std::uint32_t>& e) const;

  AbelianGroup units_;
  std::vector<std::vector<std::uint32_t>> chars_;
  std::vector<std::int64_t> lookup_;  // mixed-radix exponent code -> index or -1
};

/// hist[res] = number of monic g of degree k with g = res mod f.
std::vector<std::uint64_t> monic_residue_histogram(const ResidueRing& ring, std::size_t k, const Exec& exec = {});

/// sum_res hist[res] chi(res).
Cyclo character_sum(const CharacterGroup& group, std::size_t chi, const std::vector<std::uint64_t>& hist);
/// Same sum in floating point, accumulated term by term.
std::complex<double> character_sum_float(const CharacterGroup& group, std::size_t chi,
                                         const std::vector<std::uint64_t>& hist);

/// M_k(chi): sum of chi(g) over monic g of degree k.
Cyclo M_k_sum(const CharacterGroup& group, std::size_t chi, std::size_t k, const Exec& exec = {});

/// L(chi, t) = sum_k M_k(chi) t^k, truncated to k <= n-1.
struct LFunction {
  std::vector<Cyclo> coeffs;

  /// Largest k with M_k != 0.
  std::size_t degree() const;
  Cyclo at_one() const;
  /// sum_{j<=k} M_j
  Cyclo partial_sum(std::size_t k) const;
};

/// Throws TrivialCharacter for the trivial character.
LFunction l_function(const CharacterGroup& group, std::size_t chi, const Exec& exec = {});
/// Uses precomputed monic histograms hists[k], k = 0..n-1.
LFunction l_function(const CharacterGroup& group, std::size_t chi,
                     const std::vector<std::vector<std::uint64_t>>& hists);

}  // namespace rsdl
