#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace rsdl {

/// An element of F_q, stored as its canonical index in [0, q).
///
/// For a prime field the index is the residue itself. For F_{p^e} the
/// element is a polynomial c_0 + c_1 t + ... + c_{e-1} t^{e-1} over F_p in the
/// modulus variable t, and its index is c_0 + c_1 p + ... + c_{e-1} p^{e-1}.
/// Index order is the canonical enumeration order: 0, 1, then the rest.
using Elem = std::uint32_t;

/// Largest field order supported.
inline constexpr std::uint32_t kMaxFieldOrder = 1u << 20;

struct FieldData;

/// Finite field F_q, q = p^e. Cheap to copy (shared immutable tables).
class Field {
 public:
  /// Builds F_{p^e}. `modulus` is a monic degree-e polynomial over F_p given
  /// as ascending coefficients (length e + 1). When absent and e > 1 the
  /// smallest monic irreducible in canonical order is chosen.
  ///
  /// Throws NotPrime, ReducibleModulus, RangeError.
  static Field make(std::uint32_t p, std::uint32_t e = 1,
                    std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  /// Builds F_q from a prime power q; throws NotPrime when q is not one.
  static Field of_order(std::uint32_t q);

  std::uint32_t p() const;
  std::uint32_t e() const;
  std::uint32_t q() const;
  /// Ascending coefficients of the defining modulus over F_p (e + 1 entries);
  /// empty for prime fields.
  const std::vector<std::uint32_t>& modulus() const;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  /// Throws InvalidArgument on zero.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const;
  Elem pow(Elem a, std::uint64_t n) const;

  /// Image of an integer under Z -> F_p -> F_q.
  Elem from_int(std::int64_t n) const;
  /// A fixed generator of the multiplicative group.
  Elem primitive_element() const;
  /// Coordinates of `a` over F_p, ascending, length e.
  std::vector<std::uint32_t> digits(Elem a) const;
  /// The element with index p^t (the t-th power of the modulus variable).
  Elem basis(std::uint32_t t) const;

  /// Elements in canonical order: 0, 1, ..., q-1.
  std::vector<Elem> elements() const;
  /// Nonzero elements in canonical order.
  std::vector<Elem> nonzero_elements() const;

  /// "q=5" or "q=2^2 mod=1 + x + x^2".
  std::string describe() const;

  bool operator==(const Field& other) const;
  bool operator!=(const Field& other) const { return !(*this == other); }

 private:
  explicit Field(std::shared_ptr<const FieldData> data) : data_(std::move(data)) {}
  std::shared_ptr<const FieldData> data_;
};

bool is_prime(std::uint64_t n);
/// Distinct prime factors in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// Irreducibility of a monic polynomial over F_p by trial division with every
/// monic polynomial of degree <= deg/2. Coefficients ascending.
bool is_irreducible_mod_p(const std::vector<std::uint32_t>& coeffs, std::uint32_t p);

}  // namespace rsdl
