#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace rsdl {

/// Exact element of Z[zeta_N], stored as sum_j c_j zeta^j over j in [0, N).
/// The representation is not unique until reduce() maps it to the basis
/// 1, zeta, ..., zeta^{phi(N)-1}. Integer overflow throws RangeError.
class Cyclo {
 public:
  explicit Cyclo(std::uint32_t order = 1);
  static Cyclo integer(std::uint32_t order, std::int64_t v);
  static Cyclo root_power(std::uint32_t order, std::uint64_t exponent);

  std::uint32_t order() const { return order_; }
  const std::vector<std::int64_t>& coeffs() const { return c_; }

  /// this += times * zeta^exponent
  void add_power(std::uint64_t exponent, std::int64_t times = 1);
  Cyclo& operator+=(const Cyclo& other);
  Cyclo& operator-=(const Cyclo& other);
  Cyclo& operator*=(std::int64_t s);
  Cyclo operator+(const Cyclo& other) const;
  Cyclo operator-(const Cyclo& other) const;
  Cyclo operator*(const Cyclo& other) const;
  Cyclo operator*(std::int64_t s) const;
  /// zeta -> zeta^{-1}
  Cyclo conj() const;
  Cyclo pow(unsigned n) const;

  /// Canonical form: remainder modulo the N-th cyclotomic polynomial.
  Cyclo reduced() const;
  bool is_zero() const;
  /// The rational integer this equals, if it is one.
  bool is_integer(std::int64_t* value = nullptr) const;
  bool operator==(const Cyclo& other) const { return (*this - other).is_zero(); }

  std::complex<double> embed() const;
  std::complex<long double> embed_ld() const;
  std::string to_string() const;

 private:
  std::uint32_t order_;
  std::vector<std::int64_t> c_;
};

/// Coefficients of the N-th cyclotomic polynomial, ascending.
const std::vector<std::int64_t>& cyclotomic_poly(std::uint32_t n);

}  // namespace rsdl
