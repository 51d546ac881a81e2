#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rsdl/error.hpp"
#include "rsdl/field.hpp"

namespace rsdl {

/// Dense univariate polynomial over F_q with ascending coefficients.
/// Trailing zeros are always stripped, so the zero polynomial has no
/// coefficients and no degree.
class Poly {
 public:
  explicit Poly(Field field) : field_(std::move(field)) {}
  Poly(Field field, std::vector<Elem> coeffs);

  static Poly constant(const Field& field, Elem c);
  /// c * x^n
  static Poly monomial(const Field& field, std::size_t n, Elem c = 1);
  /// x - a
  static Poly linear_root(const Field& field, Elem a);

  const Field& field() const { return field_; }
  const std::vector<Elem>& coeffs() const { return coeffs_; }

  bool is_zero() const { return coeffs_.empty(); }
  /// Empty for the zero polynomial.
  std::optional<std::size_t> degree() const;
  /// Coefficient of x^i (zero past the end).
  Elem coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
  Elem leading() const { return coeffs_.empty() ? 0 : coeffs_.back(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  Elem eval(Elem a) const;
  Poly monic() const;
  /// Drops every term of degree < k.
  Poly without_terms_below(std::size_t k) const;
  /// Keeps only the terms of degree < k.
  Poly truncated(std::size_t k) const;
  Poly scaled(Elem c) const;
  /// f(x + a)
  Poly shifted(Elem a) const;

  bool operator==(const Poly& other) const { return field_ == other.field_ && coeffs_ == other.coeffs_; }
  bool operator!=(const Poly& other) const { return !(*this == other); }

 private:
  void normalize();

  Field field_;
  std::vector<Elem> coeffs_;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator-(const Poly& a);
Poly operator*(const Poly& a, const Poly& b);

/// (quotient, remainder) with deg(remainder) < deg(divisor).
/// Throws DivisionByZeroPoly, FieldMismatch.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
/// base^n mod m.
Poly powmod(const Poly& base, std::uint64_t n, const Poly& m);

/// Number of a in F_q with f(a) = 0, by evaluation at every element.
/// The zero polynomial vanishes identically and has q roots.
std::size_t distinct_root_count(const Poly& f, const Exec& exec = {});
/// Same count restricted to `domain`; the zero polynomial has |domain| roots.
std::size_t distinct_root_count_on(const Poly& f, std::span<const Elem> domain);
/// deg gcd(f, x^q - x) for nonzero f; the zero polynomial gives q.
std::size_t distinct_root_count_gcd(const Poly& f);

/// A received word: values at an ordered evaluation set without repeats.
struct Word {
  Field field;
  std::vector<Elem> domain;
  std::vector<Elem> values;

  /// Throws InvalidArgument on length mismatch, DuplicateDomainPoint.
  void validate() const;
  std::size_t size() const { return values.size(); }
};

/// Evaluations of `f` on `domain`.
Word evaluate_word(const Poly& f, std::span<const Elem> domain);
/// Unique polynomial of degree < n through the word.
Poly lagrange_interpolate(const Word& u);

/// Text form "1 + 2*x + x^3" (ascending, coefficients as canonical indices).
std::string to_string(const Poly& f);
/// Compact form "[1,2,0,1]".
std::string to_list_string(const Poly& f);

}  // namespace rsdl
