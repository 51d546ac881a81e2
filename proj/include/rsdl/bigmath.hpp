#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace rsdl {

inline constexpr unsigned kDefaultPrecisionBits = 128;

/// C(n, r) with C(n, r) = 0 whenever r < 0, n < 0 or r > n.
mpz_class binomial(long n, long r);
/// q^e for any integer e (negative exponents give a fraction).
mpq_class rational_pow(unsigned long q, long e);
/// (x)_r = x (x-1) ... (x-r+1) over the integers; (x)_0 = 1.
mpz_class falling_factorial(long x, long r);
mpz_class factorial(unsigned long n);
std::string to_string(const mpq_class& v);
std::string to_string(const mpz_class& v);

/// A real number held in MPFR whose arithmetic rounds every operation
/// toward +infinity. Only monotone operations on nonnegative values are
/// exposed, so a chain of them yields a valid upper bound of the exact
/// result.
class UpperReal {
 public:
  explicit UpperReal(unsigned precision_bits = kDefaultPrecisionBits);
  UpperReal(const mpz_class& v, unsigned precision_bits);
  UpperReal(const mpq_class& v, unsigned precision_bits);
  UpperReal(const UpperReal& other);
  UpperReal(UpperReal&& other) noexcept;
  UpperReal& operator=(const UpperReal& other);
  UpperReal& operator=(UpperReal&& other) noexcept;
  ~UpperReal();

  static UpperReal from_ulong(unsigned long v, unsigned precision_bits);
  /// Upward-rounded sqrt(n); exact when n is a perfect square.
  static UpperReal sqrt_of(unsigned long n, unsigned precision_bits);

  unsigned precision() const { return static_cast<unsigned>(mpfr_get_prec(value_)); }

  UpperReal operator+(const UpperReal& other) const;
  UpperReal operator*(const UpperReal& other) const;
  UpperReal operator+(unsigned long v) const;
  UpperReal operator*(unsigned long v) const;
  UpperReal operator*(const mpz_class& v) const;
  UpperReal operator/(unsigned long v) const;
  UpperReal operator/(const mpz_class& v) const;
  /// Subtracting an exact integer rounds up as well, so monotone uses stay valid.
  UpperReal minus(unsigned long v) const;
  UpperReal pow(unsigned long n) const;

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  /// Exact comparison with a rational: sign of (this - v).
  int compare(const mpq_class& v) const;
  int compare(const UpperReal& other) const { return mpfr_cmp(value_, other.value_); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDU); }
  /// Scientific decimal, rounded upward, `digits` significant digits.
  std::string to_string(int digits = 20) const;

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

 private:
  mpfr_t value_;
};

/// C(a, j) for real a >= j - 1 and integer j >= 0 via (a)_j / j!, rounded up.
/// Equal to Gamma(a+1) / (Gamma(j+1) Gamma(a-j+1)) for such arguments.
UpperReal binomial_up(const UpperReal& a, unsigned long j);
/// (x)_r for real x >= r - 1, rounded up.
UpperReal falling_up(const UpperReal& x, unsigned long r);

/// Real binomial through log-Gamma (round-to-nearest), for any a >= b >= 0:
/// exp(lgamma(a+1) - lgamma(b+1) - lgamma(a-b+1)).
double binomial_gamma(double a, double b, unsigned precision_bits = kDefaultPrecisionBits);

}  // namespace rsdl
