#include "rsdl/bigmath.hpp"

#include <cstdlib>

#include "rsdl/error.hpp"

namespace rsdl {

mpz_class binomial(long n, long r) {
  if (r < 0 || n < 0 || r > n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
  return out;
}

mpq_class rational_pow(unsigned long q, long e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), q, static_cast<unsigned long>(e < 0 ? -e : e));
  if (e >= 0) return mpq_class(p);
  mpq_class out(1, p);
  out.canonicalize();
  return out;
}

mpz_class falling_factorial(long x, long r) {
  mpz_class out = 1;
  for (long i = 0; i < r; ++i) out *= x - i;
  return out;
}

mpz_class factorial(unsigned long n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

std::string to_string(const mpq_class& v) { return v.get_str(); }
std::string to_string(const mpz_class& v) { return v.get_str(); }

UpperReal::UpperReal(unsigned precision_bits) {
  mpfr_init2(value_, precision_bits);
  mpfr_set_zero(value_, 1);
}

UpperReal::UpperReal(const mpz_class& v, unsigned precision_bits) {
  mpfr_init2(value_, precision_bits);
  mpfr_set_z(value_, v.get_mpz_t(), MPFR_RNDU);
}

UpperReal::UpperReal(const mpq_class& v, unsigned precision_bits) {
  mpfr_init2(value_, precision_bits);
  mpfr_set_q(value_, v.get_mpq_t(), MPFR_RNDU);
}

UpperReal::UpperReal(const UpperReal& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDU);
}

UpperReal::UpperReal(UpperReal&& other) noexcept {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_swap(value_, other.value_);
}

UpperReal& UpperReal::operator=(const UpperReal& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDU);
  }
  return *this;
}

UpperReal& UpperReal::operator=(UpperReal&& other) noexcept {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_swap(value_, other.value_);
  }
  return *this;
}

UpperReal::~UpperReal() { mpfr_clear(value_); }

UpperReal UpperReal::from_ulong(unsigned long v, unsigned precision_bits) {
  UpperReal out(precision_bits);
  mpfr_set_ui(out.value_, v, MPFR_RNDU);
  return out;
}

UpperReal UpperReal::sqrt_of(unsigned long n, unsigned precision_bits) {
  UpperReal out(precision_bits);
  mpfr_sqrt_ui(out.value_, n, MPFR_RNDU);
  return out;
}

UpperReal UpperReal::operator+(const UpperReal& other) const {
  UpperReal out(precision());
  mpfr_add(out.value_, value_, other.value_, MPFR_RNDU);
  return out;
}

UpperReal UpperReal::operator*(const UpperReal& other) const {
  UpperReal out(precision());
  mpfr_mul(out.value_, value_, other.value_, MPFR_RNDU);
  return out;
}

UpperReal UpperReal::operator+(unsigned long v) const {
  UpperReal out(precision());
  mpfr_add_ui(out.value_, value_, v, MPFR_RNDU);
  return out;
}

UpperReal UpperReal::operator*(unsigned long v) const {
  UpperReal out(precision());
  mpfr_mul_ui(out.value_, value_, v, MPFR_RNDU);
  return out;
}

UpperReal UpperReal::operator*(const mpz_class& v) const {
  if (v < 0) throw Error(ErrorKind::InvalidArgument, "upper-rounded product with a negative factor");
  UpperReal out(precision());
  mpfr_mul_z(out.value_, value_, v.get_mpz_t(), MPFR_RNDU);
  return out;
}

UpperReal UpperReal::operator/(unsigned long v) const {
  UpperReal out(precision());
  mpfr_div_ui(out.value_, value_, v, MPFR_RNDU);
  return out;
}

UpperReal UpperReal::operator/(const mpz_class& v) const {
  if (v <= 0) throw Error(ErrorKind::InvalidArgument, "upper-rounded division by a nonpositive integer");
  UpperReal out(precision());
  mpfr_div_z(out.value_, value_, v.get_mpz_t(), MPFR_RNDU);
  return out;
}

UpperReal UpperReal::minus(unsigned long v) const {
  UpperReal out(precision());
  mpfr_sub_ui(out.value_, value_, v, MPFR_RNDU);
  return out;
}

UpperReal UpperReal::pow(unsigned long n) const {
  UpperReal out(precision());
  mpfr_pow_ui(out.value_, value_, n, MPFR_RNDU);
  return out;
}

int UpperReal::compare(const mpq_class& v) const { return mpfr_cmp_q(value_, v.get_mpq_t()); }

std::string UpperReal::to_string(int digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*RUe", digits - 1, value_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

UpperReal binomial_up(const UpperReal& a, unsigned long j) {
  UpperReal num = UpperReal::from_ulong(1, a.precision());
  for (unsigned long i = 0; i < j; ++i) {
    const UpperReal factor = a.minus(i);
    if (mpfr_sgn(factor.get()) < 0) throw Error(ErrorKind::RangeError, "binomial_up needs a >= j - 1");
    num = num * factor;
  }
  return num / factorial(j);
}

UpperReal falling_up(const UpperReal& x, unsigned long r) {
  UpperReal out = UpperReal::from_ulong(1, x.precision());
  for (unsigned long i = 0; i < r; ++i) {
    const UpperReal factor = x.minus(i);
    if (mpfr_sgn(factor.get()) < 0) throw Error(ErrorKind::RangeError, "falling_up needs x >= r - 1");
    out = out * factor;
  }
  return out;
}

double binomial_gamma(double a, double b, unsigned precision_bits) {
  mpfr_t x, acc, tmp;
  mpfr_inits2(precision_bits, x, acc, tmp, static_cast<mpfr_ptr>(nullptr));
  int sign = 0;
  mpfr_set_d(x, a + 1, MPFR_RNDN);
  mpfr_lgamma(acc, &sign, x, MPFR_RNDN);
  mpfr_set_d(x, b + 1, MPFR_RNDN);
  mpfr_lgamma(tmp, &sign, x, MPFR_RNDN);
  mpfr_sub(acc, acc, tmp, MPFR_RNDN);
  mpfr_set_d(x, a - b + 1, MPFR_RNDN);
  mpfr_lgamma(tmp, &sign, x, MPFR_RNDN);
  mpfr_sub(acc, acc, tmp, MPFR_RNDN);
  mpfr_exp(acc, acc, MPFR_RNDN);
  const double out = mpfr_get_d(acc, MPFR_RNDN);
  mpfr_clears(x, acc, tmp, static_cast<mpfr_ptr>(nullptr));
  return out;
}

}  // namespace rsdl
