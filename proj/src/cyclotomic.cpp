#include "rsdl/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

#include "rsdl/error.hpp"

namespace rsdl {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw Error(ErrorKind::RangeError, "cyclotomic coefficient overflow");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw Error(ErrorKind::RangeError, "cyclotomic coefficient overflow");
  return out;
}

// Exact division of integer polynomials by a monic divisor.
std::vector<std::int64_t> divide_exact(std::vector<std::int64_t> a, const std::vector<std::int64_t>& b) {
  const std::size_t db = b.size() - 1;
  std::vector<std::int64_t> q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    const std::int64_t c = a[i];
    q[i - db] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  return q;
}

}  // namespace

namespace {

std::map<std::uint32_t, std::vector<std::int64_t>>& phi_cache() {
  static std::map<std::uint32_t, std::vector<std::int64_t>> cache;
  return cache;
}

// Caller holds the cache mutex.
const std::vector<std::int64_t>& phi_locked(std::uint32_t n) {
  auto& cache = phi_cache();
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  // x^n - 1 divided by every Phi_d with d | n, d < n.
  std::vector<std::int64_t> poly(n + 1, 0);
  poly[0] = -1;
  poly[n] = 1;
  for (std::uint32_t d = 1; d < n; ++d)
    if (n % d == 0) poly = divide_exact(poly, phi_locked(d));
  return cache.emplace(n, std::move(poly)).first->second;
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_poly(std::uint32_t n) {
  static std::mutex mutex;
  std::lock_guard lock(mutex);
  return phi_locked(n);
}

Cyclo::Cyclo(std::uint32_t order) : order_(order), c_(order, 0) {
  if (order == 0) throw Error(ErrorKind::InvalidArgument, "root of unity order must be positive");
}

Cyclo Cyclo::integer(std::uint32_t order, std::int64_t v) {
  Cyclo out(order);
  out.c_[0] = v;
  return out;
}

Cyclo Cyclo::root_power(std::uint32_t order, std::uint64_t exponent) {
  Cyclo out(order);
  out.c_[exponent % order] = 1;
  return out;
}

void Cyclo::add_power(std::uint64_t exponent, std::int64_t times) {
  auto& slot = c_[exponent % order_];
  slot = checked_add(slot, times);
}

Cyclo& Cyclo::operator+=(const Cyclo& other) {
  if (other.order_ != order_) throw Error(ErrorKind::InvalidArgument, "mixed root of unity orders");
  for (std::uint32_t j = 0; j < order_; ++j) c_[j] = checked_add(c_[j], other.c_[j]);
  return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& other) {
  if (other.order_ != order_) throw Error(ErrorKind::InvalidArgument, "mixed root of unity orders");
  for (std::uint32_t j = 0; j < order_; ++j) c_[j] = checked_add(c_[j], -other.c_[j]);
  return *this;
}

Cyclo& Cyclo::operator*=(std::int64_t s) {
  for (auto& v : c_) v = checked_mul(v, s);
  return *this;
}

Cyclo Cyclo::operator+(const Cyclo& other) const {
  Cyclo out = *this;
  out += other;
  return out;
}

Cyclo Cyclo::operator-(const Cyclo& other) const {
  Cyclo out = *this;
  out -= other;
  return out;
}

Cyclo Cyclo::operator*(std::int64_t s) const {
  Cyclo out = *this;
  out *= s;
  return out;
}

Cyclo Cyclo::operator*(const Cyclo& other) const {
  if (other.order_ != order_) throw Error(ErrorKind::InvalidArgument, "mixed root of unity orders");
  Cyclo out(order_);
  for (std::uint32_t i = 0; i < order_; ++i) {
    if (c_[i] == 0) continue;
    for (std::uint32_t j = 0; j < order_; ++j) {
      if (other.c_[j] == 0) continue;
      out.add_power(i + j, checked_mul(c_[i], other.c_[j]));
    }
  }
  return out;
}

Cyclo Cyclo::conj() const {
  Cyclo out(order_);
  for (std::uint32_t j = 0; j < order_; ++j) out.c_[(order_ - j) % order_] = c_[j];
  return out;
}

Cyclo Cyclo::pow(unsigned n) const {
  Cyclo out = integer(order_, 1);
  for (unsigned i = 0; i < n; ++i) out = out * *this;
  return out;
}

Cyclo Cyclo::reduced() const {
  const auto& phi = cyclotomic_poly(order_);
  const std::size_t deg = phi.size() - 1;
  std::vector<std::int64_t> a = c_;
  for (std::size_t i = a.size(); i-- > deg;) {
    const std::int64_t c = a[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= deg; ++j) a[i - deg + j] = checked_add(a[i - deg + j], -checked_mul(c, phi[j]));
  }
  Cyclo out(order_);
  for (std::size_t j = 0; j < deg; ++j) out.c_[j] = a[j];
  return out;
}

bool Cyclo::is_zero() const {
  const Cyclo r = reduced();
  for (auto v : r.c_)
    if (v != 0) return false;
  return true;
}

bool Cyclo::is_integer(std::int64_t* value) const {
  const Cyclo r = reduced();
  for (std::uint32_t j = 1; j < order_; ++j)
    if (r.c_[j] != 0) return false;
  if (value) *value = r.c_[0];
  return true;
}

std::complex<double> Cyclo::embed() const {
  const auto v = embed_ld();
  return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

std::complex<long double> Cyclo::embed_ld() const {
  std::complex<long double> out = 0;
  const long double step = 2 * std::numbers::pi_v<long double> / order_;
  for (std::uint32_t j = 0; j < order_; ++j) {
    if (c_[j] == 0) continue;
    out += static_cast<long double>(c_[j]) * std::polar(1.0L, step * j);
  }
  return out;
}

std::string Cyclo::to_string() const {
  const Cyclo r = reduced();
  std::ostringstream os;
  bool first = true;
  for (std::uint32_t j = 0; j < order_; ++j) {
    const std::int64_t c = r.c_[j];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    const std::int64_t a = c < 0 ? -c : c;
    if (j == 0) os << a;
    else {
      if (a != 1) os << a << "*";
      os << "z" << (j == 1 ? "" : "^" + std::to_string(j));
    }
    first = false;
  }
  if (first) return "0";
  return os.str();
}

}  // namespace rsdl
