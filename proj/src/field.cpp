#include "rsdl/field.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "rsdl/error.hpp"

namespace rsdl {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::ReducibleModulus: return "ReducibleModulus";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::DivisionByZeroPoly: return "DivisionByZeroPoly";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::DuplicateDomainPoint: return "DuplicateDomainPoint";
    case ErrorKind::IsCodeword: return "IsCodeword";
    case ErrorKind::NonIntegralResult: return "NonIntegralResult";
    case ErrorKind::TrivialCharacter: return "TrivialCharacter";
    case ErrorKind::NumericalInstability: return "NumericalInstability";
    case ErrorKind::KTooLarge: return "KTooLarge";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::RangeError: return "RangeError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

void require_budget(double work, const Exec& exec, const std::string& what) {
  if (!(work <= static_cast<double>(exec.budget))) {
    std::ostringstream os;
    os << what << " needs " << work << " steps, budget is " << exec.budget;
    throw Error(ErrorKind::BudgetExceeded, os.str());
  }
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

namespace {

using Coeffs = std::vector<std::uint32_t>;

void trim(Coeffs& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // p is prime: a^(p-2)
  std::uint64_t result = 1, base = a % p;
  std::uint32_t n = p - 2;
  while (n) {
    if (n & 1) result = result * base % p;
    base = base * base % p;
    n >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

// Remainder of a modulo b over F_p; b nonzero.
Coeffs rem_mod_p(Coeffs a, const Coeffs& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint64_t lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t factor = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - factor * b[i] % p) % p);
    }
    trim(a);
  }
  return a;
}

}  // namespace

bool is_irreducible_mod_p(const std::vector<std::uint32_t>& coeffs, std::uint32_t p) {
  Coeffs f = coeffs;
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t deg = f.size() - 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    // every monic divisor candidate of degree d
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Coeffs g(d + 1);
      std::uint64_t v = idx;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      g[d] = 1;
      if (rem_mod_p(f, g, p).empty()) return false;
    }
  }
  return true;
}

struct FieldData {
  std::uint32_t p = 0;
  std::uint32_t e = 0;
  std::uint32_t q = 0;
  Coeffs modulus;
  std::vector<std::uint32_t> pow_p;  // p^t, t = 0..e
  std::vector<Elem> exp_table;       // size q-1
  std::vector<std::uint32_t> log_table;  // size q, log_table[0] unused
  std::vector<Elem> neg_table;
  std::vector<Elem> add_table;  // q*q when q <= kAddTableMax
  Elem primitive = 0;

  static constexpr std::uint32_t kAddTableMax = 256;

  Coeffs to_digits(Elem a) const {
    Coeffs d(e);
    for (std::uint32_t t = 0; t < e; ++t) {
      d[t] = a % p;
      a /= p;
    }
    return d;
  }

  Elem from_digits(const Coeffs& d) const {
    Elem v = 0;
    for (std::uint32_t t = e; t-- > 0;) v = v * p + (t < d.size() ? d[t] : 0);
    return v;
  }

  Elem raw_add(Elem a, Elem b) const {
    if (e == 1) return (a + b) % p;
    if (p == 2) return a ^ b;
    Elem out = 0;
    for (std::uint32_t t = 0; t < e; ++t) {
      out += ((a % p + b % p) % p) * pow_p[t];
      a /= p;
      b /= p;
    }
    return out;
  }

  Elem raw_mul(Elem a, Elem b) const {
    if (e == 1) return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p);
    const Coeffs da = to_digits(a), db = to_digits(b);
    Coeffs prod(2 * e - 1, 0);
    for (std::uint32_t i = 0; i < e; ++i)
      for (std::uint32_t j = 0; j < e; ++j)
        prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p);
    return from_digits(rem_mod_p(prod, modulus, p));
  }

  Elem raw_pow(Elem a, std::uint64_t n) const {
    Elem result = 1;
    while (n) {
      if (n & 1) result = raw_mul(result, a);
      a = raw_mul(a, a);
      n >>= 1;
    }
    return result;
  }

  void build_tables() {
    pow_p.assign(e + 1, 1);
    for (std::uint32_t t = 1; t <= e; ++t) pow_p[t] = pow_p[t - 1] * p;

    neg_table.resize(q);
    for (Elem a = 0; a < q; ++a) {
      Coeffs d = to_digits(a);
      for (auto& c : d) c = (p - c) % p;
      neg_table[a] = from_digits(d);
    }

    if (q <= kAddTableMax) {
      add_table.resize(static_cast<std::size_t>(q) * q);
      for (Elem a = 0; a < q; ++a)
        for (Elem b = 0; b < q; ++b) add_table[a * q + b] = raw_add(a, b);
    }

    // Smallest primitive element in canonical order.
    const auto factors = prime_factors(q - 1);
    for (Elem g = 1; g < q; ++g) {
      bool ok = true;
      for (auto l : factors) {
        if (raw_pow(g, (q - 1) / l) == 1) {
          ok = false;
          break;
        }
      }
      if (ok) {
        primitive = g;
        break;
      }
    }

    exp_table.resize(q - 1);
    log_table.assign(q, 0);
    Elem x = 1;
    for (std::uint32_t i = 0; i + 1 < q; ++i) {
      exp_table[i] = x;
      log_table[x] = i;
      x = raw_mul(x, primitive);
    }
  }
};

Field Field::make(std::uint32_t p, std::uint32_t e,
                  std::optional<std::vector<std::uint32_t>> modulus) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (e < 1) throw Error(ErrorKind::RangeError, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxFieldOrder) throw Error(ErrorKind::RangeError, "field order exceeds 2^20");
  }

  auto data = std::make_shared<FieldData>();
  data->p = p;
  data->e = e;
  data->q = static_cast<std::uint32_t>(q);

  if (e > 1) {
    if (modulus) {
      Coeffs m = *modulus;
      for (auto& c : m) c %= p;
      trim(m);
      if (m.size() != e + 1 || m.back() != 1)
        throw Error(ErrorKind::InvalidArgument, "modulus must be monic of degree " + std::to_string(e));
      if (!is_irreducible_mod_p(m, p))
        throw Error(ErrorKind::ReducibleModulus, "modulus is reducible over F_" + std::to_string(p));
      data->modulus = std::move(m);
    } else {
      const std::uint64_t count = q;  // p^e candidates for the low coefficients
      for (std::uint64_t idx = 0; idx < count; ++idx) {
        Coeffs m(e + 1);
        std::uint64_t v = idx;
        for (std::uint32_t i = 0; i < e; ++i) {
          m[i] = static_cast<std::uint32_t>(v % p);
          v /= p;
        }
        m[e] = 1;
        if (is_irreducible_mod_p(m, p)) {
          data->modulus = std::move(m);
          break;
        }
      }
    }
  } else if (modulus && !modulus->empty()) {
    Coeffs m = *modulus;
    for (auto& c : m) c %= p;
    trim(m);
    if (m.size() != 2 || m.back() != 1)
      throw Error(ErrorKind::InvalidArgument, "prime-field modulus must be monic linear");
  }

  data->build_tables();
  return Field(std::move(data));
}

Field Field::of_order(std::uint32_t q) {
  if (q < 2) throw Error(ErrorKind::NotPrime, std::to_string(q) + " is not a prime power");
  const auto f = prime_factors(q);
  if (f.size() != 1) throw Error(ErrorKind::NotPrime, std::to_string(q) + " is not a prime power");
  std::uint32_t e = 0;
  for (std::uint32_t v = q; v > 1; v /= static_cast<std::uint32_t>(f[0])) ++e;
  return make(static_cast<std::uint32_t>(f[0]), e);
}

std::uint32_t Field::p() const { return data_->p; }
std::uint32_t Field::e() const { return data_->e; }
std::uint32_t Field::q() const { return data_->q; }
const std::vector<std::uint32_t>& Field::modulus() const { return data_->modulus; }

Elem Field::add(Elem a, Elem b) const {
  const auto& d = *data_;
  if (!d.add_table.empty()) return d.add_table[a * d.q + b];
  return d.raw_add(a, b);
}

Elem Field::neg(Elem a) const { return data_->neg_table[a]; }
Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  const auto& d = *data_;
  std::uint32_t s = d.log_table[a] + d.log_table[b];
  if (s >= d.q - 1) s -= d.q - 1;
  return d.exp_table[s];
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw Error(ErrorKind::InvalidArgument, "inverse of zero");
  const auto& d = *data_;
  const std::uint32_t l = d.log_table[a];
  return d.exp_table[l == 0 ? 0 : d.q - 1 - l];
}

Elem Field::div(Elem a, Elem b) const { return mul(a, inv(b)); }

Elem Field::pow(Elem a, std::uint64_t n) const {
  if (n == 0) return 1;
  if (a == 0) return 0;
  const auto& d = *data_;
  const std::uint64_t l = (static_cast<std::uint64_t>(d.log_table[a]) * (n % (d.q - 1))) % (d.q - 1);
  return d.exp_table[l];
}

Elem Field::from_int(std::int64_t n) const {
  const std::int64_t p = data_->p;
  return static_cast<Elem>(((n % p) + p) % p);
}

Elem Field::primitive_element() const { return data_->primitive; }
std::vector<std::uint32_t> Field::digits(Elem a) const { return data_->to_digits(a); }
Elem Field::basis(std::uint32_t t) const { return data_->pow_p.at(t); }

std::vector<Elem> Field::elements() const {
  std::vector<Elem> out(q());
  for (Elem a = 0; a < q(); ++a) out[a] = a;
  return out;
}

std::vector<Elem> Field::nonzero_elements() const {
  std::vector<Elem> out(q() - 1);
  for (Elem a = 1; a < q(); ++a) out[a - 1] = a;
  return out;
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "q=" << p();
  if (e() > 1) {
    os << '^' << e() << " mod=";
    bool first = true;
    for (std::size_t i = 0; i < modulus().size(); ++i) {
      const auto c = modulus()[i];
      if (c == 0) continue;
      if (!first) os << " + ";
      first = false;
      if (i == 0) {
        os << c;
      } else {
        if (c != 1) os << c << '*';
        os << 'x';
        if (i > 1) os << '^' << i;
      }
    }
  }
  return os.str();
}

bool Field::operator==(const Field& other) const {
  if (data_ == other.data_) return true;
  return p() == other.p() && e() == other.e() && modulus() == other.modulus();
}

}  // namespace rsdl
