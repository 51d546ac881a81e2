#include "rsdl/poly.hpp"

#include <algorithm>
#include <sstream>

namespace rsdl {

namespace {

void check_same_field(const Poly& a, const Poly& b) {
  if (a.field() != b.field()) throw Error(ErrorKind::FieldMismatch, "operands over different fields");
}

}  // namespace

Poly::Poly(Field field, std::vector<Elem> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (auto c : coeffs_)
    if (c >= field_.q()) throw Error(ErrorKind::InvalidArgument, "coefficient out of range");
  normalize();
}

void Poly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::constant(const Field& field, Elem c) { return Poly(field, {c}); }

Poly Poly::monomial(const Field& field, std::size_t n, Elem c) {
  std::vector<Elem> v(n + 1, 0);
  v[n] = c;
  return Poly(field, std::move(v));
}

Poly Poly::linear_root(const Field& field, Elem a) { return Poly(field, {field.neg(a), 1}); }

std::optional<std::size_t> Poly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Elem Poly::eval(Elem a) const {
  Elem acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = field_.add(field_.mul(acc, a), coeffs_[i]);
  return acc;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(field_.inv(leading()));
}

Poly Poly::without_terms_below(std::size_t k) const {
  Poly out = *this;
  for (std::size_t i = 0; i < std::min(k, out.coeffs_.size()); ++i) out.coeffs_[i] = 0;
  out.normalize();
  return out;
}

Poly Poly::truncated(std::size_t k) const {
  Poly out = *this;
  if (out.coeffs_.size() > k) out.coeffs_.resize(k);
  out.normalize();
  return out;
}

Poly Poly::scaled(Elem c) const {
  Poly out = *this;
  for (auto& v : out.coeffs_) v = field_.mul(v, c);
  out.normalize();
  return out;
}

Poly Poly::shifted(Elem a) const {
  // Horner in the ring: f(x + a) = (...(c_n (x+a) + c_{n-1})(x+a) + ...)
  const Poly xa(field_, {a, 1});
  Poly acc(field_);
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * xa + constant(field_, coeffs_[i]);
  return acc;
}

Poly operator+(const Poly& a, const Poly& b) {
  check_same_field(a, b);
  const auto& F = a.field();
  std::vector<Elem> out(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.add(a.coeff(i), b.coeff(i));
  return Poly(F, std::move(out));
}

Poly operator-(const Poly& a) {
  std::vector<Elem> out = a.coeffs();
  for (auto& c : out) c = a.field().neg(c);
  return Poly(a.field(), std::move(out));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  check_same_field(a, b);
  const auto& F = a.field();
  if (a.is_zero() || b.is_zero()) return Poly(F);
  std::vector<Elem> out(a.coeffs().size() + b.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j)
      out[i + j] = F.add(out[i + j], F.mul(a.coeffs()[i], b.coeffs()[j]));
  }
  return Poly(F, std::move(out));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  check_same_field(a, b);
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZeroPoly, "division by the zero polynomial");
  const auto& F = a.field();
  std::vector<Elem> rem = a.coeffs();
  const std::size_t db = *b.degree();
  if (rem.size() <= db) return {Poly(F), a};
  std::vector<Elem> quot(rem.size() - db, 0);
  const Elem lead_inv = F.inv(b.leading());
  for (std::size_t i = rem.size(); i-- > db;) {
    const Elem factor = F.mul(rem[i], lead_inv);
    if (factor == 0) continue;
    quot[i - db] = factor;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] = F.sub(rem[i - db + j], F.mul(factor, b.coeffs()[j]));
  }
  rem.resize(db);
  return {Poly(F, std::move(quot)), Poly(F, std::move(rem))};
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly gcd(const Poly& a, const Poly& b) {
  check_same_field(a, b);
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly powmod(const Poly& base, std::uint64_t n, const Poly& m) {
  Poly result = Poly::constant(base.field(), 1) % m;
  Poly b = base % m;
  while (n) {
    if (n & 1) result = (result * b) % m;
    b = (b * b) % m;
    n >>= 1;
  }
  return result;
}

std::size_t distinct_root_count(const Poly& f, const Exec& exec) {
  const auto& F = f.field();
  require_budget(F.q(), exec, "root count");
  if (f.is_zero()) return F.q();
  std::size_t count = 0;
  for (Elem a = 0; a < F.q(); ++a)
    if (f.eval(a) == 0) ++count;
  return count;
}

std::size_t distinct_root_count_on(const Poly& f, std::span<const Elem> domain) {
  if (f.is_zero()) return domain.size();
  std::size_t count = 0;
  for (Elem a : domain)
    if (f.eval(a) == 0) ++count;
  return count;
}

std::size_t distinct_root_count_gcd(const Poly& f) {
  const auto& F = f.field();
  if (f.is_zero()) return F.q();
  if (*f.degree() == 0) return 0;
  const Poly x = Poly::monomial(F, 1);
  const Poly frob = powmod(x, F.q(), f) - x;  // x^q - x mod f
  return *gcd(f, frob).degree();
}

void Word::validate() const {
  if (values.size() != domain.size())
    throw Error(ErrorKind::InvalidArgument, "word length differs from the evaluation set size");
  std::vector<Elem> sorted = domain;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(ErrorKind::DuplicateDomainPoint, "evaluation set has a repeated point");
  for (auto v : values)
    if (v >= field.q()) throw Error(ErrorKind::InvalidArgument, "word value out of range");
  for (auto v : domain)
    if (v >= field.q()) throw Error(ErrorKind::InvalidArgument, "evaluation point out of range");
}

Word evaluate_word(const Poly& f, std::span<const Elem> domain) {
  Word w{f.field(), std::vector<Elem>(domain.begin(), domain.end()), {}};
  w.values.reserve(domain.size());
  for (Elem a : domain) w.values.push_back(f.eval(a));
  return w;
}

Poly lagrange_interpolate(const Word& u) {
  u.validate();
  const auto& F = u.field;
  const std::size_t n = u.size();
  // Master product prod (x - x_j), then divide out one factor per term.
  Poly master = Poly::constant(F, 1);
  for (Elem a : u.domain) master = master * Poly::linear_root(F, a);

  Poly result(F);
  for (std::size_t i = 0; i < n; ++i) {
    if (u.values[i] == 0) continue;
    Poly basis = divmod(master, Poly::linear_root(F, u.domain[i])).first;
    Elem denom = 1;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) denom = F.mul(denom, F.sub(u.domain[i], u.domain[j]));
    result = result + basis.scaled(F.div(u.values[i], denom));
  }
  return result;
}

std::string to_string(const Poly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    const Elem c = f.coeffs()[i];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c << '*';
    os << 'x';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

std::string to_list_string(const Poly& f) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i) os << ',';
    os << f.coeffs()[i];
  }
  os << ']';
  return os.str();
}

}  // namespace rsdl
