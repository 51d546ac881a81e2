#include "rsdl/characters.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <unordered_map>

#include "rsdl/parallel.hpp"

namespace rsdl {

namespace {

std::uint64_t ipow(std::uint64_t base, std::size_t n) {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < n; ++i) v *= base;
  return v;
}

}  // namespace

ResidueRing::ResidueRing(const Poly& modulus, const Exec& exec) : modulus_(modulus) {
  const auto d = modulus.degree();
  if (!d || *d == 0 || !modulus.is_monic())
    throw Error(ErrorKind::InvalidArgument, "residue ring modulus must be monic of degree >= 1");
  n_ = *d;
  require_budget(std::pow(static_cast<double>(field().q()), static_cast<double>(n_)), exec, "residue ring");
  size_ = ipow(field().q(), n_);
  if (size_ > (1ull << 31)) throw Error(ErrorKind::BudgetExceeded, "residue ring too large");
  reduce_top_.resize(n_);
  for (std::size_t i = 0; i < n_; ++i) reduce_top_[i] = field().neg(modulus.coeff(i));
}

std::vector<Elem> ResidueRing::digits(Res r) const {
  std::vector<Elem> out(n_);
  const std::uint32_t q = field().q();
  for (std::size_t i = 0; i < n_; ++i) {
    out[i] = r % q;
    r /= q;
  }
  return out;
}

ResidueRing::Res ResidueRing::from_digits(const std::vector<Elem>& d) const {
  Res out = 0;
  const std::uint32_t q = field().q();
  for (std::size_t i = n_; i-- > 0;) out = out * q + (i < d.size() ? d[i] : 0);
  return out;
}

ResidueRing::Res ResidueRing::from_poly(const Poly& g) const {
  if (g.field() != field()) throw Error(ErrorKind::FieldMismatch, "residue of a polynomial over another field");
  const Poly r = g % modulus_;
  return from_digits(r.coeffs());
}

Poly ResidueRing::to_poly(Res r) const { return Poly(field(), digits(r)); }

ResidueRing::Res ResidueRing::mul(Res a, Res b) const {
  const Field& F = field();
  const auto da = digits(a), db = digits(b);
  std::vector<Elem> c(2 * n_ - 1, 0);
  for (std::size_t i = 0; i < n_; ++i) {
    if (da[i] == 0) continue;
    for (std::size_t j = 0; j < n_; ++j) c[i + j] = F.add(c[i + j], F.mul(da[i], db[j]));
  }
  // x^n = sum reduce_top_[i] x^i
  for (std::size_t i = c.size(); i-- > n_;) {
    const Elem top = c[i];
    if (top == 0) continue;
    for (std::size_t j = 0; j < n_; ++j) c[i - n_ + j] = F.add(c[i - n_ + j], F.mul(top, reduce_top_[j]));
  }
  c.resize(n_);
  return from_digits(c);
}

ResidueRing::Res ResidueRing::pow(Res a, std::uint64_t e) const {
  Res out = one(), base = a;
  while (e) {
    if (e & 1) out = mul(out, base);
    base = mul(base, base);
    e >>= 1;
  }
  return out;
}

bool ResidueRing::is_unit(Res r) const {
  const Poly g = gcd(to_poly(r), modulus_);
  return g.degree() == std::optional<std::size_t>(0);
}

bool ResidueRing::is_power_of_x() const {
  for (std::size_t i = 0; i < n_; ++i)
    if (modulus_.coeff(i) != 0) return false;
  return true;
}

std::vector<ResidueRing::Res> ResidueRing::units() const {
  std::vector<Res> out;
  for (Res r = 0; r < size_; ++r)
    if (is_unit(r)) out.push_back(r);
  return out;
}

std::vector<ResidueRing::Res> ResidueRing::one_units() const {
  if (!is_power_of_x()) throw Error(ErrorKind::InvalidArgument, "one-units need the modulus x^n");
  std::vector<Res> out;
  const std::uint32_t q = field().q();
  for (Res r = 0; r < size_; ++r)
    if (r % q == 1) out.push_back(r);
  return out;
}

std::uint64_t ResidueRing::unit_count_formula() const {
  // Trial division by monic polynomials in increasing degree leaves only
  // irreducible divisors.
  const Field& F = field();
  const std::uint32_t q = F.q();
  Poly rest = modulus_;
  std::vector<std::size_t> factor_degrees;
  for (std::size_t deg = 1; deg <= n_ && *rest.degree() >= deg; ++deg) {
    const std::uint64_t count = ipow(q, deg);
    for (std::uint64_t v = 0; v < count; ++v) {
      std::vector<Elem> coeffs(deg + 1);
      std::uint64_t t = v;
      for (std::size_t i = 0; i < deg; ++i) {
        coeffs[i] = static_cast<Elem>(t % q);
        t /= q;
      }
      coeffs[deg] = 1;
      const Poly P(F, coeffs);
      bool divides = false;
      while (*rest.degree() >= deg) {
        auto [quot, rem] = divmod(rest, P);
        if (!rem.is_zero()) break;
        rest = quot;
        divides = true;
      }
      if (divides) factor_degrees.push_back(deg);
    }
  }
  // q^n prod (1 - q^{-deg P}) = q^{n - sum deg P} prod (q^{deg P} - 1)
  std::size_t sum = 0;
  std::uint64_t out = 1;
  for (auto d : factor_degrees) {
    sum += d;
    out *= ipow(q, d) - 1;
  }
  return out * ipow(q, n_ - sum);
}

std::uint64_t element_order(const ResidueRing& ring, ResidueRing::Res r) {
  std::uint64_t ord = 1;
  ResidueRing::Res x = r;
  while (x != ring.one()) {
    x = ring.mul(x, r);
    if (++ord > ring.size()) throw Error(ErrorKind::InvalidArgument, "element is not a unit");
  }
  return ord;
}

std::vector<std::uint32_t> AbelianGroup::coordinates(ResidueRing::Res r) const {
  if (!contains(r)) throw Error(ErrorKind::InvalidArgument, "residue outside the group");
  std::uint64_t c = static_cast<std::uint64_t>(code[r]);
  std::vector<std::uint32_t> out(orders.size());
  for (std::size_t j = 0; j < orders.size(); ++j) {
    out[j] = static_cast<std::uint32_t>(c % orders[j]);
    c /= orders[j];
  }
  return out;
}

AbelianGroup decompose(std::shared_ptr<const ResidueRing> ring_ptr, std::vector<ResidueRing::Res> elements) {
  const ResidueRing& ring = *ring_ptr;
  std::sort(elements.begin(), elements.end());
  AbelianGroup G;
  G.ring = ring_ptr;
  G.elements = elements;
  const std::uint64_t total = elements.size();

  std::vector<std::uint64_t> order(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) order[i] = element_order(ring, elements[i]);

  for (std::uint64_t ell : prime_factors(total)) {
    std::vector<ResidueRing::Res> sylow;
    for (std::size_t i = 0; i < elements.size(); ++i) {
      std::uint64_t o = order[i];
      while (o % ell == 0) o /= ell;
      if (o == 1) sylow.push_back(elements[i]);
    }
    // H = <basis>, with coordinates of each member.
    std::unordered_map<ResidueRing::Res, std::vector<std::uint32_t>> H{{ring.one(), {}}};
    std::vector<ResidueRing::Res> basis;
    std::vector<std::uint32_t> basis_orders;
    while (H.size() < sylow.size()) {
      // Element of largest order modulo H.
      ResidueRing::Res best = 0;
      std::uint32_t best_s = 0;
      for (auto g : sylow) {
        if (H.count(g)) continue;
        std::uint32_t s = 0;
        for (auto x = g; !H.count(x); x = ring.pow(x, ell)) ++s;
        if (s > best_s) best = g, best_s = s;
      }
      const std::uint64_t ls = ipow(ell, best_s);
      const auto& a = H.at(ring.pow(best, ls));
      // g^{l^s} = prod b_i^{a_i}; every a_i is divisible by l^s.
      ResidueRing::Res root = ring.one();
      for (std::size_t i = 0; i < basis.size(); ++i) {
        if (a[i] % ls) throw Error(ErrorKind::InvalidArgument, "group decomposition failed");
        root = ring.mul(root, ring.pow(basis[i], a[i] / ls));
      }
      const ResidueRing::Res g = ring.mul(best, ring.pow(root, total - 1));
      if (ring.pow(g, ls) != ring.one()) throw Error(ErrorKind::InvalidArgument, "group decomposition failed");

      std::unordered_map<ResidueRing::Res, std::vector<std::uint32_t>> grown;
      for (const auto& [x, c] : H) {
        ResidueRing::Res y = x;
        for (std::uint32_t j = 0; j < ls; ++j) {
          auto cj = c;
          cj.push_back(j);
          grown.emplace(y, std::move(cj));
          y = ring.mul(y, g);
        }
      }
      H = std::move(grown);
      basis.push_back(g);
      basis_orders.push_back(static_cast<std::uint32_t>(ls));
    }
    G.generators.insert(G.generators.end(), basis.begin(), basis.end());
    G.orders.insert(G.orders.end(), basis_orders.begin(), basis_orders.end());
  }

  G.exponent = 1;
  for (auto o : G.orders) G.exponent = std::lcm(G.exponent, o);

  // Enumerate every generator product once, in mixed radix order.
  G.code.assign(ring.size(), -1);
  std::vector<bool> member(ring.size(), false);
  for (auto e : elements) member[e] = true;
  std::vector<std::uint32_t> a(G.orders.size(), 0);
  for (std::uint64_t c = 0; c < total; ++c) {
    std::uint64_t t = c;
    ResidueRing::Res x = ring.one();
    for (std::size_t j = 0; j < G.orders.size(); ++j) {
      a[j] = static_cast<std::uint32_t>(t % G.orders[j]);
      t /= G.orders[j];
      x = ring.mul(x, ring.pow(G.generators[j], a[j]));
    }
    if (!member[x] || G.code[x] >= 0) throw Error(ErrorKind::InvalidArgument, "generators do not span the group");
    G.code[x] = static_cast<std::int64_t>(c);
  }
  return G;
}

CharacterGroup::CharacterGroup(AbelianGroup units, std::vector<std::vector<std::uint32_t>> chars)
    : units_(std::move(units)), chars_(std::move(chars)) {
  lookup_.assign(units_.order(), -1);
  for (std::size_t i = 0; i < chars_.size(); ++i) {
    std::uint64_t c = 0, stride = 1;
    for (std::size_t j = 0; j < units_.orders.size(); ++j) {
      c += chars_[i][j] * stride;
      stride *= units_.orders[j];
    }
    lookup_[c] = static_cast<std::int64_t>(i);
  }
}

CharacterGroup CharacterGroup::full(std::shared_ptr<const ResidueRing> ring) {
  AbelianGroup units = decompose(ring, ring->units());
  std::vector<std::vector<std::uint32_t>> chars;
  chars.reserve(units.order());
  for (std::uint64_t c = 0; c < units.order(); ++c) {
    std::vector<std::uint32_t> e(units.orders.size());
    std::uint64_t t = c;
    for (std::size_t j = 0; j < e.size(); ++j) {
      e[j] = static_cast<std::uint32_t>(t % units.orders[j]);
      t /= units.orders[j];
    }
    chars.push_back(std::move(e));
  }
  return CharacterGroup(std::move(units), std::move(chars));
}

CharacterGroup CharacterGroup::trivial_on_scalars(std::shared_ptr<const ResidueRing> ring) {
  CharacterGroup all = full(ring);
  const ResidueRing::Res gen = ring->scalar(ring->field().primitive_element());
  std::vector<std::vector<std::uint32_t>> kept;
  for (std::size_t i = 0; i < all.size(); ++i)
    if (all.value_exponent(i, gen) == 0) kept.push_back(all.chars_[i]);
  return CharacterGroup(std::move(all.units_), std::move(kept));
}

std::size_t CharacterGroup::index_of(const std::vector<std::uint32_t>& e) const {
  std::uint64_t c = 0, stride = 1;
  for (std::size_t j = 0; j < e.size(); ++j) {
    c += e[j] * stride;
    stride *= units_.orders[j];
  }
  if (lookup_[c] < 0) throw Error(ErrorKind::InvalidArgument, "character outside this group");
  return static_cast<std::size_t>(lookup_[c]);
}

bool CharacterGroup::is_trivial(std::size_t chi) const {
  for (auto e : chars_[chi])
    if (e) return false;
  return true;
}

std::int64_t CharacterGroup::value_exponent(std::size_t chi, ResidueRing::Res r) const {
  if (!units_.contains(r)) return -1;
  std::uint64_t c = static_cast<std::uint64_t>(units_.code[r]);
  std::uint64_t s = 0;
  const auto& e = chars_[chi];
  for (std::size_t j = 0; j < e.size(); ++j) {
    const std::uint32_t n = units_.orders[j];
    s += (c % n) * e[j] * (units_.exponent / n);
    c /= n;
  }
  return static_cast<std::int64_t>(s % units_.exponent);
}

Cyclo CharacterGroup::value(std::size_t chi, ResidueRing::Res r) const {
  const std::int64_t ex = value_exponent(chi, r);
  if (ex < 0) return Cyclo(root_order());
  return Cyclo::root_power(root_order(), static_cast<std::uint64_t>(ex));
}

std::uint64_t CharacterGroup::order_of(std::size_t chi) const {
  std::uint64_t out = 1;
  const auto& e = chars_[chi];
  for (std::size_t j = 0; j < e.size(); ++j) {
    const std::uint64_t n = units_.orders[j];
    out = std::lcm(out, n / std::gcd(n, static_cast<std::uint64_t>(e[j])));
  }
  return out;
}

std::size_t CharacterGroup::power(std::size_t chi, std::uint64_t t) const {
  auto e = chars_[chi];
  for (std::size_t j = 0; j < e.size(); ++j) e[j] = static_cast<std::uint32_t>((e[j] * t) % units_.orders[j]);
  return index_of(e);
}

std::size_t CharacterGroup::product(std::size_t a, std::size_t b) const {
  auto e = chars_[a];
  for (std::size_t j = 0; j < e.size(); ++j) e[j] = (e[j] + chars_[b][j]) % units_.orders[j];
  return index_of(e);
}

std::vector<std::uint64_t> monic_residue_histogram(const ResidueRing& ring, std::size_t k, const Exec& exec) {
  const Field& F = ring.field();
  const std::size_t n = ring.degree();
  require_budget(std::pow(static_cast<double>(F.q()), static_cast<double>(k)) * static_cast<double>(n), exec,
                 "monic residue histogram");

  // Residues of x^0 .. x^k as digit vectors.
  std::vector<std::vector<Elem>> xpow;
  ResidueRing::Res x = n >= 2 ? F.q() : ring.from_poly(Poly::monomial(F, 1));
  ResidueRing::Res cur = ring.one();
  for (std::size_t j = 0; j <= k; ++j) {
    xpow.push_back(ring.digits(cur));
    cur = ring.mul(cur, x);
  }
  const std::uint32_t p = F.p();
  const std::size_t digits = k * F.e();
  std::vector<std::vector<Elem>> delta(digits, std::vector<Elem>(n));
  for (std::size_t j = 0; j < k; ++j)
    for (std::uint32_t t = 0; t < F.e(); ++t)
      for (std::size_t i = 0; i < n; ++i) delta[j * F.e() + t][i] = F.mul(F.basis(t), xpow[j][i]);

  const std::uint64_t total = ipow(F.q(), k);
  using Hist = std::vector<std::uint64_t>;
  auto chunks = map_chunks<Hist>(total, exec.workers, [&](std::uint64_t begin, std::uint64_t end) {
    Hist hist(ring.size(), 0);
    std::vector<std::uint32_t> digit(digits, 0);
    std::vector<Elem> value = xpow[k];
    std::uint64_t v = begin;
    for (std::size_t d = 0; d < digits; ++d) {
      digit[d] = static_cast<std::uint32_t>(v % p);
      v /= p;
      for (std::uint32_t s = 0; s < digit[d]; ++s)
        for (std::size_t i = 0; i < n; ++i) value[i] = F.add(value[i], delta[d][i]);
    }
    for (std::uint64_t g = begin; g < end; ++g) {
      ++hist[ring.from_digits(value)];
      for (std::size_t d = 0; d < digits; ++d) {
        for (std::size_t i = 0; i < n; ++i) value[i] = F.add(value[i], delta[d][i]);
        if (++digit[d] < p) break;
        digit[d] = 0;
      }
    }
    return hist;
  });
  Hist hist(ring.size(), 0);
  for (const auto& c : chunks)
    for (std::size_t i = 0; i < hist.size(); ++i) hist[i] += c[i];
  return hist;
}

Cyclo character_sum(const CharacterGroup& group, std::size_t chi, const std::vector<std::uint64_t>& hist) {
  Cyclo out(group.root_order());
  for (std::size_t r = 0; r < hist.size(); ++r) {
    if (hist[r] == 0) continue;
    const std::int64_t ex = group.value_exponent(chi, static_cast<ResidueRing::Res>(r));
    if (ex >= 0) out.add_power(static_cast<std::uint64_t>(ex), static_cast<std::int64_t>(hist[r]));
  }
  return out;
}

std::complex<double> character_sum_float(const CharacterGroup& group, std::size_t chi,
                                         const std::vector<std::uint64_t>& hist) {
  std::complex<double> out = 0;
  const double step = 2 * std::numbers::pi / group.root_order();
  for (std::size_t r = 0; r < hist.size(); ++r) {
    if (hist[r] == 0) continue;
    const std::int64_t ex = group.value_exponent(chi, static_cast<ResidueRing::Res>(r));
    if (ex >= 0) out += static_cast<double>(hist[r]) * std::polar(1.0, step * static_cast<double>(ex));
  }
  return out;
}

Cyclo M_k_sum(const CharacterGroup& group, std::size_t chi, std::size_t k, const Exec& exec) {
  return character_sum(group, chi, monic_residue_histogram(group.ring(), k, exec));
}

std::size_t LFunction::degree() const {
  std::size_t d = 0;
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    if (!coeffs[k].is_zero()) d = k;
  return d;
}

Cyclo LFunction::at_one() const { return partial_sum(coeffs.size() - 1); }

Cyclo LFunction::partial_sum(std::size_t k) const {
  Cyclo out(coeffs.front().order());
  for (std::size_t j = 0; j <= k && j < coeffs.size(); ++j) out += coeffs[j];
  return out;
}

LFunction l_function(const CharacterGroup& group, std::size_t chi,
                     const std::vector<std::vector<std::uint64_t>>& hists) {
  if (group.is_trivial(chi)) throw Error(ErrorKind::TrivialCharacter, "L-function of the trivial character");
  LFunction L;
  for (std::size_t k = 0; k < group.ring().degree(); ++k) L.coeffs.push_back(character_sum(group, chi, hists[k]));
  return L;
}

LFunction l_function(const CharacterGroup& group, std::size_t chi, const Exec& exec) {
  if (group.is_trivial(chi)) throw Error(ErrorKind::TrivialCharacter, "L-function of the trivial character");
  std::vector<std::vector<std::uint64_t>> hists;
  for (std::size_t k = 0; k < group.ring().degree(); ++k)
    hists.push_back(monic_residue_histogram(group.ring(), k, exec));
  return l_function(group, chi, hists);
}

}  // namespace rsdl
