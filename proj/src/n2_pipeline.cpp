#include "rsdl/n2_pipeline.hpp"

#include <cmath>

#include "rsdl/characters.hpp"
#include "rsdl/closed_forms.hpp"
#include "rsdl/exact_counts.hpp"
#include "rsdl/sieve.hpp"

namespace rsdl {

namespace {

std::uint64_t ipow(std::uint64_t base, std::size_t n) {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < n; ++i) v *= base;
  return v;
}

double falling_d(double x, long r) {
  double out = 1;
  for (long i = 0; i < r; ++i) out *= x - static_cast<double>(i);
  return out;
}

}  // namespace

std::int64_t n2_via_characters(const Poly& target, std::size_t r, std::size_t d, std::size_t m, bool star,
                               const Exec& exec) {
  const Field& F = target.field();
  if (target.coeff(0) != 1) throw Error(ErrorKind::InvalidArgument, "N2 target must have constant term 1");
  if (r > d) throw Error(ErrorKind::RangeError, "N2 needs r <= d");
  require_sieve_k(r);
  auto ring = std::make_shared<const ResidueRing>(Poly::monomial(F, m + 1), exec);
  const CharacterGroup G = CharacterGroup::trivial_on_scalars(ring);
  const std::uint32_t N = G.root_order();
  const std::uint32_t q = F.q();

  const std::vector<Elem> omega = star ? F.nonzero_elements() : F.elements();
  std::vector<ResidueRing::Res> lin;
  for (Elem a : omega) lin.push_back(ring->from_poly(Poly(F, {1, F.neg(a)})));

  // Residues of P_{d-r} = {1 + c_1 x + ... + c_{d-r} x^{d-r}}.
  const std::size_t free_h = d - r;
  const std::size_t seen = std::min(free_h, m);
  const std::uint64_t mult = ipow(q, free_h - seen);
  std::vector<std::uint64_t> h_hist(ring->size(), 0);
  for (std::uint64_t v = 0; v < ipow(q, seen); ++v) {
    std::vector<Elem> digits(m + 1, 0);
    digits[0] = 1;
    std::uint64_t t = v;
    for (std::size_t i = 1; i <= seen; ++i) {
      digits[i] = static_cast<Elem>(t % q);
      t /= q;
    }
    h_hist[ring->from_digits(digits)] += mult;
  }

  const ResidueRing::Res f_res = ring->from_poly(target);
  const auto types = partitions(r);
  Cyclo total(N);
  for (std::size_t chi = 0; chi < G.size(); ++chi) {
    // S_i = sum_{a in Omega} chi(1 - a x)^i
    std::vector<Cyclo> S(r + 1, Cyclo(N));
    for (std::size_t i = 1; i <= r; ++i)
      for (auto res : lin) S[i].add_power(static_cast<std::uint64_t>(G.value_exponent(chi, res)) * i);
    Cyclo A(N);
    for (const auto& t : types) {
      Cyclo term = Cyclo::integer(N, static_cast<std::int64_t>(t.class_size()) * t.sign());
      for (std::size_t i = 0; i < t.counts.size(); ++i)
        if (t.counts[i]) term = term * S[i + 1].pow(t.counts[i]);
      A += term;
    }
    if (r == 0) A = Cyclo::integer(N, 1);
    const Cyclo B = character_sum(G, chi, h_hist);
    total += G.value(chi, f_res).conj() * A * B;
  }
  std::int64_t value = 0;
  if (!total.is_integer(&value)) throw Error(ErrorKind::NonIntegralResult, "character sum is not rational");
  const std::int64_t group_order = static_cast<std::int64_t>(G.size());
  if (value % group_order) throw Error(ErrorKind::NonIntegralResult, "character sum not divisible by q^m");
  return value / group_order;
}

N2Report n2_character_pipeline(const Poly& target, std::size_t r, std::size_t d, std::size_t m, bool star,
                               const Exec& exec, unsigned precision_bits, bool use_characters) {
  const Field& F = target.field();
  N2Report out;
  out.q = F.q();
  out.p = F.p();
  out.d = static_cast<long>(d);
  out.m = static_cast<long>(m);
  out.r = static_cast<long>(r);
  out.k = out.d - out.m;
  out.target = to_string(target);
  out.star = star;
  out.oracle = count_N2(target, r, d, m, exec, star);
  if (use_characters) out.via_characters = n2_via_characters(target, r, d, m, star, exec);
  out.main_term = star ? n2_star_main_term(out.q, out.r, out.d, out.m) : n2_main_term(out.q, out.r, out.d, out.m);
  out.bound = star ? n2_star_bound(out.q, out.p, out.r, out.d, out.m, precision_bits)
                   : n2_bound(out.q, out.p, out.r, out.d, out.m, precision_bits);
  out.holds = out.bound.compare(abs(mpq_class(out.oracle) - out.main_term)) >= 0;
  out.exact_case = out.d - out.r >= out.m;

  if (m >= 1) {
    auto ring = std::make_shared<const ResidueRing>(Poly::monomial(F, m + 1), exec);
    const CharacterGroup G = CharacterGroup::trivial_on_scalars(ring);
    for (std::size_t chi = 0; chi < G.size(); ++chi)
      if (!G.is_trivial(chi) && G.order_of(chi) <= r) ++out.small_order_characters;
    const double qm = static_cast<double>(G.size());
    const double S = static_cast<double>(out.small_order_characters);
    const double sq = std::sqrt(static_cast<double>(out.q));
    const double low = falling_d((out.m - 1) * sq + out.r - 1, out.r);
    const double high = falling_d(static_cast<double>(out.q / out.p) + (out.m - 1) * sq + out.r - 1, out.r);
    out.w_of_s = (qm - S) / qm * low + S / qm * high;
  }
  return out;
}

}  // namespace rsdl
