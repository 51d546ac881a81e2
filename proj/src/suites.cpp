#include "rsdl/suites.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "rsdl/closed_forms.hpp"
#include "rsdl/exact_counts.hpp"
#include "rsdl/n2_pipeline.hpp"
#include "rsdl/rng.hpp"
#include "rsdl/rs_metrics.hpp"
#include "rsdl/sieve.hpp"
#include "rsdl/weil.hpp"

namespace rsdl {

namespace {

constexpr std::size_t kMaxNotes = 20;
// Floating comparisons of |M_k| against closed-form bounds.
constexpr double kMagnitudeSlack = 1e-9;
// Exact and floating character sums must agree to this absolute/relative level.
constexpr double kEmbedTolerance = 1e-10;
// Allowed excess of the r = k+m-1 error sum over the combined bound, which
// can coincide with it exactly; both sides are rounded upward independently.
const mpq_class kCombinedSlack(1, mpz_class("1000000000000000000000000000000"));

std::uint64_t ipow(std::uint64_t base, std::size_t n) {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < n; ++i) v *= base;
  return v;
}

const Field& field_for(std::uint32_t q) {
  static std::map<std::uint32_t, Field> cache;
  static std::mutex mutex;
  std::lock_guard lock(mutex);
  auto it = cache.find(q);
  if (it == cache.end()) it = cache.emplace(q, Field::of_order(q)).first;
  return it->second;
}

std::string describe(const CountInstance& inst) {
  std::ostringstream os;
  os << "q=" << inst.q << " k=" << inst.k << " m=" << inst.m << " f=" << to_string(Poly(field_for(inst.q), inst.f));
  return os.str();
}

double choose_d(long n, long r) {
  if (r < 0 || n < 0 || r > n) return 0;
  return binomial(n, r).get_d();
}

}  // namespace

void SuiteResult::check(bool ok, const std::string& note) {
  ++checks;
  if (ok) return;
  ++failures;
  if (failure_notes.size() < kMaxNotes) failure_notes.push_back(note);
}

std::string SuiteResult::summary_json() const {
  nlohmann::ordered_json j;
  j["suite"] = name;
  j["checks"] = checks;
  j["failures"] = failures;
  j["passed"] = passed();
  j["failing"] = failure_notes;
  return j.dump();
}

SuiteResult suite_knopfmacher(const std::vector<std::uint32_t>& qs, std::size_t kmax, std::uint64_t power_limit,
                              const SuiteConfig& cfg) {
  SuiteResult out{"formulas-monomial", 0, 0, {}, Table({"q", "k", "r", "oracle", "formula", "equal"})};
  for (auto q : qs) {
    const Field& F = field_for(q);
    for (std::size_t k = 1; k <= std::min<std::size_t>(q - 1, kmax) && ipow(q, k) <= power_limit; ++k) {
      const auto hist = count_N_all(Poly::monomial(F, k), k, cfg.exec);
      for (std::size_t r = 0; r <= k; ++r) {
        const mpz_class formula = knopfmacher_Nxk(q, static_cast<long>(k), static_cast<long>(r));
        const bool eq = formula == mpz_class(std::to_string(hist[r]));
        out.check(eq, "q=" + std::to_string(q) + " k=" + std::to_string(k) + " r=" + std::to_string(r));
        out.table.add_row({Cell::integer(std::uint64_t{q}), Cell::integer(std::uint64_t{k}),
                           Cell::integer(std::uint64_t{r}), Cell::integer(hist[r]), Cell::integer(formula),
                           Cell::boolean(eq)});
      }
    }
  }
  return out;
}

SuiteResult suite_macwilliams(const std::vector<std::uint32_t>& qs, std::size_t kmax, std::uint64_t power_limit,
                              const SuiteConfig& cfg) {
  SuiteResult out{"formulas-codeword", 0, 0, {}, Table({"q", "k", "r", "oracle", "formula", "equal"})};
  for (auto q : qs) {
    const Field& F = field_for(q);
    for (std::size_t k = 1; k <= std::min<std::size_t>(q - 1, kmax) && ipow(q, k) <= power_limit; ++k) {
      const auto hist = count_N_all(Poly(F), k, cfg.exec);
      for (std::size_t r = 0; r <= q; ++r) {
        mpz_class formula;
        if (r + 1 <= k) formula = macwilliams_N0(q, static_cast<long>(k), static_cast<long>(r));
        else formula = r == q ? 1 : 0;
        const bool eq = formula == mpz_class(std::to_string(hist[r]));
        out.check(eq, "q=" + std::to_string(q) + " k=" + std::to_string(k) + " r=" + std::to_string(r));
        out.table.add_row({Cell::integer(std::uint64_t{q}), Cell::integer(std::uint64_t{k}),
                           Cell::integer(std::uint64_t{r}), Cell::integer(hist[r]), Cell::integer(formula),
                           Cell::boolean(eq)});
      }
    }
  }
  return out;
}

std::vector<CountInstance> random_count_instances(const std::vector<std::uint32_t>& qs, std::size_t count,
                                                  std::uint64_t power_limit, std::uint64_t seed) {
  if (qs.empty()) throw Error(ErrorKind::InvalidArgument, "no field orders given");
  Rng rng(seed);
  std::vector<CountInstance> out;
  for (std::size_t i = 0; i < count; ++i) {
    CountInstance inst;
    inst.q = qs[rng.below(qs.size())];
    std::size_t kmax = 0;
    while (kmax + 1 <= inst.q - 1 && ipow(inst.q, kmax + 1) <= power_limit) ++kmax;
    if (kmax == 0) throw Error(ErrorKind::RangeError, "power limit admits no k >= 1");
    inst.k = static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(kmax)));
    inst.m = static_cast<std::size_t>(rng.between(0, static_cast<std::int64_t>(inst.q - 1 - inst.k)));
    inst.f.assign(inst.k + inst.m + 1, 0);
    for (std::size_t j = inst.k; j < inst.k + inst.m; ++j) inst.f[j] = static_cast<Elem>(rng.below(inst.q));
    inst.f[inst.k + inst.m] = 1;
    out.push_back(std::move(inst));
  }
  return out;
}

SuiteResult suite_main_bound(const std::vector<CountInstance>& instances, const SuiteConfig& cfg) {
  SuiteResult out{"bounds", 0, 0, {},
                  Table({"q", "p", "k", "m", "r", "f", "main", "bound", "oracle", "holds", "gap"})};
  for (const auto& inst : instances) {
    const Poly f(field_for(inst.q), inst.f);
    const auto rows = verify_bound_all_r(f, inst.k, cfg.exec, cfg.precision_bits);
    for (const auto& row : rows) {
      const auto& rep = row.report;
      out.check(*rep.holds, describe(inst) + " r=" + std::to_string(row.r));
      out.table.add_row({Cell::integer(std::int64_t{row.q}), Cell::integer(std::int64_t{row.p}),
                         Cell::integer(std::int64_t{row.k}), Cell::integer(std::int64_t{row.m}),
                         Cell::integer(std::int64_t{row.r}), Cell::str(row.f), Cell::rational(rep.main_term),
                         Cell::bound(rep.error_bound), Cell::integer(*rep.oracle_value), Cell::boolean(*rep.holds),
                         Cell::rational(*rep.gap())});
    }
    // The one- and two-term special cases of the error sum.
    const long k = static_cast<long>(inst.k), m = static_cast<long>(inst.m);
    if (m >= 1) {
      const BoundParams bp{inst.q, field_for(inst.q).p(), k, m, cfg.precision_bits};
      const UpperReal top = thm15_error_bound(bp, k + m);
      out.check(top.compare(top_root_bound(bp)) == 0, describe(inst) + " single-term bound mismatch");
      const UpperReal second = thm15_error_bound(bp, k + m - 1);
      const UpperReal combined = second_root_bound(bp);
      // second <= combined (1 + slack)
      const UpperReal allowed = combined * UpperReal(mpq_class(1) + kCombinedSlack, cfg.precision_bits);
      out.check(second.compare(allowed) <= 0, describe(inst) + " two-term bound exceeds combined form");
    }
  }
  return out;
}

SuiteResult suite_pair_bound(const std::vector<CountInstance>& instances, const SuiteConfig& cfg) {
  SuiteResult out{"pairs", 0, 0, {},
                  Table({"q", "p", "k", "m", "r", "f", "m_subsets", "m_polys", "main", "bound", "holds"})};
  for (const auto& inst : instances) {
    const Poly f(field_for(inst.q), inst.f);
    for (const auto& row : verify_pair_bound_all_r(f, inst.k, cfg.exec, cfg.precision_bits)) {
      out.check(row.holds, describe(inst) + " r=" + std::to_string(row.r));
      out.table.add_row({Cell::integer(std::int64_t{row.q}), Cell::integer(std::int64_t{row.p}),
                         Cell::integer(std::int64_t{row.k}), Cell::integer(std::int64_t{row.m}),
                         Cell::integer(std::int64_t{row.r}), Cell::str(row.f), Cell::integer(row.m_subsets),
                         Cell::integer(row.m_polys), Cell::rational(row.main_term),
                         row.bound ? Cell::bound(*row.bound) : Cell::str("exact"), Cell::boolean(row.holds)});
    }
  }
  return out;
}

SuiteResult suite_inclusion_exclusion(const std::vector<CountInstance>& instances, const SuiteConfig& cfg) {
  SuiteResult out{"inclusion-exclusion", 0, 0, {}, Table({"q", "k", "m", "r", "f", "direct", "rebuilt", "equal"})};
  for (const auto& inst : instances) {
    const Poly f(field_for(inst.q), inst.f);
    const auto hist = count_N_all(f, inst.k, cfg.exec);
    const std::size_t d = inst.k + inst.m;
    std::vector<std::uint64_t> m_by_j(d + 1);
    for (std::size_t j = 0; j <= d; ++j) m_by_j[j] = count_M_subsets(f, inst.k, j, cfg.exec);
    for (std::size_t r = 0; r <= d; ++r) {
      const mpz_class rebuilt =
          inclusion_exclusion_N(inst.q, static_cast<long>(inst.k), static_cast<long>(r), m_by_j);
      const bool eq = rebuilt == mpz_class(std::to_string(hist[r]));
      out.check(eq, describe(inst) + " r=" + std::to_string(r));
      out.table.add_row({Cell::integer(std::uint64_t{inst.q}), Cell::integer(std::uint64_t{inst.k}),
                         Cell::integer(std::uint64_t{inst.m}), Cell::integer(std::uint64_t{r}),
                         Cell::str(to_string(f)), Cell::integer(hist[r]), Cell::integer(rebuilt), Cell::boolean(eq)});
    }
  }
  return out;
}

SuiteResult suite_sieve(std::size_t trials, std::size_t kmax, std::size_t omega_max, const SuiteConfig& cfg) {
  SuiteResult out{"sieve", 0, 0, {},
                  Table({"trial", "k", "omega", "symmetric", "direct", "permutation_sieve", "class_sieve",
                         "tuple_count", "equal"})};
  require_sieve_k(kmax);
  Rng rng(cfg.seed);
  auto rand_q = [&] {
    mpq_class v(rng.between(-9, 9), rng.between(1, 6));
    v.canonicalize();
    return v;
  };
  for (std::size_t t = 0; t < trials; ++t) {
    const std::size_t k = static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(kmax)));
    const std::size_t omega = static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(omega_max)));
    const bool symmetric = t % 2 == 0;
    SieveInstance<mpq_class> inst;
    inst.omega = omega;
    inst.k = k;

    std::vector<mpq_class> table, a(omega), b(omega);
    std::vector<bool> in_x;
    std::vector<std::uint32_t> w(omega);
    mpq_class c;
    std::uint32_t threshold = 0;
    auto index = [omega](std::span<const std::uint32_t> x) {
      std::uint64_t v = 0;
      for (std::size_t i = x.size(); i-- > 0;) v = v * omega + x[i];
      return v;
    };
    if (symmetric) {
      for (auto& v : a) v = rand_q();
      for (auto& v : b) v = rand_q();
      c = rand_q();
      for (auto& v : w) v = static_cast<std::uint32_t>(rng.below(4));
      threshold = static_cast<std::uint32_t>(rng.below(3 * k + 1));
      inst.member = [&w, threshold](std::span<const std::uint32_t> x) {
        std::uint32_t s = 0;
        for (auto v : x) s += w[v];
        return s <= threshold;
      };
      inst.fn = [&a, &b, &c, omega](std::span<const std::uint32_t> x) {
        mpq_class prod = 1, sum = 0;
        std::vector<bool> seen(omega, false);
        std::size_t distinct = 0;
        for (auto v : x) {
          prod *= a[v];
          sum += b[v];
          if (!seen[v]) seen[v] = true, ++distinct;
        }
        return mpq_class(prod + sum + c * static_cast<long>(distinct));
      };
    } else {
      const std::uint64_t size = ipow(omega, k);
      table.resize(size);
      in_x.resize(size);
      for (std::uint64_t i = 0; i < size; ++i) {
        table[i] = rand_q();
        in_x[i] = rng.below(4) != 0;
      }
      inst.member = [&](std::span<const std::uint32_t> x) { return static_cast<bool>(in_x[index(x)]); };
      inst.fn = [&](std::span<const std::uint32_t> x) { return table[index(x)]; };
    }

    const mpq_class direct = direct_distinct_sum(inst);
    const mpq_class perm = permutation_sieve_sum(inst);
    std::optional<mpq_class> cls;
    if (symmetric) {
      Rng probe(cfg.seed ^ (0x9e3779b97f4a7c15ull * (t + 1)));
      cls = class_sieve_sum(inst, probe);
    }
    const bool count_ok =
        class_sieve_tuple_count(omega, k) == falling_factorial(static_cast<long>(omega), static_cast<long>(k));
    const bool eq = direct == perm && (!cls || *cls == direct);
    const std::string note = "trial " + std::to_string(t) + " k=" + std::to_string(k) + " omega=" + std::to_string(omega);
    out.check(eq, note);
    out.check(count_ok, note + " tuple count");
    out.table.add_row({Cell::integer(std::uint64_t{t}), Cell::integer(std::uint64_t{k}),
                       Cell::integer(std::uint64_t{omega}), Cell::boolean(symmetric), Cell::rational(direct),
                       Cell::rational(perm), cls ? Cell::rational(*cls) : Cell::empty(), Cell::boolean(count_ok),
                       Cell::boolean(eq)});
  }
  return out;
}

std::vector<Poly> sample_moduli(const Field& F, std::size_t degree, std::uint64_t seed) {
  const std::uint32_t q = F.q();
  std::vector<Poly> out;
  auto push = [&](const Poly& f) {
    for (const auto& g : out)
      if (g == f) return;
    out.push_back(f);
  };
  auto is_irreducible = [&](const Poly& f) {
    for (std::size_t d = 1; 2 * d <= degree; ++d) {
      for (std::uint64_t v = 0; v < ipow(q, d); ++v) {
        std::vector<Elem> c(d + 1);
        std::uint64_t t = v;
        for (std::size_t i = 0; i < d; ++i) c[i] = static_cast<Elem>(t % q), t /= q;
        c[d] = 1;
        if ((f % Poly(F, c)).is_zero()) return false;
      }
    }
    return true;
  };
  for (std::uint64_t v = 0; v < ipow(q, degree); ++v) {
    std::vector<Elem> c(degree + 1);
    std::uint64_t t = v;
    for (std::size_t i = 0; i < degree; ++i) c[i] = static_cast<Elem>(t % q), t /= q;
    c[degree] = 1;
    const Poly f(F, c);
    if (is_irreducible(f)) {
      push(f);
      break;
    }
  }
  push(Poly::monomial(F, degree - 1) * Poly::linear_root(F, 1));
  if (degree <= q) {
    Poly prod = Poly::constant(F, 1);
    for (std::size_t i = 0; i < degree; ++i) prod = prod * Poly::linear_root(F, static_cast<Elem>(i));
    push(prod);
  }
  Rng rng(seed + 1000003ull * degree + q);
  for (int i = 0; i < 2; ++i) {
    std::vector<Elem> c(degree + 1);
    for (std::size_t j = 0; j < degree; ++j) c[j] = static_cast<Elem>(rng.below(q));
    c[degree] = 1;
    push(Poly(F, c));
  }
  return out;
}

void check_characters(const Poly& modulus, bool scalars_only, SuiteResult& out, const SuiteConfig& cfg) {
  auto ring = std::make_shared<const ResidueRing>(modulus, cfg.exec);
  const CharacterGroup G = scalars_only ? CharacterGroup::trivial_on_scalars(ring) : CharacterGroup::full(ring);
  const Field& F = ring->field();
  const std::uint32_t q = F.q();
  const std::size_t n = ring->degree();
  const std::string tag = F.describe() + " f=" + to_string(modulus) + (scalars_only ? " G" : " full");

  std::uint64_t expected = ring->unit_count_formula();
  if (scalars_only) expected /= q - 1;
  out.check(G.size() == expected, tag + ": group order " + std::to_string(G.size()));
  if (scalars_only && ring->is_power_of_x()) {
    out.check(G.size() == ipow(q, n - 1), tag + ": |G| != q^m");
    const AbelianGroup U1 = decompose(ring, ring->one_units());
    std::uint64_t expo = 1;
    while (expo < n) expo *= F.p();
    out.check(U1.order() == ipow(q, n - 1) && U1.exponent == expo, tag + ": one-unit group shape");
  }

  // Orthogonality: sum over the group of chi(u) is |G| on the common kernel, 0 elsewhere.
  const std::vector<ResidueRing::Res> probes =
      scalars_only && ring->is_power_of_x() ? ring->one_units() : ring->units();
  const ResidueRing::Res gen = ring->scalar(F.primitive_element());
  for (auto u : probes) {
    Cyclo s(G.root_order());
    for (std::size_t chi = 0; chi < G.size(); ++chi) s.add_power(static_cast<std::uint64_t>(G.value_exponent(chi, u)));
    const bool in_kernel = scalars_only ? u < q && u != 0 : u == ring->one();
    std::int64_t v = 0;
    const bool ok = s.is_integer(&v) && v == (in_kernel ? static_cast<std::int64_t>(G.size()) : 0);
    out.check(ok, tag + ": orthogonality at residue " + std::to_string(u));
  }
  (void)gen;

  std::vector<std::vector<std::uint64_t>> hists;
  for (std::size_t k = 0; k <= n + 2; ++k) hists.push_back(monic_residue_histogram(*ring, k, cfg.exec));

  double worst_root = 0;
  for (std::size_t chi = 0; chi < G.size(); ++chi) {
    if (G.is_trivial(chi)) continue;
    const std::string ctag = tag + " chi=" + std::to_string(chi);
    for (std::size_t k = n; k <= n + 2; ++k) out.check(character_sum(G, chi, hists[k]).is_zero(), ctag + ": M_k != 0 past n");
    const LFunction L = l_function(G, chi, hists);
    out.check(L.coeffs[0] == Cyclo::integer(G.root_order(), 1), ctag + ": M_0 != 1");
    for (std::size_t k = 0; k < n; ++k) {
      const auto exact = L.coeffs[k].embed();
      const auto approx = character_sum_float(G, chi, hists[k]);
      out.check(std::abs(exact - approx) <= kEmbedTolerance * std::max(1.0, std::abs(exact)),
                ctag + ": embedding mismatch");
      const double bound = choose_d(static_cast<long>(n) - 1, static_cast<long>(k)) * std::pow(q, 0.5 * k);
      out.check(std::abs(exact) <= bound * (1 + kMagnitudeSlack), ctag + ": |M_k| bound k=" + std::to_string(k));
    }
    const bool on_scalars_trivial = G.value_exponent(chi, ring->scalar(F.primitive_element())) == 0;
    if (on_scalars_trivial) {
      out.check(L.at_one().is_zero(), ctag + ": L(chi, 1) != 0");
      for (std::size_t k = 0; k + 2 <= n; ++k) {
        const double bound = choose_d(static_cast<long>(n) - 2, static_cast<long>(k)) * std::pow(q, 0.5 * k);
        out.check(std::abs(L.partial_sum(k).embed()) <= bound * (1 + kMagnitudeSlack),
                  ctag + ": partial sum bound k=" + std::to_string(k));
      }
    }
    try {
      const WeilReport w = weil_check(L, q);
      worst_root = std::max(worst_root, w.max_ratio);
      out.check(w.pass, ctag + ": root outside sqrt(q)");
    } catch (const Error& e) {
      out.check(false, ctag + ": " + e.what());
    }
  }
  out.table.add_row({Cell::str(F.describe()), Cell::str(to_string(modulus)), Cell::str(scalars_only ? "G" : "full"),
                     Cell::integer(std::uint64_t{G.size()}), Cell::integer(expected),
                     Cell::integer(std::uint64_t{G.root_order()}), Cell::real(worst_root)});
}

SuiteResult suite_characters(const std::vector<std::uint32_t>& qs, const std::vector<std::size_t>& ms,
                             std::size_t max_degree, const SuiteConfig& cfg) {
  SuiteResult out{"characters", 0, 0, {},
                  Table({"field", "modulus", "group", "order", "expected_order", "root_order", "max_root_ratio"})};
  for (auto q : qs) {
    const Field& F = field_for(q);
    for (auto m : ms) check_characters(Poly::monomial(F, m + 1), true, out, cfg);
    for (std::size_t n = 1; n <= max_degree; ++n)
      for (const auto& f : sample_moduli(F, n, cfg.seed)) check_characters(f, false, out, cfg);
  }
  return out;
}

SuiteResult suite_n2(const std::vector<std::uint32_t>& qs, const std::vector<std::size_t>& ms, std::size_t kmax,
                     const SuiteConfig& cfg) {
  SuiteResult out{"n2", 0, 0, {},
                  Table({"q", "d", "m", "r", "target", "star", "oracle", "characters", "main", "bound", "holds",
                         "S", "w"})};
  Rng rng(cfg.seed);
  for (auto q : qs) {
    const Field& F = field_for(q);
    for (auto m : ms) {
      for (std::size_t k = 1; k <= kmax && k + m <= q - 1; ++k) {
        const std::size_t d = k + m;
        std::vector<Elem> t(m + 1, 0);
        t[0] = 1;
        for (std::size_t i = 1; i <= m; ++i) t[i] = static_cast<Elem>(rng.below(q));
        const Poly target(F, t);
        for (std::size_t r = 0; r <= d; ++r) {
          for (bool star : {false, true}) {
            const N2Report rep = n2_character_pipeline(target, r, d, m, star, cfg.exec, cfg.precision_bits);
            const std::string note = F.describe() + " d=" + std::to_string(d) + " m=" + std::to_string(m) +
                                     " r=" + std::to_string(r) + (star ? " star" : "") + " target=" + rep.target;
            out.check(rep.holds, note + ": bound");
            out.check(rep.characters_agree(), note + ": character route");
            if (rep.exact_case) out.check(mpq_class(rep.oracle) == rep.main_term, note + ": exact case");
            bool divisible = true;
            try {
              unordered_from_ordered(rep.oracle, r);
            } catch (const Error&) {
              divisible = false;
            }
            out.check(divisible, note + ": not divisible by r!");
            out.table.add_row({Cell::integer(std::int64_t{rep.q}), Cell::integer(std::int64_t{rep.d}),
                               Cell::integer(std::int64_t{rep.m}), Cell::integer(std::int64_t{rep.r}),
                               Cell::str(rep.target), Cell::boolean(star), Cell::integer(rep.oracle),
                               rep.via_characters ? Cell::integer(*rep.via_characters) : Cell::empty(),
                               Cell::rational(rep.main_term), Cell::bound(rep.bound), Cell::boolean(rep.holds),
                               Cell::integer(rep.small_order_characters),
                               rep.w_of_s ? Cell::real(*rep.w_of_s) : Cell::empty()});
          }
        }
        // Alpha decomposition on f = x^d + a_{d-1} x^{d-1} + ... + a_k x^k.
        std::vector<Elem> fc(d + 1, 0);
        for (std::size_t i = k; i < d; ++i) fc[i] = static_cast<Elem>(rng.below(q));
        fc[d] = 1;
        const Poly f(F, fc);
        for (std::size_t r = 0; r <= d; ++r) {
          const AlphaDecomposition ad = alpha_decompose(f, k, r, cfg.exec);
          const std::string note = F.describe() + " f=" + to_string(f) + " k=" + std::to_string(k) +
                                   " r=" + std::to_string(r);
          out.check(ad.partition_holds(), note + ": partition");
          out.check(ad.shift_holds(), note + ": shift");
          out.check(ad.reversal_holds(r), note + ": reversal");
        }
      }
    }
  }
  return out;
}

SuiteResult suite_rs(const std::vector<std::pair<std::uint32_t, std::size_t>>& params, const SuiteConfig& cfg) {
  SuiteResult out{"rs", 0, 0, {},
                  Table({"q", "k", "n", "words", "deep_holes", "deep_holes_degree_k", "degree_k_words",
                         "every_deep_hole_degree_k", "covering_radius", "min_distance", "bounds_hold"})};
  for (auto [q, k] : params) {
    const Field& F = field_for(q);
    const std::string tag = "q=" + std::to_string(q) + " k=" + std::to_string(k);
    const RSCode code = RSCode::standard(F, k);
    const CensusReport census = deep_hole_census(code, cfg.exec);
    out.check(census.bounds_hold, tag + ": degree bounds");
    out.check(census.degree_k_words == (q - 1) * ipow(q, k), tag + ": degree-k word count");
    out.check(census.deep_holes_of_degree_k == census.degree_k_words, tag + ": degree-k words are deep holes");
    if (q == 3 && k == 1) out.check(census.deep_holes_of_degree_k == 6, tag + ": six degree-1 deep holes");
    out.check(census.covering_radius == code.n() - k, tag + ": covering radius");
    const std::size_t dmin = minimum_distance(code, cfg.exec);
    out.check(dmin == code.n() - k + 1, tag + ": MDS distance");

    // Distance distributions of every word, through both routes.
    const std::uint64_t words = ipow(q, code.n());
    Word u{F, code.domain, std::vector<Elem>(code.n())};
    std::size_t sum_fail = 0, route_fail = 0;
    for (std::uint64_t w = 0; w < words; ++w) {
      std::uint64_t t = w;
      for (auto& v : u.values) v = static_cast<Elem>(t % q), t /= q;
      const auto dist = distance_distribution(u, code, cfg.exec);
      std::uint64_t total = 0;
      for (auto c : dist) total += c;
      sum_fail += total != ipow(q, k);
      route_fail += dist != distance_distribution_pairwise(u, code, cfg.exec);
    }
    out.check(sum_fail == 0, tag + ": sum of N_i(u) != q^k");
    out.check(route_fail == 0, tag + ": distance distribution routes disagree");

    out.table.add_row({Cell::integer(std::uint64_t{q}), Cell::integer(std::uint64_t{k}),
                       Cell::integer(std::uint64_t{code.n()}), Cell::integer(census.words),
                       Cell::integer(census.deep_holes), Cell::integer(census.deep_holes_of_degree_k),
                       Cell::integer(census.degree_k_words), Cell::boolean(census.every_deep_hole_has_degree_k),
                       Cell::integer(std::uint64_t{census.covering_radius}), Cell::integer(std::uint64_t{dmin}),
                       Cell::boolean(census.bounds_hold)});
  }
  return out;
}

Table weil_sweep_table(const Poly& modulus, bool scalars_only, const SuiteConfig& cfg) {
  auto ring = std::make_shared<const ResidueRing>(modulus, cfg.exec);
  const CharacterGroup G = scalars_only ? CharacterGroup::trivial_on_scalars(ring) : CharacterGroup::full(ring);
  const std::uint32_t q = ring->field().q();
  const std::size_t n = ring->degree();
  std::vector<std::vector<std::uint64_t>> hists;
  for (std::size_t k = 0; k < n; ++k) hists.push_back(monic_residue_histogram(*ring, k, cfg.exec));

  Table table({"char", "order", "k", "abs_Mk", "bound", "pass", "max_root", "weil_pass"});
  for (std::size_t chi = 0; chi < G.size(); ++chi) {
    if (G.is_trivial(chi)) continue;
    const LFunction L = l_function(G, chi, hists);
    const WeilReport w = weil_check(L, q);
    const double max_root = w.root_moduli.empty() ? 0.0 : w.root_moduli.back();
    for (std::size_t k = 0; k < n; ++k) {
      const double mag = std::abs(L.coeffs[k].embed());
      const double bound = choose_d(static_cast<long>(n) - 1, static_cast<long>(k)) * std::pow(q, 0.5 * k);
      table.add_row({Cell::integer(std::uint64_t{chi}), Cell::integer(G.order_of(chi)),
                     Cell::integer(std::uint64_t{k}), Cell::real(mag), Cell::real(bound),
                     Cell::boolean(mag <= bound * (1 + kMagnitudeSlack)), Cell::real(max_root),
                     Cell::boolean(w.pass)});
    }
  }
  return table;
}

}  // namespace rsdl
