#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <vector>

#include "rsdl/error.hpp"
#include "rsdl/rng.hpp"

namespace rsdl {

inline constexpr std::size_t kSieveMaxK = 8;

/// Cycle type of a permutation in S_k: counts[i-1] = number of i-cycles.
struct PermutationType {
  std::vector<std::uint32_t> counts;

  std::size_t k() const {
    std::size_t s = 0;
    for (std::size_t i = 0; i < counts.size(); ++i) s += (i + 1) * counts[i];
    return s;
  }
  /// Number of cycles l(tau).
  std::size_t length() const { return std::accumulate(counts.begin(), counts.end(), std::size_t{0}); }
  int sign() const { return (k() - length()) % 2 ? -1 : 1; }
  /// k! / prod_i (i^{c_i} c_i!)
  std::uint64_t class_size() const {
    std::uint64_t num = 1;
    for (std::size_t i = 2; i <= k(); ++i) num *= i;
    std::uint64_t den = 1;
    for (std::size_t i = 0; i < counts.size(); ++i)
      for (std::uint32_t c = 1; c <= counts[i]; ++c) den *= (i + 1) * c;
    return num / den;
  }
  /// Cycle lengths, largest first.
  std::vector<std::size_t> parts() const {
    std::vector<std::size_t> out;
    for (std::size_t i = counts.size(); i-- > 0;)
      for (std::uint32_t c = 0; c < counts[i]; ++c) out.push_back(i + 1);
    return out;
  }
  bool operator==(const PermutationType&) const = default;
};

/// Partitions of k as cycle types, in reverse-lexicographic order of their
/// parts (k first, 1+1+...+1 last).
inline std::vector<PermutationType> partitions(std::size_t k) {
  std::vector<PermutationType> out;
  std::vector<std::size_t> parts;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t left, std::size_t max_part) {
    if (left == 0) {
      PermutationType t;
      t.counts.assign(k, 0);
      for (auto p : parts) ++t.counts[p - 1];
      out.push_back(std::move(t));
      return;
    }
    for (std::size_t p = std::min(left, max_part); p >= 1; --p) {
      parts.push_back(p);
      rec(left - p, p);
      parts.pop_back();
    }
  };
  rec(k, k);
  return out;
}

/// Cycles of the permutation perm (perm[i] = image of i).
inline std::vector<std::vector<std::size_t>> cycles_of(const std::vector<std::size_t>& perm) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::vector<std::size_t> cyc;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      cyc.push_back(j);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

/// Permutation realising a cycle type: consecutive blocks, largest first.
inline std::vector<std::vector<std::size_t>> representative_cycles(const PermutationType& t) {
  std::vector<std::vector<std::size_t>> out;
  std::size_t next = 0;
  for (auto len : t.parts()) {
    std::vector<std::size_t> cyc(len);
    std::iota(cyc.begin(), cyc.end(), next);
    next += len;
    out.push_back(std::move(cyc));
  }
  return out;
}

/// Sum-over-sets problem for the sieve: tuples in Omega^k with Omega =
/// {0, ..., omega-1}, a membership test for X and the summand.
template <class V>
struct SieveInstance {
  std::size_t omega = 0;
  std::size_t k = 0;
  std::function<bool(std::span<const std::uint32_t>)> member;
  std::function<V(std::span<const std::uint32_t>)> fn;
};

/// F_tau: the sum of fn over tuples of X that are constant on every cycle.
template <class V>
V collapsed_sum(const SieveInstance<V>& inst, const std::vector<std::vector<std::size_t>>& cycles) {
  V total{};
  const std::size_t l = cycles.size();
  std::vector<std::uint32_t> choice(l, 0);
  std::vector<std::uint32_t> x(inst.k);
  if (inst.omega == 0) return total;
  while (true) {
    for (std::size_t c = 0; c < l; ++c)
      for (auto pos : cycles[c]) x[pos] = choice[c];
    if (inst.member(x)) total += inst.fn(x);
    std::size_t c = 0;
    while (c < l && ++choice[c] == inst.omega) choice[c++] = 0;
    if (c == l) break;
  }
  return total;
}

/// Sum of fn over tuples of X with pairwise distinct coordinates.
template <class V>
V direct_distinct_sum(const SieveInstance<V>& inst) {
  V total{};
  if (inst.k > inst.omega) return total;
  std::vector<std::uint32_t> x(inst.k, 0);
  while (true) {
    bool distinct = true;
    for (std::size_t i = 0; i < inst.k && distinct; ++i)
      for (std::size_t j = i + 1; j < inst.k; ++j)
        if (x[i] == x[j]) {
          distinct = false;
          break;
        }
    if (distinct && inst.member(x)) total += inst.fn(x);
    std::size_t i = 0;
    while (i < inst.k && ++x[i] == inst.omega) x[i++] = 0;
    if (i == inst.k) break;
  }
  return total;
}

inline void require_sieve_k(std::size_t k) {
  if (k > kSieveMaxK) throw Error(ErrorKind::KTooLarge, "sieve needs k <= " + std::to_string(kSieveMaxK));
}

/// sum over tau in S_k of sign(tau) F_tau.
template <class V>
V permutation_sieve_sum(const SieveInstance<V>& inst) {
  require_sieve_k(inst.k);
  std::vector<std::size_t> perm(inst.k);
  std::iota(perm.begin(), perm.end(), 0);
  V total{};
  do {
    const auto cycles = cycles_of(perm);
    const V f = collapsed_sum(inst, cycles);
    if ((inst.k - cycles.size()) % 2) total -= f;
    else total += f;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Probes X and fn for invariance under random transpositions of
/// coordinates. Throws NotSymmetric on a counterexample.
template <class V>
void require_symmetric(const SieveInstance<V>& inst, Rng& rng, std::size_t probes = 200) {
  if (inst.k < 2 || inst.omega == 0) return;
  std::vector<std::uint32_t> x(inst.k), y(inst.k);
  for (std::size_t t = 0; t < probes; ++t) {
    for (auto& v : x) v = static_cast<std::uint32_t>(rng.below(inst.omega));
    y = x;
    const std::size_t i = rng.below(inst.k);
    std::size_t j = rng.below(inst.k - 1);
    if (j >= i) ++j;
    std::swap(y[i], y[j]);
    const bool mx = inst.member(x), my = inst.member(y);
    if (mx != my) throw Error(ErrorKind::NotSymmetric, "set is not closed under coordinate swaps");
    if (mx && !(inst.fn(x) == inst.fn(y))) throw Error(ErrorKind::NotSymmetric, "summand is not symmetric");
  }
}

/// sum over cycle types of sign(tau) C(tau) F_tau, valid for symmetric X, fn.
template <class V>
V class_sieve_sum(const SieveInstance<V>& inst, Rng& probe_rng) {
  require_sieve_k(inst.k);
  require_symmetric(inst, probe_rng);
  V total{};
  for (const auto& t : partitions(inst.k)) {
    V f = collapsed_sum(inst, representative_cycles(t));
    f *= static_cast<long>(t.class_size());
    if (t.sign() < 0) total -= f;
    else total += f;
  }
  return total;
}

/// sum over cycle types of sign(tau) C(tau) |X_tau| for X = Omega^k, which
/// equals the falling factorial (omega)_k.
inline std::int64_t class_sieve_tuple_count(std::size_t omega, std::size_t k) {
  require_sieve_k(k);
  std::int64_t total = 0;
  for (const auto& t : partitions(k)) {
    std::int64_t term = static_cast<std::int64_t>(t.class_size());
    for (std::size_t i = 0; i < t.length(); ++i) term *= static_cast<std::int64_t>(omega);
    total += t.sign() * term;
  }
  return total;
}

/// Term counts of the two sieve forms: k! permutations and p(k) classes.
struct SieveTermCounts {
  std::uint64_t permutations = 0;
  std::uint64_t classes = 0;
};

inline SieveTermCounts sieve_term_counts(std::size_t k) {
  SieveTermCounts out;
  out.permutations = 1;
  for (std::size_t i = 2; i <= k; ++i) out.permutations *= i;
  out.classes = partitions(k).size();
  return out;
}

}  // namespace rsdl
