#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rsdl/error.hpp"
#include "rsdl/poly.hpp"

namespace rsdl {

// Trusted brute-force counts. Every function either enumerates exactly or
// throws BudgetExceeded; nothing here samples.

/// Monic, with every term of degree < k removed. Polynomials of degree < k
/// (the codeword case) normalize to zero. Counts over g of degree < k are
/// unchanged by this normalization.
Poly normalize_for_counting(const Poly& f, std::size_t k);

/// Excess degree m = deg(f) - k of a normalized f; negative for the zero
/// polynomial (reported as -k).
long excess_degree(const Poly& normalized, std::size_t k);

/// hist[t] = #{ g : deg g <= k-1, f + g has exactly t distinct roots in
/// `domain` }, for t = 0..|domain|. Sums to q^k.
std::vector<std::uint64_t> root_count_histogram(const Poly& f, std::size_t k, std::span<const Elem> domain,
                                                const Exec& exec = {});

/// N(f, r) over all of F_q.
std::uint64_t count_N(const Poly& f, std::size_t k, std::size_t r, const Exec& exec = {});
/// N(f, r) for r = 0..q.
std::vector<std::uint64_t> count_N_all(const Poly& f, std::size_t k, const Exec& exec = {});

/// M(f, r) by walking the r-subsets of F_q and solving for g on each.
std::uint64_t count_M_subsets(const Poly& f, std::size_t k, std::size_t r, const Exec& exec = {});
/// M(f, r) by walking g and counting the r-subsets of the roots of f + g.
std::uint64_t count_M_polys(const Poly& f, std::size_t k, std::size_t r, const Exec& exec = {});

/// Ordered count of ((x_1..x_r), h), x_i pairwise distinct in F_q (or in F_q^*
/// when `nonzero_points`), h in P_{d-r} = { deg h <= d-r, h(0) = 1 }, with
/// (1 - x_1 x)...(1 - x_r x) h(x) = target(x) mod x^{m+1}.
/// `target` must satisfy target(0) = 1.
std::uint64_t count_N2(const Poly& target, std::size_t r, std::size_t d, std::size_t m, const Exec& exec = {},
                       bool nonzero_points = false);
std::uint64_t count_N2_star(const Poly& target, std::size_t r, std::size_t d, std::size_t m,
                            const Exec& exec = {});

/// ordered / r!, throwing NonIntegralResult if the division is inexact.
std::uint64_t unordered_from_ordered(std::uint64_t ordered, std::size_t r);

/// The reversed congruence target 1 + a_{d-1} x + ... + a_k x^m built from
/// the top coefficients of a monic normalized f of degree d = k + m.
Poly reversed_top(const Poly& normalized, std::size_t k);

struct AlphaDecomposition {
  std::uint64_t avoids_zero = 0;    // pairs with D_r inside F_q^*
  std::uint64_t contains_zero = 0;  // pairs with 0 in D_r
  std::uint64_t m_subsets = 0;      // M(f, r), subset-first
  std::uint64_t m_polys = 0;        // M(f, r), g-first
  /// N_{r-1}^{alpha,1}(d-1, m) on f/x with dimension k-1; present when k, r >= 1.
  std::optional<std::uint64_t> shifted_avoids_zero;
  /// N_2^* on the reversed target.
  std::uint64_t n2_star = 0;

  bool partition_holds() const { return avoids_zero + contains_zero == m_subsets && m_subsets == m_polys; }
  bool shift_holds() const { return !shifted_avoids_zero || *shifted_avoids_zero == contains_zero; }
  bool reversal_holds(std::size_t r) const;
};

/// Splits M(f, r) by whether D_r contains 0 and checks both reductions.
/// Requires deg(normalized f) >= k.
AlphaDecomposition alpha_decompose(const Poly& f, std::size_t k, std::size_t r, const Exec& exec = {});

/// Pairs (D_r, g) with D_r an r-subset of `points` on which f + g vanishes.
std::uint64_t count_vanishing_pairs(const Poly& f, std::size_t k, std::size_t r, std::span<const Elem> points,
                                    const Exec& exec = {});

}  // namespace rsdl
