#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rsdl/error.hpp"
#include "rsdl/poly.hpp"

namespace rsdl {

/// RS_{n,k}: evaluations of all polynomials of degree < k on an ordered
/// evaluation set D, n = |D|.
struct RSCode {
  Field field;
  std::vector<Elem> domain;
  std::size_t k = 0;

  /// D = F_q in canonical order.
  static RSCode standard(const Field& field, std::size_t k);
  /// D = F_q^* in canonical order.
  static RSCode primitive(const Field& field, std::size_t k);
  /// Throws DuplicateDomainPoint, RangeError unless 1 <= k <= n.
  static RSCode custom(const Field& field, std::vector<Elem> domain, std::size_t k);

  std::size_t n() const { return domain.size(); }
  Word encode(const Poly& msg) const;
};

/// Degree of the interpolant; empty for the zero word.
std::optional<std::size_t> word_degree(const Word& u);
bool is_codeword(const Word& u, const RSCode& code);

/// (n - deg u, n - k). Throws IsCodeword when deg u < k.
std::pair<std::size_t, std::size_t> degree_bounds(const Word& u, const RSCode& code);

/// counts[i] = N_i(u), i = 0..n, through root counting of the interpolant.
std::vector<std::uint64_t> distance_distribution(const Word& u, const RSCode& code, const Exec& exec = {});
/// Same histogram by comparing u with every codeword.
std::vector<std::uint64_t> distance_distribution_pairwise(const Word& u, const RSCode& code, const Exec& exec = {});

/// Smallest i with N_i(u) > 0.
std::size_t error_distance(const Word& u, const RSCode& code, const Exec& exec = {});

enum class WordClass { DeepHole, Ordinary, Neither, Both };
const char* to_string(WordClass c);

/// Throws IsCodeword for codewords.
WordClass classify(const Word& u, const RSCode& code, const Exec& exec = {});

struct CensusEntry {
  std::vector<Elem> word;
  std::optional<std::size_t> degree;
  std::size_t distance = 0;
  std::string word_class;  // DeepHole, Ordinary, Neither, Both or Codeword
};

struct CensusReport {
  std::uint64_t words = 0;
  std::uint64_t deep_holes = 0;
  std::uint64_t deep_holes_of_degree_k = 0;
  /// (q-1) q^k words have degree exactly k.
  std::uint64_t degree_k_words = 0;
  bool every_deep_hole_has_degree_k = true;
  std::size_t covering_radius = 0;  // max distance seen
  bool bounds_hold = true;          // lower <= distance <= upper for every non-codeword
  std::vector<CensusEntry> entries; // deep holes, or every word when requested
};

/// Exhaustive scan of all q^n words, in canonical word order.
CensusReport deep_hole_census(const RSCode& code, const Exec& exec = {}, bool keep_all_words = false);

/// Minimum weight of a nonzero codeword, by enumerating the code.
std::size_t minimum_distance(const RSCode& code, const Exec& exec = {});

}  // namespace rsdl
