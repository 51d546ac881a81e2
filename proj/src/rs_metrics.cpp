#include "rsdl/rs_metrics.hpp"

#include <algorithm>
#include <cmath>

#include "rsdl/exact_counts.hpp"
#include "rsdl/parallel.hpp"

namespace rsdl {

namespace {

std::uint64_t ipow(std::uint64_t base, std::size_t n) {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < n; ++i) v *= base;
  return v;
}

// Evaluations of every codeword, codeword index = message digits base q.
std::vector<std::vector<Elem>> codeword_table(const RSCode& code, const Exec& exec) {
  const Field& F = code.field;
  const double work = std::pow(static_cast<double>(F.q()), static_cast<double>(code.k)) * code.n();
  require_budget(work, exec, "codeword enumeration");
  const std::uint64_t total = ipow(F.q(), code.k);
  std::vector<std::vector<Elem>> out(total);
  for (std::uint64_t c = 0; c < total; ++c) {
    std::vector<Elem> msg(code.k);
    std::uint64_t t = c;
    for (auto& m : msg) {
      m = static_cast<Elem>(t % F.q());
      t /= F.q();
    }
    out[c] = evaluate_word(Poly(F, std::move(msg)), code.domain).values;
  }
  return out;
}

}  // namespace

RSCode RSCode::standard(const Field& field, std::size_t k) { return custom(field, field.elements(), k); }

RSCode RSCode::primitive(const Field& field, std::size_t k) { return custom(field, field.nonzero_elements(), k); }

RSCode RSCode::custom(const Field& field, std::vector<Elem> domain, std::size_t k) {
  RSCode code{field, std::move(domain), k};
  Word probe{field, code.domain, std::vector<Elem>(code.domain.size(), 0)};
  probe.validate();
  if (k < 1 || k > code.n()) throw Error(ErrorKind::RangeError, "RS dimension must satisfy 1 <= k <= n");
  return code;
}

Word RSCode::encode(const Poly& msg) const {
  if (msg.degree() && *msg.degree() >= k) throw Error(ErrorKind::InvalidArgument, "message degree must be < k");
  return evaluate_word(msg, domain);
}

std::optional<std::size_t> word_degree(const Word& u) { return lagrange_interpolate(u).degree(); }

bool is_codeword(const Word& u, const RSCode& code) {
  const auto d = word_degree(u);
  return !d || *d < code.k;
}

std::pair<std::size_t, std::size_t> degree_bounds(const Word& u, const RSCode& code) {
  const auto d = word_degree(u);
  if (!d || *d < code.k) throw Error(ErrorKind::IsCodeword, "word lies in the code");
  return {code.n() - *d, code.n() - code.k};
}

std::vector<std::uint64_t> distance_distribution(const Word& u, const RSCode& code, const Exec& exec) {
  u.validate();
  if (u.domain != code.domain) throw Error(ErrorKind::InvalidArgument, "word and code use different domains");
  const Poly f = lagrange_interpolate(u);
  // d(u, c) = n - #{x in D : (f - c)(x) = 0}, and -c runs over all g of degree < k.
  const auto hist = root_count_histogram(f, code.k, code.domain, exec);
  std::vector<std::uint64_t> counts(code.n() + 1, 0);
  for (std::size_t t = 0; t < hist.size(); ++t) counts[code.n() - t] = hist[t];
  return counts;
}

std::vector<std::uint64_t> distance_distribution_pairwise(const Word& u, const RSCode& code, const Exec& exec) {
  u.validate();
  const auto table = codeword_table(code, exec);
  std::vector<std::uint64_t> counts(code.n() + 1, 0);
  for (const auto& c : table) {
    std::size_t dist = 0;
    for (std::size_t i = 0; i < code.n(); ++i) dist += c[i] != u.values[i];
    ++counts[dist];
  }
  return counts;
}

std::size_t error_distance(const Word& u, const RSCode& code, const Exec& exec) {
  const auto counts = distance_distribution(u, code, exec);
  for (std::size_t i = 0; i < counts.size(); ++i)
    if (counts[i]) return i;
  throw Error(ErrorKind::InvalidArgument, "empty distance distribution");
}

const char* to_string(WordClass c) {
  switch (c) {
    case WordClass::DeepHole: return "DeepHole";
    case WordClass::Ordinary: return "Ordinary";
    case WordClass::Neither: return "Neither";
    case WordClass::Both: return "Both";
  }
  return "?";
}

namespace {

WordClass class_from(std::size_t distance, std::size_t lower, std::size_t upper) {
  const bool deep = distance == upper, ordinary = distance == lower;
  if (deep && ordinary) return WordClass::Both;
  if (deep) return WordClass::DeepHole;
  if (ordinary) return WordClass::Ordinary;
  return WordClass::Neither;
}

}  // namespace

WordClass classify(const Word& u, const RSCode& code, const Exec& exec) {
  const auto [lower, upper] = degree_bounds(u, code);
  return class_from(error_distance(u, code, exec), lower, upper);
}

CensusReport deep_hole_census(const RSCode& code, const Exec& exec, bool keep_all_words) {
  const Field& F = code.field;
  const std::size_t n = code.n();
  const double words = std::pow(static_cast<double>(F.q()), static_cast<double>(n));
  require_budget(words * std::pow(static_cast<double>(F.q()), static_cast<double>(code.k)) * n, exec,
                 "deep-hole census");
  const auto table = codeword_table(code, exec);
  const std::uint64_t total = ipow(F.q(), n);

  using Entries = std::vector<CensusEntry>;
  struct Partial {
    CensusReport report;
  };
  auto chunks = map_chunks<Partial>(total, exec.workers, [&](std::uint64_t begin, std::uint64_t end) {
    Partial part;
    CensusReport& rep = part.report;
    Word u{F, code.domain, std::vector<Elem>(n)};
    for (std::uint64_t w = begin; w < end; ++w) {
      std::uint64_t t = w;
      for (auto& v : u.values) {
        v = static_cast<Elem>(t % F.q());
        t /= F.q();
      }
      std::size_t best = n;
      for (const auto& c : table) {
        std::size_t dist = 0;
        for (std::size_t i = 0; i < n && dist < best; ++i) dist += c[i] != u.values[i];
        best = std::min(best, dist);
      }
      const auto deg = word_degree(u);
      CensusEntry entry{u.values, deg, best, "Codeword"};
      ++rep.words;
      rep.covering_radius = std::max(rep.covering_radius, best);
      if (deg && *deg >= code.k) {
        const std::size_t lower = n - *deg, upper = n - code.k;
        if (best < lower || best > upper) rep.bounds_hold = false;
        entry.word_class = to_string(class_from(best, lower, upper));
        if (*deg == code.k) ++rep.degree_k_words;
      }
      const bool deep = best == n - code.k && (deg && *deg >= code.k);
      if (deep) {
        ++rep.deep_holes;
        if (*deg == code.k) ++rep.deep_holes_of_degree_k;
        else rep.every_deep_hole_has_degree_k = false;
      }
      if (deep || keep_all_words) rep.entries.push_back(std::move(entry));
    }
    return part;
  });

  CensusReport out;
  for (auto& c : chunks) {
    const CensusReport& r = c.report;
    out.words += r.words;
    out.deep_holes += r.deep_holes;
    out.deep_holes_of_degree_k += r.deep_holes_of_degree_k;
    out.degree_k_words += r.degree_k_words;
    out.every_deep_hole_has_degree_k = out.every_deep_hole_has_degree_k && r.every_deep_hole_has_degree_k;
    out.covering_radius = std::max(out.covering_radius, r.covering_radius);
    out.bounds_hold = out.bounds_hold && r.bounds_hold;
    Entries& e = c.report.entries;
    out.entries.insert(out.entries.end(), std::make_move_iterator(e.begin()), std::make_move_iterator(e.end()));
  }
  return out;
}

std::size_t minimum_distance(const RSCode& code, const Exec& exec) {
  const auto table = codeword_table(code, exec);
  std::size_t best = code.n() + 1;
  for (std::size_t c = 1; c < table.size(); ++c) {
    std::size_t w = 0;
    for (auto v : table[c]) w += v != 0;
    best = std::min(best, w);
  }
  return best;
}

}  // namespace rsdl
