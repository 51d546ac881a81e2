#include "commands.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rsdl/closed_forms.hpp"
#include "rsdl/exact_counts.hpp"
#include "rsdl/n2_pipeline.hpp"
#include "rsdl/parse.hpp"
#include "rsdl/rng.hpp"
#include "rsdl/rs_metrics.hpp"
#include "rsdl/sieve.hpp"
#include "rsdl/suites.hpp"

namespace rsdl::cli {

namespace {

using json = nlohmann::ordered_json;

struct Globals {
  std::string field = "q=5";
  std::uint64_t budget = kDefaultBudget;
  unsigned precision = kDefaultPrecisionBits;
  std::string format = "csv";
  std::string out_path;
  unsigned workers = 1;
  std::uint64_t seed = 1;

  Exec exec() const { return {budget, workers}; }
  SuiteConfig suite() const { return {seed, exec(), precision}; }
  Format fmt() const { return parse_format(format); }
};

// Verification failures carry their report so it still reaches the output.
struct VerifyFailed {
  std::string report;
};

struct VerifyOptions {
  std::string suite;
  std::vector<std::uint32_t> qs;
  std::vector<std::size_t> ms;
  std::size_t kmax = 0;
  std::size_t count = 0;
  std::size_t trials = 50;
  std::size_t omega = 7;
  std::size_t degree = 3;
  std::uint64_t power_limit = 1'000'000;
};

template <class T>
std::vector<T> or_default(const std::vector<T>& given, std::vector<T> fallback) {
  return given.empty() ? fallback : given;
}

std::size_t or_default(std::size_t given, std::size_t fallback) { return given ? given : fallback; }

std::vector<std::size_t> output_rows(const Poly& f, std::size_t k) {
  const Poly g = normalize_for_counting(f, k);
  const std::size_t last = g.is_zero() ? f.field().q() : *g.degree();
  std::vector<std::size_t> rows;
  for (std::size_t r = 0; r <= last; ++r) rows.push_back(r);
  return rows;
}

std::string cmd_count(const Globals& g, const std::string& f_text, std::size_t k, std::optional<std::size_t> r,
                      bool check_formula) {
  const Field F = parse_field(g.field);
  const Poly f = parse_poly(f_text, F);
  if (k < 1) throw Error(ErrorKind::RangeError, "k must be at least 1");
  const Poly nf = normalize_for_counting(f, k);
  const long m = excess_degree(nf, k);
  const auto hist = count_N_all(f, k, g.exec());
  std::vector<std::size_t> rs = r ? std::vector<std::size_t>{*r} : output_rows(f, k);

  std::vector<std::string> cols{"q", "k", "m", "r", "f", "count"};
  if (check_formula) cols.insert(cols.end(), {"main", "bound", "holds", "gap"});
  Table t(cols);
  for (auto rr : rs) {
    const std::uint64_t value = rr < hist.size() ? hist[rr] : 0;
    std::vector<Cell> row{Cell::integer(std::uint64_t{F.q()}), Cell::integer(std::uint64_t{k}),
                          Cell::integer(std::int64_t{m}), Cell::integer(std::uint64_t{rr}), Cell::str(to_string(f)),
                          Cell::integer(value)};
    if (check_formula) {
      const BoundRow b = verify_bound(f, k, rr, g.exec(), g.precision);
      row.push_back(Cell::rational(b.report.main_term));
      row.push_back(Cell::bound(b.report.error_bound));
      row.push_back(Cell::boolean(*b.report.holds));
      row.push_back(Cell::rational(*b.report.gap()));
    }
    t.add_row(std::move(row));
  }
  return t.render(g.fmt());
}

Word word_from(const Globals& g, const Field& F, const RSCode& code, const std::string& word_text,
               const std::string& poly_text) {
  if (!word_text.empty() == !poly_text.empty())
    throw Error(ErrorKind::ParseError, "give exactly one of --word or --poly");
  if (!poly_text.empty()) return evaluate_word(parse_poly(poly_text, F), code.domain);
  (void)g;
  Word u{F, code.domain, parse_elements(word_text, F)};
  u.validate();
  return u;
}

std::string cmd_distribution(const Globals& g, std::size_t k, bool primitive, const std::string& word_text,
                             const std::string& poly_text) {
  const Field F = parse_field(g.field);
  const RSCode code = primitive ? RSCode::primitive(F, k) : RSCode::standard(F, k);
  const Word u = word_from(g, F, code, word_text, poly_text);
  if (u.size() != code.n()) throw Error(ErrorKind::InvalidArgument, "word length must equal n");
  const auto counts = distance_distribution(u, code, g.exec());
  const auto deg = word_degree(u);
  std::size_t dist = 0;
  while (counts[dist] == 0) ++dist;
  Cell lower = Cell::empty(), upper = Cell::empty();
  std::string cls = "Codeword";
  if (deg && *deg >= k) {
    const auto [lo, hi] = degree_bounds(u, code);
    lower = Cell::integer(std::uint64_t{lo});
    upper = Cell::integer(std::uint64_t{hi});
    cls = to_string(classify(u, code, g.exec()));
  }
  std::string word;
  for (std::size_t i = 0; i < u.size(); ++i) word += (i ? " " : "") + std::to_string(u.values[i]);
  Table t({"q", "n", "k", "word", "degree", "lower", "upper", "error_distance", "class", "i", "count"});
  for (std::size_t i = 0; i < counts.size(); ++i)
    t.add_row({Cell::integer(std::uint64_t{F.q()}), Cell::integer(std::uint64_t{code.n()}),
               Cell::integer(std::uint64_t{k}), Cell::str(word),
               deg ? Cell::integer(std::uint64_t{*deg}) : Cell::empty(), lower, upper,
               Cell::integer(std::uint64_t{dist}), Cell::str(cls), Cell::integer(std::uint64_t{i}),
               Cell::integer(counts[i])});
  return t.render(g.fmt());
}

std::string cmd_census(const Globals& g, std::size_t k, bool primitive, bool all_words, std::ostream& err) {
  const Field F = parse_field(g.field);
  const RSCode code = primitive ? RSCode::primitive(F, k) : RSCode::standard(F, k);
  const CensusReport rep = deep_hole_census(code, g.exec(), all_words);
  json arr = json::array();
  for (const auto& e : rep.entries) {
    json item;
    item["word"] = e.word;
    item["degree"] = e.degree ? json(*e.degree) : json(nullptr);
    item["distance"] = e.distance;
    item["class"] = e.word_class;
    arr.push_back(std::move(item));
  }
  json summary;
  summary["field"] = F.describe();
  summary["n"] = code.n();
  summary["k"] = k;
  summary["words"] = rep.words;
  summary["deep_holes"] = rep.deep_holes;
  summary["deep_holes_of_degree_k"] = rep.deep_holes_of_degree_k;
  summary["degree_k_words"] = rep.degree_k_words;
  summary["every_deep_hole_has_degree_k"] = rep.every_deep_hole_has_degree_k;
  summary["covering_radius"] = rep.covering_radius;
  summary["bounds_hold"] = rep.bounds_hold;
  err << summary.dump() << "\n";
  return arr.dump(2) + "\n";
}

std::string cmd_bounds_sweep(const Globals& g, const std::vector<std::uint32_t>& qs, std::size_t count,
                             std::uint64_t power_limit) {
  const auto instances = random_count_instances(or_default(qs, {5, 7, 8, 9}), or_default(count, 100), power_limit,
                                                g.seed);
  const SuiteResult res = suite_main_bound(instances, g.suite());
  const std::string text = res.table.render(g.fmt());
  if (!res.passed()) throw VerifyFailed{text};
  return text;
}

std::vector<SuiteResult> run_suites(const Globals& g, const VerifyOptions& o) {
  const SuiteConfig cfg = g.suite();
  std::vector<SuiteResult> out;
  const bool all = o.suite == "all";
  auto want = [&](const char* name) { return all || o.suite == name; };
  if (want("formulas")) {
    const auto qs = or_default(o.qs, {2, 3, 4, 5, 7, 8, 9});
    out.push_back(suite_knopfmacher(qs, or_default(o.kmax, 6), o.power_limit, cfg));
    out.push_back(suite_macwilliams(qs, or_default(o.kmax, 6), o.power_limit, cfg));
  }
  std::vector<CountInstance> instances;
  if (want("bounds") || want("pairs")) {
    instances = random_count_instances(or_default(o.qs, {5, 7, 8, 9}), or_default(o.count, 1000), o.power_limit,
                                       g.seed);
    if (want("bounds")) out.push_back(suite_main_bound(instances, cfg));
    if (want("pairs")) out.push_back(suite_pair_bound(instances, cfg));
  }
  if (want("inclusion")) {
    const auto inst = random_count_instances(or_default(o.qs, {5, 7, 8, 9}), or_default(o.count, 200),
                                             o.power_limit, g.seed + 1);
    out.push_back(suite_inclusion_exclusion(inst, cfg));
  }
  if (want("sieve")) out.push_back(suite_sieve(o.trials, or_default(o.kmax, 6), o.omega, cfg));
  if (want("weil"))
    out.push_back(suite_characters(or_default(o.qs, {3, 4, 5, 7}), or_default(o.ms, {0, 1, 2}), o.degree, cfg));
  if (want("n2")) out.push_back(suite_n2(or_default(o.qs, {3, 4, 5, 7}), or_default(o.ms, {0, 1, 2}),
                                         or_default(o.kmax, 3), cfg));
  if (want("rs")) {
    std::vector<std::pair<std::uint32_t, std::size_t>> params{{3, 1}, {4, 1}, {4, 2}, {5, 2}};
    if (!o.qs.empty()) {
      params.clear();
      for (auto q : o.qs)
        for (std::size_t k = 1; k <= or_default(o.kmax, 2) && k < q; ++k) params.emplace_back(q, k);
    }
    out.push_back(suite_rs(params, cfg));
  }
  return out;
}

std::string cmd_verify(const Globals& g, const VerifyOptions& o, std::ostream& err) {
  const auto results = run_suites(g, o);
  std::string text;
  bool ok = true;
  for (const auto& r : results) {
    text += r.summary_json() + "\n";
    if (!r.passed()) {
      ok = false;
      for (const auto& note : r.failure_notes) err << r.name << ": " << note << "\n";
    }
  }
  if (!ok) throw VerifyFailed{text};
  return text;
}

std::string cmd_weil_sweep(const Globals& g, const std::string& modulus_text, std::optional<std::size_t> m,
                           bool full) {
  const Field F = parse_field(g.field);
  if (modulus_text.empty() == !m) throw Error(ErrorKind::ParseError, "give exactly one of --modulus or --m");
  const Poly modulus = m ? Poly::monomial(F, *m + 1) : parse_poly(modulus_text, F);
  const Table t = weil_sweep_table(modulus, !full, g.suite());
  const std::string text = t.render(g.fmt());
  for (const auto& row : t.rows())
    if (row[5].text != "true" || row[7].text != "true") throw VerifyFailed{text};
  return text;
}

std::string cmd_sieve_selftest(const Globals& g, std::size_t kmax, std::size_t trials, std::size_t omega) {
  const SuiteResult res = suite_sieve(trials, kmax, omega, g.suite());
  struct Cellwise {
    std::uint64_t instances = 0, symmetric = 0, equal = 0, tuple_ok = 0;
  };
  std::map<std::size_t, Cellwise> by_k;
  for (const auto& row : res.table.rows()) {
    auto& c = by_k[std::stoul(row[1].text)];
    ++c.instances;
    c.symmetric += row[3].text == "true";
    c.equal += row[8].text == "true";
    c.tuple_ok += row[7].text == "true";
  }
  Table t({"k", "permutation_terms", "class_terms", "instances", "symmetric", "identities_hold", "tuple_count_ok"});
  for (const auto& [k, c] : by_k) {
    const SieveTermCounts terms = sieve_term_counts(k);
    t.add_row({Cell::integer(std::uint64_t{k}), Cell::integer(terms.permutations), Cell::integer(terms.classes),
               Cell::integer(c.instances), Cell::integer(c.symmetric), Cell::boolean(c.equal == c.instances),
               Cell::boolean(c.tuple_ok == c.instances)});
  }
  const std::string text = t.render(g.fmt());
  if (!res.passed()) throw VerifyFailed{text};
  return text;
}

std::vector<long> parse_primes(const std::string& text) {
  std::vector<long> out;
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    for (auto v : parse_uint_list(text)) out.push_back(static_cast<long>(v));
    return out;
  }
  const auto lo = parse_uint_list(text.substr(0, dots)), hi = parse_uint_list(text.substr(dots + 2));
  if (lo.size() != 1 || hi.size() != 1) throw Error(ErrorKind::ParseError, "prime range must be a..b");
  for (auto p = lo[0]; p <= hi[0]; ++p)
    if (is_prime(p)) out.push_back(static_cast<long>(p));
  return out;
}

std::string cmd_regime(const Globals& g, double c, double delta, double lambda, const std::string& primes) {
  const RegimeParams params{c, delta, lambda};
  const auto rows = regime_report(params, parse_primes(primes), g.precision);
  Table t({"p", "c", "delta", "lambda", "k", "m", "r", "main", "bound", "ratio", "e_increasing", "argmax_offset",
           "max_ratio_formula_error", "m_times_max_e", "applicable"});
  for (const auto& r : rows)
    t.add_row({Cell::integer(std::int64_t{r.p}), Cell::real(c), Cell::real(delta), Cell::real(lambda),
               Cell::integer(std::int64_t{r.k}), Cell::integer(std::int64_t{r.m}), Cell::integer(std::int64_t{r.r}),
               Cell::real(r.main_term), Cell::bound(r.error_bound), Cell::real(r.ratio),
               Cell::boolean(r.e_increasing), Cell::integer(std::uint64_t{r.argmax_offset}),
               Cell::real(r.max_ratio_formula_error), Cell::real(r.m_times_max_e), Cell::boolean(r.applicable)});
  return t.render(g.fmt());
}

json fixture(const Field& F, long k, long m, const std::string& f, std::size_t r, std::uint64_t value,
             const char* oracle) {
  json j;
  j["field"] = F.describe();
  j["k"] = k;
  j["m"] = m;
  j["f"] = f;
  j["r"] = r;
  j["value"] = value;
  j["oracle"] = oracle;
  return j;
}

std::string cmd_fixtures(const Globals& g) {
  const Exec exec = g.exec();
  json arr = json::array();
  auto add_counts = [&](const Poly& f, std::size_t k, bool with_m) {
    const Poly nf = normalize_for_counting(f, k);
    const long m = excess_degree(nf, k);
    const auto hist = count_N_all(f, k, exec);
    for (auto r : output_rows(f, k)) {
      arr.push_back(fixture(f.field(), static_cast<long>(k), m, to_string(f), r, hist[r], "count_N"));
      if (with_m) arr.push_back(fixture(f.field(), static_cast<long>(k), m, to_string(f), r,
                                        count_M_subsets(f, k, r, exec), "count_M"));
    }
  };
  const Field F5 = Field::of_order(5), F7 = Field::of_order(7);
  add_counts(parse_poly("x^3", F5), 2, false);
  add_counts(parse_poly("x^4", F5), 2, false);
  add_counts(parse_poly("x^5+x^4", F7), 3, false);
  add_counts(Poly(F5), 2, false);
  for (const auto& inst : random_count_instances({3, 4, 5, 7}, 12, 10'000, g.seed))
    add_counts(Poly(Field::of_order(inst.q), inst.f), inst.k, true);

  Rng rng(g.seed);
  for (std::uint32_t q : {4u, 5u, 7u}) {
    const Field F = Field::of_order(q);
    for (std::size_t m = 1; m <= 2; ++m) {
      std::vector<Elem> t(m + 1, 0);
      t[0] = 1;
      for (std::size_t i = 1; i <= m; ++i) t[i] = static_cast<Elem>(rng.below(q));
      const Poly target(F, t);
      const std::size_t d = m + 2;
      for (std::size_t r = 0; r <= d; ++r) {
        const long k = static_cast<long>(d - m);
        arr.push_back(fixture(F, k, static_cast<long>(m), to_string(target), r, count_N2(target, r, d, m, exec),
                              "count_N2"));
        arr.push_back(fixture(F, k, static_cast<long>(m), to_string(target), r,
                              count_N2_star(target, r, d, m, exec), "count_N2_star"));
      }
    }
  }
  return arr.dump(1) + "\n";
}

int exit_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::BudgetExceeded: return kBudget;
    default: return kParseError;
  }
}

void emit(const Globals& g, const std::string& text, std::ostream& out) {
  if (g.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(g.out_path, std::ios::binary);
  if (!file) throw Error(ErrorKind::InvalidArgument, "cannot open " + g.out_path);
  file << text;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Globals g;
  if (const char* env = std::getenv("RSDL_BUDGET")) {
    try {
      g.budget = std::stoull(env);
    } catch (const std::exception&) {
      err << "RSDL_BUDGET must be a positive integer\n";
      return kParseError;
    }
  }

  CLI::App app{"Exact distance distributions of Reed-Solomon codes over small fields"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--field", g.field, "field, e.g. q=5 or q=3^2 or 'q=3^2 mod=x^2+1'");
  app.add_option("--budget", g.budget, "maximum enumeration size")->check(CLI::PositiveNumber);
  app.add_option("--precision", g.precision, "bits for upward-rounded bounds")->check(CLI::PositiveNumber);
  app.add_option("--format", g.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", g.out_path, "write the report here instead of stdout");
  app.add_option("--workers", g.workers, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "instance generator seed");

  std::function<std::string()> action;

  std::string f_text;
  std::size_t k = 0;
  std::optional<std::size_t> r;
  bool all_r = false, check_formula = false;
  auto* count = app.add_subcommand("count", "N(f, r) by enumeration");
  count->add_option("--f", f_text, "polynomial")->required();
  count->add_option("--k", k, "dimension")->required();
  auto* r_opt = count->add_option("--r", r, "single root count");
  count->add_flag("--all-r", all_r, "every r (default)")->excludes(r_opt);
  count->add_flag("--check-formula", check_formula, "attach main term and bound");
  count->callback([&] { action = [&] { return cmd_count(g, f_text, k, r, check_formula); }; });

  std::string word_text, poly_text;
  bool primitive = false, all_words = false;
  auto* dist = app.add_subcommand("distribution", "N_i(u) of one word");
  dist->add_option("--k", k, "dimension")->required();
  dist->add_option("--word", word_text, "comma-separated values on the domain");
  dist->add_option("--poly", poly_text, "word given by evaluating a polynomial");
  dist->add_flag("--primitive", primitive, "domain F_q^*");
  dist->callback([&] { action = [&] { return cmd_distribution(g, k, primitive, word_text, poly_text); }; });

  auto* census = app.add_subcommand("census", "deep holes by exhaustive search");
  census->add_option("--k", k, "dimension")->required();
  census->add_flag("--primitive", primitive, "domain F_q^*");
  census->add_flag("--all-words", all_words, "list every word, not only deep holes");
  census->callback([&] { action = [&] { return cmd_census(g, k, primitive, all_words, err); }; });

  VerifyOptions vo;
  auto* bounds = app.add_subcommand("bounds", "bound sweeps");
  bounds->require_subcommand(1);
  auto* bsweep = bounds->add_subcommand("sweep", "random instances against the main bound");
  bsweep->add_option("--q", vo.qs, "field orders")->delimiter(',');
  bsweep->add_option("--count", vo.count, "instances");
  bsweep->add_option("--power-limit", vo.power_limit, "cap on q^k");
  bsweep->callback([&] { action = [&] { return cmd_bounds_sweep(g, vo.qs, vo.count, vo.power_limit); }; });

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", vo.suite, "formulas|bounds|pairs|inclusion|sieve|weil|n2|rs|all")
      ->required()
      ->check(CLI::IsMember({"formulas", "bounds", "pairs", "inclusion", "sieve", "weil", "n2", "rs", "all"}));
  verify->add_option("--q", vo.qs, "field orders")->delimiter(',');
  verify->add_option("--m", vo.ms, "excess degrees")->delimiter(',');
  verify->add_option("--kmax,--k", vo.kmax, "largest k");
  verify->add_option("--count", vo.count, "random instances");
  verify->add_option("--trials", vo.trials, "sieve instances");
  verify->add_option("--omega", vo.omega, "largest sieve alphabet");
  verify->add_option("--degree", vo.degree, "largest general modulus degree");
  verify->add_option("--power-limit", vo.power_limit, "cap on q^k");
  verify->callback([&] { action = [&] { return cmd_verify(g, vo, err); }; });

  std::string modulus_text;
  std::optional<std::size_t> m;
  bool full = false;
  auto* weil = app.add_subcommand("weil", "character sums");
  weil->require_subcommand(1);
  auto* wsweep = weil->add_subcommand("sweep", "per-character |M_k| and L-root check");
  wsweep->add_option("--modulus", modulus_text, "modulus polynomial");
  wsweep->add_option("--m", m, "use x^(m+1)");
  wsweep->add_flag("--full", full, "all characters, not only those trivial on scalars");
  wsweep->callback([&] { action = [&] { return cmd_weil_sweep(g, modulus_text, m, full); }; });

  std::size_t sieve_k = 6, trials = 50, omega = 7;
  auto* sieve = app.add_subcommand("sieve", "distinct-coordinate sieve");
  sieve->require_subcommand(1);
  auto* selftest = sieve->add_subcommand("selftest", "identity suite as a pass matrix");
  selftest->add_option("--k", sieve_k, "largest k")->check(CLI::Range(1, static_cast<int>(kSieveMaxK)));
  selftest->add_option("--trials", trials, "instances");
  selftest->add_option("--omega", omega, "largest alphabet")->check(CLI::PositiveNumber);
  selftest->callback([&] { action = [&] { return cmd_sieve_selftest(g, sieve_k, trials, omega); }; });

  double c = 0, delta = 0, lambda = 0;
  std::string primes;
  auto* regime = app.add_subcommand("regime", "large-p diagnostic table");
  regime->add_option("--c", c)->required();
  regime->add_option("--delta", delta)->required();
  regime->add_option("--lambda", lambda)->required();
  regime->add_option("--primes", primes, "list a,b,c or range a..b")->required();
  regime->callback([&] { action = [&] { return cmd_regime(g, c, delta, lambda, primes); }; });

  auto* fixtures = app.add_subcommand("fixtures", "test fixtures");
  fixtures->require_subcommand(1);
  auto* generate = fixtures->add_subcommand("generate", "oracle records as JSON");
  generate->callback([&] { action = [&] { return cmd_fixtures(g); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kPass : kParseError;
  }

  try {
    emit(g, action(), out);
    return kPass;
  } catch (const VerifyFailed& v) {
    emit(g, v.report, out);
    err << "verification failed\n";
    return kVerifyFailed;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return exit_for(e);
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return kParseError;
  }
}

}  // namespace rsdl::cli
