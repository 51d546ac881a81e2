// Acceptance runner: one PASS/FAIL line per criterion, exit 1 on any FAIL.

#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "rsdl/suites.hpp"
#include "rsdl/weil.hpp"

using namespace rsdl;

namespace {

constexpr std::uint64_t kSeed = 20240601;
constexpr std::uint64_t kPowerLimit = 1'000'000;
constexpr std::size_t kFormulaKmax = 6;
constexpr std::size_t kBoundInstances = 1000;
constexpr std::size_t kInclusionInstances = 200;
constexpr std::size_t kSieveTrials = 50;
constexpr std::size_t kSieveKmax = 6;
constexpr std::size_t kSieveOmega = 7;
constexpr std::size_t kModulusDegree = 3;
constexpr std::size_t kN2Kmax = 3;
constexpr unsigned kRerunWorkers = 3;
// Root moduli may exceed sqrt(q) by this relative amount.
static_assert(kWeilTolerance == 1e-8);

const std::vector<std::uint32_t> kFormulaQs{2, 3, 4, 5, 7, 8, 9};
const std::vector<std::uint32_t> kBoundQs{5, 7, 8, 9};
const std::vector<std::uint32_t> kCharacterQs{3, 4, 5, 7};
const std::vector<std::size_t> kCharacterMs{0, 1, 2};
const std::vector<std::pair<std::uint32_t, std::size_t>> kRsParams{{3, 1}, {4, 1}, {4, 2}, {5, 2}};

struct Criterion {
  int id;
  std::string name;
  std::function<std::vector<SuiteResult>(const SuiteConfig&)> run;
};

std::vector<Criterion> criteria() {
  return {
      {1, "monomial counts equal the closed form",
       [](const SuiteConfig& c) { return std::vector{suite_knopfmacher(kFormulaQs, kFormulaKmax, kPowerLimit, c)}; }},
      {2, "codeword counts equal the closed form",
       [](const SuiteConfig& c) { return std::vector{suite_macwilliams(kFormulaQs, kFormulaKmax, kPowerLimit, c)}; }},
      {3, "N(f, r) within the main-term bound",
       [](const SuiteConfig& c) {
         return std::vector{
             suite_main_bound(random_count_instances(kBoundQs, kBoundInstances, kPowerLimit, c.seed), c)};
       }},
      {4, "M(f, r) exact up to k and within the pair bound above",
       [](const SuiteConfig& c) {
         return std::vector{
             suite_pair_bound(random_count_instances(kBoundQs, kBoundInstances, kPowerLimit, c.seed), c)};
       }},
      {5, "inclusion-exclusion rebuilds N from M",
       [](const SuiteConfig& c) {
         return std::vector{suite_inclusion_exclusion(
             random_count_instances(kBoundQs, kInclusionInstances, kPowerLimit, c.seed + 1), c)};
       }},
      {6, "sieve identities",
       [](const SuiteConfig& c) { return std::vector{suite_sieve(kSieveTrials, kSieveKmax, kSieveOmega, c)}; }},
      {7, "character sums, L-functions and root moduli",
       [](const SuiteConfig& c) {
         return std::vector{suite_characters(kCharacterQs, kCharacterMs, kModulusDegree, c)};
       }},
      {8, "N2 and N2* bounds and alpha identities",
       [](const SuiteConfig& c) { return std::vector{suite_n2(kCharacterQs, kCharacterMs, kN2Kmax, c)}; }},
      {9, "RS degree bounds, census and distance sums", [](const SuiteConfig& c) {
         return std::vector{suite_rs(kRsParams, c)};
       }},
  };
}

std::string transcript(const std::vector<SuiteResult>& results) {
  std::string out;
  for (const auto& r : results) out += r.summary_json() + "\n" + r.table.to_csv();
  return out;
}

}  // namespace

int main() {
  SuiteConfig base;
  base.seed = kSeed;
  base.exec = Exec{kDefaultBudget, 1};
  SuiteConfig rerun = base;
  rerun.exec.workers = kRerunWorkers;

  bool all_pass = true;
  bool deterministic = true;
  std::string mismatch;
  for (const auto& c : criteria()) {
    const auto start = std::chrono::steady_clock::now();
    const auto results = c.run(base);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool pass = true;
    std::uint64_t checks = 0, failures = 0;
    for (const auto& r : results) {
      pass = pass && r.passed();
      checks += r.checks;
      failures += r.failures;
    }
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " (" << checks
              << " checks, " << failures << " failures, " << secs << " s)\n";
    if (!pass)
      for (const auto& r : results)
        for (const auto& note : r.failure_notes) std::cout << "  " << r.name << ": " << note << "\n";
    all_pass = all_pass && pass;

    if (transcript(c.run(rerun)) != transcript(results)) {
      deterministic = false;
      mismatch += " " + std::to_string(c.id);
    }
  }
  std::cout << (deterministic ? "PASS" : "FAIL")
            << " criterion 10: reports identical with 1 and " << kRerunWorkers << " workers"
            << (deterministic ? "" : " (differs:" + mismatch + ")") << "\n";
  all_pass = all_pass && deterministic;
  return all_pass ? 0 : 1;
}
