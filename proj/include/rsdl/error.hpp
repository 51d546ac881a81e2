#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rsdl {

enum class ErrorKind {
  NotPrime,
  ReducibleModulus,
  FieldMismatch,
  DivisionByZeroPoly,
  BudgetExceeded,
  DuplicateDomainPoint,
  IsCodeword,
  NonIntegralResult,
  TrivialCharacter,
  NumericalInstability,
  KTooLarge,
  NotSymmetric,
  ParseError,
  RangeError,
  InvalidArgument,
};

const char* to_string(ErrorKind kind);

/// Single exception type for the library; callers dispatch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// Execution settings shared by every enumeration. Worker count never
/// changes results, only wall time.
struct Exec {
  std::uint64_t budget = kDefaultBudget;
  unsigned workers = 1;
};

/// Throws BudgetExceeded when `work` enumeration steps exceed the budget.
/// `work` is a double so callers can pass products that overflow 64 bits.
void require_budget(double work, const Exec& exec, const std::string& what);

}  // namespace rsdl
