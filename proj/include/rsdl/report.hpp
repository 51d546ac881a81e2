#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rsdl/bigmath.hpp"

namespace rsdl {

/// One table cell. `Bound` marks an upward-rounded real, written with a
/// leading "~" in CSV.
struct Cell {
  enum class Kind { Int, Real, Text, Bool, Bound, Empty };
  Kind kind = Kind::Empty;
  std::string text;

  static Cell integer(std::int64_t v) { return {Kind::Int, std::to_string(v)}; }
  static Cell integer(std::uint64_t v) { return {Kind::Int, std::to_string(v)}; }
  static Cell integer(const mpz_class& v) { return {Kind::Int, v.get_str()}; }
  /// Exact rational, "a/b" or an integer string.
  static Cell rational(const mpq_class& v);
  static Cell real(double v);
  static Cell bound(const UpperReal& v, int digits = 17) { return {Kind::Bound, v.to_string(digits)}; }
  static Cell boolean(bool v) { return {Kind::Bool, v ? "true" : "false"}; }
  static Cell str(std::string v) { return {Kind::Text, std::move(v)}; }
  static Cell empty() { return {}; }
};

enum class Format { Csv, Json };
Format parse_format(const std::string& text);

class Table {
 public:
  Table() = default;
  explicit Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

  /// Throws InvalidArgument when the row width does not match.
  void add_row(std::vector<Cell> row);
  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<std::vector<Cell>>& rows() const { return rows_; }
  std::size_t size() const { return rows_.size(); }

  std::string to_csv() const;
  /// Array of objects, one per row. Integers that fit in 64 bits become
  /// numbers; larger integers, rationals and bounds stay strings.
  std::string to_json(int indent = -1) const;
  std::string render(Format f) const { return f == Format::Csv ? to_csv() : to_json(2) + "\n"; }

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<Cell>> rows_;
};

}  // namespace rsdl
