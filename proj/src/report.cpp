#include "rsdl/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "rsdl/error.hpp"

namespace rsdl {

Cell Cell::rational(const mpq_class& v) { return {v.get_den() == 1 ? Kind::Int : Kind::Text, v.get_str()}; }

Cell Cell::real(double v) {
  if (!std::isfinite(v)) return {Kind::Real, std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf")};
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return {Kind::Real, buf};
}

Format parse_format(const std::string& text) {
  if (text == "csv") return Format::Csv;
  if (text == "json") return Format::Json;
  throw Error(ErrorKind::ParseError, "format must be csv or json, got '" + text + "'");
}

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns_.size())
    throw Error(ErrorKind::InvalidArgument, "row has " + std::to_string(row.size()) + " cells, expected " +
                                                std::to_string(columns_.size()));
  rows_.push_back(std::move(row));
}

namespace {

std::string csv_field(const Cell& c) {
  std::string t = c.kind == Cell::Kind::Bound ? "~" + c.text : c.text;
  if (t.find_first_of(",\"\n") == std::string::npos) return t;
  std::string out = "\"";
  for (char ch : t) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string csv_header(const std::string& t) {
  if (t.find_first_of(",\"\n") == std::string::npos) return t;
  return "\"" + t + "\"";
}

}  // namespace

std::string Table::to_csv() const {
  std::string out;
  for (std::size_t i = 0; i < columns_.size(); ++i) out += (i ? "," : "") + csv_header(columns_[i]);
  out += "\n";
  for (const auto& row : rows_) {
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + csv_field(row[i]);
    out += "\n";
  }
  return out;
}

std::string Table::to_json(int indent) const {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& row : rows_) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      const Cell& c = row[i];
      auto& slot = obj[columns_[i]];
      switch (c.kind) {
        case Cell::Kind::Int: {
          std::int64_t v = 0;
          auto [ptr, ec] = std::from_chars(c.text.data(), c.text.data() + c.text.size(), v);
          if (ec == std::errc() && ptr == c.text.data() + c.text.size()) slot = v;
          else slot = c.text;
          break;
        }
        case Cell::Kind::Real: {
          const double v = std::strtod(c.text.c_str(), nullptr);
          if (std::isfinite(v)) slot = v;
          else slot = c.text;
          break;
        }
        case Cell::Kind::Bool: slot = c.text == "true"; break;
        case Cell::Kind::Empty: slot = nullptr; break;
        default: slot = c.text;
      }
    }
    arr.push_back(std::move(obj));
  }
  return arr.dump(indent);
}

}  // namespace rsdl
