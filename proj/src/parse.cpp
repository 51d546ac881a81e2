#include "rsdl/parse.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <string>

namespace rsdl {

namespace {

[[noreturn]] void fail(std::string_view text, std::size_t pos, const std::string& why) {
  throw Error(ErrorKind::ParseError,
              why + " at position " + std::to_string(pos) + " in \"" + std::string(text) + "\"");
}

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(text_, pos_, std::string("expected '") + c + "'");
  }
  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
  std::uint64_t integer() {
    skip_ws();
    std::uint64_t v = 0;
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr == begin) fail(text_, pos_, "expected an integer");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return v;
  }
  std::size_t pos() const { return pos_; }
  std::string_view rest() const { return text_.substr(pos_); }
  std::string_view text() const { return text_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

Poly parse_list(Cursor& cur, const Field& field) {
  cur.expect('[');
  std::vector<Elem> coeffs;
  if (!cur.accept(']')) {
    do {
      const auto v = cur.integer();
      if (v >= field.q()) fail(cur.text(), cur.pos(), "coefficient out of range");
      coeffs.push_back(static_cast<Elem>(v));
    } while (cur.accept(','));
    cur.expect(']');
  }
  return Poly(field, std::move(coeffs));
}

Poly parse_sum(Cursor& cur, const Field& field) {
  std::map<std::size_t, Elem> terms;
  bool negate = cur.accept('-');
  bool any = false;
  while (true) {
    Elem coeff = 1;
    bool has_coeff = false;
    if (cur.at_digit()) {
      const auto v = cur.integer();
      if (v >= field.q()) fail(cur.text(), cur.pos(), "coefficient out of range");
      coeff = static_cast<Elem>(v);
      has_coeff = true;
      cur.accept('*');
    }
    std::size_t power = 0;
    if (cur.accept('x')) {
      power = 1;
      if (cur.accept('^')) power = static_cast<std::size_t>(cur.integer());
    } else if (!has_coeff) {
      fail(cur.text(), cur.pos(), "expected a term");
    }
    if (negate) coeff = field.neg(coeff);
    auto& slot = terms[power];
    slot = field.add(slot, coeff);
    any = true;

    if (cur.accept('+')) {
      negate = false;
    } else if (cur.accept('-')) {
      negate = true;
    } else {
      break;
    }
  }
  if (!any) fail(cur.text(), cur.pos(), "empty polynomial");
  std::vector<Elem> coeffs(terms.rbegin()->first + 1, 0);
  for (auto [power, c] : terms) coeffs[power] = c;
  return Poly(field, std::move(coeffs));
}

}  // namespace

Poly parse_poly(std::string_view text, const Field& field) {
  Cursor cur(text);
  if (cur.done()) fail(text, 0, "empty polynomial");
  Poly result = cur.peek() == '[' ? parse_list(cur, field) : parse_sum(cur, field);
  if (!cur.done()) fail(text, cur.pos(), "trailing input");
  return result;
}

Field parse_field(std::string_view text) {
  Cursor cur(text);
  if (!(cur.accept('q') && cur.accept('='))) fail(text, cur.pos(), "expected \"q=\"");
  const auto base = cur.integer();
  std::uint64_t exponent = 0;
  const bool explicit_power = cur.accept('^');
  if (explicit_power) exponent = cur.integer();
  if (base > kMaxFieldOrder || exponent > 32) fail(text, cur.pos(), "field too large");

  std::optional<std::vector<std::uint32_t>> modulus;
  cur.accept(',') || cur.accept(';');
  if (!cur.done()) {
    if (cur.rest().substr(0, 4) != "mod=") fail(text, cur.pos(), "expected \"mod=\"");
    cur.accept('m'), cur.accept('o'), cur.accept('d'), cur.accept('=');
    const std::size_t start = cur.pos();
    const std::string_view poly_text = text.substr(start);
    std::uint32_t p = static_cast<std::uint32_t>(base);
    if (!explicit_power) {
      const auto f = prime_factors(base);
      if (f.size() != 1) throw Error(ErrorKind::NotPrime, std::to_string(base) + " is not a prime power");
      p = static_cast<std::uint32_t>(f[0]);
    }
    const Field prime_field = Field::make(p, 1);
    const Poly m = parse_poly(poly_text, prime_field);
    modulus = std::vector<std::uint32_t>(m.coeffs().begin(), m.coeffs().end());
  }

  if (explicit_power) {
    return Field::make(static_cast<std::uint32_t>(base), static_cast<std::uint32_t>(exponent), modulus);
  }
  if (!modulus) return Field::of_order(static_cast<std::uint32_t>(base));
  const auto f = prime_factors(base);
  std::uint32_t e = 0;
  for (std::uint64_t v = base; v > 1; v /= f[0]) ++e;
  return Field::make(static_cast<std::uint32_t>(f[0]), e, modulus);
}

std::vector<Elem> parse_elements(std::string_view text, const Field& field) {
  Cursor cur(text);
  const bool bracket = cur.accept('[');
  std::vector<Elem> out;
  if (!(bracket && cur.peek() == ']')) {
    do {
      const auto v = cur.integer();
      if (v >= field.q()) fail(text, cur.pos(), "element out of range");
      out.push_back(static_cast<Elem>(v));
    } while (cur.accept(','));
  }
  if (bracket) cur.expect(']');
  if (!cur.done()) fail(text, cur.pos(), "trailing input");
  return out;
}

std::vector<std::uint64_t> parse_uint_list(std::string_view text) {
  Cursor cur(text);
  std::vector<std::uint64_t> out;
  do {
    out.push_back(cur.integer());
  } while (cur.accept(','));
  if (!cur.done()) fail(text, cur.pos(), "trailing input");
  return out;
}

}  // namespace rsdl
