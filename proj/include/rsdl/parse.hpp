#pragma once

#include <string_view>
#include <vector>

#include "rsdl/field.hpp"
#include "rsdl/poly.hpp"

namespace rsdl {

// Text grammars (all throw ParseError on malformed input):
//
//   field  := "q=" INT [ "^" INT ] [ sep "mod=" poly ]      sep is space , or ;
//   poly   := [ "-" ] term { ("+" | "-") term }  |  "[" INT { "," INT } "]"
//   term   := INT | [ INT [ "*" ] ] "x" [ "^" INT ]
//
// Integer coefficients are canonical element indices in [0, q). A bare
// "q=9" is factored as 3^2. The modulus polynomial is read over F_p.

Field parse_field(std::string_view text);
Poly parse_poly(std::string_view text, const Field& field);
/// "[1,2,0]" or "1,2,0" into element indices.
std::vector<Elem> parse_elements(std::string_view text, const Field& field);
/// "101,211,401" into integers.
std::vector<std::uint64_t> parse_uint_list(std::string_view text);

}  // namespace rsdl
