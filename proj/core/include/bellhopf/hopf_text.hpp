#pragma once

#include <string>
#include <string_view>

#include "bellhopf/hopf.hpp"

namespace bellhopf {

// Text form of Hopf elements.
//
//   element := ["-"] term { ("+" | "-") term }
//   term    := factor { "*" factor }
//   factor  := rational | "e" | "y" index [ "^" power ]
//   rational:= digits [ "/" digits ]
//
// Whitespace is ignored between tokens. "0" is the zero element and "1" (or
// "e") the unit. Printing lists terms by weight, then letters, with unit
// coefficients omitted: "7/2 + y1 - 3/2*y1^2*y3".

HopfElement parse_hopf_element(std::string_view text);
std::string to_string(const HopfElement& a);
/// "y1 (x) y2 + 2 y1^2 (x) e" style; not parseable.
std::string to_string(const TensorElement& t);

}  // namespace bellhopf
