#pragma once

#include <string>
#include <string_view>

#include "bellhopf/boson.hpp"

namespace bellhopf {

// Text syntax for boson expressions.
//
//   expr    := ["+" | "-"] term { ("+" | "-") term }
//   term    := factor { ["*"] factor }          juxtaposition multiplies
//   factor  := primary [ "^" power ]
//   primary := "a" | "ad" | rational | "(" expr ")"
//   rational:= digits [ "/" digits ]
//
// Examples: "(ad a)^3", "ad + a", "a ad", "1/2 ad^2 - 3 a".
// Empty input is a parse error.

BosonExpression parse_boson_expression(std::string_view text);

/// Words print with run-length powers ("ad a^2 ad"); the empty word is "1".
/// Output parses back to the same expression.
std::string to_string(const BosonWord& word);
std::string to_string(const BosonExpression& expr);

/// Terms in descending (r, s): "ad^2 a^2 + ad a", "ad a + 1".
std::string to_string(const NormalOrderedForm& form);

}  // namespace bellhopf
