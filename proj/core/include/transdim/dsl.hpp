#pragma once

// Text syntax for ordinals and space expressions.
//
//   expr  := 'empty' | 'point' | 'I' ['^' nat] | 'cantor' '(' rational ')'
//          | 'S' '(' ord ')' | 'C' '(' ord ')' | 'Dsub' '(' ord ')'
//          | 'prod' '(' expr ',' expr ')' | 'cunion' '(' expr {',' expr} ')'
//          | 'lfunion' '(' expr {',' expr} [',' '...'] ')' | 'aug' '(' expr ')'
//          | 'excise' '(' expr ',' expr ')'
//          | 'alex' '(' expr {',' expr} [',' '...'] ')' | 'sub' '(' expr ')'
//          | expr 'with' '{' attr {',' attr} '}'
//   attr  := 'separable' | 'compact' | 'weight=aleph(' ord ')' | 'hd=' rational
//   ord   := term {'+' term}
//   term  := 'w' ['^' exp] ['*' nat] | nat | 'w_' index
//   exp   := nat | 'w' ['^' exp] | '(' ord ')'
//   index := nat | '(' ord ')'
//
// Whitespace is insignificant between tokens.

#include "transdim/ordinal.hpp"
#include "transdim/space_expr.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace transdim {

struct ParseFailure {
  std::size_t position = 0;            // byte offset of the earliest failing token
  std::vector<std::string> expected;   // sorted, deduplicated
  std::string message;

  std::string to_string() const;
};

struct ParseResult {
  std::variant<SpaceRef, ParseFailure> value;

  bool ok() const { return value.index() == 0; }
  const SpaceRef& expr() const { return std::get<0>(value); }
  const ParseFailure& failure() const { return std::get<1>(value); }
};

ParseResult parse(std::string_view input);

// Ordinal literal such as "w^2*3 + w + 4" or "w_1 + w". Throws ValidationError
// with the failing offset in the message.
Ordinal parse_ordinal(std::string_view input);

// Canonical text; parse(pretty(e)) is structurally equal to e.
std::string pretty(const SpaceExpr& e);
inline std::string pretty(const SpaceRef& e) { return pretty(*e); }

}  // namespace transdim
