#pragma once

#include <map>
#include <string>
#include <string_view>

#include "fgt/word.hpp"

namespace fgt {

using MacroTable = std::map<std::string, Word>;

// The stock macros a = (v then u) and b = (v, v then u), i.e. a = v*u and
// b = v^2*u in application order.
const MacroTable& default_macros();

// Parses word text against the grammar
//
//   expr := term+
//   term := atom ('^' int)?
//   atom := 'u' | 'v' | ident | '(' expr ')' | '[' expr ',' expr ']'
//   int  := '-'? [0-9]+
//
// Whitespace separates terms and is otherwise ignored; terms compose in
// application order (leftmost acts first); '[x,y]' takes the commutator
// under `conv`. Identifiers resolve through `macros`.
//
// Throws ParseError (with byte offset) on malformed input, empty input,
// or an unknown macro name.
Word parse_word(std::string_view text, const MacroTable& macros,
                BracketConvention conv = BracketConvention::Paper);

Word parse_word(std::string_view text,
                BracketConvention conv = BracketConvention::Paper);

}  // namespace fgt
