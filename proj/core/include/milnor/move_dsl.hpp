#pragma once

#include "milnor/braid.hpp"

#include <string>
#include <string_view>

namespace milnor {

// Grammar (whitespace-insensitive):
//   seq   := group (";" group)*
//   group := move ("," move)*
//   move  := ("a" | "alpha" | "α") int
//          | ("b" | "beta"  | "β") int
//          | ("g" | "gamma" | "γ") int
// Empty (or all-blank) input is the empty word. Lower index bounds are
// checked here (MoveRangeError); upper bounds depend on mu and are checked
// when the word is applied.
MoveSeq parse_moves(std::string_view text);

// Canonical ASCII form: "b4, b3, b2; g1".
std::string format_moves(const MoveSeq& s);

}  // namespace milnor
