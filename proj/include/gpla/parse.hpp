#pragma once

// Text form of terms. Whitespace-insensitive; precedence from tightest:
// "&", then ";", then "|".
//
//   term := seq ("|" seq)*          union
//   seq  := par (";" par)*          sequential composition
//   par  := atom ("&" atom)*        parallel composition
//   atom := "(" term ")" | generator | "id" | "id(n)" | "sw"
//         | "cup(n)" | "cap(n)" | "scl(r)" | "coscl(r)"
//         | "max" | "abs" | "relu" | "plus" | "L" | "diode"
//         | "unionN(n)" | "mat([[r,...],...])"
//
// Rationals are "p", "-p", "p/q" or "-p/q".

#include <string>

#include "gpla/term.hpp"

namespace gpla {

/// Throws ParseError (bad grammar, with position) or TypeError (well-formed
/// text denoting an ill-typed composite).
Term parse(const std::string& text);

}  // namespace gpla
