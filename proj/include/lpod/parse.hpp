#pragma once

#include <string_view>

#include "lpod/errors.hpp"
#include "lpod/formula.hpp"

namespace lpod {

// Surface syntax, loosest to tightest: `->` (right-assoc), `;`/`|`, `*`,
// `&`/`,`, then `~`/`not`. `H :- B.` is sugar for `B -> H.`, a leading
// `:- B.` for `B -> #false.`. `%` starts a comment, statements end with `.`.
// Atoms match [a-z_][A-Za-z0-9_]*; the leading underscore is reserved for
// generated atoms. Throws SyntaxError with a 1-based position.
Program parse_theory(std::string_view text);

// Parses a single formula (no trailing dot).
FormulaPtr parse_formula(std::string_view text);

}  // namespace lpod
