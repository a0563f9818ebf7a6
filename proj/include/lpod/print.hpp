#pragma once

#include <string>

#include "lpod/formula.hpp"

namespace lpod {

// Formula syntax with minimal parentheses; `->` binds loosest, then `;`,
// `*`, `&`, `~`. Abbreviations print as `~F`, `#true`, `#false`.
// parse_formula(to_text(f)) is structurally equal to f.
std::string to_text(const FormulaPtr& f);

// Rule-style rendering: implications print as `H :- B.` with `|` between
// head literals and `, ` / `not ` in literal bodies; anything not
// rule-shaped falls back to formula syntax. Output re-parses.
std::string statement_text(const FormulaPtr& f);

// One statement per line.
std::string program_text(const Program& p);

}  // namespace lpod
