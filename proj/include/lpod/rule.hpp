#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lpod/formula.hpp"

namespace lpod {

// head :- body_pos, not body_neg.  No head means a constraint.
struct NormalRule {
  std::optional<std::string> head;
  std::vector<std::string> body_pos, body_neg;

  friend bool operator==(const NormalRule&, const NormalRule&) = default;
};

// head[0] * head[1] * ... :- body_pos, not body_neg.  Empty head means a
// constraint.
struct LpodRule {
  std::vector<std::string> head;
  std::vector<std::string> body_pos, body_neg;

  friend bool operator==(const LpodRule&, const LpodRule&) = default;
};

// Disjunctive rule, possibly with negated literals in the head:
// head_pos | not head_neg :- body_pos, not body_neg.
struct GroundRule {
  std::vector<std::string> head_pos, head_neg;
  std::vector<std::string> body_pos, body_neg;

  friend bool operator==(const GroundRule&, const GroundRule&) = default;
};

// Rules as formulas: body literals fold left into a conjunction, heads into
// the respective disjunction; empty bodies yield the bare head, empty heads
// #false.
FormulaPtr as_formula(const NormalRule& r);
FormulaPtr as_formula(const LpodRule& r);
FormulaPtr as_formula(const GroundRule& r);

GroundRule to_ground(const NormalRule& r);

std::string rule_text(const NormalRule& r);
std::string rule_text(const LpodRule& r);
std::string rule_text(const GroundRule& r);

// Interprets parsed statements as LPOD rules: heads are chains of `*` over
// atoms (or #false), bodies conjunctions of literals. Duplicate head atoms
// are dropped, keeping the leftmost occurrence. Throws UnsupportedConstruct
// for anything else.
std::vector<LpodRule> extract_lpod_rules(const Program& p);

Program rules_program(const std::vector<LpodRule>& rules,
                      const std::vector<std::string>& extra_atoms = {});
Program rules_program(const std::vector<NormalRule>& rules,
                      const std::vector<std::string>& extra_atoms = {});
Program rules_program(const std::vector<GroundRule>& rules,
                      const std::vector<std::string>& extra_atoms = {});

std::vector<std::string> rule_atoms(const std::vector<LpodRule>& rules);
std::vector<std::string> rule_atoms(const std::vector<GroundRule>& rules);

}  // namespace lpod
