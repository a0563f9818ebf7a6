#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lpod/formula.hpp"
#include "lpod/ht.hpp"
#include "lpod/rule.hpp"

namespace lpod {

// Formula-level representations of an ordered disjunction over a sequence of
// formulas.  All three are strongly equivalent to the folded chain
// fold_ordered(a); the empty sequence corresponds to #false.

// a1 ; (~a1 & a2) ; (~a1 & ~a2 & a3) ; ...
FormulaPtr expand_x(const FormulaSeq& a);

// (a1 ; ~a1) & (a2 ; ~a2 <- ~a1) & ... & (#false <- ~a1 & ... & ~an),
// folded into a single conjunction.  Implication wrappers are omitted when
// the antecedent is empty.
FormulaPtr conj_form(const FormulaSeq& a);

// (a1 ; ... ; an) & (a1 ; ~a1) & (a1 ; a2 ; ~a2) & ... up to i = n-1.
FormulaPtr third_form(const FormulaSeq& a);

// Distributes a rule body (a conjunction of literals, or #true) into every
// implication of conj_form(head_seq), yielding one statement per implication:
// m choice statements followed by one constraint.
std::vector<FormulaPtr> compose_rule(const FormulaPtr& body, const FormulaSeq& head_seq);

// One rule of the choice translation of an LPOD: head_atom ; ~head_atom <-
// body when negated_twin is set, a definite rule otherwise.
struct ChoiceRule {
  std::string head_atom;
  bool negated_twin = true;
  std::vector<std::string> body_pos;
  std::vector<std::string> body_neg;

  bool operator==(const ChoiceRule&) const = default;
};

// Choice translation of an LPOD.  Per source rule with head length m the
// plain translation has m choice rules plus one constraint; the refined
// variant has m-1 choice rules plus one definite rule and no constraint.
// Source constraints are carried over unchanged.  The origin vectors map
// each rule back to the index of the source rule it came from.
struct StarProgram {
  std::vector<ChoiceRule> choice_rules;
  std::vector<NormalRule> constraints;
  std::vector<std::size_t> choice_origin;
  std::vector<std::size_t> constraint_origin;
};

StarProgram star(const std::vector<LpodRule>& p);

// Drops each derived constraint and turns the last choice rule of every
// source rule into a definite rule.  Constraints that came from source
// constraints (no sibling choice rules) are kept.
StarProgram refine(const StarProgram& sp);

FormulaPtr choice_formula(const ChoiceRule& r);

// The translation as a theory / as disjunctive rules, with the rules of each
// source rule grouped together in source order.
Program star_as_program(const StarProgram& sp);
std::vector<GroundRule> star_as_ground(const StarProgram& sp);

// Result of eliminating negated head twins: a ; ~a <- G becomes
// a <- G & ~x plus x <- ~a for a fresh atom x.  The equilibrium models,
// restricted to the original signature, are unchanged.
struct NormalizedProgram {
  std::vector<NormalRule> rules;
  std::vector<std::string> aux_atoms;
};

NormalizedProgram eliminate_head_negation(const StarProgram& sp);

// Removes the given atoms from every model and deduplicates.
std::vector<Model> strip_atoms(const std::vector<Model>& models,
                               const std::vector<std::string>& remove);

// Renders rules as solver-ready text, one rule per line.  The only
// supported dialect is "core2" (`:-` / `|` / `not` / `,` syntax).
std::string emit_solver_text(const std::vector<GroundRule>& rules,
                             const std::string& dialect = "core2");

// Feeds program text to an external solver executable on standard input and
// parses one answer set per non-empty output line (space-separated atoms).
// Throws std::runtime_error when the solver cannot be run.
std::vector<Model> run_external_solver(const std::string& solver_path,
                                       const std::string& program_text);

}  // namespace lpod
