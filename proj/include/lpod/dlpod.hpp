#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lpod/formula.hpp"
#include "lpod/ht.hpp"
#include "lpod/rule.hpp"

namespace lpod {

// Head term built from atoms with plain and ordered disjunction.
enum class OdKind { Atom, Or, Times };

struct OdTerm;
using OdTermPtr = std::shared_ptr<const OdTerm>;

struct OdTerm {
  OdKind kind;
  std::string name;  // Atom only
  OdTermPtr lhs, rhs;
};

OdTermPtr od_atom(std::string name);
OdTermPtr od_or(OdTermPtr lhs, OdTermPtr rhs);
OdTermPtr od_times(OdTermPtr lhs, OdTermPtr rhs);

bool od_equal(const OdTermPtr& a, const OdTermPtr& b);

// Mapping between head terms and formulas.  od_from_formula accepts exactly
// the pure ;/* combinations of atoms and throws UnsupportedConstruct
// otherwise.
FormulaPtr od_formula(const OdTermPtr& t);
OdTermPtr od_from_formula(const FormulaPtr& f);

// Flat head: a disjunction of ordered-disjunction chains of atoms.
struct OdnfHead {
  std::vector<std::vector<std::string>> disjuncts;

  bool operator==(const OdnfHead&) const = default;
};

// Exhaustively distributes * over ; and flattens both connectives; the
// result's disjuncts are sorted lexicographically.  Every step is classically
// valid, but distributing * from the left over an ; in its first argument
// can change the equilibrium semantics (see divergence_report).
OdnfHead to_odnf(const OdTermPtr& t);
bool head_in_odnf(const OdTermPtr& t);

// Folds a flat head back into a term (left-associated chains).
OdTermPtr odnf_term(const OdnfHead& h);

struct DlpodRule {
  std::optional<OdTermPtr> head;  // no head = constraint
  std::vector<std::string> body_pos;
  std::vector<std::string> body_neg;
};

FormulaPtr as_formula(const DlpodRule& r);
Program rules_program(const std::vector<DlpodRule>& p,
                      const std::vector<std::string>& extra_atoms = {});
std::vector<std::string> rule_atoms(const std::vector<DlpodRule>& p);
std::string rule_text(const DlpodRule& r);

// Statements must be rules whose heads are pure ;/* combinations of atoms;
// throws UnsupportedConstruct otherwise.
std::vector<DlpodRule> extract_dlpod_rules(const Program& p);

// One disjunctive rule per index vector (k_1..k_n) over the head's
// disjuncts: head A_1[k_1] | ... | A_n[k_n], body extended with the negated
// prefixes A_i[1..k_i-1].  Index vectors are enumerated lexicographically.
std::vector<GroundRule> dlpod_options(const OdnfHead& h,
                                      const std::vector<std::string>& body_pos,
                                      const std::vector<std::string>& body_neg);

// All interpretations that are minimal models of the program's reduct.  The
// reduct keeps head_pos <- body_pos for rules with body_neg disjoint from I
// and head_neg contained in I.
std::vector<Model> disjunctive_answer_sets(const std::vector<GroundRule>& p,
                                           const EnumOptions& opts = {});

// Union of disjunctive_answer_sets over all split programs obtained by
// picking one option per rule (heads are converted to ODNF first).
std::vector<Model> dlpod_answer_sets(const std::vector<DlpodRule>& p,
                                     const EnumOptions& opts = {});

struct DivergenceReport {
  bool input_is_odnf = false;
  std::vector<Model> dlpod_sets;             // answer sets via ODNF options
  std::vector<Model> equilibrium_sets;       // equilibrium models of the input
  std::vector<Model> odnf_equilibrium_sets;  // equilibrium models after ODNF rewriting
  bool odnf_rewrite_changed_ht = false;
  std::vector<Model> dlpod_only;
  std::vector<Model> equilibrium_only;
  bool inclusion_holds = false;  // odnf_equilibrium_sets subset of dlpod_sets
};

DivergenceReport divergence_report(const std::vector<DlpodRule>& p,
                                   const EnumOptions& opts = {});

// Replaces every occurrence of a pure-; subterm in the heads of p by a fresh
// atom and appends its defining rules: one rule per disjunct deriving the
// fresh atom, plus the disjunction itself with the fresh atom as body.
struct AuxDefinition {
  std::vector<DlpodRule> program;
  std::string aux_atom;
};

AuxDefinition aux_define(const std::vector<DlpodRule>& p, const OdTermPtr& subterm);

}  // namespace lpod
