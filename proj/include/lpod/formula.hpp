#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

namespace lpod {

enum class Conn { Bottom, Atom, And, Or, Implies, OrderedOr };

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;
using FormulaSeq = std::vector<FormulaPtr>;

// Immutable formula tree. Negation and truth are abbreviations rather than
// node kinds: ~F is stored as F -> #false and #true as #false -> #false.
struct Formula {
  Conn kind;
  std::string name;     // Conn::Atom only
  FormulaPtr lhs, rhs;  // binary connectives only
};

FormulaPtr bottom();
FormulaPtr top();
FormulaPtr atom(std::string name);
FormulaPtr conj(FormulaPtr l, FormulaPtr r);
FormulaPtr disj(FormulaPtr l, FormulaPtr r);
FormulaPtr implies(FormulaPtr l, FormulaPtr r);
FormulaPtr ordered(FormulaPtr l, FormulaPtr r);
FormulaPtr neg(FormulaPtr f);

bool is_bottom(const FormulaPtr& f);
bool is_neg(const FormulaPtr& f);  // any F -> #false, including #true
bool is_top(const FormulaPtr& f);  // #false -> #false exactly

// Structural equality.
bool equal(const FormulaPtr& a, const FormulaPtr& b);

std::set<std::string> atoms_of(const FormulaPtr& f);
void collect_atoms(const FormulaPtr& f, std::set<std::string>& out);

// Left folds. The empty conjunction is #true, the empty disjunction
// (ordered or not) is #false.
FormulaPtr fold_conj(const FormulaSeq& items);
FormulaPtr fold_disj(const FormulaSeq& items);
FormulaPtr fold_ordered(const FormulaSeq& items);

FormulaSeq neg_all(const FormulaSeq& items);
FormulaSeq atom_seq(const std::vector<std::string>& names);

// Replaces every F * G by F ; (~F & G), bottom-up. The result contains no
// ordered disjunction and the same atoms.
FormulaPtr desugar(const FormulaPtr& f);

// Keeps the first occurrence of each syntactically identical member.
FormulaSeq ordered_dedup(const FormulaSeq& items);

struct SourcePos {
  int line = 0;
  int column = 0;
};

struct Program {
  std::vector<FormulaPtr> statements;
  // Sorted, duplicate-free, covers every atom occurring in the statements.
  // May contain additional atoms beyond those.
  std::vector<std::string> signature;
  // Statement start positions; filled by the parser, may be empty for
  // programmatically built programs.
  std::vector<SourcePos> statement_pos;
};

Program make_program(std::vector<FormulaPtr> statements,
                     const std::vector<std::string>& extra_atoms = {});

}  // namespace lpod
