#include "lpod/formula.hpp"

#include <algorithm>
#include <utility>

namespace lpod {

namespace {

FormulaPtr make(Conn kind, std::string name, FormulaPtr l, FormulaPtr r) {
  return FormulaPtr(new Formula{kind, std::move(name), std::move(l), std::move(r)});
}

}  // namespace

FormulaPtr bottom() {
  static const FormulaPtr instance = make(Conn::Bottom, {}, nullptr, nullptr);
  return instance;
}

FormulaPtr top() {
  static const FormulaPtr instance = implies(bottom(), bottom());
  return instance;
}

FormulaPtr atom(std::string name) {
  return make(Conn::Atom, std::move(name), nullptr, nullptr);
}

FormulaPtr conj(FormulaPtr l, FormulaPtr r) {
  return make(Conn::And, {}, std::move(l), std::move(r));
}

FormulaPtr disj(FormulaPtr l, FormulaPtr r) {
  return make(Conn::Or, {}, std::move(l), std::move(r));
}

FormulaPtr implies(FormulaPtr l, FormulaPtr r) {
  return make(Conn::Implies, {}, std::move(l), std::move(r));
}

FormulaPtr ordered(FormulaPtr l, FormulaPtr r) {
  return make(Conn::OrderedOr, {}, std::move(l), std::move(r));
}

FormulaPtr neg(FormulaPtr f) { return implies(std::move(f), bottom()); }

bool is_bottom(const FormulaPtr& f) { return f->kind == Conn::Bottom; }

bool is_neg(const FormulaPtr& f) {
  return f->kind == Conn::Implies && is_bottom(f->rhs);
}

bool is_top(const FormulaPtr& f) { return is_neg(f) && is_bottom(f->lhs); }

bool equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Conn::Bottom: return true;
    case Conn::Atom: return a->name == b->name;
    default: return equal(a->lhs, b->lhs) && equal(a->rhs, b->rhs);
  }
}

void collect_atoms(const FormulaPtr& f, std::set<std::string>& out) {
  switch (f->kind) {
    case Conn::Bottom: return;
    case Conn::Atom: out.insert(f->name); return;
    default:
      collect_atoms(f->lhs, out);
      collect_atoms(f->rhs, out);
  }
}

std::set<std::string> atoms_of(const FormulaPtr& f) {
  std::set<std::string> out;
  collect_atoms(f, out);
  return out;
}

namespace {

FormulaPtr fold(const FormulaSeq& items, FormulaPtr (*op)(FormulaPtr, FormulaPtr),
                FormulaPtr unit) {
  if (items.empty()) return unit;
  FormulaPtr acc = items.front();
  for (std::size_t i = 1; i < items.size(); ++i) acc = op(acc, items[i]);
  return acc;
}

}  // namespace

FormulaPtr fold_conj(const FormulaSeq& items) { return fold(items, conj, top()); }
FormulaPtr fold_disj(const FormulaSeq& items) { return fold(items, disj, bottom()); }
FormulaPtr fold_ordered(const FormulaSeq& items) {
  return fold(items, ordered, bottom());
}

FormulaSeq neg_all(const FormulaSeq& items) {
  FormulaSeq out;
  out.reserve(items.size());
  for (const auto& f : items) out.push_back(neg(f));
  return out;
}

FormulaSeq atom_seq(const std::vector<std::string>& names) {
  FormulaSeq out;
  out.reserve(names.size());
  for (const auto& n : names) out.push_back(atom(n));
  return out;
}

FormulaPtr desugar(const FormulaPtr& f) {
  switch (f->kind) {
    case Conn::Bottom:
    case Conn::Atom:
      return f;
    case Conn::OrderedOr: {
      FormulaPtr l = desugar(f->lhs);
      FormulaPtr r = desugar(f->rhs);
      return disj(l, conj(neg(l), r));
    }
    default: {
      FormulaPtr l = desugar(f->lhs);
      FormulaPtr r = desugar(f->rhs);
      if (l.get() == f->lhs.get() && r.get() == f->rhs.get()) return f;
      return make(f->kind, {}, std::move(l), std::move(r));
    }
  }
}

FormulaSeq ordered_dedup(const FormulaSeq& items) {
  FormulaSeq out;
  for (const auto& f : items) {
    bool seen = false;
    for (const auto& g : out) {
      if (equal(f, g)) {
        seen = true;
        break;
      }
    }
    if (!seen) out.push_back(f);
  }
  return out;
}

Program make_program(std::vector<FormulaPtr> statements,
                     const std::vector<std::string>& extra_atoms) {
  std::set<std::string> atoms(extra_atoms.begin(), extra_atoms.end());
  for (const auto& f : statements) collect_atoms(f, atoms);
  Program p;
  p.statements = std::move(statements);
  p.signature.assign(atoms.begin(), atoms.end());
  return p;
}

}  // namespace lpod
