#include "lpod/print.hpp"

#include <vector>

namespace lpod {

namespace {

// Binding strength; parent contexts pass the minimum they accept unwrapped.
constexpr int kImplies = 1;
constexpr int kOr = 2;
constexpr int kOrderedOr = 3;
constexpr int kAnd = 4;
constexpr int kNeg = 5;
constexpr int kLeaf = 6;

int precedence(const FormulaPtr& f) {
  if (is_top(f) || is_neg(f)) return kNeg;
  switch (f->kind) {
    case Conn::Bottom:
    case Conn::Atom: return kLeaf;
    case Conn::And: return kAnd;
    case Conn::OrderedOr: return kOrderedOr;
    case Conn::Or: return kOr;
    case Conn::Implies: return kImplies;
  }
  return kLeaf;
}

void render(const FormulaPtr& f, int min_prec, std::string& out) {
  int prec = precedence(f);
  bool wrap = prec < min_prec;
  if (wrap) out += '(';
  if (is_top(f)) {
    out += "#true";
  } else if (is_neg(f)) {
    out += '~';
    render(f->lhs, kNeg, out);
  } else {
    switch (f->kind) {
      case Conn::Bottom: out += "#false"; break;
      case Conn::Atom: out += f->name; break;
      case Conn::And:
        render(f->lhs, kAnd, out);
        out += " & ";
        render(f->rhs, kAnd + 1, out);
        break;
      case Conn::OrderedOr:
        render(f->lhs, kOrderedOr, out);
        out += " * ";
        render(f->rhs, kOrderedOr + 1, out);
        break;
      case Conn::Or:
        render(f->lhs, kOr, out);
        out += " ; ";
        render(f->rhs, kOr + 1, out);
        break;
      case Conn::Implies:
        render(f->lhs, kImplies + 1, out);
        out += " -> ";
        render(f->rhs, kImplies, out);
        break;
    }
  }
  if (wrap) out += ')';
}

void flatten(const FormulaPtr& f, Conn kind, std::vector<FormulaPtr>& out) {
  if (f->kind == kind && !is_neg(f)) {
    flatten(f->lhs, kind, out);
    flatten(f->rhs, kind, out);
  } else {
    out.push_back(f);
  }
}

bool literal_text(const FormulaPtr& f, std::string& out) {
  if (f->kind == Conn::Atom) {
    out += f->name;
    return true;
  }
  if (is_neg(f) && !is_top(f) && f->lhs->kind == Conn::Atom) {
    out += "not ";
    out += f->lhs->name;
    return true;
  }
  return false;
}

// Head leaves may also be chains of ordered disjunction over atoms, so a
// DLPOD head like a ; b * c renders as "a | b * c".
bool head_leaf_text(const FormulaPtr& f, std::string& out) {
  if (literal_text(f, out)) return true;
  if (f->kind == Conn::OrderedOr) {
    std::vector<FormulaPtr> parts;
    flatten(f, Conn::OrderedOr, parts);
    std::string acc;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (parts[i]->kind != Conn::Atom) return false;
      if (i) acc += " * ";
      acc += parts[i]->name;
    }
    out += acc;
    return true;
  }
  return false;
}

bool head_text(const FormulaPtr& h, std::string& out) {
  std::vector<FormulaPtr> leaves;
  flatten(h, Conn::Or, leaves);
  std::string acc;
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    if (i) acc += " | ";
    if (!head_leaf_text(leaves[i], acc)) return false;
  }
  out += acc;
  return true;
}

// Conjunction of literals; #true conjuncts are dropped. Returns false when
// some conjunct is not a literal.
bool body_text(const FormulaPtr& b, std::string& out) {
  std::vector<FormulaPtr> leaves;
  flatten(b, Conn::And, leaves);
  std::string acc;
  bool first = true;
  for (const auto& leaf : leaves) {
    if (is_top(leaf)) continue;
    if (!first) acc += ", ";
    if (!literal_text(leaf, acc)) return false;
    first = false;
  }
  out += acc;
  return true;
}

}  // namespace

std::string to_text(const FormulaPtr& f) {
  std::string out;
  render(f, 0, out);
  return out;
}

std::string statement_text(const FormulaPtr& f) {
  if (is_top(f)) return "#true.";
  if (f->kind == Conn::Implies) {
    const FormulaPtr& body = f->lhs;
    const FormulaPtr& head = f->rhs;
    std::string body_part;
    bool body_ok = body_text(body, body_part);
    if (is_bottom(head)) {
      if (!body_ok) {
        body_part.clear();
        render(body, 0, body_part);
      }
      if (body_part.empty()) body_part = "#true";
      return ":- " + body_part + ".";
    }
    std::string head_part;
    if (!head_text(head, head_part)) {
      head_part.clear();
      render(head, 0, head_part);
    }
    if (!body_ok) {
      body_part.clear();
      render(body, 0, body_part);
    }
    if (body_part.empty()) return head_part + ".";
    return head_part + " :- " + body_part + ".";
  }
  std::string head_part;
  if (!head_text(f, head_part)) {
    head_part.clear();
    render(f, 0, head_part);
  }
  return head_part + ".";
}

std::string program_text(const Program& p) {
  std::string out;
  for (const auto& s : p.statements) {
    out += statement_text(s);
    out += '\n';
  }
  return out;
}

}  // namespace lpod
