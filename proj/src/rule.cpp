#include "lpod/rule.hpp"

#include <set>

#include "lpod/errors.hpp"
#include "lpod/print.hpp"

namespace lpod {

namespace {

FormulaPtr body_formula(const std::vector<std::string>& pos,
                        const std::vector<std::string>& neg_atoms) {
  FormulaSeq parts = atom_seq(pos);
  for (const auto& a : neg_atoms) parts.push_back(neg(atom(a)));
  return fold_conj(parts);
}

FormulaPtr attach_body(FormulaPtr head, const std::vector<std::string>& pos,
                       const std::vector<std::string>& neg_atoms) {
  if (pos.empty() && neg_atoms.empty()) return head;
  return implies(body_formula(pos, neg_atoms), std::move(head));
}

std::string literal_list(const std::vector<std::string>& pos,
                         const std::vector<std::string>& neg_atoms) {
  std::string out;
  bool first = true;
  for (const auto& a : pos) {
    if (!first) out += ", ";
    out += a;
    first = false;
  }
  for (const auto& a : neg_atoms) {
    if (!first) out += ", ";
    out += "not " + a;
    first = false;
  }
  return out;
}

std::string render_rule(const std::string& head_part,
                        const std::vector<std::string>& body_pos,
                        const std::vector<std::string>& body_neg) {
  std::string body = literal_list(body_pos, body_neg);
  if (head_part.empty()) return ":- " + (body.empty() ? "#true" : body) + ".";
  if (body.empty()) return head_part + ".";
  return head_part + " :- " + body + ".";
}

}  // namespace

FormulaPtr as_formula(const NormalRule& r) {
  FormulaPtr head = r.head ? atom(*r.head) : bottom();
  return attach_body(std::move(head), r.body_pos, r.body_neg);
}

FormulaPtr as_formula(const LpodRule& r) {
  return attach_body(fold_ordered(atom_seq(r.head)), r.body_pos, r.body_neg);
}

FormulaPtr as_formula(const GroundRule& r) {
  FormulaSeq head_parts = atom_seq(r.head_pos);
  for (const auto& a : r.head_neg) head_parts.push_back(neg(atom(a)));
  return attach_body(fold_disj(head_parts), r.body_pos, r.body_neg);
}

GroundRule to_ground(const NormalRule& r) {
  GroundRule g;
  if (r.head) g.head_pos.push_back(*r.head);
  g.body_pos = r.body_pos;
  g.body_neg = r.body_neg;
  return g;
}

std::string rule_text(const NormalRule& r) {
  return render_rule(r.head ? *r.head : "", r.body_pos, r.body_neg);
}

std::string rule_text(const LpodRule& r) {
  std::string head;
  for (std::size_t i = 0; i < r.head.size(); ++i) {
    if (i) head += " * ";
    head += r.head[i];
  }
  return render_rule(head, r.body_pos, r.body_neg);
}

std::string rule_text(const GroundRule& r) {
  std::string head;
  bool first = true;
  for (const auto& a : r.head_pos) {
    if (!first) head += " | ";
    head += a;
    first = false;
  }
  for (const auto& a : r.head_neg) {
    if (!first) head += " | ";
    head += "not " + a;
    first = false;
  }
  return render_rule(head, r.body_pos, r.body_neg);
}

namespace {

void flatten_kind(const FormulaPtr& f, Conn kind, FormulaSeq& out) {
  if (f->kind == kind) {
    flatten_kind(f->lhs, kind, out);
    flatten_kind(f->rhs, kind, out);
  } else {
    out.push_back(f);
  }
}

[[noreturn]] void reject(const Program& p, std::size_t index, const std::string& why) {
  std::string where = "statement " + std::to_string(index + 1);
  if (index < p.statement_pos.size() && p.statement_pos[index].line > 0)
    where += " (line " + std::to_string(p.statement_pos[index].line) + ")";
  throw UnsupportedConstruct(where + " is not an LPOD rule: " + why);
}

}  // namespace

std::vector<LpodRule> extract_lpod_rules(const Program& p) {
  std::vector<LpodRule> rules;
  for (std::size_t i = 0; i < p.statements.size(); ++i) {
    const FormulaPtr& s = p.statements[i];
    if (is_top(s)) continue;  // vacuous statement
    LpodRule r;
    FormulaPtr head = s;
    // ~F and #true are implications too; only genuine constraints (#false
    // heads) keep rule shape here.
    if (s->kind == Conn::Implies) {
      head = s->rhs;
      FormulaSeq conjs;
      flatten_kind(s->lhs, Conn::And, conjs);
      for (const auto& lit : conjs) {
        if (lit->kind == Conn::Atom) {
          r.body_pos.push_back(lit->name);
        } else if (is_top(lit)) {
          continue;
        } else if (is_neg(lit) && lit->lhs->kind == Conn::Atom) {
          r.body_neg.push_back(lit->lhs->name);
        } else {
          reject(p, i, "body conjunct '" + to_text(lit) + "' is not a literal");
        }
      }
    }
    if (!is_bottom(head)) {
      FormulaSeq parts;
      flatten_kind(head, Conn::OrderedOr, parts);
      for (const auto& part : parts) {
        if (part->kind != Conn::Atom)
          reject(p, i, "head member '" + to_text(part) + "' is not an atom");
        bool dup = false;
        for (const auto& seen : r.head) dup = dup || seen == part->name;
        if (!dup) r.head.push_back(part->name);
      }
    }
    rules.push_back(std::move(r));
  }
  return rules;
}

namespace {

template <typename Rule>
Program rules_program_impl(const std::vector<Rule>& rules,
                           const std::vector<std::string>& extra_atoms) {
  std::vector<FormulaPtr> statements;
  statements.reserve(rules.size());
  for (const auto& r : rules) statements.push_back(as_formula(r));
  return make_program(std::move(statements), extra_atoms);
}

}  // namespace

Program rules_program(const std::vector<LpodRule>& rules,
                      const std::vector<std::string>& extra_atoms) {
  return rules_program_impl(rules, extra_atoms);
}

Program rules_program(const std::vector<NormalRule>& rules,
                      const std::vector<std::string>& extra_atoms) {
  return rules_program_impl(rules, extra_atoms);
}

Program rules_program(const std::vector<GroundRule>& rules,
                      const std::vector<std::string>& extra_atoms) {
  return rules_program_impl(rules, extra_atoms);
}

namespace {

template <typename Rule>
void insert_atoms(const Rule& r, std::set<std::string>& out) {
  out.insert(r.body_pos.begin(), r.body_pos.end());
  out.insert(r.body_neg.begin(), r.body_neg.end());
}

}  // namespace

std::vector<std::string> rule_atoms(const std::vector<LpodRule>& rules) {
  std::set<std::string> atoms;
  for (const auto& r : rules) {
    atoms.insert(r.head.begin(), r.head.end());
    insert_atoms(r, atoms);
  }
  return {atoms.begin(), atoms.end()};
}

std::vector<std::string> rule_atoms(const std::vector<GroundRule>& rules) {
  std::set<std::string> atoms;
  for (const auto& r : rules) {
    atoms.insert(r.head_pos.begin(), r.head_pos.end());
    atoms.insert(r.head_neg.begin(), r.head_neg.end());
    insert_atoms(r, atoms);
  }
  return {atoms.begin(), atoms.end()};
}

}  // namespace lpod
