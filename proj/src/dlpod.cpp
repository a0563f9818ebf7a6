#include "lpod/dlpod.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "eval.hpp"
#include "lpod/errors.hpp"
#include "lpod/lpod.hpp"
#include "lpod/print.hpp"

namespace lpod {

using detail::AtomIndex;
using detail::Mask;

OdTermPtr od_atom(std::string name) {
  return OdTermPtr(new OdTerm{OdKind::Atom, std::move(name), nullptr, nullptr});
}

OdTermPtr od_or(OdTermPtr lhs, OdTermPtr rhs) {
  return OdTermPtr(new OdTerm{OdKind::Or, {}, std::move(lhs), std::move(rhs)});
}

OdTermPtr od_times(OdTermPtr lhs, OdTermPtr rhs) {
  return OdTermPtr(new OdTerm{OdKind::Times, {}, std::move(lhs), std::move(rhs)});
}

bool od_equal(const OdTermPtr& a, const OdTermPtr& b) {
  if (a == b) return true;
  if (!a || !b || a->kind != b->kind) return false;
  if (a->kind == OdKind::Atom) return a->name == b->name;
  return od_equal(a->lhs, b->lhs) && od_equal(a->rhs, b->rhs);
}

FormulaPtr od_formula(const OdTermPtr& t) {
  switch (t->kind) {
    case OdKind::Atom:
      return atom(t->name);
    case OdKind::Or:
      return disj(od_formula(t->lhs), od_formula(t->rhs));
    case OdKind::Times:
      return ordered(od_formula(t->lhs), od_formula(t->rhs));
  }
  throw std::logic_error("od_formula: unknown term kind");
}

OdTermPtr od_from_formula(const FormulaPtr& f) {
  switch (f->kind) {
    case Conn::Atom:
      return od_atom(f->name);
    case Conn::Or:
      return od_or(od_from_formula(f->lhs), od_from_formula(f->rhs));
    case Conn::OrderedOr:
      return od_times(od_from_formula(f->lhs), od_from_formula(f->rhs));
    default:
      throw UnsupportedConstruct(
          "head is not a plain or ordered disjunction of atoms");
  }
}

namespace {

std::vector<std::vector<std::string>> odnf_disjuncts(const OdTermPtr& t) {
  switch (t->kind) {
    case OdKind::Atom:
      return {{t->name}};
    case OdKind::Or: {
      auto out = odnf_disjuncts(t->lhs);
      auto right = odnf_disjuncts(t->rhs);
      out.insert(out.end(), right.begin(), right.end());
      return out;
    }
    case OdKind::Times: {
      auto left = odnf_disjuncts(t->lhs);
      auto right = odnf_disjuncts(t->rhs);
      std::vector<std::vector<std::string>> out;
      out.reserve(left.size() * right.size());
      for (const auto& l : left)
        for (const auto& r : right) {
          std::vector<std::string> chain = l;
          chain.insert(chain.end(), r.begin(), r.end());
          out.push_back(std::move(chain));
        }
      return out;
    }
  }
  throw std::logic_error("odnf_disjuncts: unknown term kind");
}

}  // namespace

OdnfHead to_odnf(const OdTermPtr& t) {
  OdnfHead h{odnf_disjuncts(t)};
  std::sort(h.disjuncts.begin(), h.disjuncts.end());
  return h;
}

bool head_in_odnf(const OdTermPtr& t) {
  if (t->kind == OdKind::Atom) return true;
  if (t->kind == OdKind::Or) return head_in_odnf(t->lhs) && head_in_odnf(t->rhs);
  // Times: nothing below may be a plain disjunction.
  return to_odnf(t).disjuncts.size() == 1;
}

OdTermPtr odnf_term(const OdnfHead& h) {
  OdTermPtr out;
  for (const auto& chain : h.disjuncts) {
    OdTermPtr c;
    for (const auto& a : chain) c = c ? od_times(c, od_atom(a)) : od_atom(a);
    out = out ? od_or(out, c) : c;
  }
  if (!out) throw std::invalid_argument("odnf_term: empty head");
  return out;
}

FormulaPtr as_formula(const DlpodRule& r) {
  FormulaSeq body;
  for (const auto& a : r.body_pos) body.push_back(atom(a));
  for (const auto& a : r.body_neg) body.push_back(neg(atom(a)));
  FormulaPtr head = r.head ? od_formula(*r.head) : bottom();
  if (body.empty()) return head;
  return implies(fold_conj(body), head);
}

Program rules_program(const std::vector<DlpodRule>& p,
                      const std::vector<std::string>& extra_atoms) {
  std::vector<FormulaPtr> statements;
  statements.reserve(p.size());
  for (const auto& r : p) statements.push_back(as_formula(r));
  return make_program(statements, extra_atoms);
}

std::vector<std::string> rule_atoms(const std::vector<DlpodRule>& p) {
  std::set<std::string> atoms;
  for (const auto& r : p) {
    if (r.head) collect_atoms(od_formula(*r.head), atoms);
    atoms.insert(r.body_pos.begin(), r.body_pos.end());
    atoms.insert(r.body_neg.begin(), r.body_neg.end());
  }
  return std::vector<std::string>(atoms.begin(), atoms.end());
}

std::string rule_text(const DlpodRule& r) {
  return statement_text(as_formula(r));
}

std::vector<DlpodRule> extract_dlpod_rules(const Program& p) {
  std::vector<DlpodRule> out;
  for (std::size_t s = 0; s < p.statements.size(); ++s) {
    const FormulaPtr& f = p.statements[s];
    if (is_top(f)) continue;  // vacuous statement
    auto reject = [&](const std::string& why) {
      int line = s < p.statement_pos.size() ? p.statement_pos[s].line : 0;
      throw UnsupportedConstruct("statement " + std::to_string(s + 1) + " (line " +
                                 std::to_string(line) + "): " + why);
    };
    DlpodRule r;
    FormulaPtr head = f;
    if (f->kind == Conn::Implies) {
      head = f->rhs;
      FormulaSeq stack{f->lhs};
      while (!stack.empty()) {
        FormulaPtr b = stack.back();
        stack.pop_back();
        if (is_top(b)) continue;
        if (b->kind == Conn::And) {
          stack.push_back(b->rhs);
          stack.push_back(b->lhs);
          continue;
        }
        if (b->kind == Conn::Atom) {
          r.body_pos.push_back(b->name);
        } else if (is_neg(b) && b->lhs->kind == Conn::Atom) {
          r.body_neg.push_back(b->lhs->name);
        } else {
          reject("body conjunct '" + to_text(b) + "' is not a literal");
        }
      }
    }
    if (is_bottom(head)) {
      out.push_back(std::move(r));
      continue;
    }
    try {
      r.head = od_from_formula(head);
    } catch (const UnsupportedConstruct&) {
      reject("head '" + to_text(head) + "' is not a plain or ordered disjunction of atoms");
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<GroundRule> dlpod_options(const OdnfHead& h,
                                      const std::vector<std::string>& body_pos,
                                      const std::vector<std::string>& body_neg) {
  if (h.disjuncts.empty()) throw std::invalid_argument("dlpod_options: empty head");
  std::vector<GroundRule> out;
  std::vector<std::size_t> choice(h.disjuncts.size(), 1);
  bool more = true;
  while (more) {
    GroundRule g;
    g.body_pos = body_pos;
    for (const auto& a : body_neg)
      if (std::find(g.body_neg.begin(), g.body_neg.end(), a) == g.body_neg.end())
        g.body_neg.push_back(a);
    for (std::size_t i = 0; i < h.disjuncts.size(); ++i) {
      const auto& chain = h.disjuncts[i];
      g.head_pos.push_back(chain[choice[i] - 1]);
      for (std::size_t j = 0; j + 1 < choice[i]; ++j)
        if (std::find(g.body_neg.begin(), g.body_neg.end(), chain[j]) == g.body_neg.end())
          g.body_neg.push_back(chain[j]);
    }
    out.push_back(std::move(g));
    more = false;
    for (std::size_t i = h.disjuncts.size(); i-- > 0;) {
      if (choice[i] < h.disjuncts[i].size()) {
        ++choice[i];
        more = true;
        break;
      }
      choice[i] = 1;
    }
  }
  return out;
}

namespace {

struct MDisjRule {
  Mask head_pos = 0, head_neg = 0, body_pos = 0, body_neg = 0;
};

// I models the reduct of the rules wrt `about`: for every rule kept by the
// reduct whose positive body holds in I, some positive head atom is in I.
bool models_reduct(const std::vector<MDisjRule>& rules, Mask i, Mask about) {
  for (const auto& r : rules) {
    if ((r.body_neg & about) || (r.head_neg & ~about)) continue;
    if (r.body_pos & ~i) continue;
    if (!(r.head_pos & i)) return false;
  }
  return true;
}

}  // namespace

std::vector<Model> disjunctive_answer_sets(const std::vector<GroundRule>& p,
                                           const EnumOptions& opts) {
  std::vector<std::string> sig = rule_atoms(p);
  check_signature_cap(sig.size(), opts);
  AtomIndex ix = AtomIndex::from(sig);
  std::size_t n = sig.size();

  std::vector<MDisjRule> rules;
  rules.reserve(p.size());
  for (const auto& r : p) {
    MDisjRule m;
    for (const auto& a : r.head_pos) m.head_pos |= Mask{1} << ix.at(a);
    for (const auto& a : r.head_neg) m.head_neg |= Mask{1} << ix.at(a);
    for (const auto& a : r.body_pos) m.body_pos |= Mask{1} << ix.at(a);
    for (const auto& a : r.body_neg) m.body_neg |= Mask{1} << ix.at(a);
    rules.push_back(m);
  }

  std::set<Model> found;
  for (Mask i = 0; i < (Mask{1} << n); ++i) {
    if (!models_reduct(rules, i, i)) continue;
    bool minimal = true;
    for (Mask h = (i - 1) & i; minimal; h = (h - 1) & i) {
      if (h != i && models_reduct(rules, h, i)) minimal = false;
      if (h == 0) break;
    }
    if (minimal) found.insert(detail::model_of(i, ix));
  }
  return sorted_models(std::move(found));
}

std::vector<Model> dlpod_answer_sets(const std::vector<DlpodRule>& p,
                                     const EnumOptions& opts) {
  check_signature_cap(rule_atoms(p).size(), opts);
  std::vector<std::vector<GroundRule>> options;
  options.reserve(p.size());
  for (const auto& r : p) {
    if (!r.head) {
      options.push_back({GroundRule{{}, {}, r.body_pos, r.body_neg}});
    } else {
      options.push_back(dlpod_options(to_odnf(*r.head), r.body_pos, r.body_neg));
    }
  }
  std::set<Model> found;
  std::vector<std::size_t> choice(p.size(), 0);
  bool more = true;
  while (more) {
    std::vector<GroundRule> split;
    split.reserve(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) split.push_back(options[i][choice[i]]);
    for (const auto& m : disjunctive_answer_sets(split, opts)) found.insert(m);
    more = false;
    for (std::size_t i = p.size(); i-- > 0;) {
      if (choice[i] + 1 < options[i].size()) {
        ++choice[i];
        more = true;
        break;
      }
      choice[i] = 0;
    }
  }
  return sorted_models(std::move(found));
}

namespace {

std::vector<Model> difference(const std::vector<Model>& a, const std::vector<Model>& b) {
  std::vector<Model> out;
  for (const auto& m : a)
    if (std::find(b.begin(), b.end(), m) == b.end()) out.push_back(m);
  return out;
}

bool subset_of(const std::vector<Model>& a, const std::vector<Model>& b) {
  return difference(a, b).empty();
}

}  // namespace

DivergenceReport divergence_report(const std::vector<DlpodRule>& p,
                                   const EnumOptions& opts) {
  DivergenceReport rep;
  rep.input_is_odnf = true;
  for (const auto& r : p)
    if (r.head && !head_in_odnf(*r.head)) rep.input_is_odnf = false;

  std::vector<std::string> sig = rule_atoms(p);
  rep.dlpod_sets = dlpod_answer_sets(p, opts);
  rep.equilibrium_sets = equilibrium_models(rules_program(p), opts);

  std::vector<DlpodRule> rewritten;
  rewritten.reserve(p.size());
  for (const auto& r : p) {
    DlpodRule q = r;
    if (q.head) q.head = odnf_term(to_odnf(*q.head));
    rewritten.push_back(std::move(q));
  }
  // Keep the signature of the input in case rewriting dropped no atoms (it
  // never adds any).
  rep.odnf_equilibrium_sets = equilibrium_models(rules_program(rewritten, sig), opts);
  rep.odnf_rewrite_changed_ht = rep.odnf_equilibrium_sets != rep.equilibrium_sets;

  rep.dlpod_only = difference(rep.dlpod_sets, rep.equilibrium_sets);
  rep.equilibrium_only = difference(rep.equilibrium_sets, rep.dlpod_sets);
  rep.inclusion_holds = subset_of(rep.odnf_equilibrium_sets, rep.dlpod_sets);
  return rep;
}

namespace {

bool pure_or(const OdTermPtr& t) {
  if (t->kind == OdKind::Atom) return true;
  if (t->kind == OdKind::Or) return pure_or(t->lhs) && pure_or(t->rhs);
  return false;
}

void or_leaves(const OdTermPtr& t, std::vector<std::string>& out) {
  if (t->kind == OdKind::Atom) {
    out.push_back(t->name);
    return;
  }
  or_leaves(t->lhs, out);
  or_leaves(t->rhs, out);
}

OdTermPtr substitute(const OdTermPtr& t, const OdTermPtr& target, const OdTermPtr& with) {
  if (od_equal(t, target)) return with;
  if (t->kind == OdKind::Atom) return t;
  OdTermPtr lhs = substitute(t->lhs, target, with);
  OdTermPtr rhs = substitute(t->rhs, target, with);
  if (lhs == t->lhs && rhs == t->rhs) return t;
  return t->kind == OdKind::Or ? od_or(lhs, rhs) : od_times(lhs, rhs);
}

}  // namespace

AuxDefinition aux_define(const std::vector<DlpodRule>& p, const OdTermPtr& subterm) {
  if (!pure_or(subterm))
    throw std::invalid_argument("aux_define: subterm must be a plain disjunction");
  std::vector<std::string> sig = rule_atoms(p);
  std::set<std::string> taken(sig.begin(), sig.end());
  std::string aux = "aux";
  for (int suffix = 2; taken.count(aux); ++suffix) aux = "aux_" + std::to_string(suffix);

  AuxDefinition out;
  out.aux_atom = aux;
  OdTermPtr aux_term = od_atom(aux);
  for (const auto& r : p) {
    DlpodRule q = r;
    if (q.head) q.head = substitute(*q.head, subterm, aux_term);
    out.program.push_back(std::move(q));
  }
  std::vector<std::string> leaves;
  or_leaves(subterm, leaves);
  for (const auto& d : leaves)
    out.program.push_back(DlpodRule{od_atom(aux), {d}, {}});
  out.program.push_back(DlpodRule{subterm, {aux}, {}});
  return out;
}

}  // namespace lpod
