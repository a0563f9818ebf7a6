#include "lpod/translate.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "lpod/errors.hpp"

namespace lpod {

namespace {

FormulaSeq neg_prefix(const FormulaSeq& a, std::size_t upto) {
  FormulaSeq out;
  out.reserve(upto);
  for (std::size_t j = 0; j < upto; ++j) out.push_back(neg(a[j]));
  return out;
}

// antecedent -> consequent, with the wrapper dropped for an empty antecedent.
FormulaPtr guarded(const FormulaSeq& antecedent, const FormulaPtr& consequent) {
  if (antecedent.empty()) return consequent;
  return implies(fold_conj(antecedent), consequent);
}

}  // namespace

FormulaPtr expand_x(const FormulaSeq& a) {
  FormulaSeq disjuncts;
  disjuncts.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    FormulaSeq parts = neg_prefix(a, i);
    parts.push_back(a[i]);
    disjuncts.push_back(fold_conj(parts));
  }
  return fold_disj(disjuncts);
}

FormulaPtr conj_form(const FormulaSeq& a) {
  FormulaSeq conjuncts;
  conjuncts.reserve(a.size() + 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    conjuncts.push_back(guarded(neg_prefix(a, i), disj(a[i], neg(a[i]))));
  conjuncts.push_back(guarded(neg_prefix(a, a.size()), bottom()));
  return fold_conj(conjuncts);
}

FormulaPtr third_form(const FormulaSeq& a) {
  FormulaSeq conjuncts;
  conjuncts.push_back(fold_disj(a));
  for (std::size_t i = 1; i < a.size(); ++i) {
    FormulaSeq front(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(i));
    conjuncts.push_back(disj(fold_disj(front), neg(a[i - 1])));
  }
  return fold_conj(conjuncts);
}

std::vector<FormulaPtr> compose_rule(const FormulaPtr& body, const FormulaSeq& head_seq) {
  // Flatten the body conjunction into its conjuncts, dropping #true.
  FormulaSeq base;
  FormulaSeq stack{body};
  while (!stack.empty()) {
    FormulaPtr f = stack.back();
    stack.pop_back();
    if (is_top(f)) continue;
    if (f->kind == Conn::And) {
      stack.push_back(f->rhs);
      stack.push_back(f->lhs);
      continue;
    }
    base.push_back(f);
  }

  std::vector<FormulaPtr> out;
  out.reserve(head_seq.size() + 1);
  for (std::size_t i = 0; i <= head_seq.size(); ++i) {
    FormulaSeq antecedent = base;
    for (const auto& n : neg_prefix(head_seq, i)) antecedent.push_back(n);
    if (i < head_seq.size()) {
      out.push_back(guarded(antecedent, disj(head_seq[i], neg(head_seq[i]))));
    } else {
      out.push_back(guarded(antecedent, bottom()));
    }
  }
  return out;
}

StarProgram star(const std::vector<LpodRule>& p) {
  StarProgram sp;
  for (std::size_t r = 0; r < p.size(); ++r) {
    if (p[r].head.empty()) {
      sp.constraints.push_back(NormalRule{std::nullopt, p[r].body_pos, p[r].body_neg});
      sp.constraint_origin.push_back(r);
      continue;
    }
    for (std::size_t i = 0; i < p[r].head.size(); ++i) {
      ChoiceRule c;
      c.head_atom = p[r].head[i];
      c.negated_twin = true;
      c.body_pos = p[r].body_pos;
      c.body_neg = p[r].body_neg;
      for (std::size_t j = 0; j < i; ++j) c.body_neg.push_back(p[r].head[j]);
      sp.choice_rules.push_back(std::move(c));
      sp.choice_origin.push_back(r);
    }
    NormalRule constraint{std::nullopt, p[r].body_pos, p[r].body_neg};
    for (const auto& a : p[r].head) constraint.body_neg.push_back(a);
    sp.constraints.push_back(std::move(constraint));
    sp.constraint_origin.push_back(r);
  }
  return sp;
}

StarProgram refine(const StarProgram& sp) {
  StarProgram out;
  for (std::size_t i = 0; i < sp.choice_rules.size(); ++i) {
    ChoiceRule c = sp.choice_rules[i];
    std::size_t origin = sp.choice_origin[i];
    bool last_of_rule =
        i + 1 == sp.choice_rules.size() || sp.choice_origin[i + 1] != origin;
    if (last_of_rule) c.negated_twin = false;
    out.choice_rules.push_back(std::move(c));
    out.choice_origin.push_back(origin);
  }
  for (std::size_t i = 0; i < sp.constraints.size(); ++i) {
    std::size_t origin = sp.constraint_origin[i];
    bool from_choice_rule = false;
    for (std::size_t c = 0; c < sp.choice_origin.size() && !from_choice_rule; ++c)
      from_choice_rule = sp.choice_origin[c] == origin;
    if (from_choice_rule) continue;  // derived constraint: dropped
    out.constraints.push_back(sp.constraints[i]);
    out.constraint_origin.push_back(origin);
  }
  return out;
}

FormulaPtr choice_formula(const ChoiceRule& r) {
  FormulaSeq body;
  for (const auto& a : r.body_pos) body.push_back(atom(a));
  for (const auto& a : r.body_neg) body.push_back(neg(atom(a)));
  FormulaPtr head =
      r.negated_twin ? disj(atom(r.head_atom), neg(atom(r.head_atom))) : atom(r.head_atom);
  return guarded(body, head);
}

namespace {

// Walks the translation in source order, visiting each source rule's choice
// rules first and then its constraints.
template <typename ChoiceFn, typename ConstraintFn>
void visit_in_order(const StarProgram& sp, ChoiceFn on_choice, ConstraintFn on_constraint) {
  std::size_t ci = 0, ki = 0;
  while (ci < sp.choice_rules.size() || ki < sp.constraints.size()) {
    bool choice_next;
    if (ci == sp.choice_rules.size()) {
      choice_next = false;
    } else if (ki == sp.constraints.size()) {
      choice_next = true;
    } else {
      choice_next = sp.choice_origin[ci] <= sp.constraint_origin[ki];
    }
    if (choice_next) {
      on_choice(sp.choice_rules[ci]);
      ++ci;
    } else {
      on_constraint(sp.constraints[ki]);
      ++ki;
    }
  }
}

}  // namespace

Program star_as_program(const StarProgram& sp) {
  std::vector<FormulaPtr> statements;
  visit_in_order(
      sp, [&](const ChoiceRule& c) { statements.push_back(choice_formula(c)); },
      [&](const NormalRule& k) { statements.push_back(as_formula(k)); });
  return make_program(statements);
}

std::vector<GroundRule> star_as_ground(const StarProgram& sp) {
  std::vector<GroundRule> out;
  visit_in_order(
      sp,
      [&](const ChoiceRule& c) {
        GroundRule g;
        g.head_pos.push_back(c.head_atom);
        if (c.negated_twin) g.head_neg.push_back(c.head_atom);
        g.body_pos = c.body_pos;
        g.body_neg = c.body_neg;
        out.push_back(std::move(g));
      },
      [&](const NormalRule& k) {
        out.push_back(GroundRule{{}, {}, k.body_pos, k.body_neg});
      });
  return out;
}

namespace {

std::string fresh_aux_name(const std::string& base, const std::set<std::string>& taken) {
  if (!taken.count(base)) return base;
  for (int suffix = 2; suffix < 1000000; ++suffix) {
    std::string candidate = base + "_" + std::to_string(suffix);
    if (!taken.count(candidate)) return candidate;
  }
  throw std::runtime_error("fresh_aux_name: could not find an unused name for " + base);
}

}  // namespace

NormalizedProgram eliminate_head_negation(const StarProgram& sp) {
  std::set<std::string> taken;
  visit_in_order(
      sp,
      [&](const ChoiceRule& c) {
        taken.insert(c.head_atom);
        for (const auto& a : c.body_pos) taken.insert(a);
        for (const auto& a : c.body_neg) taken.insert(a);
      },
      [&](const NormalRule& k) {
        for (const auto& a : k.body_pos) taken.insert(a);
        for (const auto& a : k.body_neg) taken.insert(a);
      });

  NormalizedProgram out;
  std::map<std::string, std::string> aux_for;              // atom -> fresh twin
  std::vector<std::pair<std::string, std::string>> defs;   // fresh, original
  visit_in_order(
      sp,
      [&](const ChoiceRule& c) {
        NormalRule r{c.head_atom, c.body_pos, c.body_neg};
        if (c.negated_twin) {
          auto it = aux_for.find(c.head_atom);
          if (it == aux_for.end()) {
            std::string fresh = fresh_aux_name("__od_aux_" + c.head_atom, taken);
            taken.insert(fresh);
            it = aux_for.emplace(c.head_atom, fresh).first;
            defs.emplace_back(fresh, c.head_atom);
            out.aux_atoms.push_back(fresh);
          }
          r.body_neg.push_back(it->second);
        }
        out.rules.push_back(std::move(r));
      },
      [&](const NormalRule& k) { out.rules.push_back(k); });
  for (const auto& [fresh, original] : defs)
    out.rules.push_back(NormalRule{fresh, {}, {original}});
  return out;
}

std::vector<Model> strip_atoms(const std::vector<Model>& models,
                               const std::vector<std::string>& remove) {
  std::set<Model> out;
  for (const auto& m : models) {
    Model kept = m;
    for (const auto& a : remove) kept.erase(a);
    out.insert(std::move(kept));
  }
  return sorted_models(std::move(out));
}

std::string emit_solver_text(const std::vector<GroundRule>& rules,
                             const std::string& dialect) {
  if (dialect != "core2")
    throw UnsupportedConstruct("emit_solver_text: unknown dialect '" + dialect + "'");
  std::string out;
  for (const auto& r : rules) {
    out += rule_text(r);
    out += '\n';
  }
  return out;
}

std::vector<Model> run_external_solver(const std::string& solver_path,
                                       const std::string& program_text) {
  char in_name[] = "/tmp/lpodkit_in_XXXXXX";
  char out_name[] = "/tmp/lpodkit_out_XXXXXX";
  int in_fd = mkstemp(in_name);
  if (in_fd < 0) throw std::runtime_error("run_external_solver: mkstemp failed");
  int out_fd = mkstemp(out_name);
  if (out_fd < 0) {
    close(in_fd);
    std::remove(in_name);
    throw std::runtime_error("run_external_solver: mkstemp failed");
  }
  close(in_fd);
  close(out_fd);
  {
    std::ofstream in_file(in_name);
    in_file << program_text;
  }
  std::string command =
      solver_path + " < " + std::string(in_name) + " > " + std::string(out_name);
  int status = std::system(command.c_str());
  std::set<Model> models;
  {
    std::ifstream out_file(out_name);
    std::string line;
    while (std::getline(out_file, line)) {
      std::istringstream words(line);
      Model m;
      std::string w;
      while (words >> w) m.insert(w);
      if (!m.empty()) models.insert(std::move(m));
    }
  }
  std::remove(in_name);
  std::remove(out_name);
  // Solvers signal satisfiability through exit codes, so only a failure to
  // run the command at all is treated as an error.
  if (status == -1 || (WIFEXITED(status) && WEXITSTATUS(status) == 127))
    throw std::runtime_error("run_external_solver: could not run '" + solver_path + "'");
  return sorted_models(std::move(models));
}

}  // namespace lpod
