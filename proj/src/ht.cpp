#include "lpod/ht.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <utility>

#include "eval.hpp"
#include "lpod/parse.hpp"
#include "lpod/print.hpp"

namespace lpod {

using detail::AtomIndex;
using detail::ENode;
using detail::Mask;

bool model_less(const Model& a, const Model& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<Model> sorted_models(std::set<Model> models) {
  std::vector<Model> out(models.begin(), models.end());
  std::sort(out.begin(), out.end(), model_less);
  return out;
}

HtInterpretation::HtInterpretation(Model here, Model there)
    : here_(std::move(here)), there_(std::move(there)) {
  if (!std::includes(there_.begin(), there_.end(), here_.begin(), here_.end()))
    throw std::invalid_argument("HtInterpretation: here must be a subset of there");
}

bool classical_sat(const Model& t, const FormulaPtr& f) {
  std::set<std::string> atoms = atoms_of(f);
  AtomIndex ix = AtomIndex::from({atoms.begin(), atoms.end()});
  ENode n = detail::compile(f, ix);
  return detail::ceval(n, detail::mask_of(t, ix));
}

bool ht_sat(const HtInterpretation& i, const FormulaPtr& f) {
  std::set<std::string> atoms = atoms_of(f);
  AtomIndex ix = AtomIndex::from({atoms.begin(), atoms.end()});
  ENode n = detail::compile(f, ix);
  return detail::hteval(n, detail::mask_of(i.here(), ix),
                        detail::mask_of(i.there(), ix));
}

namespace {

void check_cap(std::size_t size, const EnumOptions& opts) {
  if (size > opts.max_atoms) throw SignatureTooLarge(size, opts.max_atoms);
  if (size > 62) throw SignatureTooLarge(size, 62);  // mask width ceiling
}

bool interp_less(const HtInterpretation& a, const HtInterpretation& b) {
  if (a.there() != b.there()) return model_less(a.there(), b.there());
  return model_less(a.here(), b.here());
}

}  // namespace

std::vector<HtInterpretation> ht_models(const Program& p, const EnumOptions& opts) {
  check_cap(p.signature.size(), opts);
  AtomIndex ix = AtomIndex::from(p.signature);
  std::vector<ENode> stmts = detail::compile_all(p.statements, ix);
  std::size_t n = p.signature.size();
  std::vector<HtInterpretation> out;
  for (Mask t = 0; t < (Mask{1} << n); ++t) {
    // h iterates over all submasks of t, t itself included.
    Mask h = t;
    while (true) {
      if (detail::hteval_all(stmts, h, t))
        out.emplace_back(detail::model_of(h, ix), detail::model_of(t, ix));
      if (h == 0) break;
      h = (h - 1) & t;
    }
  }
  std::sort(out.begin(), out.end(), interp_less);
  return out;
}

std::vector<Model> equilibrium_models(const Program& p, const EnumOptions& opts) {
  check_cap(p.signature.size(), opts);
  AtomIndex ix = AtomIndex::from(p.signature);
  std::vector<ENode> stmts = detail::compile_all(p.statements, ix);
  std::size_t n = p.signature.size();
  std::set<Model> found;
  for (Mask t = 0; t < (Mask{1} << n); ++t) {
    // <T,T> satisfies p iff T does classically, which also prunes the scan.
    if (!detail::ceval_all(stmts, t)) continue;
    bool minimal = true;
    for (Mask h = (t - 1) & t; h != t; h = (h - 1) & t) {
      if (detail::hteval_all(stmts, h, t)) {
        minimal = false;
        break;
      }
      if (h == 0) break;
    }
    if (minimal) found.insert(detail::model_of(t, ix));
  }
  return sorted_models(std::move(found));
}

SeVerdict strongly_equivalent(const Program& p1, const Program& p2,
                              const EnumOptions& opts) {
  std::set<std::string> shared(p1.signature.begin(), p1.signature.end());
  shared.insert(p2.signature.begin(), p2.signature.end());
  std::vector<std::string> names(shared.begin(), shared.end());
  check_cap(names.size(), opts);
  AtomIndex ix = AtomIndex::from(names);
  std::vector<ENode> s1 = detail::compile_all(p1.statements, ix);
  std::vector<ENode> s2 = detail::compile_all(p2.statements, ix);
  std::size_t n = names.size();

  for (Mask t = 0; t < (Mask{1} << n); ++t) {
    Mask h = t;
    while (true) {
      bool m1 = detail::hteval_all(s1, h, t);
      bool m2 = detail::hteval_all(s2, h, t);
      if (m1 != m2) {
        const std::vector<ENode>& failing = m1 ? s2 : s1;
        const Program& failing_program = m1 ? p2 : p1;
        FormulaPtr witness;
        for (std::size_t k = 0; k < failing.size(); ++k) {
          if (!detail::hteval(failing[k], h, t)) {
            witness = failing_program.statements[k];
            break;
          }
        }
        HtInterpretation interp(detail::model_of(h, ix), detail::model_of(t, ix));
        // Counterexamples are revalidated through the public evaluator
        // before being reported.
        assert(witness != nullptr);
        bool check1 = true, check2 = true;
        for (const auto& f : p1.statements) check1 = check1 && ht_sat(interp, f);
        for (const auto& f : p2.statements) check2 = check2 && ht_sat(interp, f);
        if (check1 == check2 || ht_sat(interp, witness))
          throw std::logic_error("strong-equivalence counterexample failed revalidation");
        return SeVerdict{false, SeCounterexample{interp, witness, m1 ? 2 : 1}};
      }
      if (h == 0) break;
      h = (h - 1) & t;
    }
  }
  return SeVerdict{true, std::nullopt};
}

namespace {

std::string model_str(const Model& m) {
  std::string out = "{";
  bool first = true;
  for (const auto& a : m) {
    if (!first) out += ",";
    out += a;
    first = false;
  }
  return out + "}";
}

std::string models_str(const std::vector<Model>& ms) {
  if (ms.empty()) return "(none)";
  std::string out;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (i) out += " ";
    out += model_str(ms[i]);
  }
  return out;
}

std::string interp_str(const HtInterpretation& i) {
  return "<" + model_str(i.here()) + "," + model_str(i.there()) + ">";
}

struct LawPair {
  const char* name;
  const char* left;
  const char* right;
  bool expect_equivalent;
};

struct ContextCase {
  const char* name;
  const char* theory;
  std::vector<Model> expected;
};

}  // namespace

std::vector<LawResult> property_catalog(const EnumOptions& opts, bool inject_fault) {
  static const LawPair pairs[] = {
      {"neg-ordered-vs-conj", "~(f * g)", "~f & ~g", true},
      {"neg-ordered-vs-disj", "~(f * g)", "~(f ; g)", true},
      {"ordered-self", "f * f", "f", true},
      {"bottom-first", "#false * f", "f", true},
      {"bottom-second", "f * #false", "f", true},
      {"top-first", "#true * f", "#true", true},
      {"top-second", "f * #true", "f ; ~f", true},
      {"and-dist-left", "f & (g * h)", "(f & g) * (f & h)", true},
      {"and-dist-right", "(f * g) & h", "(f & h) * (g & h)", true},
      {"ordered-over-and", "f * (g & h)", "(f * g) & (f * h)", true},
      {"ordered-over-or", "f * (g ; h)", "(f * g) ; (f * h)", true},
      {"ordered-assoc", "f * (g * h)", "(f * g) * h", true},
      {"ordered-idempotence", "f * g * f", "f * g", true},
      {"ordered-dedup-chain", "a*b*c*a*d*c*a*e*b", "a*b*c*d*e", true},
      {"de-morgan-or", "~(f ; g)", "~f & ~g", true},
      {"de-morgan-and", "~(f & g)", "~f ; ~g", true},
      {"and-over-or", "f & (g ; h)", "(f & g) ; (f & h)", true},
      {"or-over-and", "f ; (g & h)", "(f ; g) & (f ; h)", true},
      {"contradiction", "f & ~f", "#false", true},
      {"curry", "f -> (g -> h)", "f & g -> h", true},
      {"invalid-and-dist", "(f & g) * h", "(f * h) & (g * h)", false},
      {"invalid-or-dist-1", "f ; (g * h)", "(f ; g) * (f ; h)", false},
      {"invalid-or-dist-2", "(f * g) ; h", "(f ; h) * (g ; h)", false},
      {"invalid-or-dist-3", "(f ; g) * h", "(f * h) ; (g * h)", false},
      {"ordered-vs-plain", "f * g", "f ; g", false},
      {"leftmost-wins", "a * b * a", "b * a", false},
  };
  static const ContextCase contexts[] = {
      {"ctx-ordered-vs-plain-left", "f * g. g.", {{"g"}, {"f", "g"}}},
      {"ctx-ordered-vs-plain-right", "f ; g. g.", {{"g"}}},
      {"ctx-or-dist-1-left", "f ; (g * h). h.", {{"h"}, {"g", "h"}}},
      {"ctx-or-dist-1-right",
       "(f ; g) * (f ; h). h.",
       {{"h"}, {"f", "h"}, {"g", "h"}}},
      {"ctx-or-dist-2-left", "(f * g) ; h. g.", {{"g"}, {"f", "g"}}},
      {"ctx-or-dist-2-right",
       "(f ; h) * (g ; h). g.",
       {{"g"}, {"f", "g"}, {"g", "h"}}},
      {"ctx-or-dist-3-left", "(f ; g) * h. h.", {{"h"}, {"f", "h"}, {"g", "h"}}},
      {"ctx-or-dist-3-right", "(f * h) ; (g * h). h.", {{"h"}}},
      {"ctx-and-dist-left", "(f & g) * h.", {{"h"}, {"f", "g"}}},
      {"ctx-and-dist-right",
       "(f * h) & (g * h).",
       {{"h"}, {"f", "g"}, {"f", "h"}, {"g", "h"}}},
      {"ctx-leftmost-left", "a * b * a. a.", {{"a"}}},
      {"ctx-leftmost-right", "b * a. a.", {{"a"}, {"a", "b"}}},
  };

  std::vector<LawResult> out;
  auto run_pair = [&](const char* name, const char* left, const char* right,
                      bool expect_equivalent) {
    Program p1 = make_program({parse_formula(left)});
    Program p2 = make_program({parse_formula(right)});
    SeVerdict v = strongly_equivalent(p1, p2, opts);
    LawResult r;
    r.name = name;
    r.kind = expect_equivalent ? LawKind::Equivalence : LawKind::NonEquivalence;
    r.pass = v.equivalent == expect_equivalent;
    if (v.equivalent) {
      r.detail = "strongly equivalent";
    } else {
      r.detail = "distinguished at " + interp_str(v.counterexample->interp) +
                 " by " + to_text(v.counterexample->statement);
    }
    out.push_back(std::move(r));
  };

  for (const auto& lp : pairs) run_pair(lp.name, lp.left, lp.right, lp.expect_equivalent);
  if (inject_fault) run_pair("injected-fault", "f * g", "f ; g", true);

  for (const auto& c : contexts) {
    std::vector<Model> actual = equilibrium_models(parse_theory(c.theory), opts);
    LawResult r;
    r.name = c.name;
    r.kind = LawKind::Context;
    r.pass = actual == c.expected;
    r.detail = r.pass ? "equilibrium models " + models_str(actual)
                      : "expected " + models_str(c.expected) + ", got " +
                            models_str(actual);
    out.push_back(std::move(r));
  }
  return out;
}

bool all_pass(const std::vector<LawResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace lpod
