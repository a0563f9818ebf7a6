#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lpod/errors.hpp"
#include "lpod/formula.hpp"

namespace lpod {

using Model = std::set<std::string>;

// Orders models by size, then lexicographically by atom names. All model
// lists returned by the engines are sorted with this.
bool model_less(const Model& a, const Model& b);
std::vector<Model> sorted_models(std::set<Model> models);

class HtInterpretation {
 public:
  // Requires here ⊆ there; throws std::invalid_argument otherwise.
  HtInterpretation(Model here, Model there);

  const Model& here() const { return here_; }
  const Model& there() const { return there_; }
  bool total() const { return here_ == there_; }

  friend bool operator==(const HtInterpretation&, const HtInterpretation&) = default;

 private:
  Model here_, there_;
};

struct EnumOptions {
  // Hard error above this; enumeration is exponential in the signature.
  std::size_t max_atoms = 18;
};

bool classical_sat(const Model& t, const FormulaPtr& f);
bool ht_sat(const HtInterpretation& i, const FormulaPtr& f);

// All <H,T> over p.signature satisfying every statement, ordered by
// (|T|, T, |H|, H).
std::vector<HtInterpretation> ht_models(const Program& p, const EnumOptions& opts = {});

// Total models <T,T> with no H ⊂ T such that <H,T> satisfies p.
std::vector<Model> equilibrium_models(const Program& p, const EnumOptions& opts = {});

struct SeCounterexample {
  HtInterpretation interp;
  FormulaPtr statement;  // a statement of the failing program that interp falsifies
  int failing_program;   // 1 or 2
};

struct SeVerdict {
  bool equivalent = false;
  std::optional<SeCounterexample> counterexample;
};

// HT-equivalence over the union signature, which coincides with strong
// equivalence. Counterexamples are re-verified with ht_sat before returning.
SeVerdict strongly_equivalent(const Program& p1, const Program& p2,
                              const EnumOptions& opts = {});

enum class LawKind { Equivalence, NonEquivalence, Context };

struct LawResult {
  std::string name;
  LawKind kind;
  bool pass;
  std::string detail;
};

// Fixed catalog of ordered-disjunction laws: strong equivalences, pairs that
// must *not* be strongly equivalent, and context programs whose exact
// equilibrium models are pinned. inject_fault adds one deliberately wrong
// entry so failure reporting can be exercised.
std::vector<LawResult> property_catalog(const EnumOptions& opts = {},
                                        bool inject_fault = false);

bool all_pass(const std::vector<LawResult>& results);

}  // namespace lpod
