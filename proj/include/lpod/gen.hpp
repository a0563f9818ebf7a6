#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lpod/dlpod.hpp"
#include "lpod/formula.hpp"
#include "lpod/rule.hpp"

namespace lpod {

// Deterministic source of small random choices.  Draws come straight from
// mt19937_64 and are reduced with plain modulo, so a seed produces the same
// stream on every platform and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  std::size_t below(std::size_t n) {
    return static_cast<std::size_t>(engine_() % n);
  }

  bool chance(std::size_t percent) { return below(100) < percent; }

 private:
  std::mt19937_64 engine_;
};

// The first n single-letter atom names: a, b, c, ...
std::vector<std::string> atom_pool(std::size_t n);

// Random formula over the given atoms with nesting depth at most `depth`;
// all connectives and both truth constants can occur.
FormulaPtr random_formula(Rng& rng, const std::vector<std::string>& atoms, int depth);

// Sequence of 0..max_len random formulas (small depth).
FormulaSeq random_seq(Rng& rng, const std::vector<std::string>& atoms,
                      std::size_t max_len);

// Random program with 1..max_rules rules over at most max_atoms atoms; heads
// are 1..max_head distinct atoms, with occasional constraints and small
// positive/negative bodies.
std::vector<LpodRule> random_lpod(Rng& rng, std::size_t max_rules,
                                  std::size_t max_atoms, std::size_t max_head);

// Random program whose heads are already flat disjunctions of ordered
// chains: mostly 1-2 disjuncts of 1-2 atoms each, rarely 3, with occasional
// constraints.
std::vector<DlpodRule> random_odnf_dlpod(Rng& rng, std::size_t max_rules,
                                         std::size_t max_atoms);

}  // namespace lpod
