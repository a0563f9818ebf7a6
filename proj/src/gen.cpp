#include "lpod/gen.hpp"

#include <algorithm>

namespace lpod {

std::vector<std::string> atom_pool(std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(std::string(1, static_cast<char>('a' + i)));
  return out;
}

FormulaPtr random_formula(Rng& rng, const std::vector<std::string>& atoms, int depth) {
  if (depth <= 0 || rng.chance(25)) {
    std::size_t leaf = rng.below(10);
    if (leaf == 0) return top();
    if (leaf == 1) return bottom();
    return atom(atoms[rng.below(atoms.size())]);
  }
  switch (rng.below(5)) {
    case 0:
      return conj(random_formula(rng, atoms, depth - 1),
                  random_formula(rng, atoms, depth - 1));
    case 1:
      return disj(random_formula(rng, atoms, depth - 1),
                  random_formula(rng, atoms, depth - 1));
    case 2:
      return ordered(random_formula(rng, atoms, depth - 1),
                     random_formula(rng, atoms, depth - 1));
    case 3:
      return implies(random_formula(rng, atoms, depth - 1),
                     random_formula(rng, atoms, depth - 1));
    default:
      return neg(random_formula(rng, atoms, depth - 1));
  }
}

FormulaSeq random_seq(Rng& rng, const std::vector<std::string>& atoms,
                      std::size_t max_len) {
  FormulaSeq out;
  std::size_t len = rng.below(max_len + 1);
  out.reserve(len);
  for (std::size_t i = 0; i < len; ++i)
    out.push_back(random_formula(rng, atoms, 1 + static_cast<int>(rng.below(2))));
  return out;
}

namespace {

void push_unique(std::vector<std::string>& out, const std::string& a) {
  if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
}

std::vector<std::string> random_body(Rng& rng, const std::vector<std::string>& atoms,
                                     std::size_t max_len) {
  std::vector<std::string> out;
  std::size_t len = rng.below(max_len + 1);
  for (std::size_t i = 0; i < len; ++i)
    push_unique(out, atoms[rng.below(atoms.size())]);
  return out;
}

}  // namespace

std::vector<LpodRule> random_lpod(Rng& rng, std::size_t max_rules,
                                  std::size_t max_atoms, std::size_t max_head) {
  std::vector<std::string> atoms = atom_pool(max_atoms);
  std::vector<LpodRule> out;
  std::size_t rules = 1 + rng.below(max_rules);
  for (std::size_t r = 0; r < rules; ++r) {
    LpodRule rule;
    if (!rng.chance(15)) {
      std::size_t len = 1 + rng.below(std::min(max_head, max_atoms));
      for (std::size_t i = 0; i < len; ++i)
        push_unique(rule.head, atoms[rng.below(atoms.size())]);
    }
    rule.body_pos = random_body(rng, atoms, 2);
    rule.body_neg = random_body(rng, atoms, 2);
    out.push_back(std::move(rule));
  }
  return out;
}

std::vector<DlpodRule> random_odnf_dlpod(Rng& rng, std::size_t max_rules,
                                         std::size_t max_atoms) {
  std::vector<std::string> atoms = atom_pool(max_atoms);
  std::vector<DlpodRule> out;
  std::size_t rules = 1 + rng.below(max_rules);
  for (std::size_t r = 0; r < rules; ++r) {
    DlpodRule rule;
    if (!rng.chance(10)) {
      std::size_t disjuncts = rng.chance(10) ? 3 : 1 + rng.below(2);
      OdTermPtr head;
      for (std::size_t d = 0; d < disjuncts; ++d) {
        std::size_t len = rng.chance(10) ? 3 : 1 + rng.below(2);
        OdTermPtr chain;
        for (std::size_t i = 0; i < len; ++i) {
          OdTermPtr leaf = od_atom(atoms[rng.below(atoms.size())]);
          chain = chain ? od_times(chain, leaf) : leaf;
        }
        head = head ? od_or(head, chain) : chain;
      }
      rule.head = head;
    }
    rule.body_pos = random_body(rng, atoms, 1);
    rule.body_neg = random_body(rng, atoms, 2);
    out.push_back(std::move(rule));
  }
  return out;
}

}  // namespace lpod
