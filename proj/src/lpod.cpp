#include "lpod/lpod.hpp"

#include <algorithm>
#include <stdexcept>

#include "eval.hpp"

namespace lpod {

using detail::AtomIndex;
using detail::Mask;

void check_signature_cap(std::size_t size, const EnumOptions& opts) {
  if (size > opts.max_atoms) throw SignatureTooLarge(size, opts.max_atoms);
  if (size > 62) throw SignatureTooLarge(size, 62);
}

namespace {

void push_unique(std::vector<std::string>& out, const std::string& a) {
  for (const auto& seen : out)
    if (seen == a) return;
  out.push_back(a);
}

}  // namespace

NormalRule option(const LpodRule& r, std::size_t k) {
  if (k < 1 || k > r.head.size())
    throw std::out_of_range("option: index " + std::to_string(k) +
                            " out of range for a head of length " +
                            std::to_string(r.head.size()));
  NormalRule out;
  out.head = r.head[k - 1];
  out.body_pos = r.body_pos;
  for (const auto& a : r.body_neg) push_unique(out.body_neg, a);
  for (std::size_t j = 0; j + 1 < k; ++j) push_unique(out.body_neg, r.head[j]);
  return out;
}

std::size_t split_program_count(const std::vector<LpodRule>& p) {
  std::size_t count = 1;
  for (const auto& r : p)
    if (!r.head.empty()) count *= r.head.size();
  return count;
}

void for_each_split_program(
    const std::vector<LpodRule>& p,
    const std::function<void(const std::vector<NormalRule>&)>& fn) {
  // Odometer over option indices; the last rule's index moves fastest, so
  // programs come out in lexicographic order.
  std::vector<std::size_t> choice(p.size(), 1);
  bool more = true;
  while (more) {
    std::vector<NormalRule> program;
    program.reserve(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i].head.empty()) {
        program.push_back(NormalRule{std::nullopt, p[i].body_pos, p[i].body_neg});
      } else {
        program.push_back(option(p[i], choice[i]));
      }
    }
    fn(program);
    more = false;
    for (std::size_t i = p.size(); i-- > 0;) {
      if (p[i].head.empty()) continue;
      if (choice[i] < p[i].head.size()) {
        ++choice[i];
        more = true;
        break;
      }
      choice[i] = 1;
    }
  }
}

std::vector<std::vector<NormalRule>> split_programs(const std::vector<LpodRule>& p) {
  std::vector<std::vector<NormalRule>> out;
  out.reserve(split_program_count(p));
  for_each_split_program(p, [&](const std::vector<NormalRule>& q) { out.push_back(q); });
  return out;
}

std::vector<NormalRule> reduct(const std::vector<NormalRule>& p, const Model& i) {
  std::vector<NormalRule> out;
  for (const auto& r : p) {
    bool blocked = false;
    for (const auto& a : r.body_neg) blocked = blocked || i.count(a) > 0;
    if (!blocked) out.push_back(NormalRule{r.head, r.body_pos, {}});
  }
  return out;
}

std::optional<Model> least_model(const std::vector<NormalRule>& p) {
  for (const auto& r : p)
    if (!r.body_neg.empty())
      throw std::invalid_argument("least_model: program is not positive");
  Model m;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& r : p) {
      if (!r.head || m.count(*r.head)) continue;
      bool fires = true;
      for (const auto& a : r.body_pos) fires = fires && m.count(a) > 0;
      if (fires) {
        m.insert(*r.head);
        changed = true;
      }
    }
  }
  for (const auto& r : p) {
    if (r.head) continue;
    bool fires = true;
    for (const auto& a : r.body_pos) fires = fires && m.count(a) > 0;
    if (fires) return std::nullopt;  // constraint body derived
  }
  return m;
}

std::vector<NormalRule> x_reduct(const std::vector<LpodRule>& p, const Model& i) {
  std::vector<NormalRule> out;
  for (const auto& r : p) {
    bool blocked = false;
    for (const auto& a : r.body_neg) blocked = blocked || i.count(a) > 0;
    if (blocked) continue;
    for (std::size_t j = 0; j < r.head.size(); ++j) {
      bool prefix_clear = true;
      for (std::size_t k = 0; k < j; ++k)
        prefix_clear = prefix_clear && i.count(r.head[k]) == 0;
      if (prefix_clear && i.count(r.head[j]))
        out.push_back(NormalRule{r.head[j], r.body_pos, {}});
    }
  }
  return out;
}

namespace {

// Mask-compiled normal rule; head < 0 marks a constraint.
struct MRule {
  int head = -1;
  Mask pos = 0, neg = 0;
};

Mask atoms_mask(const std::vector<std::string>& atoms, const AtomIndex& ix) {
  Mask m = 0;
  for (const auto& a : atoms) m |= Mask{1} << ix.at(a);
  return m;
}

MRule compile_rule(const NormalRule& r, const AtomIndex& ix) {
  MRule m;
  if (r.head) m.head = ix.at(*r.head);
  m.pos = atoms_mask(r.body_pos, ix);
  m.neg = atoms_mask(r.body_neg, ix);
  return m;
}

// Least model of the reduct wrt i, as a mask; nullopt when a constraint
// fires.
std::optional<Mask> reduct_least_model(const std::vector<MRule>& rules, Mask i) {
  Mask m = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& r : rules) {
      if (r.head < 0 || (r.neg & i)) continue;
      Mask bit = Mask{1} << r.head;
      if ((m & bit) || (r.pos & ~m)) continue;
      m |= bit;
      changed = true;
    }
  }
  for (const auto& r : rules) {
    if (r.head >= 0 || (r.neg & i)) continue;
    if (!(r.pos & ~m)) return std::nullopt;
  }
  return m;
}

struct MLpodRule {
  std::vector<int> head;
  Mask pos = 0, neg = 0;
};

MLpodRule compile_lpod_rule(const LpodRule& r, const AtomIndex& ix) {
  MLpodRule m;
  for (const auto& a : r.head) m.head.push_back(ix.at(a));
  m.pos = atoms_mask(r.body_pos, ix);
  m.neg = atoms_mask(r.body_neg, ix);
  return m;
}

bool rule_sat(const MLpodRule& r, Mask i) {
  bool body = !(r.pos & ~i) && !(r.neg & i);
  if (!body) return true;
  for (int h : r.head)
    if ((i >> h) & 1) return true;
  return false;
}

}  // namespace

std::vector<Model> answer_sets_split(const std::vector<LpodRule>& p,
                                     const EnumOptions& opts) {
  std::vector<std::string> sig = rule_atoms(p);
  check_signature_cap(sig.size(), opts);
  AtomIndex ix = AtomIndex::from(sig);
  std::size_t n = sig.size();
  std::set<Model> found;
  for_each_split_program(p, [&](const std::vector<NormalRule>& q) {
    std::vector<MRule> rules;
    rules.reserve(q.size());
    for (const auto& r : q) rules.push_back(compile_rule(r, ix));
    for (Mask i = 0; i < (Mask{1} << n); ++i) {
      if (reduct_least_model(rules, i) == std::optional<Mask>(i))
        found.insert(detail::model_of(i, ix));
    }
  });
  return sorted_models(std::move(found));
}

std::vector<Model> answer_sets_reduct(const std::vector<LpodRule>& p,
                                      const EnumOptions& opts) {
  std::vector<std::string> sig = rule_atoms(p);
  check_signature_cap(sig.size(), opts);
  AtomIndex ix = AtomIndex::from(sig);
  std::size_t n = sig.size();
  std::vector<MLpodRule> rules;
  rules.reserve(p.size());
  for (const auto& r : p) rules.push_back(compile_lpod_rule(r, ix));

  std::set<Model> found;
  for (Mask i = 0; i < (Mask{1} << n); ++i) {
    bool sat = true;
    for (const auto& r : rules) sat = sat && rule_sat(r, i);
    if (!sat) continue;
    // Build the ordered-disjunction reduct for this candidate.
    std::vector<MRule> rd;
    for (const auto& r : rules) {
      if (r.neg & i) continue;
      Mask prefix = 0;
      for (int h : r.head) {
        if (!(prefix & i) && ((i >> h) & 1)) rd.push_back(MRule{h, r.pos, 0});
        prefix |= Mask{1} << h;
      }
    }
    if (reduct_least_model(rd, i) == std::optional<Mask>(i))
      found.insert(detail::model_of(i, ix));
  }
  return sorted_models(std::move(found));
}

std::vector<Model> answer_sets_equilibrium(const std::vector<LpodRule>& p,
                                           const EnumOptions& opts) {
  return equilibrium_models(rules_program(p), opts);
}

int degree(const Model& i, const LpodRule& r) {
  if (r.head.empty())
    throw std::invalid_argument("degree: constraints have no satisfaction degree");
  bool body = true;
  for (const auto& a : r.body_pos) body = body && i.count(a) > 0;
  for (const auto& a : r.body_neg) body = body && i.count(a) == 0;
  if (!body) return 1;
  for (std::size_t j = 0; j < r.head.size(); ++j)
    if (i.count(r.head[j])) return static_cast<int>(j) + 1;
  throw std::invalid_argument("degree: rule is not satisfied by the interpretation");
}

DegreeProfile degree_profile(const Model& i, const std::vector<LpodRule>& p) {
  DegreeProfile out;
  for (std::size_t r = 0; r < p.size(); ++r)
    if (!p[r].head.empty()) out.degrees.emplace(r, degree(i, p[r]));
  return out;
}

namespace {

int max_head_length(const std::vector<LpodRule>& p) {
  std::size_t m = 0;
  for (const auto& r : p) m = std::max(m, r.head.size());
  return static_cast<int>(m);
}

std::set<std::size_t> rules_at_degree(const DegreeProfile& prof, int k) {
  std::set<std::size_t> out;
  for (const auto& [rule, deg] : prof.degrees)
    if (deg == k) out.insert(rule);
  return out;
}

}  // namespace

PreferVerdict compare_profiles(const DegreeProfile& a, const DegreeProfile& b,
                               const std::vector<LpodRule>& p,
                               PreferenceCriterion c) {
  int max_k = max_head_length(p);
  switch (c) {
    case PreferenceCriterion::Cardinality:
      for (int k = 1; k <= max_k; ++k) {
        std::size_t ca = rules_at_degree(a, k).size();
        std::size_t cb = rules_at_degree(b, k).size();
        if (ca != cb)
          return ca > cb ? PreferVerdict::FirstPreferred : PreferVerdict::SecondPreferred;
      }
      return PreferVerdict::Equal;
    case PreferenceCriterion::Inclusion:
      // At the first degree where the satisfied-rule sets differ, the side
      // whose set strictly contains the other is preferred; overlapping
      // incomparable sets compare as incomparable.
      for (int k = 1; k <= max_k; ++k) {
        std::set<std::size_t> sa = rules_at_degree(a, k);
        std::set<std::size_t> sb = rules_at_degree(b, k);
        if (sa == sb) continue;
        if (std::includes(sa.begin(), sa.end(), sb.begin(), sb.end()))
          return PreferVerdict::FirstPreferred;
        if (std::includes(sb.begin(), sb.end(), sa.begin(), sa.end()))
          return PreferVerdict::SecondPreferred;
        return PreferVerdict::Incomparable;
      }
      return PreferVerdict::Equal;
    case PreferenceCriterion::Pareto: {
      bool a_better = false, b_better = false;
      for (const auto& [rule, da] : a.degrees) {
        auto it = b.degrees.find(rule);
        if (it == b.degrees.end()) continue;
        if (da < it->second) a_better = true;
        if (da > it->second) b_better = true;
      }
      if (a_better && b_better) return PreferVerdict::Incomparable;
      if (a_better) return PreferVerdict::FirstPreferred;
      if (b_better) return PreferVerdict::SecondPreferred;
      return PreferVerdict::Equal;
    }
  }
  return PreferVerdict::Equal;
}

PreferVerdict prefer(const Model& i, const Model& j, const std::vector<LpodRule>& p,
                     PreferenceCriterion c, const EnumOptions& opts) {
  std::vector<Model> as = answer_sets_split(p, opts);
  auto member = [&](const Model& m) {
    return std::find(as.begin(), as.end(), m) != as.end();
  };
  if (!member(i) || !member(j))
    throw std::invalid_argument("prefer: both interpretations must be answer sets");
  return compare_profiles(degree_profile(i, p), degree_profile(j, p), p, c);
}

std::vector<Model> preferred_answer_sets(const std::vector<LpodRule>& p,
                                         PreferenceCriterion c,
                                         const EnumOptions& opts) {
  std::vector<Model> as = answer_sets_split(p, opts);
  std::vector<DegreeProfile> profiles;
  profiles.reserve(as.size());
  for (const auto& m : as) profiles.push_back(degree_profile(m, p));
  std::vector<Model> out;
  for (std::size_t i = 0; i < as.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < as.size() && !dominated; ++j)
      dominated = i != j && compare_profiles(profiles[j], profiles[i], p, c) ==
                                PreferVerdict::FirstPreferred;
    if (!dominated) out.push_back(as[i]);
  }
  return out;
}

}  // namespace lpod
