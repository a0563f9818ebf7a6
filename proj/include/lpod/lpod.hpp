#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "lpod/ht.hpp"
#include "lpod/rule.hpp"

namespace lpod {

// Throws SignatureTooLarge when size exceeds the configured cap (or the
// 62-atom bitmask ceiling).
void check_signature_cap(std::size_t size, const EnumOptions& opts);

// k-th option of a rule, 1-based:
//   head[k-1] :- body_pos, not body_neg, not head[0..k-2].
// Throws std::out_of_range unless 1 <= k <= |head|.
NormalRule option(const LpodRule& r, std::size_t k);

// Every combination of one option per rule, in lexicographic order of the
// option indices. Constraints are copied into each split program unchanged.
std::vector<std::vector<NormalRule>> split_programs(const std::vector<LpodRule>& p);
std::size_t split_program_count(const std::vector<LpodRule>& p);
void for_each_split_program(const std::vector<LpodRule>& p,
                            const std::function<void(const std::vector<NormalRule>&)>& fn);

// Gelfond-Lifschitz reduct: keeps head :- body_pos for rules whose negative
// body avoids i.
std::vector<NormalRule> reduct(const std::vector<NormalRule>& p, const Model& i);

// Least model of a positive program, or nullopt when a constraint's body is
// derived. Throws std::invalid_argument if some rule has a negative body.
std::optional<Model> least_model(const std::vector<NormalRule>& p);

// Ordered-disjunction reduct: for each rule whose negative body avoids i,
// contributes head[j] :- body_pos for every j with head[0..j-1] disjoint
// from i and head[j] in i. Constraints contribute nothing; the answer-set
// check covers them through classical satisfaction.
std::vector<NormalRule> x_reduct(const std::vector<LpodRule>& p, const Model& i);

// Union of the answer sets of all split programs.
std::vector<Model> answer_sets_split(const std::vector<LpodRule>& p,
                                     const EnumOptions& opts = {});

// Sets i with i |= p classically and i the least model of x_reduct(p, i).
std::vector<Model> answer_sets_reduct(const std::vector<LpodRule>& p,
                                      const EnumOptions& opts = {});

// Equilibrium models of the rules read as formulas.
std::vector<Model> answer_sets_equilibrium(const std::vector<LpodRule>& p,
                                           const EnumOptions& opts = {});

// Satisfaction degree: 1 when the body fails, otherwise the least k with
// head[k-1] in i. Throws std::invalid_argument for constraints and for
// rules i does not satisfy.
int degree(const Model& i, const LpodRule& r);

// Degrees of every rule with a nonempty head, keyed by rule index.
// Constraints carry no degree.
struct DegreeProfile {
  std::map<std::size_t, int> degrees;

  friend bool operator==(const DegreeProfile&, const DegreeProfile&) = default;
};

DegreeProfile degree_profile(const Model& i, const std::vector<LpodRule>& p);

enum class PreferenceCriterion { Cardinality, Inclusion, Pareto };
enum class PreferVerdict { FirstPreferred, SecondPreferred, Incomparable, Equal };

PreferVerdict compare_profiles(const DegreeProfile& a, const DegreeProfile& b,
                               const std::vector<LpodRule>& p,
                               PreferenceCriterion c);

// Compares two answer sets of p; throws std::invalid_argument when i or j
// is not an answer set.
PreferVerdict prefer(const Model& i, const Model& j, const std::vector<LpodRule>& p,
                     PreferenceCriterion c, const EnumOptions& opts = {});

// Maximal answer sets under the strict preference relation.
std::vector<Model> preferred_answer_sets(const std::vector<LpodRule>& p,
                                         PreferenceCriterion c,
                                         const EnumOptions& opts = {});

}  // namespace lpod
