#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "ht_oracle.hpp"
#include "lpod/dlpod.hpp"
#include "lpod/errors.hpp"
#include "lpod/gen.hpp"
#include "lpod/lpod.hpp"
#include "lpod/parse.hpp"
#include "lpod/print.hpp"
#include "lpod/translate.hpp"

using namespace lpod;
using namespace lpod::testing;

namespace {

std::vector<DlpodRule> drules_of(const char* text) {
  return extract_dlpod_rules(parse_theory(text));
}

OdTermPtr random_od(Rng& rng, const std::vector<std::string>& atoms, int depth) {
  if (depth <= 0 || rng.chance(30)) return od_atom(atoms[rng.below(atoms.size())]);
  OdTermPtr l = random_od(rng, atoms, depth - 1);
  OdTermPtr r = random_od(rng, atoms, depth - 1);
  return rng.chance(50) ? od_or(l, r) : od_times(l, r);
}

}  // namespace

TEST_CASE("head terms convert to formulas and back") {
  OdTermPtr t = od_times(od_atom("a"), od_or(od_atom("b"), od_atom("c")));
  CHECK(od_equal(t, t));
  CHECK_FALSE(od_equal(t, od_times(od_atom("a"), od_atom("b"))));
  CHECK_FALSE(od_equal(od_or(od_atom("a"), od_atom("b")),
                       od_times(od_atom("a"), od_atom("b"))));

  CHECK(equal(od_formula(t), parse_formula("a * (b ; c)")));
  CHECK(od_equal(od_from_formula(od_formula(t)), t));
  CHECK(od_equal(od_from_formula(parse_formula("a ; b * c")),
                 od_or(od_atom("a"), od_times(od_atom("b"), od_atom("c")))));

  CHECK_THROWS_AS(od_from_formula(parse_formula("a & b")), UnsupportedConstruct);
  CHECK_THROWS_AS(od_from_formula(parse_formula("~a")), UnsupportedConstruct);
  CHECK_THROWS_AS(od_from_formula(parse_formula("#false")), UnsupportedConstruct);
}

TEST_CASE("odnf flattening distributes ordered over plain disjunction") {
  auto odnf = [](const char* text) { return to_odnf(od_from_formula(parse_formula(text))); };
  CHECK(odnf("a * (b ; c)") == OdnfHead{{{"a", "b"}, {"a", "c"}}});
  CHECK(odnf("a ; b * c") == OdnfHead{{{"a"}, {"b", "c"}}});
  CHECK(odnf("(f ; g) * h") == OdnfHead{{{"f", "h"}, {"g", "h"}}});
  CHECK(odnf("(a ; b) * (c ; d)") ==
        OdnfHead{{{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}}});
  CHECK(odnf("b * c ; a") == OdnfHead{{{"a"}, {"b", "c"}}});  // sorted
  CHECK(odnf("a ; a") == OdnfHead{{{"a"}, {"a"}}});           // not deduplicated
  CHECK(odnf("a") == OdnfHead{{{"a"}}});
  CHECK(odnf("a * b * c") == OdnfHead{{{"a", "b", "c"}}});
}

TEST_CASE("odnf recognition") {
  auto in_odnf = [](const char* text) {
    return head_in_odnf(od_from_formula(parse_formula(text)));
  };
  CHECK(in_odnf("a"));
  CHECK(in_odnf("a * b"));
  CHECK(in_odnf("a ; b * c"));
  CHECK(in_odnf("a * b ; c * d ; e"));
  CHECK_FALSE(in_odnf("a * (b ; c)"));
  CHECK_FALSE(in_odnf("(f ; g) * h"));
}

TEST_CASE("odnf_term folds a flat head back into a left-associated term") {
  CHECK_THROWS_AS(odnf_term(OdnfHead{}), std::invalid_argument);
  CHECK(od_equal(odnf_term(OdnfHead{{{"a"}}}), od_atom("a")));
  CHECK(od_equal(odnf_term(OdnfHead{{{"a"}, {"b", "c"}}}),
                 od_or(od_atom("a"), od_times(od_atom("b"), od_atom("c")))));
  CHECK(od_equal(odnf_term(OdnfHead{{{"a", "b"}, {"a", "c"}}}),
                 od_or(od_times(od_atom("a"), od_atom("b")),
                       od_times(od_atom("a"), od_atom("c")))));
}

TEST_CASE("odnf rewriting is idempotent and classically faithful") {
  std::vector<std::string> pool = atom_pool(3);
  Rng rng(511u);
  for (int round = 0; round < 200; ++round) {
    OdTermPtr t = random_od(rng, pool, 3);
    CAPTURE(to_text(od_formula(t)));
    OdnfHead h = to_odnf(t);
    CHECK(head_in_odnf(odnf_term(h)));
    CHECK(to_odnf(odnf_term(h)) == h);
    FormulaPtr before = od_formula(t);
    FormulaPtr after = od_formula(odnf_term(h));
    for (const Model& v : all_subsets(pool))
      CHECK(classical_sat(v, before) == classical_sat(v, after));
  }
}

TEST_CASE("option rules pair one chain link per disjunct") {
  OdnfHead h{{{"a", "b"}, {"c", "d", "e"}}};
  std::vector<GroundRule> g = dlpod_options(h, {}, {});
  REQUIRE(g.size() == 6);
  CHECK(g[0] == GroundRule{{"a", "c"}, {}, {}, {}});
  CHECK(g[1] == GroundRule{{"a", "d"}, {}, {}, {"c"}});
  CHECK(g[2] == GroundRule{{"a", "e"}, {}, {}, {"c", "d"}});
  CHECK(g[3] == GroundRule{{"b", "c"}, {}, {}, {"a"}});
  CHECK(g[4] == GroundRule{{"b", "d"}, {}, {}, {"a", "c"}});
  CHECK(g[5] == GroundRule{{"b", "e"}, {}, {}, {"a", "c", "d"}});

  SUBCASE("the rule body comes first and is deduplicated") {
    g = dlpod_options(h, {"p"}, {"q", "a"});
    CHECK(g[4] == GroundRule{{"b", "d"}, {}, {"p"}, {"q", "a", "c"}});
  }
  SUBCASE("a single chain degenerates to the linear options") {
    g = dlpod_options(OdnfHead{{{"a", "b", "c"}}}, {}, {"q"});
    REQUIRE(g.size() == 3);
    CHECK(g[0] == GroundRule{{"a"}, {}, {}, {"q"}});
    CHECK(g[1] == GroundRule{{"b"}, {}, {}, {"q", "a"}});
    CHECK(g[2] == GroundRule{{"c"}, {}, {}, {"q", "a", "b"}});
  }
  SUBCASE("all-singleton chains give one plain disjunction") {
    g = dlpod_options(OdnfHead{{{"a"}, {"b"}}}, {}, {});
    REQUIRE(g.size() == 1);
    CHECK(g[0] == GroundRule{{"a", "b"}, {}, {}, {}});
  }
}

TEST_CASE("disjunctive answer sets are minimal models of the reduct") {
  auto as = [](const char* text) {
    std::vector<GroundRule> rules;
    for (const FormulaPtr& s : parse_theory(text).statements) {
      std::vector<DlpodRule> dr = extract_dlpod_rules(make_program({s}));
      OdnfHead h = dr[0].head ? to_odnf(*dr[0].head) : OdnfHead{};
      std::vector<GroundRule> opts =
          h.disjuncts.empty()
              ? std::vector<GroundRule>{GroundRule{{}, {}, dr[0].body_pos, dr[0].body_neg}}
              : dlpod_options(h, dr[0].body_pos, dr[0].body_neg);
      REQUIRE(opts.size() == 1);  // these programs are already flat
      rules.push_back(opts[0]);
    }
    return disjunctive_answer_sets(rules);
  };
  CHECK(as("a ; b. c.") == std::vector<Model>{{"a", "c"}, {"b", "c"}});
  CHECK(as("a ; b :- not b.") == std::vector<Model>{{"a"}});
  CHECK(disjunctive_answer_sets({}) == std::vector<Model>{{}});
  CHECK(as("a ; b. :- a.") == std::vector<Model>{{"b"}});

  SUBCASE("negated head atoms condition the reduct") {
    GroundRule choice{{"a"}, {"a"}, {}, {}};  // a | not a.
    CHECK(disjunctive_answer_sets({choice}) == std::vector<Model>{{}, {"a"}});
  }
  SUBCASE("agreement with equilibrium models on random disjunctive programs") {
    std::vector<std::string> pool = atom_pool(3);
    Rng rng(512u);
    for (int round = 0; round < 150; ++round) {
      std::vector<GroundRule> rules;
      std::size_t n = 1 + rng.below(3);
      for (std::size_t k = 0; k < n; ++k) {
        GroundRule r;
        std::size_t heads = rng.below(3);
        for (std::size_t i = 0; i < heads; ++i)
          r.head_pos.push_back(pool[rng.below(pool.size())]);
        if (rng.chance(30)) r.head_neg.push_back(pool[rng.below(pool.size())]);
        if (rng.chance(50)) r.body_pos.push_back(pool[rng.below(pool.size())]);
        if (rng.chance(50)) r.body_neg.push_back(pool[rng.below(pool.size())]);
        rules.push_back(std::move(r));
      }
      Program p = rules_program(rules, pool);
      CAPTURE(program_text(p));
      CHECK(disjunctive_answer_sets(rules) == oracle_equilibrium(p));
    }
  }
}

TEST_CASE("answer sets of heads mixing both disjunctions") {
  SUBCASE("ordered chain inside a plain disjunction") {
    std::vector<DlpodRule> p = drules_of("a ; b * c.\nc.\n");
    CHECK(dlpod_answer_sets(p) ==
          std::vector<Model>{{"c"}, {"a", "c"}, {"b", "c"}});
  }
  SUBCASE("plain disjunction inside an ordered chain") {
    std::vector<DlpodRule> p = drules_of("a * (b ; c).\nc.\n");
    CHECK(dlpod_answer_sets(p) ==
          std::vector<Model>{{"c"}, {"a", "c"}, {"b", "c"}});
  }
  SUBCASE("pure ordered heads reduce to the linear semantics") {
    Rng rng(513u);
    for (int round = 0; round < 100; ++round) {
      std::vector<LpodRule> p = random_lpod(rng, 3, 4, 3);
      std::vector<DlpodRule> d;
      for (const LpodRule& r : p) {
        DlpodRule q;
        if (!r.head.empty()) {
          OdTermPtr t = od_atom(r.head[0]);
          for (std::size_t i = 1; i < r.head.size(); ++i)
            t = od_times(t, od_atom(r.head[i]));
          q.head = t;
        }
        q.body_pos = r.body_pos;
        q.body_neg = r.body_neg;
        d.push_back(std::move(q));
      }
      CHECK(dlpod_answer_sets(d) == answer_sets_split(p));
    }
  }
}

TEST_CASE("divergence report for a head already in odnf") {
  DivergenceReport rep = divergence_report(drules_of("a ; b * c.\nc.\n"));
  CHECK(rep.input_is_odnf);
  CHECK(rep.dlpod_sets == std::vector<Model>{{"c"}, {"a", "c"}, {"b", "c"}});
  CHECK(rep.equilibrium_sets == std::vector<Model>{{"c"}, {"b", "c"}});
  CHECK(rep.odnf_equilibrium_sets == rep.equilibrium_sets);
  CHECK_FALSE(rep.odnf_rewrite_changed_ht);
  CHECK(rep.dlpod_only == std::vector<Model>{{"a", "c"}});
  CHECK(rep.equilibrium_only.empty());
  CHECK(rep.inclusion_holds);
}

TEST_CASE("divergence report for a head needing the rewrite") {
  DivergenceReport rep = divergence_report(drules_of("a * (b ; c).\nc.\n"));
  CHECK_FALSE(rep.input_is_odnf);
  CHECK(rep.dlpod_sets == std::vector<Model>{{"c"}, {"a", "c"}, {"b", "c"}});
  CHECK(rep.equilibrium_sets == std::vector<Model>{{"c"}, {"a", "c"}});
  CHECK(rep.odnf_equilibrium_sets == rep.equilibrium_sets);
  CHECK_FALSE(rep.odnf_rewrite_changed_ht);  // this direction preserves ht models
  CHECK(rep.dlpod_only == std::vector<Model>{{"b", "c"}});
  CHECK(rep.equilibrium_only.empty());
  CHECK(rep.inclusion_holds);
}

TEST_CASE("the odnf rewrite can change the ht reading") {
  DivergenceReport rep = divergence_report(drules_of("(f ; g) * h.\nh.\n"));
  CHECK_FALSE(rep.input_is_odnf);
  CHECK(rep.equilibrium_sets ==
        std::vector<Model>{{"h"}, {"f", "h"}, {"g", "h"}});
  CHECK(rep.odnf_equilibrium_sets == std::vector<Model>{{"h"}});
  CHECK(rep.odnf_rewrite_changed_ht);
  CHECK(rep.dlpod_sets == std::vector<Model>{{"h"}, {"f", "h"}, {"g", "h"}});
  CHECK(rep.dlpod_only.empty());
  CHECK(rep.equilibrium_only.empty());
  CHECK(rep.inclusion_holds);
}

TEST_CASE("a linear program reports no divergence") {
  DivergenceReport rep = divergence_report(drules_of("a * b :- not c.\nb * c :- not d.\n"));
  CHECK(rep.input_is_odnf);
  std::vector<Model> expect{{"b"}, {"c"}, {"a", "b"}};
  CHECK(rep.dlpod_sets == expect);
  CHECK(rep.equilibrium_sets == expect);
  CHECK(rep.dlpod_only.empty());
  CHECK(rep.equilibrium_only.empty());
  CHECK(rep.inclusion_holds);
}

TEST_CASE("aux_define names a plain disjunction with a fresh atom") {
  std::vector<DlpodRule> p = drules_of("a * (b ; c).\nc.\n");
  OdTermPtr bc = od_or(od_atom("b"), od_atom("c"));
  AuxDefinition def = aux_define(p, bc);
  CHECK(def.aux_atom == "aux");
  REQUIRE(def.program.size() == 5);
  CHECK(rule_text(def.program[0]) == "a * aux.");
  CHECK(rule_text(def.program[1]) == "c.");
  CHECK(rule_text(def.program[2]) == "aux :- b.");
  CHECK(rule_text(def.program[3]) == "aux :- c.");
  CHECK(rule_text(def.program[4]) == "b | c :- aux.");

  std::vector<Model> as = dlpod_answer_sets(def.program);
  CHECK(as == std::vector<Model>{{"aux", "c"}, {"a", "aux", "c"}});
  CHECK(strip_atoms(as, {def.aux_atom}) ==
        std::vector<Model>{{"c"}, {"a", "c"}});

  SUBCASE("the fresh name dodges existing atoms") {
    std::vector<DlpodRule> q = drules_of("a * (b ; c).\naux.\n");
    CHECK(aux_define(q, bc).aux_atom == "aux_2");
  }
  SUBCASE("heads without the subterm are left alone") {
    AuxDefinition none = aux_define(drules_of("a * b.\n"), bc);
    REQUIRE(none.program.size() == 4);
    CHECK(rule_text(none.program[0]) == "a * b.");
    CHECK(rule_text(none.program[3]) == "b | c :- aux.");
  }
  SUBCASE("only plain disjunctions can be named") {
    CHECK_THROWS_AS(aux_define(p, od_times(od_atom("b"), od_atom("c"))),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        aux_define(p, od_or(od_atom("a"), od_times(od_atom("b"), od_atom("c")))),
        std::invalid_argument);
  }
}

TEST_CASE("dlpod extraction accepts mixed heads and rejects the rest") {
  std::vector<DlpodRule> p = drules_of("a ; b * c :- p, not q.\n:- a.\n#true.\n");
  REQUIRE(p.size() == 2);
  REQUIRE(p[0].head.has_value());
  CHECK(od_equal(*p[0].head, od_or(od_atom("a"), od_times(od_atom("b"), od_atom("c")))));
  CHECK(p[0].body_pos == std::vector<std::string>{"p"});
  CHECK(p[0].body_neg == std::vector<std::string>{"q"});
  CHECK_FALSE(p[1].head.has_value());

  CHECK_THROWS_AS(drules_of("a & b."), UnsupportedConstruct);
  CHECK_THROWS_AS(drules_of("a ; ~b."), UnsupportedConstruct);
  CHECK_THROWS_AS(drules_of("a :- b ; c."), UnsupportedConstruct);
}

TEST_CASE("strip_atoms on dlpod results keeps ordering") {
  CHECK(strip_atoms({{"aux", "c"}, {"a", "aux", "c"}}, {"aux"}) ==
        std::vector<Model>{{"c"}, {"a", "c"}});
}
