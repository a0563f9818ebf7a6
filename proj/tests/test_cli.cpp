#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/stat.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "lpod/cli.hpp"

using nlohmann::json;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = lpod::run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  f << text;
}

const char* kTwoRules = "a * b :- not c.\nb * c :- not d.\n";

}  // namespace

TEST_CASE("answer-sets lists the three procedures' common result") {
  CliResult r = run({"answer-sets", "-"}, kTwoRules);
  CHECK(r.code == 0);
  CHECK(r.err.empty());
  CHECK(r.out ==
        "signature: a b c d\n"
        "agreement: yes\n"
        "answer sets (3):\n"
        "  {b}  degrees 0:2 1:1\n"
        "  {c}  degrees 0:1 1:2\n"
        "  {a,b}  degrees 0:1 1:1\n");
}

TEST_CASE("answer-sets reads files and reports missing ones") {
  const char* path = "/tmp/lpodkit_cli_answer_sets.lpod";
  write_file(path, kTwoRules);
  CliResult from_file = run({"answer-sets", path});
  CliResult from_stdin = run({"answer-sets", "-"}, kTwoRules);
  CHECK(from_file.code == 0);
  CHECK(from_file.out == from_stdin.out);
  std::remove(path);

  CliResult missing = run({"answer-sets", "/tmp/lpodkit_cli_missing.lpod"});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("error:") == 0);
}

TEST_CASE("answer-sets json carries exactly the documented fields") {
  CliResult r = run({"answer-sets", "-", "--format", "json"}, kTwoRules);
  REQUIRE(r.code == 0);
  json doc = json::parse(r.out);
  CHECK(doc.size() == 4);
  CHECK(doc["command"] == "answer-sets");
  CHECK(doc["signature"] == json::array({"a", "b", "c", "d"}));
  CHECK(doc["agreement"] == true);
  REQUIRE(doc["results"].size() == 3);
  const json& first = doc["results"][0];
  CHECK(first.size() == 2);
  CHECK(first["atoms"] == json::array({"b"}));
  CHECK(first["degrees"] == json({{"0", 2}, {"1", 1}}));
  CHECK(doc["results"][2]["atoms"] == json::array({"a", "b"}));
}

TEST_CASE("an inconsistent program yields zero answer sets, exit 0") {
  CliResult r = run({"answer-sets", "-"}, "a. :- a.\n");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "signature: a\n"
        "agreement: yes\n"
        "answer sets (0):\n");
}

TEST_CASE("preferred marks the winner under each criterion") {
  for (const char* c : {"c", "i", "p"}) {
    CAPTURE(c);
    CliResult r = run({"preferred", "-", "--criterion", c}, kTwoRules);
    CHECK(r.code == 0);
    std::string name = c[0] == 'c' ? "cardinality" : c[0] == 'i' ? "inclusion" : "pareto";
    CHECK(r.out.find("criterion: " + name + "\n") != std::string::npos);
    CHECK(r.out.find("  {a,b}  degrees 0:1 1:1  preferred\n") != std::string::npos);
    CHECK(r.out.find("  {b}  degrees 0:2 1:1\n") != std::string::npos);
    CHECK(r.out.find("preferred (1): {a,b}\n") != std::string::npos);
  }

  CliResult r = run({"preferred", "-", "--criterion", "c", "--format", "json"}, kTwoRules);
  REQUIRE(r.code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["command"] == "preferred");
  REQUIRE(doc["results"].size() == 3);
  CHECK(doc["results"][0]["preferred"] == false);  // {b}
  CHECK(doc["results"][1]["preferred"] == false);  // {c}
  CHECK(doc["results"][2]["preferred"] == true);   // {a,b}
  CHECK(doc["results"][0].size() == 3);

  SUBCASE("the criterion is mandatory") {
    CliResult missing = run({"preferred", "-"}, kTwoRules);
    CHECK(missing.code == 2);
    CHECK(missing.err.find("error:") == 0);
  }
  SUBCASE("unknown criteria are rejected") {
    CHECK(run({"preferred", "-", "--criterion", "x"}, kTwoRules).code == 2);
  }
}

TEST_CASE("translate emits the requested representation") {
  const char* one_rule = "a * b * c :- p, not q.\n";
  SUBCASE("star") {
    CliResult r = run({"translate", "-", "--form", "star"}, one_rule);
    CHECK(r.code == 0);
    CHECK(r.out ==
          "a | not a :- p, not q.\n"
          "b | not b :- p, not q, not a.\n"
          "c | not c :- p, not q, not a, not b.\n"
          ":- p, not q, not a, not b, not c.\n");
  }
  SUBCASE("star-refined") {
    CliResult r = run({"translate", "-", "--form", "star-refined"}, one_rule);
    CHECK(r.code == 0);
    CHECK(r.out ==
          "a | not a :- p, not q.\n"
          "b | not b :- p, not q, not a.\n"
          "c :- p, not q, not a, not b.\n");
  }
  SUBCASE("normal erases the negated twins via fresh atoms") {
    CHECK(run({"translate", "-", "--form", "normal"}, "a.\n").out == "a.\n");
    CliResult r = run({"translate", "-", "--form", "normal"}, kTwoRules);
    CHECK(r.code == 0);
    CHECK(r.out ==
          "a :- not c, not __od_aux_a.\n"
          "b :- not c, not a.\n"
          "b :- not d, not __od_aux_b.\n"
          "c :- not d, not b.\n"
          "__od_aux_a :- not a.\n"
          "__od_aux_b :- not b.\n");
  }
  SUBCASE("expand unfolds ordered disjunction in place") {
    CHECK(run({"translate", "-", "--form", "expand"}, "a * b.\n").out ==
          "a ; ~a & b.\n");
    CHECK(run({"translate", "-", "--form", "expand"}, "a * b :- p.\n").out ==
          "a ; ~a & b :- p.\n");
  }
  SUBCASE("third builds the exclusion-clause representation") {
    CHECK(run({"translate", "-", "--form", "third"}, "a * b.\n").out ==
          "(a ; b) & (a ; ~a).\n");
  }
  SUBCASE("constraints pass through every rule form") {
    for (const char* form : {"star", "star-refined", "normal"})
      CHECK(run({"translate", "-", "--form", form}, ":- a.\n").out == ":- a.\n");
  }
  SUBCASE("the solver dialect matches the default text for rule forms") {
    CliResult plain = run({"translate", "-", "--form", "star"}, one_rule);
    CliResult core2 =
        run({"translate", "-", "--form", "star", "--dialect", "core2"}, one_rule);
    CHECK(core2.code == 0);
    CHECK(core2.out == plain.out);
  }
  SUBCASE("the dialect applies only to rule forms") {
    CliResult r =
        run({"translate", "-", "--form", "expand", "--dialect", "core2"}, "a * b.\n");
    CHECK(r.code == 2);
    CHECK(r.err.find("error:") == 0);
  }
  SUBCASE("--form is mandatory and validated") {
    CHECK(run({"translate", "-"}, "a.\n").code == 2);
    CHECK(run({"translate", "-", "--form", "starred"}, "a.\n").code == 2);
  }
  SUBCASE("json lists the rules") {
    CliResult r = run({"translate", "-", "--form", "star", "--format", "json"},
                      "a * b.\n");
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["command"] == "translate");
    CHECK(doc["form"] == "star");
    CHECK(doc["rules"] ==
          json::array({"a | not a.", "b | not b :- not a.", ":- not a, not b."}));
    CHECK_FALSE(doc.contains("models"));
  }
}

TEST_CASE("translate --solve pipes the text through an external solver") {
  const char* solver = "/tmp/lpodkit_cli_fake_solver.sh";
  write_file(solver,
             "#!/bin/sh\n"
             "cat > /dev/null\n"
             "echo 'a'\n"
             "echo 'b __od_aux_a'\n");
  REQUIRE(chmod(solver, 0755) == 0);

  CliResult r = run({"translate", "-", "--form", "normal", "--solve",
                     "--solver", solver},
                    "a * b.\n");
  CHECK(r.code == 0);
  // Twin atoms are stripped from the reported models.
  CHECK(r.out.find("solver answer sets (2): {a} {b}\n") != std::string::npos);

  CliResult j = run({"translate", "-", "--form", "normal", "--solve",
                     "--solver", solver, "--format", "json"},
                    "a * b.\n");
  REQUIRE(j.code == 0);
  json doc = json::parse(j.out);
  CHECK(doc["models"] == json::array({json::array({"a"}), json::array({"b"})}));
  std::remove(solver);

  SUBCASE("--solve without a solver is a usage error") {
    CliResult missing = run({"translate", "-", "--form", "star", "--solve"}, "a.\n");
    CHECK(missing.code == 2);
    CHECK(missing.err.find("error:") == 0);
  }
}

TEST_CASE("check-se compares two theories for strong equivalence") {
  const char* first = "/tmp/lpodkit_cli_se_first.lpod";
  const char* second = "/tmp/lpodkit_cli_se_second.lpod";
  write_file(first, "f * g.\n");

  SUBCASE("the defining formula is strongly equivalent") {
    write_file(second, "f ; (~f & g).\n");
    CliResult r = run({"check-se", first, second});
    CHECK(r.code == 0);
    CHECK(r.out == "equivalent: yes\n");
  }
  SUBCASE("plain disjunction is not, and the witness is shown") {
    write_file(second, "f ; g.\n");
    CliResult r = run({"check-se", first, second});
    CHECK(r.code == 1);
    CHECK(r.out ==
          "equivalent: no\n"
          "counterexample: here={g} there={f,g}\n"
          "fails: f * g. (program 1)\n");

    CliResult j = run({"check-se", first, second, "--format", "json"});
    CHECK(j.code == 1);
    json doc = json::parse(j.out);
    CHECK(doc["command"] == "check-se");
    CHECK(doc["equivalent"] == false);
    CHECK(doc["counterexample"]["here"] == json::array({"g"}));
    CHECK(doc["counterexample"]["there"] == json::array({"f", "g"}));
    CHECK(doc["counterexample"]["statement"] == "f * g.");
    CHECK(doc["counterexample"]["program"] == 1);
  }
  SUBCASE("both positionals are required") {
    CHECK(run({"check-se", first}).code == 2);
  }
  SUBCASE("missing inputs are usage errors") {
    CHECK(run({"check-se", first, "/tmp/lpodkit_cli_se_missing.lpod"}).code == 2);
  }
  std::remove(first);
  std::remove(second);
}

TEST_CASE("dlpod reports both semantics and their differences") {
  SUBCASE("flat input, diverging semantics") {
    CliResult r = run({"dlpod", "-"}, "a ; b * c.\nc.\n");
    CHECK(r.code == 0);
    CHECK(r.out ==
          "input in odnf: yes\n"
          "dlpod answer sets (3): {c} {a,c} {b,c}\n"
          "equilibrium models (2): {c} {b,c}\n"
          "dlpod only (1): {a,c}\n"
          "equilibrium within dlpod: yes\n");
  }
  SUBCASE("nested input reports the rewrite's own reading") {
    CliResult r = run({"dlpod", "-"}, "a * (b ; c).\nc.\n");
    CHECK(r.code == 0);
    CHECK(r.out ==
          "input in odnf: no\n"
          "dlpod answer sets (3): {c} {a,c} {b,c}\n"
          "equilibrium models (2): {c} {a,c}\n"
          "dlpod only (1): {b,c}\n"
          "odnf equilibrium models (2): {c} {a,c}\n"
          "odnf rewrite changed ht meaning: no\n"
          "equilibrium within dlpod: yes\n");
  }
  SUBCASE("a rewrite that shifts the ht meaning is flagged") {
    CliResult r = run({"dlpod", "-"}, "(f ; g) * h.\nh.\n");
    CHECK(r.code == 0);
    CHECK(r.out.find("odnf rewrite changed ht meaning: yes\n") != std::string::npos);
    CHECK(r.out.find("no divergence\n") != std::string::npos);
  }
  SUBCASE("a linear program does not diverge") {
    CliResult r = run({"dlpod", "-"}, kTwoRules);
    CHECK(r.code == 0);
    CHECK(r.out.find("no divergence\n") != std::string::npos);
    CHECK(r.out.find("equilibrium within dlpod: yes\n") != std::string::npos);
  }
  SUBCASE("json mirrors the full report") {
    CliResult r = run({"dlpod", "-", "--format", "json"}, "a ; b * c.\nc.\n");
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["command"] == "dlpod");
    CHECK(doc["input_is_odnf"] == true);
    CHECK(doc["dlpod"].size() == 3);
    CHECK(doc["dlpod_only"] == json::array({json::array({"a", "c"})}));
    CHECK(doc["equilibrium_only"] == json::array());
    CHECK(doc["odnf_rewrite_changed_ht"] == false);
    CHECK(doc["inclusion_holds"] == true);
  }
}

TEST_CASE("properties runs the catalog and seeded random rounds") {
  CliResult r = run({"properties"});
  CHECK(r.code == 0);
  CHECK(r.out.find("pass  ordered-self\n") != std::string::npos);
  CHECK(r.out.find("result: pass\n") != std::string::npos);
  CHECK(r.out.find("random rounds:") == std::string::npos);

  CliResult seeded = run({"properties", "--random", "20", "--seed", "7"});
  CHECK(seeded.code == 0);
  CHECK(seeded.out.find("random rounds: 20/20 passed (seed 7)\n") != std::string::npos);
  CHECK(seeded.out.find("result: pass\n") != std::string::npos);

  CliResult faulty = run({"properties", "--inject-fault"});
  CHECK(faulty.code == 1);
  CHECK(faulty.out.find("FAIL  injected-fault") != std::string::npos);
  CHECK(faulty.out.find("result: FAIL\n") != std::string::npos);

  CliResult j = run({"properties", "--random", "5", "--seed", "3", "--format", "json"});
  REQUIRE(j.code == 0);
  json doc = json::parse(j.out);
  CHECK(doc["command"] == "properties");
  CHECK(doc["pass"] == true);
  CHECK(doc["random"]["count"] == 5);
  CHECK(doc["random"]["seed"] == 3);
  CHECK(doc["random"]["failures"] == 0);
  for (const json& law : doc["laws"]) CHECK(law["pass"] == true);
}

TEST_CASE("identical invocations produce byte-identical output") {
  for (std::vector<std::string> args :
       {std::vector<std::string>{"answer-sets", "-", "--format", "json"},
        std::vector<std::string>{"preferred", "-", "--criterion", "p", "--format",
                                 "json"},
        std::vector<std::string>{"properties", "--random", "10", "--seed", "42"}}) {
    CliResult a = run(args, kTwoRules);
    CliResult b = run(args, kTwoRules);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("usage, cap, and parse failures use distinct exit codes") {
  CHECK(run({}).code == 2);                       // no subcommand
  CHECK(run({"frobnicate"}).code == 2);           // unknown subcommand
  CHECK(run({"answer-sets", "-"}, "a :-").code == 2);  // parse error
  CHECK(run({"answer-sets", "-"}, "a ; b.\n").code == 2);  // not an lpod rule

  std::string wide;
  for (char c = 'a'; c < 'a' + 19; ++c) wide += std::string("x") + c + ".\n";
  CliResult cap = run({"answer-sets", "-"}, wide);
  CHECK(cap.code == 3);
  CHECK(cap.err.find("error:") == 0);
  CHECK(run({"answer-sets", "-", "--max-atoms", "2"}, "a.\nb.\nc.\n").code == 3);
  CHECK(run({"answer-sets", "-", "--max-atoms", "3"}, "a.\nb.\nc.\n").code == 0);

  CliResult help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("answer-sets") != std::string::npos);
}
