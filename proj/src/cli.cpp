#include "lpod/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "lpod/dlpod.hpp"
#include "lpod/errors.hpp"
#include "lpod/formula.hpp"
#include "lpod/gen.hpp"
#include "lpod/ht.hpp"
#include "lpod/lpod.hpp"
#include "lpod/parse.hpp"
#include "lpod/print.hpp"
#include "lpod/rule.hpp"
#include "lpod/translate.hpp"

namespace lpod {

namespace {

using ordered_json = nlohmann::ordered_json;

struct RunConfig {
  std::string command;
  std::string file = "-";
  std::string second_file;
  std::string criterion;
  std::string form;
  std::string dialect;
  std::string format = "text";
  std::string solver;
  bool solve = false;
  bool inject_fault = false;
  std::size_t max_atoms = 18;
  std::size_t random_count = 0;
  std::uint64_t seed = 0;
};

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream text;
  if (path == "-") {
    text << in.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw UnsupportedConstruct("cannot open input file '" + path + "'");
    text << file.rdbuf();
  }
  return text.str();
}

std::string model_text(const Model& m) {
  std::string out = "{";
  for (auto it = m.begin(); it != m.end(); ++it) {
    if (it != m.begin()) out += ",";
    out += *it;
  }
  out += "}";
  return out;
}

std::string model_list_text(const std::vector<Model>& models) {
  std::string out;
  for (const auto& m : models) {
    if (!out.empty()) out += " ";
    out += model_text(m);
  }
  return out;
}

ordered_json model_json(const Model& m) {
  ordered_json atoms = ordered_json::array();
  for (const auto& a : m) atoms.push_back(a);
  return atoms;
}

ordered_json model_list_json(const std::vector<Model>& models) {
  ordered_json out = ordered_json::array();
  for (const auto& m : models) out.push_back(model_json(m));
  return out;
}

std::string degrees_text(const DegreeProfile& prof) {
  std::string out;
  for (const auto& [rule, deg] : prof.degrees) {
    if (!out.empty()) out += " ";
    out += std::to_string(rule) + ":" + std::to_string(deg);
  }
  return out;
}

ordered_json degrees_json(const DegreeProfile& prof) {
  ordered_json out = ordered_json::object();
  for (const auto& [rule, deg] : prof.degrees) out[std::to_string(rule)] = deg;
  return out;
}

ordered_json signature_json(const std::vector<std::string>& signature) {
  ordered_json out = ordered_json::array();
  for (const auto& a : signature) out.push_back(a);
  return out;
}

PreferenceCriterion criterion_from(const std::string& c) {
  if (c == "c") return PreferenceCriterion::Cardinality;
  if (c == "i") return PreferenceCriterion::Inclusion;
  return PreferenceCriterion::Pareto;
}

std::string criterion_name(const std::string& c) {
  if (c == "c") return "cardinality";
  if (c == "i") return "inclusion";
  return "pareto";
}

// Shared by answer-sets and preferred: the three procedures plus agreement.
struct Procedures {
  std::vector<Model> split, reduct, equilibrium;
  bool agreement = false;
};

Procedures run_procedures(const std::vector<LpodRule>& rules, const EnumOptions& opts) {
  Procedures p;
  p.split = answer_sets_split(rules, opts);
  p.reduct = answer_sets_reduct(rules, opts);
  p.equilibrium = answer_sets_equilibrium(rules, opts);
  p.agreement = p.split == p.reduct && p.reduct == p.equilibrium;
  return p;
}

int cmd_answer_sets(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  Program program = parse_theory(read_input(cfg.file, in));
  std::vector<LpodRule> rules = extract_lpod_rules(program);
  EnumOptions opts{cfg.max_atoms};
  check_signature_cap(program.signature.size(), opts);
  Procedures proc = run_procedures(rules, opts);

  if (cfg.format == "json") {
    ordered_json doc;
    doc["command"] = "answer-sets";
    doc["signature"] = signature_json(program.signature);
    ordered_json results = ordered_json::array();
    for (const auto& m : proc.split) {
      ordered_json entry;
      entry["atoms"] = model_json(m);
      entry["degrees"] = degrees_json(degree_profile(m, rules));
      results.push_back(std::move(entry));
    }
    doc["results"] = std::move(results);
    doc["agreement"] = proc.agreement;
    out << doc.dump(2) << "\n";
  } else {
    out << "signature:";
    for (const auto& a : program.signature) out << " " << a;
    out << "\n";
    out << "agreement: " << (proc.agreement ? "yes" : "no") << "\n";
    out << "answer sets (" << proc.split.size() << "):\n";
    for (const auto& m : proc.split) {
      out << "  " << model_text(m);
      std::string deg = degrees_text(degree_profile(m, rules));
      if (!deg.empty()) out << "  degrees " << deg;
      out << "\n";
    }
    if (!proc.agreement) {
      out << "split: " << model_list_text(proc.split) << "\n";
      out << "reduct: " << model_list_text(proc.reduct) << "\n";
      out << "equilibrium: " << model_list_text(proc.equilibrium) << "\n";
    }
  }
  return proc.agreement ? 0 : 4;
}

int cmd_preferred(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  Program program = parse_theory(read_input(cfg.file, in));
  std::vector<LpodRule> rules = extract_lpod_rules(program);
  EnumOptions opts{cfg.max_atoms};
  check_signature_cap(program.signature.size(), opts);
  Procedures proc = run_procedures(rules, opts);
  PreferenceCriterion criterion = criterion_from(cfg.criterion);
  std::vector<Model> preferred = preferred_answer_sets(rules, criterion, opts);
  auto is_preferred = [&](const Model& m) {
    return std::find(preferred.begin(), preferred.end(), m) != preferred.end();
  };

  if (cfg.format == "json") {
    ordered_json doc;
    doc["command"] = "preferred";
    doc["signature"] = signature_json(program.signature);
    ordered_json results = ordered_json::array();
    for (const auto& m : proc.split) {
      ordered_json entry;
      entry["atoms"] = model_json(m);
      entry["degrees"] = degrees_json(degree_profile(m, rules));
      entry["preferred"] = is_preferred(m);
      results.push_back(std::move(entry));
    }
    doc["results"] = std::move(results);
    doc["agreement"] = proc.agreement;
    out << doc.dump(2) << "\n";
  } else {
    out << "signature:";
    for (const auto& a : program.signature) out << " " << a;
    out << "\n";
    out << "criterion: " << criterion_name(cfg.criterion) << "\n";
    out << "agreement: " << (proc.agreement ? "yes" : "no") << "\n";
    out << "answer sets (" << proc.split.size() << "):\n";
    for (const auto& m : proc.split) {
      out << "  " << model_text(m);
      std::string deg = degrees_text(degree_profile(m, rules));
      if (!deg.empty()) out << "  degrees " << deg;
      if (is_preferred(m)) out << "  preferred";
      out << "\n";
    }
    out << "preferred (" << preferred.size() << "): " << model_list_text(preferred)
        << "\n";
  }
  return proc.agreement ? 0 : 4;
}

int cmd_translate(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  Program program = parse_theory(read_input(cfg.file, in));
  std::vector<LpodRule> rules = extract_lpod_rules(program);

  bool rule_form =
      cfg.form == "star" || cfg.form == "star-refined" || cfg.form == "normal";
  if (!cfg.dialect.empty() && !rule_form)
    throw UnsupportedConstruct("--dialect " + cfg.dialect +
                               " requires --form star, star-refined, or normal");

  std::vector<std::string> lines;
  std::vector<std::string> aux_atoms;
  if (rule_form) {
    std::vector<GroundRule> ground;
    if (cfg.form == "star") {
      ground = star_as_ground(star(rules));
    } else if (cfg.form == "star-refined") {
      ground = star_as_ground(refine(star(rules)));
    } else {
      NormalizedProgram normalized = eliminate_head_negation(refine(star(rules)));
      aux_atoms = normalized.aux_atoms;
      for (const auto& r : normalized.rules) ground.push_back(to_ground(r));
    }
    if (!cfg.dialect.empty()) {
      std::istringstream text(emit_solver_text(ground, cfg.dialect));
      std::string line;
      while (std::getline(text, line)) lines.push_back(line);
    } else {
      for (const auto& r : ground) lines.push_back(rule_text(r));
    }
  } else {
    for (const auto& r : rules) {
      FormulaSeq body;
      for (const auto& a : r.body_pos) body.push_back(atom(a));
      for (const auto& a : r.body_neg) body.push_back(neg(atom(a)));
      FormulaPtr head;
      if (r.head.empty()) {
        head = bottom();
      } else if (cfg.form == "expand") {
        head = expand_x(atom_seq(r.head));
      } else {
        head = third_form(atom_seq(r.head));
      }
      FormulaPtr statement = body.empty() ? head : implies(fold_conj(body), head);
      lines.push_back(statement_text(statement));
    }
  }

  std::vector<Model> solver_models;
  if (cfg.solve) {
    if (cfg.solver.empty())
      throw UnsupportedConstruct(
          "--solve needs a solver (--solver or LPODKIT_SOLVER)");
    std::string text;
    for (const auto& line : lines) text += line + "\n";
    solver_models = strip_atoms(run_external_solver(cfg.solver, text), aux_atoms);
  }

  if (cfg.format == "json") {
    ordered_json doc;
    doc["command"] = "translate";
    doc["form"] = cfg.form;
    ordered_json rule_lines = ordered_json::array();
    for (const auto& line : lines) rule_lines.push_back(line);
    doc["rules"] = std::move(rule_lines);
    if (cfg.solve) doc["models"] = model_list_json(solver_models);
    out << doc.dump(2) << "\n";
  } else {
    for (const auto& line : lines) out << line << "\n";
    if (cfg.solve) {
      out << "solver answer sets (" << solver_models.size()
          << "): " << model_list_text(solver_models) << "\n";
    }
  }
  return 0;
}

int cmd_check_se(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  Program first = parse_theory(read_input(cfg.file, in));
  Program second = parse_theory(read_input(cfg.second_file, in));
  EnumOptions opts{cfg.max_atoms};
  SeVerdict verdict = strongly_equivalent(first, second, opts);

  if (cfg.format == "json") {
    ordered_json doc;
    doc["command"] = "check-se";
    doc["equivalent"] = verdict.equivalent;
    if (verdict.counterexample) {
      const SeCounterexample& ce = *verdict.counterexample;
      ordered_json witness;
      witness["here"] = model_json(ce.interp.here());
      witness["there"] = model_json(ce.interp.there());
      witness["statement"] = statement_text(ce.statement);
      witness["program"] = ce.failing_program;
      doc["counterexample"] = std::move(witness);
    }
    out << doc.dump(2) << "\n";
  } else {
    out << "equivalent: " << (verdict.equivalent ? "yes" : "no") << "\n";
    if (verdict.counterexample) {
      const SeCounterexample& ce = *verdict.counterexample;
      out << "counterexample: here=" << model_text(ce.interp.here())
          << " there=" << model_text(ce.interp.there()) << "\n";
      out << "fails: " << statement_text(ce.statement) << " (program "
          << ce.failing_program << ")\n";
    }
  }
  return verdict.equivalent ? 0 : 1;
}

int cmd_dlpod(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  Program program = parse_theory(read_input(cfg.file, in));
  std::vector<DlpodRule> rules = extract_dlpod_rules(program);
  EnumOptions opts{cfg.max_atoms};
  check_signature_cap(program.signature.size(), opts);
  DivergenceReport rep = divergence_report(rules, opts);
  bool divergent = !rep.dlpod_only.empty() || !rep.equilibrium_only.empty();

  if (cfg.format == "json") {
    ordered_json doc;
    doc["command"] = "dlpod";
    doc["signature"] = signature_json(program.signature);
    doc["input_is_odnf"] = rep.input_is_odnf;
    doc["dlpod"] = model_list_json(rep.dlpod_sets);
    doc["equilibrium"] = model_list_json(rep.equilibrium_sets);
    doc["dlpod_only"] = model_list_json(rep.dlpod_only);
    doc["equilibrium_only"] = model_list_json(rep.equilibrium_only);
    doc["odnf_equilibrium"] = model_list_json(rep.odnf_equilibrium_sets);
    doc["odnf_rewrite_changed_ht"] = rep.odnf_rewrite_changed_ht;
    doc["inclusion_holds"] = rep.inclusion_holds;
    out << doc.dump(2) << "\n";
  } else {
    out << "input in odnf: " << (rep.input_is_odnf ? "yes" : "no") << "\n";
    out << "dlpod answer sets (" << rep.dlpod_sets.size()
        << "): " << model_list_text(rep.dlpod_sets) << "\n";
    out << "equilibrium models (" << rep.equilibrium_sets.size()
        << "): " << model_list_text(rep.equilibrium_sets) << "\n";
    if (divergent) {
      if (!rep.dlpod_only.empty())
        out << "dlpod only (" << rep.dlpod_only.size()
            << "): " << model_list_text(rep.dlpod_only) << "\n";
      if (!rep.equilibrium_only.empty())
        out << "equilibrium only (" << rep.equilibrium_only.size()
            << "): " << model_list_text(rep.equilibrium_only) << "\n";
    } else {
      out << "no divergence\n";
    }
    if (!rep.input_is_odnf) {
      out << "odnf equilibrium models (" << rep.odnf_equilibrium_sets.size()
          << "): " << model_list_text(rep.odnf_equilibrium_sets) << "\n";
      out << "odnf rewrite changed ht meaning: "
          << (rep.odnf_rewrite_changed_ht ? "yes" : "no") << "\n";
    }
    out << "equilibrium within dlpod: " << (rep.inclusion_holds ? "yes" : "no")
        << "\n";
  }
  return 0;
}

// One randomized round: a program for the three-procedures/translation
// theorems, a sequence for the representation theorems, and a flat-headed
// disjunctive program for the inclusion property.
bool random_round(Rng& rng, const EnumOptions& opts, std::string& why) {
  std::vector<std::string> atoms = atom_pool(4);

  std::vector<LpodRule> lp = random_lpod(rng, 4, 4, 3);
  std::vector<Model> split = answer_sets_split(lp, opts);
  if (split != answer_sets_reduct(lp, opts)) {
    why = "split/reduct mismatch on " + program_text(rules_program(lp));
    return false;
  }
  if (split != answer_sets_equilibrium(lp, opts)) {
    why = "split/equilibrium mismatch on " + program_text(rules_program(lp));
    return false;
  }
  std::vector<std::string> signature = rule_atoms(lp);
  Program star_program = star_as_program(star(lp));
  star_program = make_program(star_program.statements, signature);
  if (split != equilibrium_models(star_program, opts)) {
    why = "choice translation mismatch on " + program_text(rules_program(lp));
    return false;
  }

  FormulaSeq seq = random_seq(rng, atoms, 4);
  FormulaPtr folded = fold_ordered(seq);
  for (const FormulaPtr& other : {expand_x(seq), conj_form(seq), third_form(seq)}) {
    SeVerdict verdict = strongly_equivalent(make_program({folded}),
                                            make_program({other}), opts);
    if (!verdict.equivalent) {
      why = "representation not strongly equivalent to " + to_text(folded);
      return false;
    }
  }

  std::vector<DlpodRule> dl = random_odnf_dlpod(rng, 3, 4);
  std::vector<Model> dlpod_sets = dlpod_answer_sets(dl, opts);
  for (const auto& m : equilibrium_models(rules_program(dl), opts)) {
    if (std::find(dlpod_sets.begin(), dlpod_sets.end(), m) == dlpod_sets.end()) {
      why = "equilibrium model " + model_text(m) + " missing from dlpod sets of " +
            program_text(rules_program(dl));
      return false;
    }
  }
  return true;
}

int cmd_properties(const RunConfig& cfg, std::ostream& out) {
  EnumOptions opts{cfg.max_atoms};
  std::vector<LawResult> catalog = property_catalog(opts, cfg.inject_fault);
  std::size_t passed = 0;
  for (const auto& law : catalog)
    if (law.pass) ++passed;

  std::size_t random_failures = 0;
  std::vector<std::string> failure_notes;
  Rng rng(cfg.seed);
  for (std::size_t i = 0; i < cfg.random_count; ++i) {
    std::string why;
    if (!random_round(rng, opts, why)) {
      ++random_failures;
      failure_notes.push_back("round " + std::to_string(i) + ": " + why);
    }
  }
  bool ok = passed == catalog.size() && random_failures == 0;

  if (cfg.format == "json") {
    ordered_json doc;
    doc["command"] = "properties";
    ordered_json laws = ordered_json::array();
    for (const auto& law : catalog) {
      ordered_json entry;
      entry["name"] = law.name;
      entry["pass"] = law.pass;
      if (!law.pass) entry["detail"] = law.detail;
      laws.push_back(std::move(entry));
    }
    doc["laws"] = std::move(laws);
    ordered_json random;
    random["count"] = cfg.random_count;
    random["seed"] = cfg.seed;
    random["failures"] = random_failures;
    doc["random"] = std::move(random);
    doc["pass"] = ok;
    out << doc.dump(2) << "\n";
  } else {
    for (const auto& law : catalog) {
      out << (law.pass ? "pass" : "FAIL") << "  " << law.name;
      if (!law.pass) out << "  (" << law.detail << ")";
      out << "\n";
    }
    out << "catalog: " << passed << "/" << catalog.size() << " passed\n";
    if (cfg.random_count > 0) {
      out << "random rounds: " << (cfg.random_count - random_failures) << "/"
          << cfg.random_count << " passed (seed " << cfg.seed << ")\n";
      for (const auto& note : failure_notes) out << "  " << note << "\n";
    }
    out << "result: " << (ok ? "pass" : "FAIL") << "\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"ordered-disjunction logic program toolkit"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--max-atoms", cfg.max_atoms, "enumeration cap on signature size")
        ->check(CLI::PositiveNumber)
        ->envname("LPODKIT_MAX_ATOMS");
  };

  CLI::App* answer_sets = app.add_subcommand(
      "answer-sets", "answer sets by split programs, reduct, and equilibrium models");
  answer_sets->add_option("file", cfg.file, "input program or - for stdin");
  add_common(answer_sets);

  CLI::App* preferred =
      app.add_subcommand("preferred", "answer sets ranked by satisfaction degrees");
  preferred->add_option("file", cfg.file, "input program or - for stdin");
  preferred->add_option("--criterion", cfg.criterion, "c|i|p")
      ->required()
      ->check(CLI::IsMember({"c", "i", "p"}));
  add_common(preferred);

  CLI::App* translate =
      app.add_subcommand("translate", "source-to-source program translations");
  translate->add_option("file", cfg.file, "input program or - for stdin");
  translate->add_option("--form", cfg.form, "target representation")
      ->required()
      ->check(CLI::IsMember({"star", "star-refined", "normal", "expand", "third"}));
  translate->add_option("--dialect", cfg.dialect, "solver text dialect")
      ->check(CLI::IsMember({"core2"}));
  translate->add_flag("--solve", cfg.solve, "run the emitted program through a solver");
  translate->add_option("--solver", cfg.solver, "solver executable")
      ->envname("LPODKIT_SOLVER");
  add_common(translate);

  CLI::App* check_se =
      app.add_subcommand("check-se", "strong-equivalence check of two theories");
  check_se->add_option("first", cfg.file, "first theory")->required();
  check_se->add_option("second", cfg.second_file, "second theory")->required();
  add_common(check_se);

  CLI::App* dlpod = app.add_subcommand(
      "dlpod", "disjunctive ordered-disjunction semantics and divergences");
  dlpod->add_option("file", cfg.file, "input program or - for stdin");
  add_common(dlpod);

  CLI::App* properties =
      app.add_subcommand("properties", "algebraic law catalog and randomized checks");
  properties->add_option("--random", cfg.random_count, "number of randomized rounds");
  properties->add_option("--seed", cfg.seed, "seed for randomized rounds");
  properties->add_flag("--inject-fault", cfg.inject_fault)->group("");
  add_common(properties);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (answer_sets->parsed()) return cmd_answer_sets(cfg, in, out);
    if (preferred->parsed()) return cmd_preferred(cfg, in, out);
    if (translate->parsed()) return cmd_translate(cfg, in, out);
    if (check_se->parsed()) return cmd_check_se(cfg, in, out);
    if (dlpod->parsed()) return cmd_dlpod(cfg, in, out);
    return cmd_properties(cfg, out);
  } catch (const SignatureTooLarge& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const SyntaxError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedConstruct& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace lpod
