#include "gel/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "gel/calculus.hpp"
#include "gel/io.hpp"
#include "gel/kripke.hpp"
#include "gel/search.hpp"

namespace gel {

namespace {

using io::json;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io::IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct CommonOpts {
  std::string format = "text";
  bool json() const { return format == "json"; }
};

void add_format(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
}

struct BoundOpts {
  SearchBounds bounds;
  std::string shard;
};

void add_bounds(CLI::App* cmd, BoundOpts& b) {
  cmd->add_option("--max-worlds", b.bounds.max_worlds, "frame size bound")
      ->check(CLI::Range(1, kMaxWorlds))
      ->capture_default_str();
  cmd->add_option("--max-topics", b.bounds.max_topics,
                  "content size bound (agnostic variants are capped at 3)")
      ->check(CLI::Range(1, kMaxTopics))
      ->capture_default_str();
  cmd->add_flag_callback("--no-dedup", [&b] { b.bounds.dedup_iso = false; },
                         "keep isomorphic copies in the enumeration");
  cmd->add_option("--shard", b.shard, "take only slice i of k, as i/k");
  cmd->add_option("--jobs", b.bounds.jobs, "parallel workers")->check(CLI::Range(1, 64));
}

void finish_bounds(BoundOpts& b) {
  if (b.shard.empty()) return;
  auto sep = b.shard.find('/');
  if (sep == std::string::npos) throw CLI::ValidationError("--shard", "expected i/k");
  b.bounds.shard = {{std::stoull(b.shard.substr(0, sep)), std::stoull(b.shard.substr(sep + 1))}};
}

json countermodel_json(const Countermodel& cm) {
  json j = io::to_json(cm.model);
  if (cm.witness_x) j["witness_x"] = *cm.witness_x;
  return j;
}

// Premises not given explicitly are collected from the proof's own premise
// lines, in citation order.
std::vector<FormulaPtr> collect_premises(const Proof& proof) {
  std::vector<FormulaPtr> out;
  for (const ProofLine& line : proof.lines) {
    if (line.just.kind != Justification::Kind::Premise) continue;
    int k = line.just.i;
    if (k == static_cast<int>(out.size()) + 1) out.push_back(line.formula);
  }
  return out;
}

int run(int argc, const char* const* argv) {
  CLI::App app{"finite-model and proof tooling for analytic-implication and dependence logics"};
  app.require_subcommand(1);

  // parse
  auto* parse_cmd = app.add_subcommand("parse", "parse a formula and print its canonical form");
  std::string parse_text;
  bool parse_demodal = false;
  CommonOpts parse_opts;
  parse_cmd->add_option("formula", parse_text, "formula text")->required();
  parse_cmd->add_flag("--demodalized", parse_demodal, "reject the box operator");
  add_format(parse_cmd, parse_opts);

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "evaluate a formula in a model file");
  std::string eval_model, eval_text;
  CommonOpts eval_opts;
  eval_cmd->add_option("--model", eval_model, "model file")->required();
  eval_cmd->add_option("--formula", eval_text, "formula text")->required();
  add_format(eval_cmd, eval_opts);

  // check / countermodel
  std::string check_logic, check_goal;
  std::vector<std::string> check_premises;
  BoundOpts check_bounds;
  CommonOpts check_opts;
  auto add_query = [&](CLI::App* cmd) {
    cmd->add_option("--logic", check_logic, "logic variant")->required();
    cmd->add_option("--goal", check_goal, "conclusion")->required();
    cmd->add_option("--premise", check_premises, "premise (repeatable)");
    add_bounds(cmd, check_bounds);
    add_format(cmd, check_opts);
  };
  auto* check_cmd = app.add_subcommand(
      "check", "search the bounded model class for a counterexample to an entailment");
  add_query(check_cmd);
  auto* counter_cmd = app.add_subcommand(
      "countermodel", "like check, but print only the countermodel in model-file form");
  add_query(counter_cmd);

  // prove
  auto* prove_cmd = app.add_subcommand("prove", "check a proof file against a calculus");
  std::string prove_calc, prove_file, prove_goal;
  std::vector<std::string> prove_premises;
  CommonOpts prove_opts;
  prove_cmd->add_option("--calculus", prove_calc, "calculus name")->required();
  prove_cmd->add_option("--file", prove_file, "proof file (JSON lines)")->required();
  prove_cmd->add_option("--goal", prove_goal, "expected final line");
  prove_cmd->add_option("--premise", prove_premises, "premise (repeatable)");
  add_format(prove_cmd, prove_opts);

  // bridge
  auto* bridge_cmd =
      app.add_subcommand("bridge", "turn a rooted topic Kripke model into an algebra model");
  std::string bridge_file, bridge_root = "w0";
  CommonOpts bridge_opts;
  bridge_cmd->add_option("--file", bridge_file, "Kripke model file")->required();
  bridge_cmd->add_option("--root", bridge_root, "root world name")->capture_default_str();
  add_format(bridge_cmd, bridge_opts);

  // corpus
  auto* corpus_cmd = app.add_subcommand("corpus", "run the bundled derivations");
  CommonOpts corpus_opts;
  add_format(corpus_cmd, corpus_opts);

  // axioms
  auto* axioms_cmd = app.add_subcommand("axioms", "list a calculus");
  std::string axioms_calc;
  CommonOpts axioms_opts;
  axioms_cmd->add_option("--calculus", axioms_calc, "calculus name")->required();
  add_format(axioms_cmd, axioms_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (*parse_cmd) {
    FormulaPtr f =
        parse(parse_text, parse_demodal ? LanguageMode::Demodalized : LanguageMode::Modal);
    auto vars = variables(*f);
    if (parse_opts.json()) {
      json out{{"schema_version", io::kSchemaVersion},
               {"canonical", print(f)},
               {"variables", vars}};
      std::cout << out.dump() << "\n";
    } else {
      std::cout << print(f) << "\n";
    }
    return 0;
  }

  if (*eval_cmd) {
    GEModel m = io::ge_model_from_json(json::parse(slurp(eval_model)));
    FormulaPtr f = parse(eval_text, traits_of(m.variant).language);
    Elem v = eval(m, *f);
    Elem c = content_of(m, *f);
    if (eval_opts.json()) {
      json out{{"schema_version", io::kSchemaVersion},
               {"formula", print(f)},
               {"value", v},
               {"is_one", v == m.truth->one},
               {"content", c}};
      std::cout << out.dump() << "\n";
    } else {
      std::cout << "value " << v << (v == m.truth->one ? " (designated)" : "") << ", content "
                << c << "\n";
    }
    return 0;
  }

  if (*check_cmd || *counter_cmd) {
    bool bare_model = static_cast<bool>(*counter_cmd);
    auto variant = variant_from_name(check_logic);
    if (!variant) {
      std::cerr << "unknown logic " << check_logic << "\n";
      return 2;
    }
    finish_bounds(check_bounds);
    LanguageMode mode = traits_of(*variant).language;
    FormulaPtr goal = parse(check_goal, mode);
    std::vector<FormulaPtr> premises;
    for (const std::string& p : check_premises) premises.push_back(parse(p, mode));
    auto cm = check_validity(*variant, premises, goal, check_bounds.bounds);
    if (!cm) {
      if (check_opts.json()) {
        json out{{"schema_version", io::kSchemaVersion},
                 {"result", "valid-up-to-bounds"},
                 {"logic", check_logic}};
        std::cout << out.dump() << "\n";
      } else {
        std::cout << "valid-up-to-bounds\n";
      }
      return 0;
    }
    if (bare_model) {
      std::cout << countermodel_json(*cm).dump(2) << "\n";
    } else if (check_opts.json()) {
      json out{{"schema_version", io::kSchemaVersion},
               {"result", "countermodel"},
               {"logic", check_logic},
               {"index", cm->index},
               {"model", countermodel_json(*cm)}};
      if (cm->witness_x) out["witness_x"] = *cm->witness_x;
      std::cout << out.dump() << "\n";
    } else {
      std::cout << "countermodel at index " << cm->index << "\n"
                << countermodel_json(*cm).dump(2) << "\n";
    }
    return 1;
  }

  if (*prove_cmd) {
    const Calculus* calc = calculus_by_name(prove_calc);
    if (!calc) {
      std::cerr << "unknown calculus " << prove_calc << "\n";
      return 2;
    }
    Proof proof = io::proof_from_text(slurp(prove_file), calc->language);
    std::vector<FormulaPtr> premises;
    for (const std::string& p : prove_premises) premises.push_back(parse(p, calc->language));
    if (premises.empty()) premises = collect_premises(proof);
    FormulaPtr goal;
    if (!prove_goal.empty()) goal = parse(prove_goal, calc->language);
    auto rejection = check_proof(*calc, premises, proof, goal ? &goal : nullptr);
    if (!rejection) {
      if (prove_opts.json()) {
        json out{{"schema_version", io::kSchemaVersion},
                 {"result", "ok"},
                 {"lines", proof.lines.size()}};
        std::cout << out.dump() << "\n";
      } else {
        std::cout << "ok (" << proof.lines.size() << " lines)\n";
      }
      return 0;
    }
    if (prove_opts.json()) {
      json out{{"schema_version", io::kSchemaVersion},
               {"result", "rejected"},
               {"line", rejection->line},
               {"reason", rejection->reason},
               {"detail", rejection->detail}};
      std::cout << out.dump() << "\n";
    } else {
      std::cout << "rejected at line " << rejection->line << ": " << rejection->reason << " ("
                << rejection->detail << ")\n";
    }
    return 1;
  }

  if (*bridge_cmd) {
    TopicKripkeModel m = io::kripke_model_from_json(json::parse(slurp(bridge_file)));
    auto root = world_index(m, bridge_root);
    if (!root) {
      std::cerr << "unknown world " << bridge_root << "\n";
      return 2;
    }
    BridgedModel bridged = to_ge_model(m, *root);
    json out{{"schema_version", io::kSchemaVersion},
             {"root_index", bridged.root_index},
             {"model", io::to_json(bridged.model)}};
    if (bridge_opts.json()) {
      std::cout << out.dump() << "\n";
    } else {
      std::cout << out.dump(2) << "\n";
    }
    return 0;
  }

  if (*corpus_cmd) {
    bool all_ok = true;
    json items = json::array();
    for (const CorpusItem& item : derivation_corpus()) {
      const Calculus* calc = calculus_by_name(item.calculus);
      auto rejection = check_proof(*calc, item.premises, item.proof, &item.goal);
      bool ok = !rejection.has_value();
      all_ok = all_ok && ok;
      if (corpus_opts.json()) {
        items.push_back(json{{"name", item.name},
                             {"calculus", item.calculus},
                             {"lines", item.proof.lines.size()},
                             {"ok", ok}});
      } else {
        std::cout << (ok ? "ok      " : "FAILED  ") << item.name << " [" << item.calculus
                  << ", " << item.proof.lines.size() << " lines]\n";
      }
    }
    if (corpus_opts.json()) {
      json out{{"schema_version", io::kSchemaVersion}, {"items", items}, {"ok", all_ok}};
      std::cout << out.dump() << "\n";
    }
    return all_ok ? 0 : 1;
  }

  if (*axioms_cmd) {
    const Calculus* calc = calculus_by_name(axioms_calc);
    if (!calc) {
      std::cerr << "unknown calculus " << axioms_calc << "\n";
      return 2;
    }
    auto rule_name = [](Rule r) {
      return r == Rule::MP ? "MP" : r == Rule::Nec ? "Nec" : "Nec_g";
    };
    if (axioms_opts.json()) {
      json axioms = json::array();
      for (const Schema& s : axioms_of(*calc))
        axioms.push_back(json{{"name", s.name}, {"schema", print(s.pattern)}});
      json rules = json::array();
      for (Rule r : calc->rules) rules.push_back(rule_name(r));
      json out{{"schema_version", io::kSchemaVersion},
               {"calculus", calc->name},
               {"axioms", axioms},
               {"rules", rules}};
      std::cout << out.dump() << "\n";
    } else {
      for (const Schema& s : axioms_of(*calc))
        std::cout << s.name << ": " << print(s.pattern) << "\n";
      std::cout << "rules:";
      for (Rule r : calc->rules) std::cout << " " << rule_name(r);
      std::cout << "\n";
    }
    return 0;
  }

  return 2;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  try {
    return run(argc, argv);
  } catch (const ParseError& e) {
    std::cerr << "parse error at offset " << e.position << ": " << e.what() << "\n";
    return 2;
  } catch (const io::IoError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace gel
