#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gel/formula.hpp"
#include "gel/ge_model.hpp"

namespace gel {

enum class Rule { MP, Nec, NecG };

struct Schema {
  std::string name;
  FormulaPtr pattern;  // metavariables are uppercase atoms; prec pre-expanded
};

struct Calculus {
  std::string name;
  LanguageMode language = LanguageMode::Modal;
  std::vector<Schema> axioms;
  std::set<Rule> rules;
};

// The calculi of the covered logics, plus the two S4 bases ("S4", "S4g").
// Lookup by the same names the variants use; lPAI differs from PAI only in
// carrying local necessitation.
const Calculus& calculus_of(Variant v);
const Calculus* calculus_by_name(const std::string& name);
std::vector<std::string> calculus_names();

// The full schema list of a calculus, prec already expanded, names stable.
const std::vector<Schema>& axioms_of(const Calculus& c);
const Schema* find_schema(const Calculus& c, const std::string& name);

// One-sided matching: the binding making substitute(schema, b) == f, if any.
// Deterministic; metavariables bind greedily left to right.
std::optional<Binding> match(const FormulaPtr& schema, const FormulaPtr& f);

// ---------------------------------------------------------------------------
// Proofs

struct Justification {
  enum class Kind { Premise, Axiom, MP, Nec, NecG };
  Kind kind = Kind::Premise;
  int i = -1, j = -1;             // cited line numbers, 1-based
  std::string axiom;              // Axiom only
  std::optional<Binding> binding; // Axiom; inferred by match() when absent
};

struct ProofLine {
  FormulaPtr formula;
  Justification just;
};

struct Proof {
  std::vector<ProofLine> lines;
};

struct Rejection {
  int line = 0;  // 1-based
  std::string reason;  // bad-schema-match, bad-mp, nec-on-premise,
                       // rule-absent, forward-reference, bad-premise,
                       // goal-mismatch
  std::string detail;
};

// Checks every line's justification; premise dependence is computed, and
// local necessitation demands a premise-independent line. When a goal is
// given the final line must be it.
std::optional<Rejection> check_proof(const Calculus& calc,
                                     const std::vector<FormulaPtr>& premises,
                                     const Proof& proof,
                                     const FormulaPtr* goal = nullptr);

// ---------------------------------------------------------------------------
// Bundled machine-checked derivations.

struct CorpusItem {
  std::string name;
  std::string calculus;
  std::vector<FormulaPtr> premises;
  FormulaPtr goal;
  Proof proof;
};

std::vector<CorpusItem> derivation_corpus();

}  // namespace gel
