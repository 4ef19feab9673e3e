#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "gel/calculus.hpp"
#include "gel/ge_model.hpp"
#include "gel/kripke.hpp"
#include "gel/search.hpp"

namespace gel::acceptance {

// A formula pool flattened into evaluation order (children first), for the
// array-driven sweeps of the bridge and invariance criteria.
struct CompiledPool {
  struct Op {
    Conn kind;
    int lhs = -1, rhs = -1;  // indices into ops
    int atom = -1;           // Atom only
  };
  std::vector<FormulaPtr> nodes;
  std::vector<Op> ops;
  std::vector<std::string> atoms;

  static CompiledPool build(const std::vector<std::string>& atoms, int depth, bool modal);
};

// Semantic footprint of a formula in a model: its truth value paired with
// its content. Axiom soundness over a model class reduces to evaluating
// each schema on every tuple of footprints, with the unconstrained gru
// explored cell by cell.
struct PairSweepResult {
  uint64_t tuples_checked = 0;
  bool sound = true;
  std::string violation;  // first failure, for the report
};

PairSweepResult sweep_schema(Variant v, const Schema& schema, const TruthAlgebra& truth,
                             const ContentAlgebra& content_join_only);

// Agreement harness: the pair evaluator against the library eval on fully
// materialized models. Returns a description of the first disagreement.
std::string cross_validate_pair_evaluator(Variant v, int max_worlds, int max_topics);

// Truth algebras of a variant at the stated bounds (complex algebras of
// iso-deduped frames, powersets for demodalized variants, identity box for
// the collapsed variant).
std::vector<TruthAlgebra> truth_algebras_for(Variant v, int max_worlds);

std::string fixtures_dir();

}  // namespace gel::acceptance
