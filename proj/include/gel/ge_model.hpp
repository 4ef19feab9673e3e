#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "gel/content_algebra.hpp"
#include "gel/formula.hpp"
#include "gel/truth_algebra.hpp"

namespace gel {

// The logics covered by the model checker. Each tag fixes the language,
// the translation of arrows into content terms, the shape of the arrow
// clause, the content condition gating it, and the consequence relation.
enum class Variant { PAI0, PAI, lPAI, DAI0, DAI, gD, gdD, gEq, DAIbox };

inline constexpr Variant kAllVariants[] = {
    Variant::PAI0, Variant::PAI, Variant::lPAI, Variant::DAI0, Variant::DAI,
    Variant::gD,   Variant::gdD, Variant::gEq,  Variant::DAIbox};

enum class ArrowContentRule {
  ConsequentWithinAntecedent,  // s(N(consequent)) <= s(N(antecedent))
  AntecedentWithinConsequent,
  EqualContent,
};

enum class ConsequenceMode { Assertional, Order };

struct VariantTraits {
  LanguageMode language;
  TranslationMode translation;
  bool boxed_arrow;  // arrow clause wraps the material value in box
  ArrowContentRule content_rule;
  ConsequenceMode consequence;
  bool identity_box;  // models constrain box to the identity (DAIbox)
};

const VariantTraits& traits_of(Variant v);
const char* name_of(Variant v);
std::optional<Variant> variant_from_name(const std::string& name);

struct GEModel {
  std::shared_ptr<const TruthAlgebra> truth;
  std::shared_ptr<const ContentAlgebra> content;
  Variant variant = Variant::PAI;
  std::map<std::string, Elem> atom_value;
  ContentAssignment atom_content;
};

// Structural invariants: box table iff modal variant (identity for DAIbox),
// gru table iff agnostic variant, both algebras law-checked.
std::optional<std::string> validate(const GEModel& m);

// Content of a formula in the model: eval_content of its translation.
Elem content_of(const GEModel& m, const Formula& f);

// Recursive valuation. Atoms from the value map; ~, \/ (and [] in modal
// variants) through the truth tables; arrows by the variant's clause.
Elem eval(const GEModel& m, const Formula& f);

// Evaluation with per-node memoization, for sweeps over shared formula
// pools. Caches are keyed by node identity, so reuse an Evaluator only
// with structurally shared formulas and a fixed model.
class Evaluator {
 public:
  explicit Evaluator(const GEModel& m) : m_(m) {}
  Elem value(const FormulaPtr& f);
  Elem content(const FormulaPtr& f);

 private:
  const GEModel& m_;
  std::unordered_map<const Formula*, Elem> value_cache_;
  std::unordered_map<const Formula*, Elem> content_cache_;
};

// Premises force the conclusion to 1 in this single model.
bool assertional_consequence(const GEModel& m, std::span<const FormulaPtr> premises,
                             const Formula& goal);

// Degree preservation: every lower bound of the premises' values bounds the
// goal's value. With finite premises this is meet(premises) <= goal, the
// empty meet being 1.
bool order_consequence(const GEModel& m, std::span<const FormulaPtr> premises,
                       const Formula& goal);

struct SearchBounds;  // see gel/search.hpp

struct Countermodel {
  GEModel model;
  std::optional<Elem> witness_x;  // order mode: the failing lower bound
  uint64_t index = 0;             // position in the enumeration stream
};

// Exhaustively enumerates models of the variant within bounds and returns
// the first one refuting the variant's consequence relation, or nullopt if
// the entailment holds throughout the bounded class.
std::optional<Countermodel> check_validity(Variant v,
                                           const std::vector<FormulaPtr>& premises,
                                           const FormulaPtr& goal,
                                           const SearchBounds& bounds);

}  // namespace gel
