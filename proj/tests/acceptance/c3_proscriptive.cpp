// Criterion 3: a fresh consequent variable refutes the arrow in every
// variant, with at most two topics; containment validities hold in PAI.

#include <ostream>

#include "support.hpp"

namespace gel::acceptance {

bool run_c3(std::ostream& log) {
  SearchBounds bounds;
  FormulaPtr breach = parse("p -> (q \\/ ~q)");
  for (Variant v : kAllVariants) {
    auto cm = check_validity(v, {}, breach, bounds);
    if (!cm) {
      log << "  " << name_of(v) << " failed to refute " << print(breach) << "\n";
      return false;
    }
    if (cm->model.content->size > 2) {
      log << "  " << name_of(v) << " countermodel needs " << cm->model.content->size
          << " topics\n";
      return false;
    }
    if (eval(cm->model, *breach) == cm->model.truth->one) {
      log << "  " << name_of(v) << " reported a non-countermodel\n";
      return false;
    }
  }
  log << "  " << print(breach) << " refuted in all " << std::size(kAllVariants)
      << " variants within two topics\n";

  for (const char* text : {"(p /\\ q) -> p", "p < p", "(p \\/ q) < (p \\/ q)",
                           "(p -> q) < (p -> q)"}) {
    auto cm = check_validity(Variant::PAI, {}, parse(text), bounds);
    if (cm) {
      log << "  PAI unexpectedly refuted " << text << " at index " << cm->index << "\n";
      return false;
    }
  }
  log << "  containment validities hold in PAI up to bounds\n";
  return true;
}

}  // namespace gel::acceptance
