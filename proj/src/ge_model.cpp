#include "gel/ge_model.hpp"

#include <stdexcept>

namespace gel {

namespace {

constexpr VariantTraits kTraits[] = {
    // PAI0: agnostic arrow content, boxed clause, global consequence
    {LanguageMode::Modal, TranslationMode::Agnostic, true,
     ArrowContentRule::ConsequentWithinAntecedent, ConsequenceMode::Assertional, false},
    // PAI
    {LanguageMode::Modal, TranslationMode::Fused, true,
     ArrowContentRule::ConsequentWithinAntecedent, ConsequenceMode::Assertional, false},
    // lPAI: same models as PAI, consequence preserving degrees of truth
    {LanguageMode::Modal, TranslationMode::Fused, true,
     ArrowContentRule::ConsequentWithinAntecedent, ConsequenceMode::Order, false},
    // DAI0
    {LanguageMode::Demodalized, TranslationMode::Agnostic, false,
     ArrowContentRule::ConsequentWithinAntecedent, ConsequenceMode::Assertional, false},
    // DAI
    {LanguageMode::Demodalized, TranslationMode::Fused, false,
     ArrowContentRule::ConsequentWithinAntecedent, ConsequenceMode::Assertional, false},
    // gD
    {LanguageMode::Demodalized, TranslationMode::Fused, false,
     ArrowContentRule::ConsequentWithinAntecedent, ConsequenceMode::Assertional, false},
    // gdD
    {LanguageMode::Demodalized, TranslationMode::Fused, false,
     ArrowContentRule::AntecedentWithinConsequent, ConsequenceMode::Assertional, false},
    // gEq
    {LanguageMode::Demodalized, TranslationMode::Fused, false,
     ArrowContentRule::EqualContent, ConsequenceMode::Assertional, false},
    // DAIbox: modal language, box collapsed to the identity
    {LanguageMode::Modal, TranslationMode::Fused, true,
     ArrowContentRule::ConsequentWithinAntecedent, ConsequenceMode::Assertional, true},
};

constexpr const char* kNames[] = {"PAI0", "PAI", "lPAI", "DAI0", "DAI",
                                  "gD",   "gdD", "gEq",  "DAIbox"};

}  // namespace

const VariantTraits& traits_of(Variant v) { return kTraits[static_cast<int>(v)]; }
const char* name_of(Variant v) { return kNames[static_cast<int>(v)]; }

std::optional<Variant> variant_from_name(const std::string& name) {
  for (Variant v : kAllVariants)
    if (name == name_of(v)) return v;
  return std::nullopt;
}

std::optional<std::string> validate(const GEModel& m) {
  if (!m.truth || !m.content) return "model missing an algebra";
  const VariantTraits& t = traits_of(m.variant);
  if (auto bad = validate(*m.truth)) return "truth algebra: " + bad->equation;
  if (auto bad = validate(*m.content)) return "content algebra: " + bad->equation;
  bool modal = t.language == LanguageMode::Modal;
  if (modal != m.truth->has_box())
    return modal ? std::optional<std::string>("modal variant requires a box table")
                 : std::optional<std::string>("demodalized variant must not carry a box table");
  if (t.identity_box)
    for (Elem x = 0; x < m.truth->size; ++x)
      if (m.truth->box(x) != x) return "variant requires box to be the identity";
  bool agnostic = t.translation == TranslationMode::Agnostic;
  if (agnostic != m.content->has_gru())
    return agnostic ? std::optional<std::string>("agnostic variant requires a gru table")
                    : std::optional<std::string>("fused variant must not carry a gru table");
  for (const auto& [atom, e] : m.atom_value)
    if (!m.truth->in_carrier(e)) return "value of " + atom + " outside carrier";
  for (const auto& [atom, e] : m.atom_content)
    if (!m.content->in_carrier(e)) return "content of " + atom + " outside carrier";
  return std::nullopt;
}

Elem content_of(const GEModel& m, const Formula& f) {
  auto term = translate(f, traits_of(m.variant).translation);
  return eval_content(*m.content, m.atom_content, *term);
}

namespace {

bool arrow_condition_holds(const GEModel& m, Elem antecedent_c, Elem consequent_c) {
  switch (traits_of(m.variant).content_rule) {
    case ArrowContentRule::ConsequentWithinAntecedent:
      return m.content->leq(consequent_c, antecedent_c);
    case ArrowContentRule::AntecedentWithinConsequent:
      return m.content->leq(antecedent_c, consequent_c);
    case ArrowContentRule::EqualContent:
      return antecedent_c == consequent_c;
  }
  return false;
}

}  // namespace

Elem eval(const GEModel& m, const Formula& f) {
  const VariantTraits& t = traits_of(m.variant);
  const TruthAlgebra& b = *m.truth;
  switch (f.kind) {
    case Conn::Atom: {
      auto it = m.atom_value.find(f.name);
      if (it == m.atom_value.end())
        throw std::out_of_range("eval: no value assigned to atom " + f.name);
      return it->second;
    }
    case Conn::Neg: return b.complement(eval(m, *f.lhs));
    case Conn::Or: return b.join(eval(m, *f.lhs), eval(m, *f.rhs));
    case Conn::Box:
      if (t.language == LanguageMode::Demodalized)
        throw std::invalid_argument("eval: box formula against a demodalized variant");
      return b.box(eval(m, *f.lhs));
    case Conn::Arrow: {
      if (!arrow_condition_holds(m, content_of(m, *f.lhs), content_of(m, *f.rhs)))
        return b.zero;
      Elem material = b.join(b.complement(eval(m, *f.lhs)), eval(m, *f.rhs));
      return t.boxed_arrow ? b.box(material) : material;
    }
  }
  return b.zero;
}

Elem Evaluator::content(const FormulaPtr& f) {
  auto it = content_cache_.find(f.get());
  if (it != content_cache_.end()) return it->second;
  Elem c;
  const ContentAlgebra& b = *m_.content;
  switch (f->kind) {
    case Conn::Atom: {
      auto a = m_.atom_content.find(f->name);
      if (a == m_.atom_content.end())
        throw std::out_of_range("eval: no content assigned to atom " + f->name);
      c = a->second;
      break;
    }
    case Conn::Neg:
    case Conn::Box: c = content(f->lhs); break;
    case Conn::Or: c = b.join(content(f->lhs), content(f->rhs)); break;
    case Conn::Arrow: {
      Elem l = content(f->lhs), r = content(f->rhs);
      c = traits_of(m_.variant).translation == TranslationMode::Agnostic ? b.gru(l, r)
                                                                         : b.join(l, r);
      break;
    }
  }
  content_cache_.emplace(f.get(), c);
  return c;
}

Elem Evaluator::value(const FormulaPtr& f) {
  auto it = value_cache_.find(f.get());
  if (it != value_cache_.end()) return it->second;
  const VariantTraits& t = traits_of(m_.variant);
  const TruthAlgebra& b = *m_.truth;
  Elem v;
  switch (f->kind) {
    case Conn::Atom: {
      auto a = m_.atom_value.find(f->name);
      if (a == m_.atom_value.end())
        throw std::out_of_range("eval: no value assigned to atom " + f->name);
      v = a->second;
      break;
    }
    case Conn::Neg: v = b.complement(value(f->lhs)); break;
    case Conn::Or: v = b.join(value(f->lhs), value(f->rhs)); break;
    case Conn::Box:
      if (t.language == LanguageMode::Demodalized)
        throw std::invalid_argument("eval: box formula against a demodalized variant");
      v = b.box(value(f->lhs));
      break;
    case Conn::Arrow: {
      if (!arrow_condition_holds(m_, content(f->lhs), content(f->rhs))) {
        v = b.zero;
      } else {
        Elem material = b.join(b.complement(value(f->lhs)), value(f->rhs));
        v = t.boxed_arrow ? b.box(material) : material;
      }
      break;
    }
    default: v = b.zero;
  }
  value_cache_.emplace(f.get(), v);
  return v;
}

bool assertional_consequence(const GEModel& m, std::span<const FormulaPtr> premises,
                             const Formula& goal) {
  for (const FormulaPtr& p : premises)
    if (eval(m, *p) != m.truth->one) return true;
  return eval(m, goal) == m.truth->one;
}

bool order_consequence(const GEModel& m, std::span<const FormulaPtr> premises,
                       const Formula& goal) {
  Elem bound = m.truth->one;
  for (const FormulaPtr& p : premises) bound = m.truth->meet(bound, eval(m, *p));
  return m.truth->leq(bound, eval(m, goal));
}

}  // namespace gel
