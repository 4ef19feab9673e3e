#include "gel/calculus.hpp"

#include <map>
#include <stdexcept>

namespace gel {

namespace {

Schema ax(const std::string& name, const char* text) {
  return Schema{name, parse(text)};
}

// The shared containment/order schemata. Written with the surface grammar;
// parsing expands < and the defined connectives into primitives.
const Schema kA1 = ax("A1", "A => (B => A)");
const Schema kA2 = ax("A2", "(A => (B => C)) => ((A => B) => (A => C))");
const Schema kA3 = ax("A3", "(~A => ~B) => (B => A)");
const Schema kA4 = ax("A4", "(A -> B) <-> ([](A => B) /\\ (B < A))");
const Schema kA4D = ax("A4^D", "(A -> B) <-> ((A => B) /\\ (B < A))");
// Under the dual arrow clause the defined < swaps its reading: B < A, i.e.
// A -> (B \/ ~B), comes out true exactly when the antecedent's content
// sits inside the consequent's. The conjunct below therefore expresses the
// dual condition even though it prints like the one in A4^D.
const Schema kA4dD = ax("A4^dD", "(A -> B) <-> ((A => B) /\\ (B < A))");
const Schema kA4Eq = ax("A4^Eq", "(A -> B) <-> ((A => B) /\\ (A < B) /\\ (B < A))");
const Schema kA5 = ax("A5", "((A -> B) < (A \\/ B)) /\\ ((A \\/ B) < (A -> B))");
const Schema kA6 = ax("A6", "A => []A");
const Schema kK = ax("K", "[](A => B) => ([]A => []B)");
const Schema kT = ax("T", "[]A => A");
const Schema k4 = ax("4", "[]A => [][]A");
const Schema kO1 = ax("O1", "A < A");
const Schema kO2 = ax("O2", "((A < B) /\\ (B < C)) => (A < C)");
const Schema kO3 = ax("O3", "(A < B) => ((A \\/ B) < B)");
const Schema kO4 = ax("O4", "((A < B) <-> (A < ~B)) /\\ ((A < B) <-> (~A < B))");
const Schema kO5 = ax("O5", "((A < B) <-> (A < []B)) /\\ ((A < B) <-> ([]A < B))");
const Schema kC1 = ax("C1", "(A < (A \\/ B)) /\\ (B < (A \\/ B))");
// C1 in the dialect of the dual arrow: with < swapped by the clause, the
// join-dominates-components fact is written with the comparands reversed.
const Schema kC1dD = ax("C1", "((A \\/ B) < A) /\\ ((A \\/ B) < B)");
const Schema kC2 = ax("C2", "((A < C) /\\ (B < C)) => ((A \\/ B) < C)");
const Schema kC3 = ax("C3",
                      "((A < C) /\\ (C < A) /\\ (B < D) /\\ (D < B)) => ((A -> B) < (C -> D))");

std::vector<Schema> modal_core() { return {kA1, kA2, kA3, kA4, kK, kT, k4}; }

Calculus make_pai0() {
  Calculus c{"PAI0", LanguageMode::Modal, modal_core(), {Rule::MP, Rule::NecG}};
  for (const Schema& s : {kO1, kO2, kO3, kO4, kO5, kC1, kC2, kC3}) c.axioms.push_back(s);
  return c;
}

Calculus make_pai(const std::string& name, Rule nec) {
  Calculus c = make_pai0();
  c.name = name;
  c.axioms.push_back(kA5);
  c.rules = {Rule::MP, nec};
  return c;
}

Calculus make_daibox() {
  Calculus c = make_pai("DAIbox", Rule::NecG);
  c.axioms.push_back(kA6);
  return c;
}

// joiner: how "components sit inside their disjunction" is rendered, which
// depends on the arrow clause the defined < runs through; absent for the
// equality variant, where no direction of it holds.
Calculus make_dai(const std::string& name, const Schema& arrow_axiom, bool with_a5,
                  const Schema* joiner) {
  Calculus c{name, LanguageMode::Demodalized, {kA1, kA2, kA3, arrow_axiom}, {Rule::MP}};
  if (with_a5) c.axioms.push_back(kA5);
  for (const Schema& s : {kO1, kO2, kO3, kO4}) c.axioms.push_back(s);
  if (joiner) c.axioms.push_back(*joiner);
  c.axioms.push_back(kC2);
  c.axioms.push_back(kC3);
  return c;
}

std::vector<Schema> s4_axioms() { return {kA1, kA2, kA3, kK, kT, k4}; }

const std::map<std::string, Calculus>& table() {
  static const std::map<std::string, Calculus> t = [] {
    std::map<std::string, Calculus> m;
    m.emplace("PAI0", make_pai0());
    m.emplace("PAI", make_pai("PAI", Rule::NecG));
    m.emplace("lPAI", make_pai("lPAI", Rule::Nec));
    m.emplace("DAIbox", make_daibox());
    m.emplace("DAI0", make_dai("DAI0", kA4D, false, &kC1));
    m.emplace("DAI", make_dai("DAI", kA4D, true, &kC1));
    m.emplace("gD", make_dai("gD", kA4D, true, &kC1));
    m.emplace("gdD", make_dai("gdD", kA4dD, true, &kC1dD));
    m.emplace("gEq", make_dai("gEq", kA4Eq, true, nullptr));
    m.emplace("S4", Calculus{"S4", LanguageMode::Modal, s4_axioms(), {Rule::MP, Rule::Nec}});
    m.emplace("S4g", Calculus{"S4g", LanguageMode::Modal, s4_axioms(), {Rule::MP, Rule::NecG}});
    return m;
  }();
  return t;
}

}  // namespace

const Calculus& calculus_of(Variant v) { return *calculus_by_name(name_of(v)); }

const Calculus* calculus_by_name(const std::string& name) {
  auto it = table().find(name);
  return it == table().end() ? nullptr : &it->second;
}

std::vector<std::string> calculus_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : table()) out.push_back(k);
  return out;
}

const std::vector<Schema>& axioms_of(const Calculus& c) { return c.axioms; }

const Schema* find_schema(const Calculus& c, const std::string& name) {
  for (const Schema& s : c.axioms)
    if (s.name == name) return &s;
  return nullptr;
}

namespace {

bool match_into(const FormulaPtr& schema, const FormulaPtr& f, Binding& b) {
  switch (schema->kind) {
    case Conn::Atom: {
      if (!is_metavariable(schema->name))
        return f->kind == Conn::Atom && f->name == schema->name;
      auto [it, fresh] = b.emplace(schema->name, f);
      return fresh || equal(it->second, f);
    }
    case Conn::Neg:
      return f->kind == Conn::Neg && match_into(schema->lhs, f->lhs, b);
    case Conn::Box:
      return f->kind == Conn::Box && match_into(schema->lhs, f->lhs, b);
    case Conn::Or:
      return f->kind == Conn::Or && match_into(schema->lhs, f->lhs, b) &&
             match_into(schema->rhs, f->rhs, b);
    case Conn::Arrow:
      return f->kind == Conn::Arrow && match_into(schema->lhs, f->lhs, b) &&
             match_into(schema->rhs, f->rhs, b);
  }
  return false;
}

}  // namespace

std::optional<Binding> match(const FormulaPtr& schema, const FormulaPtr& f) {
  Binding b;
  if (match_into(schema, f, b)) return b;
  return std::nullopt;
}

std::optional<Rejection> check_proof(const Calculus& calc,
                                     const std::vector<FormulaPtr>& premises,
                                     const Proof& proof, const FormulaPtr* goal) {
  const int n = static_cast<int>(proof.lines.size());
  std::vector<bool> depends(n, false);
  for (int k = 0; k < n; ++k) {
    const ProofLine& line = proof.lines[k];
    const Justification& j = line.just;
    const int here = k + 1;
    auto cited = [&](int idx) { return idx >= 1 && idx <= k; };
    switch (j.kind) {
      case Justification::Kind::Premise: {
        if (j.i < 1 || j.i > static_cast<int>(premises.size()))
          return Rejection{here, "bad-premise", "premise index out of range"};
        if (!equal(line.formula, premises[j.i - 1]))
          return Rejection{here, "bad-premise", "line differs from the cited premise"};
        depends[k] = true;
        break;
      }
      case Justification::Kind::Axiom: {
        const Schema* s = find_schema(calc, j.axiom);
        if (!s)
          return Rejection{here, "bad-schema-match",
                           "no axiom named " + j.axiom + " in " + calc.name};
        if (j.binding) {
          FormulaPtr inst;
          try {
            inst = substitute(s->pattern, *j.binding);
          } catch (const SubstitutionError& e) {
            return Rejection{here, "bad-schema-match", e.what()};
          }
          if (!equal(inst, line.formula))
            return Rejection{here, "bad-schema-match",
                             "binding does not instantiate " + j.axiom + " to this line"};
        } else if (!match(s->pattern, line.formula)) {
          return Rejection{here, "bad-schema-match", "line is not an instance of " + j.axiom};
        }
        break;
      }
      case Justification::Kind::MP: {
        if (!calc.rules.count(Rule::MP)) return Rejection{here, "rule-absent", "MP"};
        if (!cited(j.i) || !cited(j.j))
          return Rejection{here, "forward-reference", "MP cites an unavailable line"};
        const FormulaPtr& minor = proof.lines[j.i - 1].formula;
        const FormulaPtr& major = proof.lines[j.j - 1].formula;
        // major must be minor => goal, i.e. ~minor \/ goal
        if (major->kind != Conn::Or || major->lhs->kind != Conn::Neg ||
            !equal(major->lhs->lhs, minor) || !equal(major->rhs, line.formula))
          return Rejection{here, "bad-mp", "cited lines do not fit minor / minor => line"};
        depends[k] = depends[j.i - 1] || depends[j.j - 1];
        break;
      }
      case Justification::Kind::Nec:
      case Justification::Kind::NecG: {
        bool global = j.kind == Justification::Kind::NecG;
        if (!calc.rules.count(global ? Rule::NecG : Rule::Nec))
          return Rejection{here, "rule-absent", global ? "Nec_g" : "Nec"};
        if (!cited(j.i))
          return Rejection{here, "forward-reference", "necessitation cites an unavailable line"};
        if (!global && depends[j.i - 1])
          return Rejection{here, "nec-on-premise",
                           "local necessitation applied to a premise-dependent line"};
        if (line.formula->kind != Conn::Box || !equal(line.formula->lhs, proof.lines[j.i - 1].formula))
          return Rejection{here, "bad-nec", "line is not the box of the cited line"};
        depends[k] = depends[j.i - 1];
        break;
      }
    }
  }
  if (goal) {
    if (n == 0 || !equal(proof.lines.back().formula, *goal))
      return Rejection{n, "goal-mismatch", "final line is not the stated goal"};
  }
  return std::nullopt;
}

}  // namespace gel
