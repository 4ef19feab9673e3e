// Criterion 8: against hand-built two-valued dependence models with union
// set-assignments, the gD variant over a powerset content algebra must
// reproduce, bit for bit, a direct set-based evaluator of the dependence
// clause: v(a -> b) = v(~a \/ b) when s(a) contains s(b), else 0.

#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include "gel/io.hpp"
#include "support.hpp"

namespace gel::acceptance {

namespace {

using AtomSets = std::map<std::string, std::set<int>>;
using AtomBools = std::map<std::string, bool>;

// Independent oracle: contents as std::set unions, the clause verbatim.
std::set<int> oracle_content(const Formula& f, const AtomSets& s) {
  std::set<int> out;
  for (const std::string& a : variables(f)) {
    const std::set<int>& sa = s.at(a);
    out.insert(sa.begin(), sa.end());
  }
  return out;
}

bool oracle_value(const Formula& f, const AtomSets& s, const AtomBools& v) {
  switch (f.kind) {
    case Conn::Atom: return v.at(f.name);
    case Conn::Neg: return !oracle_value(*f.lhs, s, v);
    case Conn::Or: return oracle_value(*f.lhs, s, v) || oracle_value(*f.rhs, s, v);
    case Conn::Box: throw std::logic_error("no box in dependence fixtures");
    case Conn::Arrow: {
      std::set<int> sa = oracle_content(*f.lhs, s), sb = oracle_content(*f.rhs, s);
      bool contains = std::includes(sa.begin(), sa.end(), sb.begin(), sb.end());
      if (!contains) return false;
      return !oracle_value(*f.lhs, s, v) || oracle_value(*f.rhs, s, v);
    }
  }
  return false;
}

// all box-free formulas over the fixture atoms to depth 2
std::vector<FormulaPtr> depth2_pool(const std::vector<std::string>& atoms) {
  CompiledPool pool = CompiledPool::build(atoms, 2, false);
  return pool.nodes;
}

}  // namespace

bool run_c8(std::ostream& log) {
  std::ifstream in(fixtures_dir() + "/dependence_fixtures.json");
  std::ostringstream buf;
  buf << in.rdbuf();
  io::json doc = io::json::parse(buf.str());
  const io::json& fixtures = doc.at("fixtures");
  if (fixtures.size() < 20) {
    log << "  expected at least 20 fixtures, found " << fixtures.size() << "\n";
    return false;
  }

  TruthAlgebra two = powerset_algebra(1);
  uint64_t compared = 0;
  int index = 0;
  for (const io::json& fx : fixtures) {
    ++index;
    int universe = fx.at("universe").get<int>();
    AtomSets sets;
    AtomBools bools;
    GEModel m;
    m.variant = Variant::gD;
    m.truth = std::make_shared<TruthAlgebra>(two);
    m.content = std::make_shared<ContentAlgebra>([&] {
      // powerset of the universe as a join semilattice over bitmask ids
      TruthAlgebra p = powerset_algebra(universe);
      ContentAlgebra b;
      b.size = p.size;
      b.join_t = p.join_t;
      return b;
    }());
    std::vector<std::string> atoms;
    for (const auto& [a, members] : fx.at("contents").items()) {
      std::set<int> content;
      Elem mask = 0;
      for (const io::json& x : members) {
        content.insert(x.get<int>());
        mask |= 1 << x.get<int>();
      }
      sets[a] = std::move(content);
      m.atom_content[a] = mask;
      atoms.push_back(a);
    }
    for (const auto& [a, val] : fx.at("values").items()) {
      bools[a] = val.get<int>() != 0;
      m.atom_value[a] = bools[a] ? 1 : 0;
    }
    if (auto bad = validate(m)) {
      log << "  fixture " << index << " produced an invalid model: " << *bad << "\n";
      return false;
    }

    std::vector<FormulaPtr> probes;
    for (const io::json& text : fx.at("formulas"))
      probes.push_back(parse(text.get<std::string>(), LanguageMode::Demodalized));
    for (const FormulaPtr& f : depth2_pool(atoms)) probes.push_back(f);

    for (const FormulaPtr& f : probes) {
      ++compared;
      Elem got = eval(m, *f);
      bool expected = oracle_value(*f, sets, bools);
      if ((got == m.truth->one) != expected || (got != 0 && got != 1)) {
        log << "  fixture " << index << ": eval disagrees with the set oracle on " << print(f)
            << " (eval " << got << ", oracle " << expected << ")\n";
        return false;
      }
    }
  }
  log << "  " << fixtures.size() << " fixtures, " << compared
      << " formula comparisons, all bit-for-bit\n";
  return true;
}

}  // namespace gel::acceptance
