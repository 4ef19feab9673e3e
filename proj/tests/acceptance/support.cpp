#include "support.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gel::acceptance {

CompiledPool CompiledPool::build(const std::vector<std::string>& atoms, int depth, bool modal) {
  CompiledPool p;
  p.atoms = atoms;
  std::map<const Formula*, int> id;
  auto push = [&](FormulaPtr f, Op op) {
    id[f.get()] = static_cast<int>(p.nodes.size());
    p.nodes.push_back(std::move(f));
    p.ops.push_back(op);
  };
  for (size_t i = 0; i < atoms.size(); ++i)
    push(Formula::atom(atoms[i]), Op{Conn::Atom, -1, -1, static_cast<int>(i)});
  size_t level_begin = 0;
  for (int d = 0; d < depth; ++d) {
    size_t level_end = p.nodes.size();
    for (size_t i = level_begin; i < level_end; ++i) {
      push(Formula::neg(p.nodes[i]), Op{Conn::Neg, static_cast<int>(i), -1, -1});
      if (modal) push(Formula::box(p.nodes[i]), Op{Conn::Box, static_cast<int>(i), -1, -1});
    }
    for (size_t i = 0; i < level_end; ++i)
      for (size_t j = 0; j < level_end; ++j) {
        if (i < level_begin && j < level_begin) continue;
        push(Formula::disj(p.nodes[i], p.nodes[j]),
             Op{Conn::Or, static_cast<int>(i), static_cast<int>(j), -1});
        push(Formula::arrow(p.nodes[i], p.nodes[j]),
             Op{Conn::Arrow, static_cast<int>(i), static_cast<int>(j), -1});
      }
    level_begin = level_end;
  }
  return p;
}

std::vector<TruthAlgebra> truth_algebras_for(Variant v, int max_worlds) {
  const VariantTraits& t = traits_of(v);
  std::vector<TruthAlgebra> out;
  for (int w = 1; w <= max_worlds; ++w) {
    if (t.language == LanguageMode::Demodalized) {
      out.push_back(powerset_algebra(w));
    } else if (t.identity_box) {
      TruthAlgebra a = powerset_algebra(w);
      std::vector<Elem> idx(a.size);
      std::iota(idx.begin(), idx.end(), 0);
      a.box_t = std::move(idx);
      out.push_back(std::move(a));
    } else {
      for (const PreorderFrame& f : enumerate_preorders(w)) out.push_back(complex_algebra(f));
    }
  }
  return out;
}

namespace {

struct NeedCell {
  Elem a, b;
};

struct PairEval {
  const TruthAlgebra& truth;
  const ContentAlgebra& content;
  const VariantTraits& traits;
  const std::map<std::pair<Elem, Elem>, Elem>& gru;

  struct VC {
    Elem value, content;
  };

  // binding: footprint per metavariable, positions from meta_index
  VC walk(const FormulaPtr& f, const std::vector<VC>& binding,
          const std::map<std::string, int>& meta_index) const {
    switch (f->kind) {
      case Conn::Atom: return binding[meta_index.at(f->name)];
      case Conn::Neg: {
        VC c = walk(f->lhs, binding, meta_index);
        return {truth.complement(c.value), c.content};
      }
      case Conn::Box: {
        VC c = walk(f->lhs, binding, meta_index);
        return {truth.box(c.value), c.content};
      }
      case Conn::Or: {
        VC l = walk(f->lhs, binding, meta_index), r = walk(f->rhs, binding, meta_index);
        return {truth.join(l.value, r.value), content.join(l.content, r.content)};
      }
      case Conn::Arrow: {
        VC l = walk(f->lhs, binding, meta_index), r = walk(f->rhs, binding, meta_index);
        Elem my_content;
        if (traits.translation == TranslationMode::Agnostic) {
          auto it = gru.find({l.content, r.content});
          if (it == gru.end()) throw NeedCell{l.content, r.content};
          my_content = it->second;
        } else {
          my_content = content.join(l.content, r.content);
        }
        bool ok = false;
        switch (traits.content_rule) {
          case ArrowContentRule::ConsequentWithinAntecedent:
            ok = content.leq(r.content, l.content);
            break;
          case ArrowContentRule::AntecedentWithinConsequent:
            ok = content.leq(l.content, r.content);
            break;
          case ArrowContentRule::EqualContent: ok = l.content == r.content; break;
        }
        if (!ok) return {truth.zero, my_content};
        Elem material = truth.join(truth.complement(l.value), r.value);
        return {traits.boxed_arrow ? truth.box(material) : material, my_content};
      }
    }
    return {truth.zero, 0};
  }
};

}  // namespace

PairSweepResult sweep_schema(Variant v, const Schema& schema, const TruthAlgebra& truth,
                             const ContentAlgebra& content) {
  const VariantTraits& traits = traits_of(v);
  PairSweepResult result;

  std::vector<std::string> metas;
  for (const std::string& name : variables(*schema.pattern))
    if (is_metavariable(name)) metas.push_back(name);
  std::map<std::string, int> meta_index;
  for (size_t i = 0; i < metas.size(); ++i) meta_index[metas[i]] = static_cast<int>(i);

  const int pairs = truth.size * content.size;
  std::vector<int> tuple(metas.size(), 0);
  std::vector<PairEval::VC> binding(metas.size());

  for (;;) {
    for (size_t i = 0; i < metas.size(); ++i)
      binding[i] = {tuple[i] / content.size, tuple[i] % content.size};

    // Explore the gru cells the schema actually touches, depth first.
    std::map<std::pair<Elem, Elem>, Elem> partial;
    std::vector<std::pair<Elem, Elem>> trail;
    for (;;) {
      bool done = false;
      PairEval pe{truth, content, traits, partial};
      try {
        PairEval::VC out = pe.walk(schema.pattern, binding, meta_index);
        ++result.tuples_checked;
        if (out.value != truth.one) {
          result.sound = false;
          std::ostringstream msg;
          msg << schema.name << " fails on footprints";
          for (const auto& vc : binding) msg << " (" << vc.value << "," << vc.content << ")";
          result.violation = msg.str();
          return result;
        }
        done = true;
      } catch (const NeedCell& need) {
        partial[{need.a, need.b}] = 0;
        trail.push_back({need.a, need.b});
        continue;
      }
      if (done) {
        // advance the most recent cell; drop exhausted ones
        while (!trail.empty()) {
          auto cell = trail.back();
          if (++partial[cell] < content.size) break;
          partial.erase(cell);
          trail.pop_back();
        }
        if (trail.empty()) break;
      }
    }

    int pos = static_cast<int>(tuple.size()) - 1;
    while (pos >= 0 && tuple[pos] == pairs - 1) tuple[pos--] = 0;
    if (pos < 0) break;
    ++tuple[pos];
  }
  return result;
}

std::string cross_validate_pair_evaluator(Variant v, int max_worlds, int max_topics) {
  const VariantTraits& traits = traits_of(v);
  bool agnostic = traits.translation == TranslationMode::Agnostic;
  const Calculus& calc = calculus_of(v);

  std::vector<std::string> atom_names{"a0", "a1", "a2", "a3"};

  for (const TruthAlgebra& truth : truth_algebras_for(v, max_worlds)) {
    for (const ContentAlgebra& join_only : enumerate_semilattices(max_topics)) {
      uint64_t gru_count = 1;
      if (agnostic)
        for (int c = 0; c < join_only.size * join_only.size; ++c) gru_count *= join_only.size;
      for (uint64_t g = 0; g < gru_count; ++g) {
        GEModel m;
        m.variant = v;
        m.truth = std::make_shared<TruthAlgebra>(truth);
        auto ca = std::make_shared<ContentAlgebra>(join_only);
        std::map<std::pair<Elem, Elem>, Elem> full_gru;
        if (agnostic) {
          const int s = join_only.size;
          std::vector<Elem> table(static_cast<size_t>(s) * s);
          uint64_t rem = g;
          for (int cell = s * s - 1; cell >= 0; --cell) {
            table[cell] = static_cast<Elem>(rem % s);
            rem /= s;
          }
          for (Elem x = 0; x < s; ++x)
            for (Elem y = 0; y < s; ++y) full_gru[{x, y}] = table[x * s + y];
          ca->gru_t = std::move(table);
        }
        m.content = std::move(ca);

        // one footprint tuple per schema, varied deterministically
        uint64_t salt = g * 31 + truth.size * 7 + join_only.size * 3;
        for (const Schema& schema : calc.axioms) {
          std::vector<std::string> metas;
          for (const std::string& name : variables(*schema.pattern))
            if (is_metavariable(name)) metas.push_back(name);
          Binding b;
          m.atom_value.clear();
          m.atom_content.clear();
          std::map<std::string, int> meta_index;
          std::vector<PairEval::VC> binding(metas.size());
          for (size_t i = 0; i < metas.size(); ++i) {
            salt = salt * 6364136223846793005ull + 1442695040888963407ull;
            Elem value = static_cast<Elem>((salt >> 13) % truth.size);
            Elem cont = static_cast<Elem>((salt >> 37) % join_only.size);
            b[metas[i]] = Formula::atom(atom_names[i]);
            m.atom_value[atom_names[i]] = value;
            m.atom_content[atom_names[i]] = cont;
            meta_index[metas[i]] = static_cast<int>(i);
            binding[i] = {value, cont};
          }
          // rebind the pair evaluator's metavariable names to the atoms
          std::map<std::string, int> atom_index;
          for (size_t i = 0; i < metas.size(); ++i) atom_index[atom_names[i]] = static_cast<int>(i);
          FormulaPtr inst = substitute(schema.pattern, b);
          PairEval pe{*m.truth, *m.content, traits, full_gru};
          Elem direct = eval(m, *inst);
          Elem paired = pe.walk(inst, binding, atom_index).value;
          if (direct != paired) {
            std::ostringstream msg;
            msg << "pair evaluator disagrees with eval on " << schema.name << " in "
                << name_of(v) << ": " << direct << " vs " << paired;
            return msg.str();
          }
        }
      }
    }
  }
  return {};
}

std::string fixtures_dir() {
  const char* dir = std::getenv("GEL_FIXTURES");
  if (!dir) throw std::runtime_error("GEL_FIXTURES not set");
  return dir;
}

}  // namespace gel::acceptance
