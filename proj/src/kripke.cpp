#include "gel/kripke.hpp"

#include <algorithm>
#include <stdexcept>

namespace gel {

std::optional<int> world_index(const TopicKripkeModel& m, const std::string& name) {
  for (size_t i = 0; i < m.world_names.size(); ++i)
    if (m.world_names[i] == name) return static_cast<int>(i);
  return std::nullopt;
}

namespace {

// Join of the topics of a non-empty atom subset at a world.
Elem join_of_subset(const TopicKripkeModel& m, int w, const std::vector<Elem>& atom_topics,
                    unsigned subset) {
  Elem acc = -1;
  for (size_t i = 0; i < atom_topics.size(); ++i)
    if ((subset >> i) & 1)
      acc = acc < 0 ? atom_topics[i] : m.topics[w].join(acc, atom_topics[i]);
  return acc;
}

}  // namespace

std::optional<std::string> validate(const TopicKripkeModel& m) {
  const int n = m.worlds();
  if (n <= 0) return "no worlds";
  if (auto bad = validate(m.frame)) return "frame: " + bad->equation;
  if (m.topics.size() != static_cast<size_t>(n) || m.topic_of.size() != static_cast<size_t>(n))
    return "per-world topic data missing";
  if (!m.world_names.empty() && m.world_names.size() != static_cast<size_t>(n))
    return "world name list does not match the frame";
  for (int w = 0; w < n; ++w) {
    if (auto bad = validate(m.topics[w]))
      return "topic algebra at world " + std::to_string(w) + ": " + bad->equation;
    bool needs_gru = m.flavor == Flavor::Ferguson;
    if (m.topics[w].has_gru() != needs_gru)
      return needs_gru ? "ferguson model needs a gru table in every world"
                       : "fine model must not carry gru tables";
  }
  // every world assigns the same atom set
  std::vector<std::string> atoms;
  for (const auto& [a, e] : m.topic_of[0]) atoms.push_back(a);
  for (int w = 0; w < n; ++w) {
    if (m.topic_of[w].size() != atoms.size()) return "atom sets differ across worlds";
    for (const auto& [a, e] : m.topic_of[w]) {
      if (!std::binary_search(atoms.begin(), atoms.end(), a)) return "atom sets differ across worlds";
      if (!m.topics[w].in_carrier(e)) return "topic of " + a + " outside carrier at world " + std::to_string(w);
    }
  }
  for (const auto& [a, mask] : m.val)
    if (n < 64 && (mask >> n) != 0) return "valuation of " + a + " mentions unknown worlds";

  if (m.flavor == Flavor::Fine) {
    // Order stability along edges, over joins of atom subsets.
    if (atoms.size() > 8) return "too many atoms for the stability check";
    for (int w = 0; w < n; ++w) {
      std::vector<Elem> tw, tv;
      for (const auto& [a, e] : m.topic_of[w]) tw.push_back(e);
      for (int v = 0; v < n; ++v) {
        if (!m.frame.reaches(w, v) || v == w) continue;
        tv.clear();
        for (const auto& [a, e] : m.topic_of[v]) tv.push_back(e);
        unsigned subsets = 1u << atoms.size();
        for (unsigned sp = 1; sp < subsets; ++sp)
          for (unsigned sq = 1; sq < subsets; ++sq) {
            bool at_w = m.topics[w].leq(join_of_subset(m, w, tw, sp), join_of_subset(m, w, tw, sq));
            bool at_v = m.topics[v].leq(join_of_subset(m, v, tv, sp), join_of_subset(m, v, tv, sq));
            if (at_w != at_v)
              return "content order not stable along " + std::to_string(w) + " -> " +
                     std::to_string(v);
          }
      }
    }
  } else {
    for (int w = 0; w < n; ++w)
      for (int v = 0; v < n; ++v) {
        if (!m.frame.reaches(w, v)) continue;
        auto it = m.homs.find({w, v});
        if (it == m.homs.end()) return "missing homomorphism for edge " + std::to_string(w) + " -> " + std::to_string(v);
        const std::vector<Elem>& h = it->second;
        const ContentAlgebra& bw = m.topics[w];
        const ContentAlgebra& bv = m.topics[v];
        if (h.size() != static_cast<size_t>(bw.size)) return "homomorphism with wrong domain";
        for (Elem e : h)
          if (!bv.in_carrier(e)) return "homomorphism value outside codomain";
        for (Elem x = 0; x < bw.size; ++x)
          for (Elem y = 0; y < bw.size; ++y) {
            if (h[bw.join(x, y)] != bv.join(h[x], h[y]))
              return "homomorphism does not preserve join on edge " + std::to_string(w) + " -> " + std::to_string(v);
            if (h[bw.gru(x, y)] != bv.gru(h[x], h[y]))
              return "homomorphism does not preserve gru on edge " + std::to_string(w) + " -> " + std::to_string(v);
          }
        for (const auto& [a, e] : m.topic_of[w])
          if (h[e] != m.topic_of[v].at(a))
            return "homomorphism disagrees with the topic of " + a + " on edge " +
                   std::to_string(w) + " -> " + std::to_string(v);
      }
  }
  return std::nullopt;
}

Elem topic_at(const TopicKripkeModel& m, int w, const Formula& f) {
  switch (f.kind) {
    case Conn::Atom: {
      auto it = m.topic_of[w].find(f.name);
      if (it == m.topic_of[w].end())
        throw std::out_of_range("topic_at: no topic assigned to atom " + f.name);
      return it->second;
    }
    case Conn::Neg:
    case Conn::Box: return topic_at(m, w, *f.lhs);
    case Conn::Or: return m.topics[w].join(topic_at(m, w, *f.lhs), topic_at(m, w, *f.rhs));
    case Conn::Arrow: {
      Elem l = topic_at(m, w, *f.lhs), r = topic_at(m, w, *f.rhs);
      return m.flavor == Flavor::Ferguson ? m.topics[w].gru(l, r) : m.topics[w].join(l, r);
    }
  }
  return 0;
}

bool forces(const TopicKripkeModel& m, int w, const Formula& f) {
  switch (f.kind) {
    case Conn::Atom: {
      auto it = m.val.find(f.name);
      if (it == m.val.end()) throw std::out_of_range("forces: no valuation for atom " + f.name);
      return (it->second >> w) & 1;
    }
    case Conn::Neg: return !forces(m, w, *f.lhs);
    case Conn::Or: return forces(m, w, *f.lhs) || forces(m, w, *f.rhs);
    case Conn::Box:
      for (int v = 0; v < m.worlds(); ++v)
        if (m.frame.reaches(w, v) && !forces(m, v, *f.lhs)) return false;
      return true;
    case Conn::Arrow: {
      if (!m.topics[w].leq(topic_at(m, w, *f.rhs), topic_at(m, w, *f.lhs))) return false;
      for (int v = 0; v < m.worlds(); ++v)
        if (m.frame.reaches(w, v) && forces(m, v, *f.lhs) && !forces(m, v, *f.rhs)) return false;
      return true;
    }
  }
  return false;
}

uint64_t ForcingCache::mask(const FormulaPtr& f) {
  auto it = mask_.find(f.get());
  if (it != mask_.end()) return it->second;
  const int n = m_.worlds();
  const uint64_t everywhere = n >= 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
  uint64_t out = 0;
  switch (f->kind) {
    case Conn::Atom: {
      auto v = m_.val.find(f->name);
      if (v == m_.val.end()) throw std::out_of_range("forces: no valuation for atom " + f->name);
      out = v->second & everywhere;
      break;
    }
    case Conn::Neg: out = ~mask(f->lhs) & everywhere; break;
    case Conn::Or: out = mask(f->lhs) | mask(f->rhs); break;
    case Conn::Box: {
      uint64_t sub = mask(f->lhs);
      for (int w = 0; w < n; ++w)
        if ((m_.frame.successors(w) & ~sub) == 0) out |= uint64_t{1} << w;
      break;
    }
    case Conn::Arrow: {
      uint64_t material = (~mask(f->lhs) | mask(f->rhs)) & everywhere;
      for (int w = 0; w < n; ++w) {
        if (!m_.topics[w].leq(topic(f->rhs, w), topic(f->lhs, w))) continue;
        if ((m_.frame.successors(w) & ~material) == 0) out |= uint64_t{1} << w;
      }
      break;
    }
  }
  mask_.emplace(f.get(), out);
  return out;
}

Elem ForcingCache::topic(const FormulaPtr& f, int w) {
  auto it = topics_.find(f.get());
  if (it != topics_.end()) return it->second[w];
  const int n = m_.worlds();
  std::vector<Elem> out(n);
  switch (f->kind) {
    case Conn::Atom:
      for (int v = 0; v < n; ++v) {
        auto a = m_.topic_of[v].find(f->name);
        if (a == m_.topic_of[v].end())
          throw std::out_of_range("topic_at: no topic assigned to atom " + f->name);
        out[v] = a->second;
      }
      break;
    case Conn::Neg:
    case Conn::Box:
      for (int v = 0; v < n; ++v) out[v] = topic(f->lhs, v);
      break;
    case Conn::Or:
      for (int v = 0; v < n; ++v) out[v] = m_.topics[v].join(topic(f->lhs, v), topic(f->rhs, v));
      break;
    case Conn::Arrow:
      for (int v = 0; v < n; ++v) {
        Elem l = topic(f->lhs, v), r = topic(f->rhs, v);
        out[v] = m_.flavor == Flavor::Ferguson ? m_.topics[v].gru(l, r) : m_.topics[v].join(l, r);
      }
      break;
  }
  Elem at_w = out[w];
  topics_.emplace(f.get(), std::move(out));
  return at_w;
}

TopicKripkeModel generated_submodel(const TopicKripkeModel& m, const std::vector<int>& roots) {
  if (roots.empty()) throw std::invalid_argument("generated_submodel: empty root set");
  const int n = m.worlds();
  std::vector<bool> keep(n, false);
  for (int r : roots) {
    if (r < 0 || r >= n) throw std::out_of_range("generated_submodel: root outside the frame");
    for (int v = 0; v < n; ++v)
      if (m.frame.reaches(r, v)) keep[v] = true;
  }
  std::vector<int> old_of_new;
  std::vector<int> new_of_old(n, -1);
  for (int w = 0; w < n; ++w)
    if (keep[w]) {
      new_of_old[w] = static_cast<int>(old_of_new.size());
      old_of_new.push_back(w);
    }
  const int k = static_cast<int>(old_of_new.size());

  TopicKripkeModel out;
  out.flavor = m.flavor;
  out.frame.worlds = k;
  out.frame.reach.assign(static_cast<size_t>(k) * k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      out.frame.reach[i * k + j] = m.frame.reaches(old_of_new[i], old_of_new[j]);
  for (int i = 0; i < k; ++i) {
    out.topics.push_back(m.topics[old_of_new[i]]);
    out.topic_of.push_back(m.topic_of[old_of_new[i]]);
    out.world_names.push_back(m.world_names.empty() ? "w" + std::to_string(old_of_new[i])
                                                    : m.world_names[old_of_new[i]]);
  }
  for (const auto& [a, mask] : m.val) {
    uint64_t nm = 0;
    for (int i = 0; i < k; ++i)
      if ((mask >> old_of_new[i]) & 1) nm |= uint64_t{1} << i;
    out.val[a] = nm;
  }
  for (const auto& [edge, h] : m.homs) {
    int a = new_of_old[edge.first], b = new_of_old[edge.second];
    if (a >= 0 && b >= 0) out.homs[{a, b}] = h;
  }
  return out;
}

TopicKripkeModel surjectivize(const TopicKripkeModel& m) {
  if (m.flavor != Flavor::Fine)
    throw std::invalid_argument("surjectivize: fine models only");
  TopicKripkeModel out = m;
  for (int w = 0; w < m.worlds(); ++w) {
    const ContentAlgebra& b = m.topics[w];
    // Join closure of the assigned atom topics.
    std::vector<bool> in(b.size, false);
    std::vector<Elem> members;
    for (const auto& [a, e] : m.topic_of[w])
      if (!in[e]) {
        in[e] = true;
        members.push_back(e);
      }
    for (size_t i = 0; i < members.size(); ++i)
      for (size_t j = 0; j <= i; ++j) {
        Elem e = b.join(members[i], members[j]);
        if (!in[e]) {
          in[e] = true;
          members.push_back(e);
        }
      }
    std::sort(members.begin(), members.end());
    std::vector<int> new_id(b.size, -1);
    for (size_t i = 0; i < members.size(); ++i) new_id[members[i]] = static_cast<int>(i);
    ContentAlgebra nb;
    nb.size = static_cast<int>(members.size());
    nb.join_t.resize(static_cast<size_t>(nb.size) * nb.size);
    for (size_t i = 0; i < members.size(); ++i)
      for (size_t j = 0; j < members.size(); ++j)
        nb.join_t[i * members.size() + j] = new_id[b.join(members[i], members[j])];
    out.topics[w] = std::move(nb);
    for (auto& [a, e] : out.topic_of[w]) e = new_id[e];
  }
  return out;
}

BridgedModel to_ge_model(const TopicKripkeModel& m, int root) {
  TopicKripkeModel sub = generated_submodel(m, {root});
  // position of the root among the kept worlds
  int root_bit = 0;
  for (int w = 0; w < m.worlds(); ++w)
    if (m.frame.reaches(root, w) && w < root) ++root_bit;

  BridgedModel out;
  out.root_index = root_bit;
  out.model.variant = m.flavor == Flavor::Fine ? Variant::PAI : Variant::PAI0;
  out.model.truth = std::make_shared<TruthAlgebra>(complex_algebra(sub.frame));
  out.model.content = std::make_shared<ContentAlgebra>(sub.topics[root_bit]);
  out.model.atom_content = sub.topic_of[root_bit];
  for (const auto& [a, mask] : sub.val)
    out.model.atom_value[a] = static_cast<Elem>(mask);
  return out;
}

}  // namespace gel
