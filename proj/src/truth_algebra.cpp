#include "gel/truth_algebra.hpp"

#include <stdexcept>

namespace gel {

namespace {

bool total_on_carrier(const TruthAlgebra& a) {
  size_t nn = static_cast<size_t>(a.size) * a.size;
  if (a.join_t.size() != nn || a.meet_t.size() != nn) return false;
  if (a.compl_t.size() != static_cast<size_t>(a.size)) return false;
  if (a.box_t && a.box_t->size() != static_cast<size_t>(a.size)) return false;
  auto ok = [&](Elem e) { return a.in_carrier(e); };
  for (Elem e : a.join_t)
    if (!ok(e)) return false;
  for (Elem e : a.meet_t)
    if (!ok(e)) return false;
  for (Elem e : a.compl_t)
    if (!ok(e)) return false;
  if (a.box_t)
    for (Elem e : *a.box_t)
      if (!ok(e)) return false;
  return ok(a.zero) && ok(a.one);
}

}  // namespace

std::optional<LawViolation> validate(const TruthAlgebra& a) {
  if (a.size <= 0 || a.size > 64 || !total_on_carrier(a))
    return LawViolation{"tables total on a carrier of size 1..64", {}};
  const int n = a.size;
  for (Elem x = 0; x < n; ++x) {
    if (a.join(x, a.zero) != x) return LawViolation{"x v 0 = x", {x}};
    if (a.meet(x, a.one) != x) return LawViolation{"x ^ 1 = x", {x}};
    if (a.join(x, a.complement(x)) != a.one) return LawViolation{"x v ~x = 1", {x}};
    if (a.meet(x, a.complement(x)) != a.zero) return LawViolation{"x ^ ~x = 0", {x}};
    for (Elem y = 0; y < n; ++y) {
      if (a.join(x, y) != a.join(y, x)) return LawViolation{"x v y = y v x", {x, y}};
      if (a.meet(x, y) != a.meet(y, x)) return LawViolation{"x ^ y = y ^ x", {x, y}};
      if (a.join(x, a.meet(x, y)) != x) return LawViolation{"x v (x ^ y) = x", {x, y}};
      if (a.meet(x, a.join(x, y)) != x) return LawViolation{"x ^ (x v y) = x", {x, y}};
      for (Elem z = 0; z < n; ++z) {
        if (a.join(x, a.join(y, z)) != a.join(a.join(x, y), z))
          return LawViolation{"join associativity", {x, y, z}};
        if (a.meet(x, a.meet(y, z)) != a.meet(a.meet(x, y), z))
          return LawViolation{"meet associativity", {x, y, z}};
        if (a.meet(x, a.join(y, z)) != a.join(a.meet(x, y), a.meet(x, z)))
          return LawViolation{"meet distributes over join", {x, y, z}};
        if (a.join(x, a.meet(y, z)) != a.meet(a.join(x, y), a.join(x, z)))
          return LawViolation{"join distributes over meet", {x, y, z}};
      }
    }
  }
  if (a.has_box()) {
    if (a.box(a.one) != a.one) return LawViolation{"EqK1: []1 = 1", {a.one}};
    for (Elem x = 0; x < n; ++x) {
      if (a.meet(a.box(x), x) != a.box(x)) return LawViolation{"EqT: []x = []x ^ x", {x}};
      if (a.meet(a.box(x), a.box(a.box(x))) != a.box(x))
        return LawViolation{"Eq4: []x = []x ^ [][]x", {x}};
      for (Elem y = 0; y < n; ++y)
        if (a.box(a.meet(x, y)) != a.meet(a.box(x), a.box(y)))
          return LawViolation{"EqK2: [](x ^ y) = []x ^ []y", {x, y}};
    }
  }
  return std::nullopt;
}

TruthAlgebra powerset_algebra(int n_atoms) {
  if (n_atoms < 1) throw std::invalid_argument("powerset_algebra: empty atom set");
  if (n_atoms > kMaxPowersetAtoms)
    throw std::invalid_argument("powerset_algebra: atom set larger than bound");
  const int n = 1 << n_atoms;
  const Elem full = n - 1;
  TruthAlgebra a;
  a.size = n;
  a.join_t.resize(static_cast<size_t>(n) * n);
  a.meet_t.resize(static_cast<size_t>(n) * n);
  a.compl_t.resize(n);
  a.zero = 0;
  a.one = full;
  for (Elem x = 0; x < n; ++x) {
    a.compl_t[x] = full & ~x;
    for (Elem y = 0; y < n; ++y) {
      a.join_t[x * n + y] = x | y;
      a.meet_t[x * n + y] = x & y;
    }
  }
  return a;
}

std::optional<LawViolation> validate(const PreorderFrame& f) {
  if (f.worlds <= 0 || f.worlds > kMaxPowersetAtoms ||
      f.reach.size() != static_cast<size_t>(f.worlds) * f.worlds)
    return LawViolation{"frame shape", {}};
  for (int w = 0; w < f.worlds; ++w)
    if (!f.reaches(w, w)) return LawViolation{"reflexivity", {w}};
  for (int x = 0; x < f.worlds; ++x)
    for (int y = 0; y < f.worlds; ++y)
      for (int z = 0; z < f.worlds; ++z)
        if (f.reaches(x, y) && f.reaches(y, z) && !f.reaches(x, z))
          return LawViolation{"transitivity", {x, y, z}};
  return std::nullopt;
}

TruthAlgebra complex_algebra(const PreorderFrame& f) {
  if (auto bad = validate(f))
    throw std::invalid_argument("complex_algebra: not an S4 frame (" + bad->equation + ")");
  TruthAlgebra a = powerset_algebra(f.worlds);
  std::vector<Elem> box(a.size);
  for (Elem s = 0; s < a.size; ++s) {
    Elem out = 0;
    for (int w = 0; w < f.worlds; ++w) {
      if (!((s >> w) & 1)) continue;
      bool all_in = true;
      for (int v = 0; v < f.worlds; ++v)
        if (f.reaches(w, v) && !((s >> v) & 1)) {
          all_in = false;
          break;
        }
      if (all_in) out |= 1 << w;
    }
    box[s] = out;
  }
  a.box_t = std::move(box);
  return a;
}

}  // namespace gel
