#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gel {

using Elem = int;

// A reported law failure: which equation broke and on which elements.
struct LawViolation {
  std::string equation;
  std::vector<Elem> witness;
};

// Finite Boolean algebra, optionally carrying an interior operator.
// Element ids are dense 0..size-1; for powerset-built algebras the id of a
// subset is its bitmask.
struct TruthAlgebra {
  int size = 0;
  std::vector<Elem> join_t;   // size*size, row-major
  std::vector<Elem> meet_t;
  std::vector<Elem> compl_t;
  std::optional<std::vector<Elem>> box_t;
  Elem zero = 0, one = 0;

  Elem join(Elem a, Elem b) const { return join_t[a * size + b]; }
  Elem meet(Elem a, Elem b) const { return meet_t[a * size + b]; }
  Elem complement(Elem a) const { return compl_t[a]; }
  Elem box(Elem a) const { return (*box_t)[a]; }
  bool has_box() const { return box_t.has_value(); }
  // Every order in this library is the join order: a <= b iff a v b = b.
  bool leq(Elem a, Elem b) const { return join(a, b) == b; }
  bool in_carrier(Elem a) const { return a >= 0 && a < size; }
};

// Exhaustive check of the Boolean equational base, and of the interior
// equations when a box table is present. Returns the first failure.
std::optional<LawViolation> validate(const TruthAlgebra& a);

inline constexpr int kMaxPowersetAtoms = 5;

// Powerset of an n-element set as a Boolean algebra over bitmask ids.
// No box table. n must be in [1, kMaxPowersetAtoms].
TruthAlgebra powerset_algebra(int n_atoms);

// Reflexive-transitive frame over worlds 0..worlds-1.
struct PreorderFrame {
  int worlds = 0;
  std::vector<uint8_t> reach;  // worlds*worlds, row-major

  bool reaches(int w, int v) const { return reach[w * worlds + v] != 0; }
  uint64_t successors(int w) const {
    uint64_t mask = 0;
    for (int v = 0; v < worlds; ++v)
      if (reaches(w, v)) mask |= uint64_t{1} << v;
    return mask;
  }
};

// S4 conditions: reflexivity and transitivity.
std::optional<LawViolation> validate(const PreorderFrame& f);

// Full complex algebra of an S4 frame: powerset over worlds with
// box S = {x in S | R[x] subset of S}. Always an interior algebra.
TruthAlgebra complex_algebra(const PreorderFrame& f);

}  // namespace gel
