#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gel/formula.hpp"
#include "gel/truth_algebra.hpp"  // Elem, LawViolation

namespace gel {

// Finite join-semilattice of topics, optionally extended with the
// unconstrained binary operation used for arrow contents. No law is
// imposed on gru; join must be associative, commutative and idempotent.
struct ContentAlgebra {
  int size = 0;
  std::vector<Elem> join_t;  // size*size, row-major
  std::optional<std::vector<Elem>> gru_t;

  Elem join(Elem a, Elem b) const { return join_t[a * size + b]; }
  Elem gru(Elem a, Elem b) const { return (*gru_t)[a * size + b]; }
  bool has_gru() const { return gru_t.has_value(); }
  bool leq(Elem a, Elem b) const { return join(a, b) == b; }
  bool in_carrier(Elem a) const { return a >= 0 && a < size; }
};

std::optional<LawViolation> validate(const ContentAlgebra& b);

using ContentAssignment = std::map<std::string, Elem>;

// Induced partial order of the semilattice. Throws on out-of-carrier ids.
bool leq(const ContentAlgebra& b, Elem x, Elem y);

// Homomorphic evaluation of a content term. Throws on an atom missing from
// the assignment and on a gru node against a gru-less algebra.
Elem eval_content(const ContentAlgebra& b, const ContentAssignment& s, const ContentTerm& t);

inline constexpr int kMaxTopics = 5;

// Every join table on carriers of size 1..max_size that satisfies the
// semilattice laws, sizes ascending, tables in lexicographic order.
// With dedup_iso only the lexicographically least member of each
// isomorphism class is kept. Results carry no gru table.
std::vector<ContentAlgebra> enumerate_semilattices(int max_size, bool dedup_iso = true);

}  // namespace gel
