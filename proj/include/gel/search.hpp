#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gel/ge_model.hpp"
#include "gel/truth_algebra.hpp"

namespace gel {

inline constexpr int kMaxWorlds = 4;
inline constexpr int kMaxAgnosticTopics = 3;
inline constexpr uint64_t kModelBudget = uint64_t{1} << 33;

struct SearchBounds {
  int max_worlds = 3;
  int max_topics = 4;  // agnostic variants are capped at kMaxAgnosticTopics
  bool dedup_iso = true;
  std::optional<std::pair<uint64_t, uint64_t>> shard;  // (index, count)
  int jobs = 1;
};

// All reflexive-transitive relations on n worlds, in lexicographic order of
// the reach matrix; with dedup_iso only the least member of each relabeling
// orbit is kept.
std::vector<PreorderFrame> enumerate_preorders(int n, bool dedup_iso = true);

// Deterministic stream over the gE-models of a variant: truth algebras from
// frames (complex algebras; plain powersets for demodalized variants, the
// box forced to the identity for variants that demand it), content algebras
// of ascending size (all gru tables when the translation is agnostic), and
// all atom assignments on both sides. Restartable; shards partition the
// stream by enumeration index.
class ModelEnumerator {
 public:
  ModelEnumerator(Variant v, std::vector<std::string> atoms, const SearchBounds& bounds);

  // Yields the next model of this enumerator's shard. False at exhaustion.
  bool next(GEModel& out);

  // Index of the model last yielded (position in the unsharded stream).
  uint64_t index() const { return index_ - 1; }

  // Exact size of the unsharded stream.
  uint64_t total_count() const { return total_; }

 private:
  void materialize(GEModel& out) const;
  bool advance();

  Variant variant_;
  std::vector<std::string> atoms_;
  std::vector<std::shared_ptr<const TruthAlgebra>> truths_;
  std::vector<ContentAlgebra> contents_;
  uint64_t modulus_ = 1, residue_ = 0;
  uint64_t index_ = 0;
  uint64_t total_ = 0;

  // Odometer state.
  size_t truth_i_ = 0, content_i_ = 0;
  uint64_t gru_i_ = 0, gru_count_ = 1;
  std::vector<int> value_digits_, content_digits_;
  bool fresh_ = true, done_ = false;

  mutable std::shared_ptr<const ContentAlgebra> cached_content_;
  mutable size_t cached_content_i_ = SIZE_MAX;
  mutable uint64_t cached_gru_i_ = UINT64_MAX;
};

}  // namespace gel
