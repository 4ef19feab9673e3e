#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gel/content_algebra.hpp"
#include "gel/formula.hpp"
#include "gel/ge_model.hpp"
#include "gel/truth_algebra.hpp"

namespace gel {

enum class Flavor { Fine, Ferguson };

// S4 frame with a topic semilattice per world, topic assignments for the
// atoms, and a subset valuation. Ferguson models additionally carry the
// arrow operation in each topic algebra and a homomorphism per edge.
struct TopicKripkeModel {
  PreorderFrame frame;
  std::vector<std::string> world_names;          // defaults to w0, w1, ...
  std::vector<ContentAlgebra> topics;            // one algebra per world
  std::vector<ContentAssignment> topic_of;       // per-world atom topics
  std::map<std::string, uint64_t> val;           // atom -> bitmask of worlds
  Flavor flavor = Flavor::Fine;
  // h[{w,w'}] maps T_w into T_w' for every edge w -> w' (Ferguson only).
  std::map<std::pair<int, int>, std::vector<Elem>> homs;

  int worlds() const { return frame.worlds; }
};

std::optional<int> world_index(const TopicKripkeModel& m, const std::string& name);

// Fine flavor: S4 frame, per-world semilattices, and stability of the
// content order along the reach relation, i.e. for w -> w' and any atom
// sets P, Q: join of P's topics <= join of Q's topics at w iff the same
// holds at w'. Stability both ways is what keeps the arrow's content test
// constant across a rooted model, which the algebra bridge relies on; the
// one-directional variable condition alone admits models whose arrows
// change truth value between worlds in ways no single content algebra can
// reproduce.
// Ferguson flavor: a homomorphism per edge, compatible with the atom topics.
std::optional<std::string> validate(const TopicKripkeModel& m);

// Recursive topic of a formula at a world: atoms from topic_of, negation
// and box transparent, binaries by join, arrows by the world's own gru in
// Ferguson models.
Elem topic_at(const TopicKripkeModel& m, int w, const Formula& f);

// Forcing. Arrows demand the consequent's topic within the antecedent's
// plus the strict material conditional over the successors.
bool forces(const TopicKripkeModel& m, int w, const Formula& f);

// Per-node memoized forcing and topics over a structurally shared pool.
class ForcingCache {
 public:
  explicit ForcingCache(const TopicKripkeModel& m) : m_(m) {}
  bool forces(const FormulaPtr& f, int w) { return (mask(f) >> w) & 1; }
  uint64_t mask(const FormulaPtr& f);
  Elem topic(const FormulaPtr& f, int w);

 private:
  const TopicKripkeModel& m_;
  std::unordered_map<const Formula*, uint64_t> mask_;
  std::unordered_map<const Formula*, std::vector<Elem>> topics_;
};

// Restriction to the upward closure of the given roots; world order and
// names are preserved. Forcing is invariant on the kept worlds.
TopicKripkeModel generated_submodel(const TopicKripkeModel& m, const std::vector<int>& roots);

// Replaces each world's topic algebra by the subalgebra its assigned atom
// topics generate under join, re-indexing elements. Fine flavor only;
// forcing is unchanged everywhere.
TopicKripkeModel surjectivize(const TopicKripkeModel& m);

struct BridgedModel {
  GEModel model;
  int root_index = 0;  // bit position of the root inside the rooted submodel
};

// Complex-algebra bridge: the rooted submodel's frame provides the truth
// algebra, the root's topic algebra the contents, and the root's topic
// assignment the atom contents. Fine models bridge to the fused variant,
// Ferguson models to the agnostic one.
BridgedModel to_ge_model(const TopicKripkeModel& m, int root);

}  // namespace gel
