// Criterion 5: for sampled Fine models (<= 3 worlds, <= 3 topics, 2 atoms)
// and every formula to depth 3, forcing at the root coincides with root
// membership in the bridged algebra model.
//
// The sweep evaluates the whole pool bottom-up with flat arrays (forcing
// masks and per-world topics on the Kripke side, values and contents on
// the algebra side, all through the library's own tables); a sampled slice
// is re-checked against the recursive forces/eval entry points to pin the
// two paths together.

#include <chrono>
#include <ostream>

#include "../support/fine_models.hpp"
#include "support.hpp"

namespace gel::acceptance {

namespace {

struct BridgeArrays {
  std::vector<uint64_t> force;          // per node, mask over worlds
  std::vector<Elem> topic;              // node-major, per world
  std::vector<Elem> value, content;     // algebra side
};

void sweep(const CompiledPool& pool, const TopicKripkeModel& sub, const GEModel& ge,
           BridgeArrays& out) {
  const int w = sub.worlds();
  const uint64_t everywhere = (uint64_t{1} << w) - 1;
  const size_t n = pool.ops.size();
  out.force.assign(n, 0);
  out.topic.assign(n * w, 0);
  out.value.assign(n, 0);
  out.content.assign(n, 0);
  std::vector<uint64_t> succ(w);
  for (int i = 0; i < w; ++i) succ[i] = sub.frame.successors(i);
  const TruthAlgebra& truth = *ge.truth;
  const ContentAlgebra& contents = *ge.content;

  for (size_t i = 0; i < n; ++i) {
    const CompiledPool::Op& op = pool.ops[i];
    switch (op.kind) {
      case Conn::Atom: {
        const std::string& a = pool.atoms[op.atom];
        out.force[i] = sub.val.at(a) & everywhere;
        for (int v = 0; v < w; ++v) out.topic[i * w + v] = sub.topic_of[v].at(a);
        out.value[i] = ge.atom_value.at(a);
        out.content[i] = ge.atom_content.at(a);
        break;
      }
      case Conn::Neg:
        out.force[i] = ~out.force[op.lhs] & everywhere;
        for (int v = 0; v < w; ++v) out.topic[i * w + v] = out.topic[op.lhs * w + v];
        out.value[i] = truth.complement(out.value[op.lhs]);
        out.content[i] = out.content[op.lhs];
        break;
      case Conn::Box: {
        uint64_t inner = out.force[op.lhs];
        uint64_t mask = 0;
        for (int v = 0; v < w; ++v)
          if ((succ[v] & ~inner) == 0) mask |= uint64_t{1} << v;
        out.force[i] = mask;
        for (int v = 0; v < w; ++v) out.topic[i * w + v] = out.topic[op.lhs * w + v];
        out.value[i] = truth.box(out.value[op.lhs]);
        out.content[i] = out.content[op.lhs];
        break;
      }
      case Conn::Or:
        out.force[i] = out.force[op.lhs] | out.force[op.rhs];
        for (int v = 0; v < w; ++v)
          out.topic[i * w + v] =
              sub.topics[v].join(out.topic[op.lhs * w + v], out.topic[op.rhs * w + v]);
        out.value[i] = truth.join(out.value[op.lhs], out.value[op.rhs]);
        out.content[i] = contents.join(out.content[op.lhs], out.content[op.rhs]);
        break;
      case Conn::Arrow: {
        uint64_t material = (~out.force[op.lhs] | out.force[op.rhs]) & everywhere;
        uint64_t mask = 0;
        for (int v = 0; v < w; ++v) {
          if (!sub.topics[v].leq(out.topic[op.rhs * w + v], out.topic[op.lhs * w + v])) continue;
          if ((succ[v] & ~material) == 0) mask |= uint64_t{1} << v;
        }
        out.force[i] = mask;
        for (int v = 0; v < w; ++v)
          out.topic[i * w + v] =
              sub.topics[v].join(out.topic[op.lhs * w + v], out.topic[op.rhs * w + v]);
        if (contents.leq(out.content[op.rhs], out.content[op.lhs])) {
          Elem mat = truth.join(truth.complement(out.value[op.lhs]), out.value[op.rhs]);
          out.value[i] = truth.box(mat);
        } else {
          out.value[i] = truth.zero;
        }
        out.content[i] = contents.join(out.content[op.lhs], out.content[op.rhs]);
        break;
      }
    }
  }
}

}  // namespace

bool run_c5(std::ostream& log) {
  auto t0 = std::chrono::steady_clock::now();
  auto models = testing::sample_fine_models(3, 3, {"p", "q"}, 40);
  if (models.size() < 500) {
    log << "  sample too small: " << models.size() << " models\n";
    return false;
  }
  CompiledPool pool = CompiledPool::build({"p", "q"}, 3, true);
  log << "  " << models.size() << " models, " << pool.ops.size() << " pooled formulas\n";

  BridgeArrays arrays;
  uint64_t compared = 0, spot_checks = 0;
  size_t model_i = 0;
  for (const TopicKripkeModel& m : models) {
    ++model_i;
    for (int root = 0; root < m.worlds(); ++root) {
      TopicKripkeModel sub = generated_submodel(m, {root});
      BridgedModel bridged = to_ge_model(m, root);
      sweep(pool, sub, bridged.model, arrays);
      for (size_t i = 0; i < pool.ops.size(); ++i) {
        bool forced = (arrays.force[i] >> bridged.root_index) & 1;
        bool member = (arrays.value[i] >> bridged.root_index) & 1;
        ++compared;
        if (forced != member) {
          log << "  mismatch at model " << model_i << ", root " << root << ", formula "
              << print(pool.nodes[i]) << "\n";
          return false;
        }
      }
      // pin the array sweep to the recursive entry points now and then
      if (model_i % 97 == 1 && root == 0) {
        for (size_t i = 0; i < pool.ops.size(); i += 1009) {
          ++spot_checks;
          if (forces(sub, bridged.root_index, *pool.nodes[i]) !=
                  static_cast<bool>((arrays.force[i] >> bridged.root_index) & 1) ||
              eval(bridged.model, *pool.nodes[i]) != arrays.value[i] ||
              content_of(bridged.model, *pool.nodes[i]) != arrays.content[i]) {
            log << "  array sweep diverges from the recursive evaluators on "
                << print(pool.nodes[i]) << "\n";
            return false;
          }
        }
      }
    }
  }
  auto secs = std::chrono::duration_cast<std::chrono::seconds>(std::chrono::steady_clock::now() - t0)
                  .count();
  log << "  " << compared << " root comparisons, zero mismatches; " << spot_checks
      << " recursive spot checks; " << secs << " s\n";
  return true;
}

}  // namespace gel::acceptance
