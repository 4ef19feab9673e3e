#include "gel/search.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace gel {

namespace {

bool frame_is_canonical(const std::vector<uint8_t>& reach, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<uint8_t> mapped(reach.size());
  while (std::next_permutation(perm.begin(), perm.end())) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        mapped[perm[i] * n + perm[j]] = reach[i * n + j];
    if (std::lexicographical_compare(mapped.begin(), mapped.end(), reach.begin(), reach.end()))
      return false;
  }
  return true;
}

}  // namespace

std::vector<PreorderFrame> enumerate_preorders(int n, bool dedup_iso) {
  if (n < 1 || n > kMaxWorlds)
    throw std::invalid_argument("enumerate_preorders: world cap exceeded");
  const int cells = n * (n - 1);
  std::vector<int> digits(cells, 0);
  std::vector<PreorderFrame> out;
  for (;;) {
    PreorderFrame f;
    f.worlds = n;
    f.reach.assign(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) f.reach[i * n + i] = 1;
    int k = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) f.reach[i * n + j] = static_cast<uint8_t>(digits[k++]);
    bool transitive = true;
    for (int x = 0; x < n && transitive; ++x)
      for (int y = 0; y < n && transitive; ++y)
        for (int z = 0; z < n; ++z)
          if (f.reaches(x, y) && f.reaches(y, z) && !f.reaches(x, z)) {
            transitive = false;
            break;
          }
    if (transitive && (!dedup_iso || frame_is_canonical(f.reach, n)))
      out.push_back(std::move(f));
    int pos = cells - 1;
    while (pos >= 0 && digits[pos] == 1) digits[pos--] = 0;
    if (pos < 0) break;
    ++digits[pos];
  }
  return out;
}

// ---------------------------------------------------------------------------

ModelEnumerator::ModelEnumerator(Variant v, std::vector<std::string> atoms,
                                 const SearchBounds& bounds)
    : variant_(v), atoms_(std::move(atoms)) {
  const VariantTraits& t = traits_of(v);
  if (bounds.max_worlds < 1 || bounds.max_worlds > kMaxWorlds)
    throw std::invalid_argument("model enumeration: world bound outside 1..4");
  if (bounds.max_topics < 1 || bounds.max_topics > kMaxTopics)
    throw std::invalid_argument("model enumeration: topic bound outside 1..5");
  std::sort(atoms_.begin(), atoms_.end());
  atoms_.erase(std::unique(atoms_.begin(), atoms_.end()), atoms_.end());

  for (int w = 1; w <= bounds.max_worlds; ++w) {
    if (t.language == LanguageMode::Demodalized) {
      truths_.push_back(std::make_shared<TruthAlgebra>(powerset_algebra(w)));
    } else if (t.identity_box) {
      // Box is the identity exactly on the discrete frame.
      TruthAlgebra a = powerset_algebra(w);
      std::vector<Elem> id(a.size);
      std::iota(id.begin(), id.end(), 0);
      a.box_t = std::move(id);
      truths_.push_back(std::make_shared<TruthAlgebra>(std::move(a)));
    } else {
      for (PreorderFrame& f : enumerate_preorders(w, bounds.dedup_iso))
        truths_.push_back(std::make_shared<TruthAlgebra>(complex_algebra(f)));
    }
  }

  bool agnostic = t.translation == TranslationMode::Agnostic;
  int topics = agnostic ? std::min(bounds.max_topics, kMaxAgnosticTopics) : bounds.max_topics;
  contents_ = enumerate_semilattices(topics, bounds.dedup_iso);

  if (bounds.shard) {
    auto [i, k] = *bounds.shard;
    if (k == 0 || i >= k) throw std::invalid_argument("model enumeration: bad shard");
    modulus_ = k;
    residue_ = i;
  }

  // Exact stream size; also guards against combinatorial blow-ups.
  auto pow_u64 = [](uint64_t b, uint64_t e) {
    uint64_t r = 1;
    while (e--) {
      if (b != 0 && r > kModelBudget) return kModelBudget + 1;
      r *= b;
    }
    return r;
  };
  for (const auto& tr : truths_)
    for (const auto& ca : contents_) {
      uint64_t grus = agnostic
                          ? pow_u64(ca.size, static_cast<uint64_t>(ca.size) * ca.size)
                          : 1;
      uint64_t assigns = pow_u64(tr->size, atoms_.size()) * pow_u64(ca.size, atoms_.size());
      total_ += grus * assigns;
      if (total_ > kModelBudget)
        throw std::runtime_error("model enumeration: stream of " + std::to_string(total_) +
                                 "+ models exceeds the budget");
    }

  value_digits_.assign(atoms_.size(), 0);
  content_digits_.assign(atoms_.size(), 0);
  if (!contents_.empty())
    gru_count_ = agnostic ? pow_u64(contents_[0].size,
                                    static_cast<uint64_t>(contents_[0].size) * contents_[0].size)
                          : 1;
  done_ = truths_.empty() || contents_.empty();
}

bool ModelEnumerator::advance() {
  // Mixed-radix odometer; least significant first: content assignment,
  // value assignment, gru table, content algebra, truth algebra.
  const ContentAlgebra& ca = contents_[content_i_];
  for (int i = static_cast<int>(content_digits_.size()) - 1; i >= 0; --i) {
    if (++content_digits_[i] < ca.size) return true;
    content_digits_[i] = 0;
  }
  const TruthAlgebra& tr = *truths_[truth_i_];
  for (int i = static_cast<int>(value_digits_.size()) - 1; i >= 0; --i) {
    if (++value_digits_[i] < tr.size) return true;
    value_digits_[i] = 0;
  }
  if (++gru_i_ < gru_count_) return true;
  gru_i_ = 0;
  bool agnostic = traits_of(variant_).translation == TranslationMode::Agnostic;
  auto reset_gru_count = [&] {
    if (!agnostic) {
      gru_count_ = 1;
      return;
    }
    uint64_t n = contents_[content_i_].size;
    gru_count_ = 1;
    for (uint64_t c = 0; c < n * n; ++c) gru_count_ *= n;
  };
  if (++content_i_ < contents_.size()) {
    reset_gru_count();
    return true;
  }
  content_i_ = 0;
  reset_gru_count();
  return ++truth_i_ < truths_.size();
}

void ModelEnumerator::materialize(GEModel& out) const {
  out.variant = variant_;
  out.truth = truths_[truth_i_];
  // Content algebras are rebuilt only when the join table or gru index
  // moves; assignments churn far more often than either.
  if (cached_content_i_ != content_i_ || cached_gru_i_ != gru_i_) {
    const ContentAlgebra& base = contents_[content_i_];
    auto ca = std::make_shared<ContentAlgebra>(base);
    if (traits_of(variant_).translation == TranslationMode::Agnostic) {
      const int n = base.size;
      std::vector<Elem> gru(static_cast<size_t>(n) * n);
      uint64_t rem = gru_i_;
      for (int cell = n * n - 1; cell >= 0; --cell) {
        gru[cell] = static_cast<Elem>(rem % n);
        rem /= n;
      }
      ca->gru_t = std::move(gru);
    }
    cached_content_ = std::move(ca);
    cached_content_i_ = content_i_;
    cached_gru_i_ = gru_i_;
  }
  out.content = cached_content_;
  if (out.atom_value.size() == atoms_.size() && out.atom_content.size() == atoms_.size()) {
    size_t i = 0;
    for (auto& [atom, e] : out.atom_value) e = value_digits_[i++];
    i = 0;
    for (auto& [atom, e] : out.atom_content) e = content_digits_[i++];
  } else {
    out.atom_value.clear();
    out.atom_content.clear();
    for (size_t i = 0; i < atoms_.size(); ++i) {
      out.atom_value[atoms_[i]] = value_digits_[i];
      out.atom_content[atoms_[i]] = content_digits_[i];
    }
  }
}

bool ModelEnumerator::next(GEModel& out) {
  for (;;) {
    if (done_) return false;
    if (fresh_) {
      fresh_ = false;
    } else if (!advance()) {
      done_ = true;
      return false;
    }
    uint64_t pos = index_++;
    if (pos % modulus_ == residue_) {
      materialize(out);
      return true;
    }
  }
}

// ---------------------------------------------------------------------------

namespace {

struct Hit {
  GEModel model;
  std::optional<Elem> witness;
  uint64_t index;
};

std::optional<Hit> scan_shard(Variant v, const std::vector<FormulaPtr>& premises,
                              const FormulaPtr& goal, const std::vector<std::string>& atoms,
                              SearchBounds bounds) {
  ModelEnumerator en(v, atoms, bounds);
  bool order = traits_of(v).consequence == ConsequenceMode::Order;
  GEModel m;
  while (en.next(m)) {
    if (order) {
      Elem bound = m.truth->one;
      for (const FormulaPtr& p : premises) bound = m.truth->meet(bound, eval(m, *p));
      if (!m.truth->leq(bound, eval(m, *goal)))
        return Hit{m, bound, en.index()};
    } else {
      bool all_one = true;
      for (const FormulaPtr& p : premises)
        if (eval(m, *p) != m.truth->one) {
          all_one = false;
          break;
        }
      if (all_one && eval(m, *goal) != m.truth->one)
        return Hit{m, std::nullopt, en.index()};
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Countermodel> check_validity(Variant v, const std::vector<FormulaPtr>& premises,
                                           const FormulaPtr& goal, const SearchBounds& bounds) {
  std::set<std::string> atom_set = variables(*goal);
  for (const FormulaPtr& p : premises) {
    auto vs = variables(*p);
    atom_set.insert(vs.begin(), vs.end());
  }
  std::vector<std::string> atoms(atom_set.begin(), atom_set.end());

  const LanguageMode lang = traits_of(v).language;
  if (lang == LanguageMode::Demodalized) {
    if (contains_box(*goal)) throw std::invalid_argument("goal uses box in a demodalized logic");
    for (const FormulaPtr& p : premises)
      if (contains_box(*p)) throw std::invalid_argument("premise uses box in a demodalized logic");
  }

  int jobs = std::max(1, bounds.jobs);
  std::optional<Hit> best;
  if (jobs == 1) {
    best = scan_shard(v, premises, goal, atoms, bounds);
  } else {
    // Thread t scans every jobs-th position of the requested shard; the
    // merge keeps the hit that comes first in the unsharded stream.
    uint64_t base_mod = 1, base_res = 0;
    if (bounds.shard) {
      base_mod = bounds.shard->second;
      base_res = bounds.shard->first;
    }
    std::vector<std::optional<Hit>> hits(jobs);
    std::vector<std::thread> workers;
    for (int t = 0; t < jobs; ++t)
      workers.emplace_back([&, t] {
        SearchBounds mine = bounds;
        mine.shard = {{base_res + base_mod * static_cast<uint64_t>(t),
                       base_mod * static_cast<uint64_t>(jobs)}};
        mine.jobs = 1;
        hits[t] = scan_shard(v, premises, goal, atoms, mine);
      });
    for (auto& w : workers) w.join();
    for (auto& h : hits)
      if (h && (!best || h->index < best->index)) best = std::move(h);
  }

  if (!best) return std::nullopt;
  Countermodel cm;
  cm.model = best->model;
  // Detach from enumerator-owned storage.
  cm.model.truth = std::make_shared<TruthAlgebra>(*best->model.truth);
  cm.model.content = std::make_shared<ContentAlgebra>(*best->model.content);
  cm.witness_x = best->witness;
  cm.index = best->index;
  return cm;
}

}  // namespace gel
