#include "gel/content_algebra.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gel {

std::optional<LawViolation> validate(const ContentAlgebra& b) {
  if (b.size <= 0 || b.join_t.size() != static_cast<size_t>(b.size) * b.size)
    return LawViolation{"join table total on a non-empty carrier", {}};
  const int n = b.size;
  auto in = [&](Elem e) { return b.in_carrier(e); };
  for (Elem e : b.join_t)
    if (!in(e)) return LawViolation{"join values in carrier", {e}};
  if (b.gru_t) {
    if (b.gru_t->size() != static_cast<size_t>(n) * n)
      return LawViolation{"gru table total", {}};
    for (Elem e : *b.gru_t)
      if (!in(e)) return LawViolation{"gru values in carrier", {e}};
  }
  for (Elem x = 0; x < n; ++x) {
    if (b.join(x, x) != x) return LawViolation{"idempotence", {x}};
    for (Elem y = 0; y < n; ++y) {
      if (b.join(x, y) != b.join(y, x)) return LawViolation{"commutativity", {x, y}};
      for (Elem z = 0; z < n; ++z)
        if (b.join(x, b.join(y, z)) != b.join(b.join(x, y), z))
          return LawViolation{"associativity", {x, y, z}};
    }
  }
  return std::nullopt;
}

bool leq(const ContentAlgebra& b, Elem x, Elem y) {
  if (!b.in_carrier(x) || !b.in_carrier(y))
    throw std::out_of_range("leq: element outside carrier");
  return b.leq(x, y);
}

Elem eval_content(const ContentAlgebra& b, const ContentAssignment& s, const ContentTerm& t) {
  switch (t.kind) {
    case ContentConn::TAtom: {
      auto it = s.find(t.name);
      if (it == s.end())
        throw std::out_of_range("eval_content: no content assigned to atom " + t.name);
      if (!b.in_carrier(it->second))
        throw std::out_of_range("eval_content: content of " + t.name + " outside carrier");
      return it->second;
    }
    case ContentConn::Join:
      return b.join(eval_content(b, s, *t.lhs), eval_content(b, s, *t.rhs));
    case ContentConn::Gru:
      if (!b.has_gru())
        throw std::invalid_argument("eval_content: gru term against a gru-less algebra");
      return b.gru(eval_content(b, s, *t.lhs), eval_content(b, s, *t.rhs));
  }
  return 0;
}

namespace {

bool is_canonical(const std::vector<Elem>& table, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Elem> mapped(table.size());
  while (std::next_permutation(perm.begin(), perm.end())) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        mapped[perm[i] * n + perm[j]] = perm[table[i * n + j]];
    if (std::lexicographical_compare(mapped.begin(), mapped.end(), table.begin(), table.end()))
      return false;
  }
  return true;
}

void enumerate_size(int n, bool dedup_iso, std::vector<ContentAlgebra>& out) {
  const int free_cells = n * (n - 1) / 2;
  std::vector<int> digits(free_cells, 0);
  std::vector<Elem> table(static_cast<size_t>(n) * n);
  for (;;) {
    // Diagonal by idempotence, triangle from the odometer, mirror for
    // commutativity, then the associativity filter.
    for (int i = 0; i < n; ++i) table[i * n + i] = i;
    int k = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        table[i * n + j] = digits[k];
        table[j * n + i] = digits[k];
        ++k;
      }
    bool assoc = true;
    for (int x = 0; x < n && assoc; ++x)
      for (int y = 0; y < n && assoc; ++y)
        for (int z = 0; z < n; ++z)
          if (table[x * n + table[y * n + z]] != table[table[x * n + y] * n + z]) {
            assoc = false;
            break;
          }
    if (assoc && (!dedup_iso || is_canonical(table, n)))
      out.push_back(ContentAlgebra{n, table, std::nullopt});
    int pos = free_cells - 1;
    while (pos >= 0 && digits[pos] == n - 1) digits[pos--] = 0;
    if (pos < 0) break;
    ++digits[pos];
  }
}

}  // namespace

std::vector<ContentAlgebra> enumerate_semilattices(int max_size, bool dedup_iso) {
  if (max_size < 1 || max_size > kMaxTopics)
    throw std::invalid_argument("enumerate_semilattices: size bound exceeded");
  std::vector<ContentAlgebra> out;
  for (int n = 1; n <= max_size; ++n) enumerate_size(n, dedup_iso, out);
  return out;
}

}  // namespace gel
