#pragma once

#include <memory>

#include "gel/ge_model.hpp"
#include "gel/search.hpp"

namespace gel::testing {

inline std::shared_ptr<const TruthAlgebra> two_valued(bool with_box) {
  TruthAlgebra a;
  a.size = 2;
  a.join_t = {0, 1, 1, 1};
  a.meet_t = {0, 0, 0, 1};
  a.compl_t = {1, 0};
  a.zero = 0;
  a.one = 1;
  if (with_box) a.box_t = std::vector<Elem>{0, 1};
  return std::make_shared<TruthAlgebra>(std::move(a));
}

inline std::shared_ptr<const ContentAlgebra> content_chain(int n, bool with_gru = false,
                                                           Elem gru_const = 0) {
  ContentAlgebra b;
  b.size = n;
  b.join_t.resize(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b.join_t[i * n + j] = i > j ? i : j;
  if (with_gru) b.gru_t = std::vector<Elem>(static_cast<size_t>(n) * n, gru_const);
  return std::make_shared<ContentAlgebra>(std::move(b));
}

}  // namespace gel::testing
