#pragma once

#include <string>

#include "json.hpp"

#include "gel/calculus.hpp"
#include "gel/content_algebra.hpp"
#include "gel/ge_model.hpp"
#include "gel/kripke.hpp"
#include "gel/truth_algebra.hpp"

namespace gel::io {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// {"carrier": n, "join": [[..]], "meet": [[..]], "not": [..],
//  "box": [..] | null, "zero": i, "one": j}
json to_json(const TruthAlgebra& a);
TruthAlgebra truth_algebra_from_json(const json& j);

// {"worlds": n, "reach": [[bool]]}
json to_json(const PreorderFrame& f);
PreorderFrame frame_from_json(const json& j);

// {"carrier": n, "join": [[..]], "gru": [[..]] | null}
json to_json(const ContentAlgebra& b);
ContentAlgebra content_algebra_from_json(const json& j);

// {"schema_version": 1, "variant": "...", "truth": {...}, "content": {...},
//  "values": {"p": i}, "contents": {"p": j}}
json to_json(const GEModel& m);
GEModel ge_model_from_json(const json& j);

// frame + "topic_algebras" + {"topics": {"w0": {"p": i}}, "val": {"p": [0,1]},
// "flavor": "fine"|"ferguson", "homs": {"0->1": [..]} | null}
json to_json(const TopicKripkeModel& m);
TopicKripkeModel kripke_model_from_json(const json& j);

// One line object per proof line:
// {"formula": "...", "just": {"kind": "premise"|"axiom"|"mp"|"nec"|"nec_g",
//   "args": [..], "name": "...", "binding": {"A": "..."}}}
json to_json(const Proof& p);
Proof proof_from_json(const json& j, LanguageMode mode);

// JSONL: one line object per text line; a JSON array is accepted too.
Proof proof_from_text(const std::string& text, LanguageMode mode);

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace gel::io
