#include "gel/io.hpp"

#include "doctest.h"
#include "gel/search.hpp"
#include "support/models.hpp"

using namespace gel;
using io::json;

TEST_CASE("truth algebra round-trip and validation on ingest") {
  TruthAlgebra a = complex_algebra(PreorderFrame{2, {1, 1, 0, 1}});
  json j = io::to_json(a);
  TruthAlgebra back = io::truth_algebra_from_json(j);
  CHECK(back.join_t == a.join_t);
  CHECK(back.meet_t == a.meet_t);
  CHECK(back.compl_t == a.compl_t);
  CHECK(back.box_t == a.box_t);

  json broken = j;
  broken["box"][0] = 1;  // box 0 = 1 violates EqT
  CHECK_THROWS_AS(io::truth_algebra_from_json(broken), io::IoError);
}

TEST_CASE("frame and content algebra round-trips") {
  PreorderFrame f{2, {1, 1, 0, 1}};
  PreorderFrame back = io::frame_from_json(io::to_json(f));
  CHECK(back.reach == f.reach);
  json not_s4 = io::to_json(f);
  not_s4["reach"][0][0] = false;
  CHECK_THROWS_AS(io::frame_from_json(not_s4), io::IoError);

  ContentAlgebra b;
  b.size = 2;
  b.join_t = {0, 1, 1, 1};
  b.gru_t = std::vector<Elem>{1, 0, 0, 1};
  ContentAlgebra cb = io::content_algebra_from_json(io::to_json(b));
  CHECK(cb.join_t == b.join_t);
  CHECK(cb.gru_t == b.gru_t);

  json bad = io::to_json(b);
  bad["join"][0][0] = 1;  // idempotence fails
  CHECK_THROWS_AS(io::content_algebra_from_json(bad), io::IoError);
}

TEST_CASE("model files round-trip, countermodels re-ingest") {
  SearchBounds bounds;
  auto cm = check_validity(Variant::lPAI, {parse("p")}, parse("[]p"), bounds);
  REQUIRE(cm.has_value());
  json j = io::to_json(cm->model);
  CHECK(j["schema_version"] == 1);
  GEModel back = io::ge_model_from_json(j);
  CHECK(back.variant == cm->model.variant);
  CHECK(eval(back, *parse("[]p")) == eval(cm->model, *parse("[]p")));
  CHECK(back.atom_value == cm->model.atom_value);

  json wrong_variant = j;
  wrong_variant["variant"] = "DAI";  // box table against a demodalized variant
  CHECK_THROWS_AS(io::ge_model_from_json(wrong_variant), io::IoError);
}

TEST_CASE("kripke model round-trip including homs") {
  TopicKripkeModel m;
  m.flavor = Flavor::Ferguson;
  m.frame = PreorderFrame{2, {1, 1, 0, 1}};
  m.world_names = {"w0", "w1"};
  ContentAlgebra b;
  b.size = 2;
  b.join_t = {0, 1, 1, 1};
  b.gru_t = std::vector<Elem>{0, 0, 0, 0};
  m.topics = {b, b};
  m.topic_of = {{{"p", 0}}, {{"p", 0}}};
  m.val = {{"p", 0b10}};
  m.homs[{0, 0}] = {0, 1};
  m.homs[{1, 1}] = {0, 1};
  m.homs[{0, 1}] = {0, 1};
  REQUIRE(!validate(m).has_value());

  TopicKripkeModel back = io::kripke_model_from_json(io::to_json(m));
  CHECK(back.flavor == Flavor::Ferguson);
  CHECK(back.frame.reach == m.frame.reach);
  CHECK(back.topic_of == m.topic_of);
  CHECK(back.val.at("p") == 0b10);
  CHECK(back.homs == m.homs);

  json no_homs = io::to_json(m);
  no_homs["homs"] = nullptr;
  CHECK_THROWS_AS(io::kripke_model_from_json(no_homs), io::IoError);
}

TEST_CASE("proof round-trip through json lines") {
  auto corpus = derivation_corpus();
  const CorpusItem& item = corpus.front();
  json j = io::to_json(item.proof);
  Proof back = io::proof_from_json(j, LanguageMode::Modal);
  REQUIRE(back.lines.size() == item.proof.lines.size());
  const Calculus* calc = calculus_by_name(item.calculus);
  CHECK(!check_proof(*calc, item.premises, back, &item.goal).has_value());

  // JSONL form
  std::string lines;
  for (const json& entry : j) lines += entry.dump() + "\n";
  Proof again = io::proof_from_text(lines, LanguageMode::Modal);
  CHECK(!check_proof(*calc, item.premises, again, &item.goal).has_value());
}
