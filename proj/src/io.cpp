#include "gel/io.hpp"

#include <sstream>

namespace gel::io {

namespace {

std::vector<Elem> table_from(const json& j, int n, const std::string& what) {
  if (!j.is_array() || j.size() != static_cast<size_t>(n))
    throw IoError(what + ": expected " + std::to_string(n) + " rows");
  std::vector<Elem> out;
  out.reserve(static_cast<size_t>(n) * n);
  for (const json& row : j) {
    if (!row.is_array() || row.size() != static_cast<size_t>(n))
      throw IoError(what + ": ragged table");
    for (const json& cell : row) out.push_back(cell.get<Elem>());
  }
  return out;
}

json table_to(const std::vector<Elem>& t, int n) {
  json rows = json::array();
  for (int i = 0; i < n; ++i) {
    json row = json::array();
    for (int j = 0; j < n; ++j) row.push_back(t[i * n + j]);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

json to_json(const TruthAlgebra& a) {
  json j{{"carrier", a.size},
         {"join", table_to(a.join_t, a.size)},
         {"meet", table_to(a.meet_t, a.size)},
         {"not", a.compl_t},
         {"zero", a.zero},
         {"one", a.one}};
  j["box"] = a.box_t ? json(*a.box_t) : json(nullptr);
  return j;
}

TruthAlgebra truth_algebra_from_json(const json& j) {
  TruthAlgebra a;
  a.size = j.at("carrier").get<int>();
  if (a.size <= 0 || a.size > 64) throw IoError("truth algebra: carrier outside 1..64");
  a.join_t = table_from(j.at("join"), a.size, "join");
  a.meet_t = table_from(j.at("meet"), a.size, "meet");
  a.compl_t = j.at("not").get<std::vector<Elem>>();
  if (a.compl_t.size() != static_cast<size_t>(a.size)) throw IoError("truth algebra: bad 'not'");
  a.zero = j.at("zero").get<Elem>();
  a.one = j.at("one").get<Elem>();
  if (j.contains("box") && !j.at("box").is_null()) {
    a.box_t = j.at("box").get<std::vector<Elem>>();
    if (a.box_t->size() != static_cast<size_t>(a.size)) throw IoError("truth algebra: bad 'box'");
  }
  if (auto bad = validate(a)) throw IoError("truth algebra: " + bad->equation);
  return a;
}

json to_json(const PreorderFrame& f) {
  json rows = json::array();
  for (int i = 0; i < f.worlds; ++i) {
    json row = json::array();
    for (int j = 0; j < f.worlds; ++j) row.push_back(static_cast<bool>(f.reaches(i, j)));
    rows.push_back(std::move(row));
  }
  return json{{"worlds", f.worlds}, {"reach", rows}};
}

PreorderFrame frame_from_json(const json& j) {
  PreorderFrame f;
  f.worlds = j.at("worlds").get<int>();
  if (f.worlds <= 0 || f.worlds > kMaxPowersetAtoms) throw IoError("frame: bad world count");
  const json& rows = j.at("reach");
  if (!rows.is_array() || rows.size() != static_cast<size_t>(f.worlds))
    throw IoError("frame: bad reach matrix");
  for (const json& row : rows) {
    if (!row.is_array() || row.size() != static_cast<size_t>(f.worlds))
      throw IoError("frame: ragged reach matrix");
    for (const json& cell : row) f.reach.push_back(cell.get<bool>() ? 1 : 0);
  }
  if (auto bad = validate(f)) throw IoError("frame: not S4 (" + bad->equation + ")");
  return f;
}

json to_json(const ContentAlgebra& b) {
  json j{{"carrier", b.size}, {"join", table_to(b.join_t, b.size)}};
  j["gru"] = b.gru_t ? table_to(*b.gru_t, b.size) : json(nullptr);
  return j;
}

ContentAlgebra content_algebra_from_json(const json& j) {
  ContentAlgebra b;
  b.size = j.at("carrier").get<int>();
  if (b.size <= 0 || b.size > 64) throw IoError("content algebra: carrier outside 1..64");
  b.join_t = table_from(j.at("join"), b.size, "join");
  if (j.contains("gru") && !j.at("gru").is_null())
    b.gru_t = table_from(j.at("gru"), b.size, "gru");
  if (auto bad = validate(b)) throw IoError("content algebra: " + bad->equation);
  return b;
}

json to_json(const GEModel& m) {
  json values = json::object(), contents = json::object();
  for (const auto& [a, e] : m.atom_value) values[a] = e;
  for (const auto& [a, e] : m.atom_content) contents[a] = e;
  return json{{"schema_version", kSchemaVersion},
              {"variant", name_of(m.variant)},
              {"truth", to_json(*m.truth)},
              {"content", to_json(*m.content)},
              {"values", values},
              {"contents", contents}};
}

GEModel ge_model_from_json(const json& j) {
  GEModel m;
  auto v = variant_from_name(j.at("variant").get<std::string>());
  if (!v) throw IoError("model: unknown variant " + j.at("variant").get<std::string>());
  m.variant = *v;
  m.truth = std::make_shared<TruthAlgebra>(truth_algebra_from_json(j.at("truth")));
  m.content = std::make_shared<ContentAlgebra>(content_algebra_from_json(j.at("content")));
  for (const auto& [a, e] : j.at("values").items()) m.atom_value[a] = e.get<Elem>();
  for (const auto& [a, e] : j.at("contents").items()) m.atom_content[a] = e.get<Elem>();
  if (auto bad = validate(m)) throw IoError("model: " + *bad);
  return m;
}

json to_json(const TopicKripkeModel& m) {
  json algebras = json::array();
  for (const ContentAlgebra& b : m.topics) algebras.push_back(to_json(b));
  json topics = json::object();
  for (int w = 0; w < m.worlds(); ++w) {
    json per = json::object();
    for (const auto& [a, e] : m.topic_of[w]) per[a] = e;
    topics[m.world_names.empty() ? "w" + std::to_string(w) : m.world_names[w]] = per;
  }
  json val = json::object();
  for (const auto& [a, mask] : m.val) {
    json worlds = json::array();
    for (int w = 0; w < m.worlds(); ++w)
      if ((mask >> w) & 1) worlds.push_back(w);
    val[a] = worlds;
  }
  json j{{"schema_version", kSchemaVersion},
         {"frame", to_json(m.frame)},
         {"topic_algebras", algebras},
         {"topics", topics},
         {"val", val},
         {"flavor", m.flavor == Flavor::Fine ? "fine" : "ferguson"}};
  if (m.homs.empty()) {
    j["homs"] = nullptr;
  } else {
    json homs = json::object();
    for (const auto& [edge, h] : m.homs)
      homs[std::to_string(edge.first) + "->" + std::to_string(edge.second)] = h;
    j["homs"] = homs;
  }
  return j;
}

TopicKripkeModel kripke_model_from_json(const json& j) {
  TopicKripkeModel m;
  m.frame = frame_from_json(j.at("frame"));
  const int n = m.frame.worlds;
  std::string flavor = j.at("flavor").get<std::string>();
  if (flavor == "fine")
    m.flavor = Flavor::Fine;
  else if (flavor == "ferguson")
    m.flavor = Flavor::Ferguson;
  else
    throw IoError("kripke model: unknown flavor " + flavor);
  for (const json& b : j.at("topic_algebras")) m.topics.push_back(content_algebra_from_json(b));
  m.topic_of.resize(n);
  for (int w = 0; w < n; ++w) m.world_names.push_back("w" + std::to_string(w));
  for (const auto& [name, per] : j.at("topics").items()) {
    auto idx = world_index(m, name);
    if (!idx) throw IoError("kripke model: unknown world " + name);
    for (const auto& [a, e] : per.items()) m.topic_of[*idx][a] = e.get<Elem>();
  }
  for (const auto& [a, worlds] : j.at("val").items()) {
    uint64_t mask = 0;
    for (const json& w : worlds) {
      int idx = w.get<int>();
      if (idx < 0 || idx >= n) throw IoError("kripke model: valuation world out of range");
      mask |= uint64_t{1} << idx;
    }
    m.val[a] = mask;
  }
  if (j.contains("homs") && !j.at("homs").is_null()) {
    for (const auto& [edge, h] : j.at("homs").items()) {
      auto sep = edge.find("->");
      if (sep == std::string::npos) throw IoError("kripke model: bad hom edge " + edge);
      int a = std::stoi(edge.substr(0, sep));
      int b = std::stoi(edge.substr(sep + 2));
      m.homs[{a, b}] = h.get<std::vector<Elem>>();
    }
  }
  if (auto bad = validate(m)) throw IoError("kripke model: " + *bad);
  return m;
}

namespace {

const char* just_kind_name(Justification::Kind k) {
  switch (k) {
    case Justification::Kind::Premise: return "premise";
    case Justification::Kind::Axiom: return "axiom";
    case Justification::Kind::MP: return "mp";
    case Justification::Kind::Nec: return "nec";
    case Justification::Kind::NecG: return "nec_g";
  }
  return "?";
}

}  // namespace

json to_json(const Proof& p) {
  json lines = json::array();
  for (const ProofLine& line : p.lines) {
    json just{{"kind", just_kind_name(line.just.kind)}};
    switch (line.just.kind) {
      case Justification::Kind::Premise: just["args"] = json::array({line.just.i}); break;
      case Justification::Kind::MP: just["args"] = json::array({line.just.i, line.just.j}); break;
      case Justification::Kind::Nec:
      case Justification::Kind::NecG: just["args"] = json::array({line.just.i}); break;
      case Justification::Kind::Axiom: {
        just["name"] = line.just.axiom;
        if (line.just.binding) {
          json b = json::object();
          for (const auto& [k, f] : *line.just.binding) b[k] = print(f);
          just["binding"] = b;
        }
        break;
      }
    }
    lines.push_back(json{{"formula", print(line.formula)}, {"just", just}});
  }
  return lines;
}

Proof proof_from_json(const json& j, LanguageMode mode) {
  if (!j.is_array()) throw IoError("proof: expected an array of lines");
  Proof p;
  for (const json& entry : j) {
    ProofLine line;
    line.formula = parse(entry.at("formula").get<std::string>(), mode);
    const json& just = entry.at("just");
    std::string kind = just.at("kind").get<std::string>();
    auto arg = [&](size_t k) { return just.at("args").at(k).get<int>(); };
    if (kind == "premise") {
      line.just.kind = Justification::Kind::Premise;
      line.just.i = arg(0);
    } else if (kind == "axiom") {
      line.just.kind = Justification::Kind::Axiom;
      line.just.axiom = just.at("name").get<std::string>();
      if (just.contains("binding") && !just.at("binding").is_null()) {
        Binding b;
        for (const auto& [k, f] : just.at("binding").items())
          b[k] = parse(f.get<std::string>(), mode);
        line.just.binding = std::move(b);
      }
    } else if (kind == "mp") {
      line.just.kind = Justification::Kind::MP;
      line.just.i = arg(0);
      line.just.j = arg(1);
    } else if (kind == "nec" || kind == "nec_g") {
      line.just.kind = kind == "nec" ? Justification::Kind::Nec : Justification::Kind::NecG;
      line.just.i = arg(0);
    } else {
      throw IoError("proof: unknown justification kind " + kind);
    }
    p.lines.push_back(std::move(line));
  }
  return p;
}

Proof proof_from_text(const std::string& text, LanguageMode mode) {
  std::string trimmed = text;
  size_t first = trimmed.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw IoError("proof: empty input");
  if (trimmed[first] == '[') return proof_from_json(json::parse(trimmed), mode);
  json lines = json::array();
  std::istringstream in(trimmed);
  std::string row;
  while (std::getline(in, row)) {
    size_t at = row.find_first_not_of(" \t\r");
    if (at == std::string::npos) continue;
    lines.push_back(json::parse(row));
  }
  return proof_from_json(lines, mode);
}

}  // namespace gel::io
