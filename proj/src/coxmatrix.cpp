#include "coxnerve/coxmatrix.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include <json.hpp>

#include "coxnerve/error.hpp"

namespace coxnerve {

CoxeterMatrix::CoxeterMatrix(std::vector<std::string> generators, Label default_label,
                             const std::vector<Relation>& relations)
    : generators_(std::move(generators)) {
  const std::size_t n = generators_.size();
  if (n > static_cast<std::size_t>(GeneratorSet::kCapacity)) {
    throw InputError("at most 64 generators are supported, got " + std::to_string(n));
  }
  std::unordered_set<std::string> seen;
  for (const auto& g : generators_) {
    if (g.empty()) throw InputError("generator names must be nonempty");
    if (!seen.insert(g).second) throw InputError("duplicate generator '" + g + "'");
  }
  if (!default_label.is_infinite() && default_label.value() < 2) {
    throw InputError("default label must be 2 or more, or inf");
  }

  labels_.assign(n * n, default_label);
  for (std::size_t i = 0; i < n; ++i) labels_[i * n + i] = Label::finite(1);

  std::set<std::pair<int, int>> assigned;
  for (const auto& r : relations) {
    if (r.s < 0 || r.t < 0 || r.s >= size() || r.t >= size()) {
      throw InputError("relation references an unknown generator");
    }
    if (r.s == r.t) {
      throw InputError("relation pairs generator '" + name(r.s) + "' with itself");
    }
    if (!r.m.is_infinite() && r.m.value() < 2) {
      throw InputError("off-diagonal label " + r.m.to_string() + " for pair (" + name(r.s) +
                       ", " + name(r.t) + ") must be 2 or more, or inf");
    }
    auto key = std::minmax(r.s, r.t);
    if (!assigned.insert(key).second) {
      throw InputError("duplicate relation for pair (" + name(r.s) + ", " + name(r.t) + ")");
    }
    labels_[static_cast<std::size_t>(r.s) * n + static_cast<std::size_t>(r.t)] = r.m;
    labels_[static_cast<std::size_t>(r.t) * n + static_cast<std::size_t>(r.s)] = r.m;
  }

  neighbours_.resize(n);
  for (int s = 0; s < size(); ++s) {
    for (int t = 0; t < size(); ++t) {
      if (adjacent(s, t)) neighbours_[static_cast<std::size_t>(s)].insert(t);
    }
  }
}

int CoxeterMatrix::index_of(std::string_view name) const {
  auto it = std::find(generators_.begin(), generators_.end(), name);
  if (it == generators_.end()) throw InputError("unknown generator '" + std::string(name) + "'");
  return static_cast<int>(it - generators_.begin());
}

GeneratorSet CoxeterMatrix::subset(const std::vector<std::string>& names) const {
  GeneratorSet out;
  for (const auto& n : names) out.insert(index_of(n));
  return out;
}

void CoxeterMatrix::check_subset(GeneratorSet t) const {
  if (!t.subset_of(all())) throw InputError("subset contains an unknown generator index");
}

std::string CoxeterMatrix::format_subset(GeneratorSet t) const {
  std::string out = "{";
  bool first = true;
  for (int i : t.indices()) {
    if (!first) out += ",";
    out += name(i);
    first = false;
  }
  return out + "}";
}

Diagram diagram(const CoxeterMatrix& m) {
  Diagram d;
  d.vertices = m.generators();
  for (int s = 0; s < m.size(); ++s) {
    for (int t = s + 1; t < m.size(); ++t) {
      if (m.adjacent(s, t)) d.edges.push_back({s, t, m.m(s, t)});
    }
  }
  return d;
}

std::vector<GeneratorSet> components(const CoxeterMatrix& m, GeneratorSet t) {
  m.check_subset(t);
  std::vector<GeneratorSet> blocks;
  GeneratorSet rest = t;
  while (!rest.empty()) {
    GeneratorSet block = GeneratorSet::single(rest.min());
    GeneratorSet frontier = block;
    while (!frontier.empty()) {
      GeneratorSet next;
      for (int s : frontier.indices()) next |= m.neighbours(s) & t;
      frontier = next - block;
      block |= frontier;
    }
    blocks.push_back(block);
    rest = rest - block;
  }
  return blocks;
}

bool is_connected(const CoxeterMatrix& m, GeneratorSet t) {
  return !t.empty() && components(m, t).size() == 1;
}

namespace {

using nlohmann::json;

Label parse_label(const json& v, const std::string& where) {
  if (v.is_string()) {
    if (v.get<std::string>() == "inf") return Label::infinity();
    throw InputError(where + ": expected an integer or \"inf\", got \"" + v.get<std::string>() +
                     "\"");
  }
  if (v.is_number_integer()) {
    auto k = v.get<long long>();
    if (k < 1 || k > 0xffffffffLL) throw InputError(where + ": label out of range");
    return Label::finite(static_cast<std::uint32_t>(k));
  }
  throw InputError(where + ": expected an integer or \"inf\"");
}

json label_json(Label l) {
  if (l.is_infinite()) return "inf";
  return l.value();
}

}  // namespace

CoxeterMatrix parse_coxeter_matrix(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed document: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("document must be an object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "generators" && key != "default" && key != "relations") {
      throw InputError("unexpected field '" + key + "'");
    }
  }
  if (!doc.contains("generators") || !doc["generators"].is_array()) {
    throw InputError("field 'generators' must be an array of strings");
  }
  if (!doc.contains("default")) throw InputError("missing field 'default' (2 or \"inf\")");

  std::vector<std::string> gens;
  for (std::size_t i = 0; i < doc["generators"].size(); ++i) {
    const auto& g = doc["generators"][i];
    if (!g.is_string()) {
      throw InputError("generators[" + std::to_string(i) + "]: expected a string");
    }
    gens.push_back(g.get<std::string>());
  }
  Label def = parse_label(doc["default"], "default");
  if (!def.is_infinite() && def.value() != 2) {
    throw InputError("default: must be 2 or \"inf\"");
  }

  // Build once without relations so generator-name errors surface first.
  CoxeterMatrix names_only(gens, def, {});

  std::vector<Relation> rels;
  std::set<std::pair<int, int>> seen;
  if (doc.contains("relations")) {
    const auto& rs = doc["relations"];
    if (!rs.is_array()) throw InputError("field 'relations' must be an array");
    for (std::size_t i = 0; i < rs.size(); ++i) {
      const std::string where = "relations[" + std::to_string(i) + "]";
      const auto& r = rs[i];
      if (!r.is_object() || !r.contains("pair") || !r.contains("m")) {
        throw InputError(where + ": expected {\"pair\": [s, t], \"m\": ...}");
      }
      const auto& p = r["pair"];
      if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string()) {
        throw InputError(where + ".pair: expected two generator names");
      }
      int s, t;
      try {
        s = names_only.index_of(p[0].get<std::string>());
        t = names_only.index_of(p[1].get<std::string>());
      } catch (const InputError& e) {
        throw InputError(where + ".pair: " + e.what());
      }
      if (s == t) throw InputError(where + ".pair: generator '" + gens[static_cast<std::size_t>(s)] + "' paired with itself");
      if (!seen.insert({std::min(s, t), std::max(s, t)}).second) {
        throw InputError(where + ".pair: duplicate entry for this pair");
      }
      Label m = parse_label(r["m"], where + ".m");
      if (!m.is_infinite() && m.value() < 2) {
        throw InputError(where + ".m: off-diagonal label " + m.to_string() + " must be 2 or more, or \"inf\"");
      }
      rels.push_back({s, t, m});
    }
  }
  return CoxeterMatrix(std::move(gens), def, rels);
}

std::string serialize_coxeter_matrix(const CoxeterMatrix& m, Label default_label) {
  json doc;
  doc["generators"] = m.generators();
  doc["default"] = label_json(default_label);
  json rels = json::array();
  for (int s = 0; s < m.size(); ++s) {
    for (int t = s + 1; t < m.size(); ++t) {
      if (m.m(s, t) != default_label) {
        rels.push_back({{"m", label_json(m.m(s, t))}, {"pair", {m.name(s), m.name(t)}}});
      }
    }
  }
  doc["relations"] = rels;
  return doc.dump(2);
}

}  // namespace coxnerve
