#include "coxnerve/examples.hpp"

#include <charconv>
#include <set>

#include "coxnerve/error.hpp"

namespace coxnerve {

namespace {

std::vector<std::string> letters(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) {
    out.push_back(n <= 26 ? std::string(1, static_cast<char>('a' + i)) : "s" + std::to_string(i));
  }
  return out;
}

// Path a0 - a1 - ... with the given labels (labels.size() == n - 1).
CoxeterMatrix path(const std::vector<std::uint32_t>& labels) {
  const int n = static_cast<int>(labels.size()) + 1;
  std::vector<Relation> rels;
  for (int i = 0; i + 1 < n; ++i) rels.push_back({i, i + 1, Label::finite(labels[static_cast<std::size_t>(i)])});
  return CoxeterMatrix(letters(n), Label::finite(2), rels);
}

// D_n and E_n: a path of length n-1 with one extra vertex hanging off
// position `branch` (0-based) of the path; the extra vertex is last.
CoxeterMatrix star(int n, int branch) {
  std::vector<Relation> rels;
  for (int i = 0; i + 2 < n; ++i) rels.push_back({i, i + 1, Label::finite(3)});
  rels.push_back({branch, n - 1, Label::finite(3)});
  return CoxeterMatrix(letters(n), Label::finite(2), rels);
}

int parse_suffix(const std::string& name, const std::string& prefix, int min) {
  const std::string digits = name.substr(prefix.size());
  int value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw InputError("unknown example '" + name + "'");
  }
  if (value < min) {
    throw InputError("example '" + name + "' needs a parameter of at least " + std::to_string(min));
  }
  if (value > 64) throw InputError("example '" + name + "' is too large");
  return value;
}

bool starts_with(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

}  // namespace

const std::vector<std::vector<int>>& rp2_flag_triangles() {
  static const std::vector<std::vector<int>> kTriangles = {
      {0, 2, 6}, {0, 2, 8}, {0, 5, 7}, {0, 5, 10}, {0, 6, 7},  {0, 8, 10}, {1, 4, 5},
      {1, 4, 6}, {1, 5, 10}, {1, 6, 9}, {1, 9, 10}, {2, 4, 6}, {2, 4, 8},  {3, 4, 5},
      {3, 4, 8}, {3, 5, 7}, {3, 7, 9}, {3, 8, 9},  {6, 7, 9}, {8, 9, 10}};
  return kTriangles;
}

CoxeterMatrix generate_example(const std::string& name) {
  if (name == "e6") return star(6, 2);
  if (name == "e7") return star(7, 3);
  if (name == "e8") return star(8, 4);
  if (name == "f4") return path({3, 4, 3});
  if (name == "h3") return path({5, 3});
  if (name == "h4") return path({5, 3, 3});
  if (name == "pentagon-3") {
    std::vector<Relation> rels;
    for (int i = 0; i < 5; ++i) rels.push_back({i, (i + 1) % 5, Label::finite(3)});
    return CoxeterMatrix(letters(5), Label::infinity(), rels);
  }
  if (name == "two-points-inf") return CoxeterMatrix(letters(2), Label::infinity(), {});
  if (name == "rp2-nerve") {
    std::set<std::pair<int, int>> edges;
    for (const auto& t : rp2_flag_triangles()) {
      edges.insert({t[0], t[1]});
      edges.insert({t[0], t[2]});
      edges.insert({t[1], t[2]});
    }
    std::vector<Relation> rels;
    for (auto [s, t] : edges) rels.push_back({s, t, Label::finite(2)});
    return CoxeterMatrix(letters(11), Label::infinity(), rels);
  }
  if (starts_with(name, "raag-cycle-")) {
    const int n = parse_suffix(name, "raag-cycle-", 3);
    std::vector<Relation> rels;
    for (int i = 0; i < n; ++i) rels.push_back({i, (i + 1) % n, Label::finite(2)});
    return CoxeterMatrix(letters(n), Label::infinity(), rels);
  }
  if (starts_with(name, "i2_")) {
    const int p = parse_suffix(name, "i2_", 2);
    return path({static_cast<std::uint32_t>(p)});
  }
  if (starts_with(name, "a_")) {
    const int n = parse_suffix(name, "a_", 1);
    return path(std::vector<std::uint32_t>(static_cast<std::size_t>(n - 1), 3));
  }
  if (starts_with(name, "b_")) {
    const int n = parse_suffix(name, "b_", 2);
    std::vector<std::uint32_t> labels(static_cast<std::size_t>(n - 1), 3);
    labels.back() = 4;
    return path(labels);
  }
  if (starts_with(name, "d_")) {
    const int n = parse_suffix(name, "d_", 4);
    return star(n, n - 3);
  }
  throw InputError("unknown example '" + name + "'");
}

std::string generate_example_document(const std::string& name) {
  const CoxeterMatrix m = generate_example(name);
  const bool right_angled_style = name == "pentagon-3" || name == "two-points-inf" ||
                                  name == "rp2-nerve" || starts_with(name, "raag-cycle-");
  return serialize_coxeter_matrix(m, right_angled_style ? Label::infinity() : Label::finite(2));
}

std::vector<std::string> example_names() {
  return {"a_3", "b_3", "d_4", "e6", "e7", "e8", "f4", "h3", "h4", "i2_5",
          "raag-cycle-4", "pentagon-3", "two-points-inf", "rp2-nerve"};
}

}  // namespace coxnerve
