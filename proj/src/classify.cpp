#include "coxnerve/classify.hpp"

#include <algorithm>
#include <array>

#include "coxnerve/error.hpp"

namespace coxnerve {

namespace {

// Number of vertices on the arm that starts at `first` and leads away from
// `from`. Arms are paths in a tree, so each step has at most one way forward.
int arm_length(const CoxeterMatrix& m, GeneratorSet t, int from, int first) {
  int len = 0;
  int prev = from;
  int cur = first;
  while (true) {
    ++len;
    GeneratorSet next = (m.neighbours(cur) & t) - GeneratorSet::single(prev);
    if (next.empty()) return len;
    prev = cur;
    cur = next.min();
  }
}

}  // namespace

std::string FiniteType::name() const {
  switch (family) {
    case Family::A: return "A" + std::to_string(rank);
    case Family::B: return "B" + std::to_string(rank);
    case Family::D: return "D" + std::to_string(rank);
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
    case Family::F4: return "F4";
    case Family::H3: return "H3";
    case Family::H4: return "H4";
    case Family::I2: return "I2(" + std::to_string(p) + ")";
  }
  return "?";
}

FiniteType make_finite_type(Family family, int rank, int p) {
  bool ok = false;
  switch (family) {
    case Family::A: ok = rank >= 1; break;
    case Family::B: ok = rank >= 3; break;
    case Family::D: ok = rank >= 4; break;
    case Family::E6: ok = rank == 6; break;
    case Family::E7: ok = rank == 7; break;
    case Family::E8: ok = rank == 8; break;
    case Family::F4: ok = rank == 4; break;
    case Family::H3: ok = rank == 3; break;
    case Family::H4: ok = rank == 4; break;
    case Family::I2: ok = rank == 2 && p >= 4; break;
  }
  if (!ok) throw InputError("not a finite Coxeter type: family/rank/p combination");
  return FiniteType{family, rank, family == Family::I2 ? p : 0};
}

std::optional<FiniteType> recognize_finite_type(const CoxeterMatrix& m, GeneratorSet t) {
  if (t.empty()) throw InputError("cannot recognize the type of an empty subset");
  if (!is_connected(m, t)) {
    throw InputError("subset " + m.format_subset(t) + " is not connected in the diagram");
  }
  const int n = t.size();
  if (n == 1) return FiniteType{Family::A, 1};

  const auto members = t.indices();
  int edges = 0;
  int branch = -1;
  int branches = 0;
  std::vector<int> leaves;
  for (int s : members) {
    GeneratorSet nb = m.neighbours(s) & t;
    for (int u : nb.indices()) {
      if (m.m(s, u).is_infinite()) return std::nullopt;
    }
    edges += nb.size();
    if (nb.size() > 3) return std::nullopt;
    if (nb.size() == 3) {
      branch = s;
      ++branches;
    }
    if (nb.size() == 1) leaves.push_back(s);
  }
  edges /= 2;
  if (edges != n - 1) return std::nullopt;  // connected with a cycle
  if (branches > 1) return std::nullopt;

  if (n == 2) {
    const std::uint32_t p = m.m(members[0], members[1]).value();
    if (p == 3) return FiniteType{Family::A, 2};
    return FiniteType{Family::I2, 2, static_cast<int>(p)};
  }

  if (branch >= 0) {
    // Star with three arms: only simply-laced D and E occur.
    std::array<int, 3> arms{};
    int k = 0;
    for (int u : (m.neighbours(branch) & t).indices()) {
      arms[static_cast<std::size_t>(k++)] = arm_length(m, t, branch, u);
    }
    for (int s : members) {
      for (int u : (m.neighbours(s) & t).indices()) {
        if (m.m(s, u).value() != 3) return std::nullopt;
      }
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) return FiniteType{Family::D, n};
    if (arms[0] == 1 && arms[1] == 2) {
      if (arms[2] == 2) return FiniteType{Family::E6, 6};
      if (arms[2] == 3) return FiniteType{Family::E7, 7};
      if (arms[2] == 4) return FiniteType{Family::E8, 8};
    }
    return std::nullopt;
  }

  // Path: read the labels from one end to the other.
  std::vector<std::uint32_t> labels;
  int prev = -1;
  int cur = leaves.front();
  for (int step = 0; step < n - 1; ++step) {
    GeneratorSet next = m.neighbours(cur) & t;
    if (prev >= 0) next.erase(prev);
    int nxt = next.min();
    labels.push_back(m.m(cur, nxt).value());
    prev = cur;
    cur = nxt;
  }
  std::vector<std::size_t> heavy;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] != 3) heavy.push_back(i);
  }
  if (heavy.empty()) return FiniteType{Family::A, n};
  if (heavy.size() > 1) return std::nullopt;

  const std::size_t pos = heavy.front();
  const std::uint32_t label = labels[pos];
  const bool at_end = pos == 0 || pos + 1 == labels.size();
  if (label == 4) {
    if (at_end) return FiniteType{Family::B, n};
    if (n == 4) return FiniteType{Family::F4, 4};  // 3,4,3
    return std::nullopt;
  }
  if (label == 5 && at_end) {
    if (n == 3) return FiniteType{Family::H3, 3};
    if (n == 4) return FiniteType{Family::H4, 4};
  }
  return std::nullopt;
}

bool is_spherical(const CoxeterMatrix& m, GeneratorSet t) {
  m.check_subset(t);
  for (GeneratorSet block : components(m, t)) {
    if (!recognize_finite_type(m, block)) return false;
  }
  return true;
}

CatalogEntry catalog(const FiniteType& t) {
  const FiniteType v = make_finite_type(t.family, t.rank, t.p);
  const int n = v.rank;
  switch (v.family) {
    case Family::A: return {v, n * (n + 1) / 2, n >= 2};
    case Family::B: return {v, n * n, false};
    case Family::D: return {v, n * (n - 1), n % 2 == 1};
    case Family::E6: return {v, 36, true};
    case Family::E7: return {v, 63, false};
    case Family::E8: return {v, 120, false};
    case Family::F4: return {v, 24, false};
    case Family::H3: return {v, 15, false};
    case Family::H4: return {v, 60, false};
    case Family::I2: return {v, v.p, v.p % 2 == 1};
  }
  throw InputError("unknown family");
}

}  // namespace coxnerve
