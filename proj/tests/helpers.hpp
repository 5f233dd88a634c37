#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <numbers>
#include <string>
#include <vector>

#include "coxnerve/coxmatrix.hpp"
#include "coxnerve/simcomplex.hpp"

namespace testing {

using namespace coxnerve;

inline std::vector<std::string> names(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(std::string(1, static_cast<char>('a' + i)));
  return out;
}

/// Path a-b-c-... with the given labels, everything else 2.
inline CoxeterMatrix path(const std::vector<unsigned>& labels) {
  std::vector<Relation> rel;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    rel.push_back({static_cast<int>(i), static_cast<int>(i + 1),
                   labels[i] == 0 ? Label::infinity() : Label::finite(labels[i])});
  }
  return CoxeterMatrix(names(static_cast<int>(labels.size()) + 1), Label::finite(2), rel);
}

inline CoxeterMatrix dihedral(unsigned p) { return path({p}); }
inline CoxeterMatrix a_n(int n) { return path(std::vector<unsigned>(static_cast<std::size_t>(n - 1), 3)); }

/// Star with a centre (vertex 0) and arms of the given lengths, all labels 3.
inline CoxeterMatrix star(const std::vector<int>& arms) {
  std::vector<Relation> rel;
  int next = 1;
  for (int len : arms) {
    int prev = 0;
    for (int i = 0; i < len; ++i) {
      rel.push_back({prev, next, Label::finite(3)});
      prev = next++;
    }
  }
  return CoxeterMatrix(names(next), Label::finite(2), rel);
}

/// Complete graph default, cycle edges labelled `cycle` (0 = inf).
inline CoxeterMatrix cycle(int n, unsigned cycle_label, Label off) {
  std::vector<Relation> rel;
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    rel.push_back({std::min(i, j), std::max(i, j), Label::finite(cycle_label)});
  }
  return CoxeterMatrix(names(n), off, rel);
}

/// Determinant by cofactor expansion; test-side only, small matrices.
inline double det(const std::vector<std::vector<double>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1.0;
  if (n == 1) return a[0][0];
  double total = 0.0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<double>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<double> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(a[r][k]);
      }
      minor.push_back(row);
    }
    total += (c % 2 == 0 ? 1.0 : -1.0) * a[0][c] * det(minor);
  }
  return total;
}

/// Spherical iff every principal minor of the cosine matrix is positive.
inline bool cosine_oracle(const CoxeterMatrix& m, GeneratorSet t) {
  const auto idx = t.indices();
  std::vector<std::vector<double>> a(idx.size(), std::vector<double>(idx.size()));
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (std::size_t j = 0; j < idx.size(); ++j) {
      const Label l = m.m(idx[i], idx[j]);
      a[i][j] = i == j ? 1.0 : l.is_infinite() ? -1.0 : -std::cos(std::numbers::pi / l.value());
    }
  }
  for (std::size_t k = 1; k <= idx.size(); ++k) {
    std::vector<std::vector<double>> lead(k, std::vector<double>(k));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) lead[i][j] = a[i][j];
    }
    if (det(lead) <= 1e-9) return false;
  }
  return true;
}

inline std::vector<VertexLabel> plain_vertices(int n) {
  std::vector<VertexLabel> v;
  for (int i = 0; i < n; ++i) v.push_back({std::to_string(i), 0});
  return v;
}

inline SimplicialComplex complex_of(int n, const std::vector<Simplex>& gens) {
  return SimplicialComplex::from_generators(plain_vertices(n), gens);
}

inline SimplicialComplex four_cycle() { return complex_of(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}); }

inline SimplicialComplex rp2_six() {
  return complex_of(6, {{0, 1, 3}, {0, 1, 5}, {0, 2, 4}, {0, 2, 5}, {0, 3, 4},
                        {1, 2, 3}, {1, 2, 4}, {1, 4, 5}, {2, 3, 5}, {3, 4, 5}});
}

/// A Coxeter matrix whose nerve is `k` (complete 1-skeleton, dim <= 2), by
/// backtracking over labels 2..8. Labels 6 and up are interchangeable for
/// triple sphericity (1/p + 1/q + 1/r > 1), and every pair must be an edge,
/// so infinity never helps. `nodes` counts search nodes.
inline std::optional<CoxeterMatrix> realize_as_nerve(const SimplicialComplex& k, long& nodes) {
  const int n = static_cast<int>(k.num_vertices());
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!k.contains({i, j})) return std::nullopt;
      pairs.emplace_back(i, j);
    }
  }
  auto pair_index = [&](int i, int j) {
    return static_cast<int>(std::find(pairs.begin(), pairs.end(), std::make_pair(i, j)) - pairs.begin());
  };
  struct Triple {
    int e[3];
    bool face;
    int last;
  };
  std::vector<Triple> triples;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        Triple t{{pair_index(a, b), pair_index(a, c), pair_index(b, c)}, k.contains({a, b, c}), 0};
        t.last = std::max({t.e[0], t.e[1], t.e[2]});
        triples.push_back(t);
      }
    }
  }
  std::vector<unsigned> label(pairs.size(), 2);
  nodes = 0;
  std::function<bool(std::size_t)> go = [&](std::size_t e) {
    ++nodes;
    if (e == pairs.size()) return true;
    for (unsigned m = 2; m <= 8; ++m) {
      label[e] = m;
      bool ok = true;
      for (const auto& t : triples) {
        if (t.last != static_cast<int>(e)) continue;
        double s = 0;
        for (int x : t.e) s += 1.0 / label[static_cast<std::size_t>(x)];
        if ((s > 1.0 + 1e-12) != t.face) {
          ok = false;
          break;
        }
      }
      if (ok && go(e + 1)) return true;
    }
    return false;
  };
  if (!go(0)) return std::nullopt;
  std::vector<Relation> rel;
  for (std::size_t i = 0; i < pairs.size(); ++i) rel.push_back({pairs[i].first, pairs[i].second, Label::finite(label[i])});
  return CoxeterMatrix(names(n), Label::finite(2), rel);
}

}  // namespace testing
