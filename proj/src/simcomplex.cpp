#include "coxnerve/simcomplex.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <unordered_set>

#include "coxnerve/classify.hpp"
#include "coxnerve/error.hpp"

namespace coxnerve {

namespace {

constexpr int kNerveGeneratorLimit = 20;

SimplicialComplex make_closed(std::vector<VertexLabel> vertices, std::vector<Simplex> faces) {
  return SimplicialComplex::from_closed_faces(std::move(vertices), std::move(faces));
}

void extend_cliques(const std::vector<std::vector<int>>& adj, Simplex& current,
                    const std::vector<int>& candidates,
                    const std::function<bool(const Simplex&)>& visit, bool& stop) {
  for (std::size_t i = 0; i < candidates.size() && !stop; ++i) {
    const int v = candidates[i];
    current.push_back(v);
    if (!visit(current)) {
      stop = true;
    } else {
      std::vector<int> next;
      const auto& nb = adj[static_cast<std::size_t>(v)];
      std::set_intersection(candidates.begin() + static_cast<long>(i) + 1, candidates.end(),
                            nb.begin(), nb.end(), std::back_inserter(next));
      extend_cliques(adj, current, next, visit, stop);
    }
    current.pop_back();
  }
}

// Calls visit(clique) for every clique; visit returns false to stop early.
void for_each_clique(std::size_t n, const std::vector<std::vector<int>>& adj,
                     const std::function<bool(const Simplex&)>& visit) {
  std::vector<int> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<int>(i);
  Simplex current;
  bool stop = false;
  extend_cliques(adj, current, all, visit, stop);
}

}  // namespace

std::string VertexLabel::to_string() const {
  if (sign == 0) return name;
  return "(" + name + (sign > 0 ? ",+)" : ",-)");
}

SimplicialComplex SimplicialComplex::from_generators(std::vector<VertexLabel> vertices,
                                                     const std::vector<Simplex>& generators) {
  SimplicialComplex k;
  k.vertices_ = std::move(vertices);
  std::vector<std::set<Simplex>> levels;
  auto add = [&](Simplex s) {
    const std::size_t d = s.size() - 1;
    if (levels.size() <= d) levels.resize(d + 1);
    levels[d].insert(std::move(s));
  };
  for (std::size_t v = 0; v < k.vertices_.size(); ++v) add({static_cast<int>(v)});

  std::set<Simplex> done;
  for (Simplex g : generators) {
    if (g.empty()) continue;
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    for (int v : g) {
      if (v < 0 || static_cast<std::size_t>(v) >= k.vertices_.size()) {
        throw InputError("face references vertex " + std::to_string(v) + " out of range");
      }
    }
    if (g.size() > 30) throw InputError("face too large to close under subsets");
    if (!done.insert(g).second) continue;
    const std::uint64_t full = (std::uint64_t{1} << g.size()) - 1;
    for (std::uint64_t mask = full; mask != 0; --mask) {
      Simplex sub;
      for (std::size_t i = 0; i < g.size(); ++i) {
        if ((mask >> i) & 1U) sub.push_back(g[i]);
      }
      if (sub.size() > 1 && levels.size() >= sub.size() && levels[sub.size() - 1].count(sub)) {
        continue;
      }
      add(std::move(sub));
    }
  }
  for (auto& level : levels) k.faces_.emplace_back(level.begin(), level.end());
  return k;
}

SimplicialComplex SimplicialComplex::from_closed_faces(std::vector<VertexLabel> vertices,
                                                       std::vector<Simplex> faces) {
  SimplicialComplex k;
  k.vertices_ = std::move(vertices);
  for (auto& f : faces) {
    if (f.empty()) continue;
    const std::size_t d = f.size() - 1;
    if (k.faces_.size() <= d) k.faces_.resize(d + 1);
    k.faces_[d].push_back(std::move(f));
  }
  for (auto& level : k.faces_) {
    std::sort(level.begin(), level.end());
    level.erase(std::unique(level.begin(), level.end()), level.end());
  }
  return k;
}

const std::vector<Simplex>& SimplicialComplex::faces(int k) const {
  static const std::vector<Simplex> kNone;
  if (k < 0 || k > dim()) return kNone;
  return faces_[static_cast<std::size_t>(k)];
}

std::size_t SimplicialComplex::count(int k) const { return faces(k).size(); }

std::size_t SimplicialComplex::total_faces() const {
  std::size_t n = 0;
  for (const auto& level : faces_) n += level.size();
  return n;
}

long SimplicialComplex::index_of(const Simplex& s) const {
  if (s.empty()) return -1;
  const auto& level = faces(static_cast<int>(s.size()) - 1);
  auto it = std::lower_bound(level.begin(), level.end(), s);
  if (it == level.end() || *it != s) return -1;
  return it - level.begin();
}

bool SimplicialComplex::contains(const Simplex& s) const { return index_of(s) >= 0; }

long SimplicialComplex::euler_characteristic() const {
  long chi = 0;
  for (int k = 0; k <= dim(); ++k) {
    chi += (k % 2 == 0 ? 1L : -1L) * static_cast<long>(count(k));
  }
  return chi;
}

SimplicialComplex nerve(const CoxeterMatrix& m) {
  if (m.size() > kNerveGeneratorLimit) {
    throw InputError("nerve enumeration is limited to " + std::to_string(kNerveGeneratorLimit) +
                     " generators, got " + std::to_string(m.size()));
  }
  std::vector<VertexLabel> labels;
  for (const auto& g : m.generators()) labels.push_back({g, 0});

  std::vector<Simplex> faces;
  std::unordered_set<std::uint64_t> level;
  for (int s = 0; s < m.size(); ++s) {
    level.insert(GeneratorSet::single(s).bits());
    faces.push_back({s});
  }
  // Sphericity is hereditary, so a set is only tested once all of its
  // facets are known to be spherical.
  while (!level.empty()) {
    std::set<std::uint64_t> next;
    for (std::uint64_t bits : level) {
      const GeneratorSet t(bits);
      for (int g = t.max() + 1; g < m.size(); ++g) {
        GeneratorSet cand = t;
        cand.insert(g);
        bool facets_ok = true;
        for (int x : cand.indices()) {
          GeneratorSet facet = cand;
          facet.erase(x);
          if (!level.count(facet.bits())) {
            facets_ok = false;
            break;
          }
        }
        if (facets_ok && is_spherical(m, cand)) next.insert(cand.bits());
      }
    }
    level.clear();
    for (std::uint64_t bits : next) {
      level.insert(bits);
      faces.push_back(GeneratorSet(bits).indices());
    }
  }
  return make_closed(std::move(labels), std::move(faces));
}

std::vector<GeneratorSet> s_oslash(const CoxeterMatrix& m) {
  const SimplicialComplex l = nerve(m);
  std::vector<GeneratorSet> out;
  for (int k = 0; k <= l.dim(); ++k) {
    for (const auto& f : l.faces(k)) {
      GeneratorSet t;
      for (int s : f) t.insert(s);
      if (is_connected(m, t)) out.push_back(t);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool nested_pair(const CoxeterMatrix& m, GeneratorSet a, GeneratorSet b) {
  if (a.subset_of(b) || b.subset_of(a)) return true;
  if (!a.disjoint(b)) return false;
  for (int s : a.indices()) {
    if (!(m.neighbours(s) & b).empty()) return false;
  }
  return true;
}

Subdivision subdivide(const CoxeterMatrix& m) {
  Subdivision out;
  out.pieces = s_oslash(m);
  const std::size_t n = out.pieces.size();
  std::vector<std::vector<int>> adj(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (nested_pair(m, out.pieces[i], out.pieces[j])) {
        adj[i].push_back(static_cast<int>(j));
        adj[j].push_back(static_cast<int>(i));
      }
    }
  }
  std::vector<VertexLabel> labels;
  for (GeneratorSet t : out.pieces) labels.push_back({m.format_subset(t), 0});
  out.complex = make_closed(std::move(labels), cliques(n, adj));
  return out;
}

bool nested_oracle(const CoxeterMatrix& m, const std::vector<GeneratorSet>& alpha) {
  std::vector<GeneratorSet> a = alpha;
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  if (a.empty()) return true;
  for (GeneratorSet t : a) {
    if (!is_connected(m, t) || !is_spherical(m, t)) {
      throw InputError(m.format_subset(t) + " is not an irreducible spherical subset");
    }
  }

  GeneratorSet sp;
  for (GeneratorSet t : a) sp |= t;
  if (!is_spherical(m, sp)) return false;

  std::vector<GeneratorSet> maximal;
  for (GeneratorSet t : a) {
    bool below = std::any_of(a.begin(), a.end(),
                             [&](GeneratorSet u) { return t.proper_subset_of(u); });
    if (!below) maximal.push_back(t);
  }
  auto blocks = components(m, sp);
  std::sort(blocks.begin(), blocks.end());
  if (maximal != blocks) return false;  // both sorted

  for (GeneratorSet top : maximal) {
    std::vector<GeneratorSet> below;
    for (GeneratorSet t : a) {
      if (t.proper_subset_of(top)) below.push_back(t);
    }
    if (!nested_oracle(m, below)) return false;
  }
  return true;
}

SimplicialComplex octahedralize(const SimplicialComplex& k) {
  std::vector<VertexLabel> labels;
  for (const auto& v : k.vertices()) {
    labels.push_back({v.to_string(), +1});
    labels.push_back({v.to_string(), -1});
  }
  std::vector<Simplex> faces;
  for (int d = 0; d <= k.dim(); ++d) {
    for (const auto& f : k.faces(d)) {
      if (f.size() > 30) throw InputError("simplex too large to octahedralize");
      const std::uint64_t patterns = std::uint64_t{1} << f.size();
      for (std::uint64_t eps = 0; eps < patterns; ++eps) {
        Simplex s(f.size());
        for (std::size_t i = 0; i < f.size(); ++i) {
          s[i] = 2 * f[i] + static_cast<int>((eps >> i) & 1U);
        }
        faces.push_back(std::move(s));
      }
    }
  }
  return make_closed(std::move(labels), std::move(faces));
}

std::vector<Simplex> cliques(std::size_t n, const std::vector<std::vector<int>>& adjacency) {
  std::vector<std::vector<int>> adj = adjacency;
  for (auto& nb : adj) std::sort(nb.begin(), nb.end());
  std::vector<Simplex> out;
  for_each_clique(n, adj, [&](const Simplex& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

bool is_flag(const SimplicialComplex& k) {
  const std::size_t n = k.num_vertices();
  std::vector<std::vector<int>> adj(n);
  for (const auto& e : k.faces(1)) {
    adj[static_cast<std::size_t>(e[0])].push_back(e[1]);
    adj[static_cast<std::size_t>(e[1])].push_back(e[0]);
  }
  for (auto& nb : adj) std::sort(nb.begin(), nb.end());
  bool flag = true;
  for_each_clique(n, adj, [&](const Simplex& c) {
    if (c.size() >= 3 && !k.contains(c)) flag = false;
    return flag;
  });
  return flag;
}

}  // namespace coxnerve
