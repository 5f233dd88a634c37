#include "coxnerve/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "coxnerve/abelian.hpp"
#include "coxnerve/classify.hpp"
#include "coxnerve/error.hpp"
#include "coxnerve/examples.hpp"
#include "coxnerve/homology.hpp"
#include "coxnerve/rootsys.hpp"
#include "coxnerve/simcomplex.hpp"

namespace coxnerve {

namespace {

CheckResult fail(CheckResult r, const std::string& why) {
  r.passed = false;
  r.detail = why;
  return r;
}

std::string subset_list(const CoxeterMatrix& m, const Simplex& face, const Subdivision& sub) {
  std::string out = "{";
  for (std::size_t i = 0; i < face.size(); ++i) {
    if (i) out += ",";
    out += m.format_subset(sub.pieces[static_cast<std::size_t>(face[i])]);
  }
  return out + "}";
}

// Above this many candidate subsets the nested-set comparison switches from
// full enumeration to checking one-vertex extensions of every face.
constexpr std::size_t kNestedEnumerationBudget = std::size_t{1} << 22;

}  // namespace

bool cosine_positive_definite(const CoxeterMatrix& m, GeneratorSet t) {
  auto b = bilinear_form(m, t);
  const std::size_t n = b.size();
  // Gaussian elimination without pivoting: the k-th pivot is the ratio of
  // consecutive leading minors, so all minors are positive iff all pivots are.
  double minor = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double pivot = b[k][k];
    minor *= pivot;
    if (!(minor > 1e-9) || !(pivot > 0.0)) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = b[i][k] / pivot;
      for (std::size_t j = k; j < n; ++j) b[i][j] -= f * b[k][j];
    }
  }
  return true;
}

CheckResult check_injective_r(const CoxeterMatrix& m) {
  CheckResult r{"l:inj", true, ""};
  std::map<std::vector<std::int64_t>, GeneratorSet> seen;
  const auto pieces = s_oslash(m);
  for (GeneratorSet t : pieces) {
    const Root root = choose_r(m, t);
    if (root.support != t) return fail(r, "r(" + m.format_subset(t) + ") has smaller support");
    std::set<int> letters(root.word.begin(), root.word.end());
    const auto members = t.indices();
    if (letters != std::set<int>(members.begin(), members.end())) {
      return fail(r, "letters of r(" + m.format_subset(t) + ") differ from its support");
    }
    auto [it, fresh] = seen.emplace(root.key(), t);
    if (!fresh) {
      return fail(r, "r(" + m.format_subset(t) + ") = r(" + m.format_subset(it->second) + ")");
    }
  }
  r.detail = std::to_string(pieces.size()) + " distinct full-support reflections";
  return r;
}

CheckResult check_flag(const CoxeterMatrix& m) {
  CheckResult r{"l:flag", true, ""};
  const Subdivision sub = subdivide(m);
  if (!is_flag(sub.complex)) return fail(r, "L_oslash has an empty simplex");
  r.detail = std::to_string(sub.complex.total_faces()) + " faces";
  return r;
}

CheckResult check_e_t_count(const CoxeterMatrix& m) {
  CheckResult r{"l:eT-count", true, ""};
  const ReflectionIndex idx(m);
  const auto pieces = s_oslash(m);
  for (GeneratorSet t : pieces) {
    const auto e = e_vector(m, t, idx);
    const long ones = std::count(e.begin(), e.end(), 1);
    const auto type = recognize_finite_type(m, t);
    if (!type) return fail(r, m.format_subset(t) + " not recognized");
    const int expected = catalog(*type).num_reflections;
    const LongestElement w = longest_element(m, t);
    if (ones != expected || w.length != expected) {
      return fail(r, m.format_subset(t) + ": |e_T| = " + std::to_string(ones) + ", l(w_T) = " +
                         std::to_string(w.length) + ", catalog " + std::to_string(expected));
    }
    // The prefixes of a reduced word t1...tk for w_T give the reflections
    // (t1...t_{i-1}) t_i (t1...t_{i-1})^-1, which must be exactly R_T.
    std::set<std::vector<std::int64_t>> from_word;
    Word prefix;
    for (int letter : w.word) {
      std::vector<double> phi(static_cast<std::size_t>(m.size()), 0.0);
      phi[static_cast<std::size_t>(letter)] = 1.0;
      from_word.insert(root_key(apply_word(m, prefix, phi)));
      prefix.push_back(letter);
    }
    std::set<std::vector<std::int64_t>> from_roots;
    for (const Root& root : positive_roots(m, t)) from_roots.insert(root.key());
    if (from_word != from_roots) {
      return fail(r, m.format_subset(t) + ": reflections from w_T prefixes differ from R_T");
    }
  }
  r.detail = std::to_string(pieces.size()) + " e_T vectors match catalog counts";
  return r;
}

CheckResult check_centerless(const CoxeterMatrix& m) {
  CheckResult r{"centerless-involution", true, ""};
  for (GeneratorSet t : s_oslash(m)) {
    const LongestElement w = longest_element(m, t);
    const auto type = recognize_finite_type(m, t);
    if (catalog(*type).centerless == w.involution_trivial()) {
      return fail(r, m.format_subset(t) + " (" + type->name() + "): involution disagrees with catalog");
    }
    for (int s : t.indices()) {
      const int is = w.involution[static_cast<std::size_t>(s)];
      if (w.involution[static_cast<std::size_t>(is)] != s) return fail(r, "involution is not an involution");
      for (int u : t.indices()) {
        if (!(m.m(s, u) == m.m(is, w.involution[static_cast<std::size_t>(u)]))) {
          return fail(r, m.format_subset(t) + ": involution is not a diagram automorphism");
        }
      }
    }
  }
  return r;
}

CheckResult check_homo_rank(const CoxeterMatrix& m) {
  CheckResult r{"l:homo-rank", true, ""};
  const JMatrix j = j_matrix(m);
  const std::size_t rank = smith_normal_form(j.matrix).size();
  if (rank != j.columns.size()) {
    return fail(r, "rank " + std::to_string(rank) + " < " + std::to_string(j.columns.size()));
  }
  // e_{T'} . e_{r(T)} = [T subset of T'].
  for (GeneratorSet t : j.columns) {
    const long row = j.index.row_of(choose_r(m, t).coeffs);
    if (row < 0) return fail(r, "r(" + m.format_subset(t) + ") missing from the index");
    for (std::size_t c = 0; c < j.columns.size(); ++c) {
      const bool want = t.subset_of(j.columns[c]);
      if ((j.matrix(static_cast<std::size_t>(row), c) == 1) != want) {
        return fail(r, "pairing e_" + m.format_subset(j.columns[c]) + " . e_r(" +
                           m.format_subset(t) + ") is wrong");
      }
    }
  }
  r.detail = "rank " + std::to_string(rank) + " = |S_oslash|";
  return r;
}

CheckResult check_main_pairs(const CoxeterMatrix& m) {
  CheckResult r{"l:main-pairs", true, ""};
  const Subdivision sub = subdivide(m);
  const JMatrix j = j_matrix(m);
  std::vector<Simplex> faces;
  for (int d = 0; d <= sub.complex.dim(); ++d) {
    for (const auto& f : sub.complex.faces(d)) faces.push_back(f);
  }
  std::size_t pairs = 0;
  for (std::size_t a = 0; a < faces.size(); ++a) {
    for (std::size_t b = a; b < faces.size(); ++b) {
      ++pairs;
      if (!lattice_intersection_check(j, sub.complex, faces[a], faces[b])) {
        return fail(r, "J_a cap J_b != J_(a cap b) for a = " + subset_list(m, faces[a], sub) +
                           ", b = " + subset_list(m, faces[b], sub));
      }
    }
  }
  r.detail = std::to_string(pairs) + " face pairs";
  return r;
}

CheckResult check_iso_rank(const CoxeterMatrix& m) {
  CheckResult r{"l:iso-rank", true, ""};
  const Subdivision sub = subdivide(m);
  const JMatrix j = j_matrix(m);
  for (const auto& e : sub.complex.faces(1)) {
    if (!nested_pair(m, sub.pieces[static_cast<std::size_t>(e[0])],
                     sub.pieces[static_cast<std::size_t>(e[1])])) {
      return fail(r, "edge " + subset_list(m, e, sub) + " is transverse");
    }
  }
  std::size_t count = 0;
  for (int d = 0; d <= sub.complex.dim(); ++d) {
    for (const auto& f : sub.complex.faces(d)) {
      const auto h = standard_abelian_subgroup(m, sub, f);
      const std::size_t rank = smith_normal_form(lattice_of(j, f)).size();
      if (h.rank != d + 1 || rank != f.size()) {
        return fail(r, "face " + subset_list(m, f, sub) + " spans rank " + std::to_string(rank));
      }
      ++count;
    }
  }
  r.detail = std::to_string(count) + " standard abelian subgroups of full rank";
  return r;
}

CheckResult check_nested_equivalence(const CoxeterMatrix& m) {
  CheckResult r{"nested-equivalence", true, ""};
  const Subdivision sub = subdivide(m);
  const auto& pieces = sub.pieces;
  const std::size_t n = pieces.size();

  auto members = [&](const Simplex& face) {
    std::vector<GeneratorSet> a;
    for (int v : face) a.push_back(pieces[static_cast<std::size_t>(v)]);
    return a;
  };

  for (int d = 0; d <= sub.complex.dim(); ++d) {
    for (const auto& f : sub.complex.faces(d)) {
      if (!nested_oracle(m, members(f))) {
        return fail(r, "face " + subset_list(m, f, sub) + " rejected by the nested-set oracle");
      }
    }
  }

  // Candidates have spherical support, so they sit inside a maximal spherical
  // subset; bound their number before deciding to enumerate.
  const SimplicialComplex l = nerve(m);
  std::unordered_set<std::uint64_t> spherical_sets;
  for (int d = 0; d <= l.dim(); ++d) {
    for (const auto& f : l.faces(d)) {
      GeneratorSet t;
      for (int v : f) t.insert(v);
      spherical_sets.insert(t.bits());
    }
  }
  double bound = 0;
  for (std::uint64_t bits : spherical_sets) {
    const GeneratorSet t(bits);
    bool maximal = true;
    for (int s = 0; s < m.size() && maximal; ++s) {
      if (!t.contains(s) && spherical_sets.count((t | GeneratorSet::single(s)).bits())) maximal = false;
    }
    if (!maximal) continue;
    int inside = 0;
    for (GeneratorSet p : pieces) inside += p.subset_of(t);
    bound += std::ldexp(1.0, inside);
  }
  const bool over_budget_upfront = bound > static_cast<double>(kNestedEnumerationBudget);

  // Every subset with spherical support, by depth-first extension. Supersets
  // of a set with non-spherical support fail the oracle's first clause.
  std::unordered_map<std::uint64_t, bool> spherical_cache;
  auto spherical = [&](GeneratorSet t) {
    auto [it, fresh] = spherical_cache.try_emplace(t.bits(), false);
    if (fresh) it->second = is_spherical(m, t);
    return it->second;
  };
  std::size_t visited = 0;
  std::size_t accepted = 0;
  bool over_budget = over_budget_upfront;
  std::string mismatch;
  Simplex current;
  std::function<void(std::size_t, GeneratorSet)> walk = [&](std::size_t from, GeneratorSet sp) {
    for (std::size_t v = from; v < n && !over_budget && mismatch.empty(); ++v) {
      const GeneratorSet next = sp | pieces[v];
      if (!spherical(next)) continue;
      if (++visited > kNestedEnumerationBudget) {
        over_budget = true;
        return;
      }
      current.push_back(static_cast<int>(v));
      if (nested_oracle(m, members(current))) {
        ++accepted;
        if (!sub.complex.contains(current)) mismatch = subset_list(m, current, sub);
      }
      walk(v + 1, next);
      current.pop_back();
    }
  };
  if (!over_budget) walk(0, GeneratorSet{});
  if (!mismatch.empty()) return fail(r, "nested set " + mismatch + " is not a face");

  if (!over_budget) {
    if (accepted != sub.complex.total_faces()) {
      return fail(r, "oracle accepts " + std::to_string(accepted) + " sets, complex has " +
                         std::to_string(sub.complex.total_faces()) + " faces");
    }
    r.detail = "exhaustive over " + std::to_string(visited) + " subsets";
    return r;
  }

  // Too many candidates: check that no one-vertex extension of a face that
  // leaves the complex is nested.
  std::size_t extensions = 0;
  for (int d = 0; d <= sub.complex.dim(); ++d) {
    for (const auto& f : sub.complex.faces(d)) {
      for (std::size_t v = 0; v < n; ++v) {
        if (std::binary_search(f.begin(), f.end(), static_cast<int>(v))) continue;
        Simplex g = f;
        g.insert(std::upper_bound(g.begin(), g.end(), static_cast<int>(v)), static_cast<int>(v));
        if (sub.complex.contains(g)) continue;
        ++extensions;
        if (nested_oracle(m, members(g))) {
          return fail(r, "nested set " + subset_list(m, g, sub) + " is not a face");
        }
      }
    }
  }
  r.detail = "faces accepted; " + std::to_string(extensions) + " non-face extensions rejected";
  return r;
}

CheckResult check_subdivision_betti(const CoxeterMatrix& m) {
  CheckResult r{"subdivision-betti", true, ""};
  const SimplicialComplex l = nerve(m);
  const Subdivision sub = subdivide(m);
  const auto bl = reduced_betti_mod2(l);
  const auto bs = reduced_betti_mod2(sub.complex);
  if (bl != bs) return fail(r, "reduced mod-2 Betti numbers of L and L_oslash differ");
  if (l.dim() != sub.complex.dim()) return fail(r, "dimensions differ");
  if (l.euler_characteristic() != sub.complex.euler_characteristic()) {
    return fail(r, "Euler characteristics differ");
  }
  std::ostringstream os;
  os << "betti (";
  for (std::size_t i = 0; i < bl.size(); ++i) os << (i ? "," : "") << bl[i];
  os << ")";
  r.detail = os.str();
  return r;
}

CheckResult check_classification_oracle(const CoxeterMatrix& m) {
  CheckResult r{"classification-oracle", true, ""};
  if (m.size() > 20) return fail(r, "too many generators for subset enumeration");
  std::size_t tested = 0;
  const std::uint64_t limit = std::uint64_t{1} << m.size();
  for (std::uint64_t bits = 1; bits < limit; ++bits) {
    const GeneratorSet t(bits);
    if (t.size() > 8 || !is_connected(m, t)) continue;
    bool small_labels = true;
    for (int s : t.indices()) {
      for (int u : t.indices()) {
        const Label l = m.m(s, u);
        if (!l.is_infinite() && l.value() > 50) small_labels = false;
      }
    }
    if (!small_labels) continue;
    ++tested;
    const bool finite = recognize_finite_type(m, t).has_value();
    if (finite != cosine_positive_definite(m, t)) {
      return fail(r, m.format_subset(t) + ": recognizer says " + (finite ? "finite" : "infinite") +
                         ", cosine form disagrees");
    }
  }
  r.detail = std::to_string(tested) + " connected subsets";
  return r;
}

std::vector<CheckResult> verify_all(const CoxeterMatrix& m) {
  using Check = CheckResult (*)(const CoxeterMatrix&);
  const std::vector<std::pair<std::string, Check>> checks = {
      {"classification-oracle", check_classification_oracle},
      {"l:inj", check_injective_r},
      {"l:flag", check_flag},
      {"l:eT-count", check_e_t_count},
      {"centerless-involution", check_centerless},
      {"l:homo-rank", check_homo_rank},
      {"l:main-pairs", check_main_pairs},
      {"l:iso-rank", check_iso_rank},
      {"nested-equivalence", check_nested_equivalence},
      {"subdivision-betti", check_subdivision_betti},
  };
  std::vector<CheckResult> out;
  for (const auto& [name, check] : checks) {
    try {
      out.push_back(check(m));
    } catch (const LemmaViolation& e) {
      out.push_back({name, false, e.what()});
    }
  }
  return out;
}

CoxeterMatrix random_coxeter_matrix(std::mt19937_64& rng, int max_generators) {
  if (max_generators < 1) throw InputError("max_generators must be positive");
  const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_generators));
  static const Label kLabels[] = {Label::finite(2), Label::finite(3), Label::finite(4),
                                  Label::finite(5), Label::infinity()};
  std::vector<Relation> rels;
  for (int s = 0; s < n; ++s) {
    for (int t = s + 1; t < n; ++t) rels.push_back({s, t, kLabels[rng() % 5]});
  }
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("g" + std::to_string(i));
  return CoxeterMatrix(std::move(names), Label::finite(2), rels);
}

std::vector<std::string> verification_corpus() {
  return {"a_1", "a_2", "a_3", "a_4", "a_5", "b_3", "b_4", "d_4", "d_5", "f4", "h3", "h4",
          "i2_4", "i2_5", "i2_6", "i2_2", "raag-cycle-4", "raag-cycle-5", "pentagon-3",
          "two-points-inf", "rp2-nerve"};
}

}  // namespace coxnerve
