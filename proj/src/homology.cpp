#include "coxnerve/homology.hpp"

#include "coxnerve/error.hpp"

namespace coxnerve {

namespace {

void check_dimension(const SimplicialComplex& k, int dim) {
  if (k.dim() < 0) throw InputError("homology of the empty complex");
  if (dim < 0 || dim > k.dim()) {
    throw InputError("boundary dimension " + std::to_string(dim) + " outside [0, " +
                     std::to_string(k.dim()) + "]");
  }
}

// Calls f(row, col, sign) for every incidence of the boundary map.
template <class F>
void for_each_incidence(const SimplicialComplex& k, int dim, bool augmented, F&& f) {
  const auto& faces = k.faces(dim);
  if (dim == 0) {
    if (!augmented) return;
    for (std::size_t c = 0; c < faces.size(); ++c) f(std::size_t{0}, c, 1);
    return;
  }
  for (std::size_t c = 0; c < faces.size(); ++c) {
    const Simplex& s = faces[c];
    for (std::size_t i = 0; i < s.size(); ++i) {
      Simplex facet;
      facet.reserve(s.size() - 1);
      for (std::size_t j = 0; j < s.size(); ++j) {
        if (j != i) facet.push_back(s[j]);
      }
      const long row = k.index_of(facet);
      if (row < 0) throw LemmaViolation("complex is not closed under faces");
      f(static_cast<std::size_t>(row), c, i % 2 == 0 ? 1 : -1);
    }
  }
}

std::size_t target_size(const SimplicialComplex& k, int dim, bool augmented) {
  if (dim == 0) return augmented ? 1 : 0;
  return k.count(dim - 1);
}

}  // namespace

GF2Matrix boundary_gf2(const SimplicialComplex& k, int dim, bool augmented) {
  check_dimension(k, dim);
  GF2Matrix m(target_size(k, dim, augmented), k.count(dim));
  for_each_incidence(k, dim, augmented, [&](std::size_t r, std::size_t c, int) { m.set(r, c); });
  return m;
}

IntMatrix boundary_int(const SimplicialComplex& k, int dim, bool augmented) {
  check_dimension(k, dim);
  IntMatrix m(target_size(k, dim, augmented), k.count(dim));
  for_each_incidence(k, dim, augmented,
                     [&](std::size_t r, std::size_t c, int sign) { m(r, c) = sign; });
  return m;
}

std::vector<long> reduced_betti_mod2(const SimplicialComplex& k) {
  if (k.dim() < 0) throw InputError("homology of the empty complex");
  const int d = k.dim();
  // rank[j] = rank of the augmented boundary out of dimension j; rank[d+1] = 0.
  std::vector<long> rank(static_cast<std::size_t>(d) + 2, 0);
  for (int j = 0; j <= d; ++j) {
    rank[static_cast<std::size_t>(j)] = static_cast<long>(boundary_gf2(k, j, true).rank());
  }
  std::vector<long> betti(static_cast<std::size_t>(d) + 1);
  for (int j = 0; j <= d; ++j) {
    const auto uj = static_cast<std::size_t>(j);
    betti[uj] = static_cast<long>(k.count(j)) - rank[uj] - rank[uj + 1];
  }
  return betti;
}

IntegralGroup integral_cohomology(const SimplicialComplex& k, int dim) {
  check_dimension(k, dim);
  // Reduced cochains: delta^{j-1} = (boundary_j)^T with the augmentation in
  // degree 0. H^j = ker delta^j / im delta^{j-1}.
  const std::vector<BigInt> incoming = smith_normal_form(boundary_int(k, dim, true));
  long outgoing_rank = 0;
  if (dim < k.dim()) {
    outgoing_rank = static_cast<long>(smith_normal_form(boundary_int(k, dim + 1, true)).size());
  }
  IntegralGroup g;
  g.rank = static_cast<long>(k.count(dim)) - outgoing_rank - static_cast<long>(incoming.size());
  for (const auto& d : incoming) {
    if (d > 1) g.torsion.push_back(d);
  }
  return g;
}

IntegralGroup integral_cohomology_top(const SimplicialComplex& k) {
  if (k.dim() < 0) throw InputError("homology of the empty complex");
  return integral_cohomology(k, k.dim());
}

BettiProfile betti_profile(const SimplicialComplex& k) {
  return {reduced_betti_mod2(k), integral_cohomology_top(k)};
}

}  // namespace coxnerve
