#pragma once

#include <map>
#include <vector>

#include "coxnerve/intmatrix.hpp"
#include "coxnerve/rootsys.hpp"
#include "coxnerve/simcomplex.hpp"

namespace coxnerve {

/// The reflections of all irreducible spherical special subgroups, as one
/// deduplicated list of roots in global coordinates. Row space of Z^R
/// truncated to the reflections any e_T can see.
class ReflectionIndex {
 public:
  explicit ReflectionIndex(const CoxeterMatrix& m);

  const std::vector<Root>& roots() const { return roots_; }
  std::size_t size() const { return roots_.size(); }
  /// Row of the root with these coefficients, or -1.
  long row_of(const std::vector<double>& coeffs) const;

 private:
  std::vector<Root> roots_;
  std::map<std::vector<std::int64_t>, std::size_t> rows_;
};

ReflectionIndex reflection_index(const CoxeterMatrix& m);

/// Indicator vector of R_T. Throws InputError if T is not in S_oslash.
std::vector<int> e_vector(const CoxeterMatrix& m, GeneratorSet t, const ReflectionIndex& idx);

/// The lattice map j : Z^{S_oslash} -> Z^R, columns in s_oslash order.
struct JMatrix {
  std::vector<GeneratorSet> columns;
  ReflectionIndex index;
  IntMatrix matrix;
  std::vector<std::vector<std::int64_t>> columns64;  // same entries, column-major
};

JMatrix j_matrix(const CoxeterMatrix& m);

/// Column rank of j (number of nonzero Smith invariants). Throws
/// LemmaViolation when it is smaller than |S_oslash|.
std::size_t j_rank_checked(const JMatrix& j);

/// Sublattice of Z^R spanned by the columns of j indexed by a face of
/// L_oslash (vertex indices of the subdivision = column indices of j).
IntMatrix lattice_of(const JMatrix& j, const Simplex& face);

/// J_alpha cap J_beta, as generators (columns), from the integer kernel of
/// [J_alpha | -J_beta].
IntMatrix lattice_intersection(const JMatrix& j, const Simplex& alpha, const Simplex& beta);

/// Whether the lattices spanned by the columns of a and b coincide, by
/// two-sided integer solvability.
bool same_lattice(const IntMatrix& a, const IntMatrix& b);

/// J_alpha cap J_beta == J_{alpha cap beta}. Throws InputError if either
/// argument is not a face of the subdivision. Runs in int64 (kernel by column
/// Hermite reduction, equality of canonical Hermite forms) and redoes the
/// pair with big integers if anything overflows.
bool lattice_intersection_check(const JMatrix& j, const SimplicialComplex& subdivision,
                                const Simplex& alpha, const Simplex& beta);

struct StandardAbelianGenerator {
  GeneratorSet piece;
  ArtinWord delta;
};

struct StandardAbelianSubgroup {
  Simplex face;
  std::vector<StandardAbelianGenerator> generators;
  int rank = 0;
};

/// Generators delta_T for the vertices T of a face of L_oslash.
StandardAbelianSubgroup standard_abelian_subgroup(const CoxeterMatrix& m, const Subdivision& sub,
                                                  const Simplex& face);

}  // namespace coxnerve
