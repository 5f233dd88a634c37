#pragma once

#include <vector>

#include "coxnerve/gf2matrix.hpp"
#include "coxnerve/intmatrix.hpp"
#include "coxnerve/simcomplex.hpp"

namespace coxnerve {

/// Boundary map from k-faces (columns) to (k-1)-faces (rows). For k = 0 the
/// map is empty unless `augmented`, in which case it is the 1 x n all-ones
/// augmentation to the (-1)-dimensional chain group. Throws InputError if k
/// is outside [0, dim K].
GF2Matrix boundary_gf2(const SimplicialComplex& k, int dim, bool augmented = false);
IntMatrix boundary_int(const SimplicialComplex& k, int dim, bool augmented = false);

/// Reduced Betti numbers over GF(2), indices 0..dim K.
std::vector<long> reduced_betti_mod2(const SimplicialComplex& k);

struct IntegralGroup {
  long rank = 0;
  std::vector<BigInt> torsion;  // invariant factors > 1, each dividing the next

  bool is_zero() const { return rank == 0 && torsion.empty(); }
  bool operator==(const IntegralGroup&) const = default;
};

/// Reduced cohomology H^k(K; Z) from the integer coboundary maps.
IntegralGroup integral_cohomology(const SimplicialComplex& k, int dim);

/// H^d(K; Z) for d = dim K (reduced, which only matters when d = 0).
IntegralGroup integral_cohomology_top(const SimplicialComplex& k);

struct BettiProfile {
  std::vector<long> reduced_mod2;
  IntegralGroup integral_top;
};

BettiProfile betti_profile(const SimplicialComplex& k);

}  // namespace coxnerve
