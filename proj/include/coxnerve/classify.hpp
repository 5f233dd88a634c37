#pragma once

#include <optional>
#include <string>

#include "coxnerve/coxmatrix.hpp"

namespace coxnerve {

enum class Family { A, B, D, E6, E7, E8, F4, H3, H4, I2 };

/// An irreducible finite Coxeter type. A single edge labelled 3 is A_2 and a
/// single edge labelled p >= 4 is I_2(p); family B starts at rank 3.
struct FiniteType {
  Family family;
  int rank;
  int p = 0;  // dihedral order, I2 only

  std::string name() const;
  bool operator==(const FiniteType&) const = default;
};

struct CatalogEntry {
  FiniteType type;
  int num_reflections;
  bool centerless;
};

/// Exact labelled-graph recognition of the diagram induced on a connected T.
/// std::nullopt means W_T is infinite. Throws InputError if T is empty or
/// disconnected.
std::optional<FiniteType> recognize_finite_type(const CoxeterMatrix& m, GeneratorSet t);

/// Every component of T is of finite type. The empty set is spherical.
bool is_spherical(const CoxeterMatrix& m, GeneratorSet t);

/// Throws InputError for family/rank combinations outside the classification.
CatalogEntry catalog(const FiniteType& t);

/// Build a FiniteType after checking it against the classification.
FiniteType make_finite_type(Family family, int rank, int p = 0);

}  // namespace coxnerve
