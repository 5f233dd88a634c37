#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coxnerve/coxmatrix.hpp"
#include "coxnerve/homology.hpp"

namespace coxnerve {

enum class Kpi1Status { ProvedSpherical, ProvedFlagNerve, Assumed, Unknown };

std::string to_string(Kpi1Status s);

/// A bound with the result that produced it and the hypotheses it rests on.
/// An absent value means the bound is not established.
struct Bound {
  std::optional<int> value;
  std::string theorem;
  std::vector<std::string> hypotheses;
};

/// Geometric dimension: exact when lower == upper, otherwise an interval with
/// an open upper end.
struct GdValue {
  int lower = 0;
  std::optional<int> upper;
  std::string theorem;
  std::vector<std::string> hypotheses;
};

struct ActdimReport {
  int d = 0;
  bool spherical = false;
  std::optional<int> k;  // number of components, spherical case only
  Bound cd_lower;
  GdValue gd;
  Kpi1Status kpi1_status = Kpi1Status::Unknown;
  long betti_top_mod2_reduced = 0;
  IntegralGroup h_top_integral;
  Bound obdim_lower;
  Bound actdim_lower;
  Bound actdim_upper;
  Bound actdim_exact;
};

/// k + sum 2 d_i over the components T_i (d_i = |T_i| - 1). Throws
/// InputError unless the whole system is spherical.
int spherical_actdim(const CoxeterMatrix& m);

Kpi1Status kpi1_sufficient(const CoxeterMatrix& m, bool assume_kpi1 = false);

/// Throws LemmaViolation if the assembled bounds are inconsistent.
ActdimReport action_dimension_report(const CoxeterMatrix& m, bool assume_kpi1 = false);

}  // namespace coxnerve
