#include "coxnerve/actdim.hpp"

#include <algorithm>

#include "coxnerve/classify.hpp"
#include "coxnerve/error.hpp"
#include "coxnerve/simcomplex.hpp"

namespace coxnerve {

std::string to_string(Kpi1Status s) {
  switch (s) {
    case Kpi1Status::ProvedSpherical: return "ProvedSpherical";
    case Kpi1Status::ProvedFlagNerve: return "ProvedFlagNerve";
    case Kpi1Status::Assumed: return "Assumed";
    case Kpi1Status::Unknown: return "Unknown";
  }
  return "Unknown";
}

int spherical_actdim(const CoxeterMatrix& m) {
  if (!is_spherical(m, m.all())) throw InputError("Coxeter system is not spherical");
  const auto blocks = components(m, m.all());
  int value = static_cast<int>(blocks.size());
  for (GeneratorSet b : blocks) value += 2 * (b.size() - 1);
  return value;
}

Kpi1Status kpi1_sufficient(const CoxeterMatrix& m, bool assume_kpi1) {
  if (is_spherical(m, m.all())) return Kpi1Status::ProvedSpherical;
  if (is_flag(nerve(m))) return Kpi1Status::ProvedFlagNerve;
  return assume_kpi1 ? Kpi1Status::Assumed : Kpi1Status::Unknown;
}

namespace {

std::string kpi1_hypothesis(Kpi1Status s) {
  switch (s) {
    case Kpi1Status::ProvedSpherical: return "K(pi,1) holds: W is finite (Deligne)";
    case Kpi1Status::ProvedFlagNerve: return "K(pi,1) holds: the nerve L is a flag complex";
    case Kpi1Status::Assumed: return "K(pi,1) assumed by the caller";
    case Kpi1Status::Unknown: return "K(pi,1) status unknown";
  }
  return "";
}

}  // namespace

ActdimReport action_dimension_report(const CoxeterMatrix& m, bool assume_kpi1) {
  ActdimReport r;
  const SimplicialComplex l = nerve(m);
  r.d = l.dim();
  r.spherical = is_spherical(m, m.all());
  r.kpi1_status = kpi1_sufficient(m, assume_kpi1);
  r.betti_top_mod2_reduced = reduced_betti_mod2(l).back();
  r.h_top_integral = integral_cohomology_top(l);
  const int d = r.d;

  r.cd_lower = {d + 1, "cd A >= d+1: a top simplex of L_oslash gives a free abelian subgroup of rank d+1", {}};

  if (r.spherical) {
    const auto blocks = components(m, m.all());
    r.k = static_cast<int>(blocks.size());
    const int value = spherical_actdim(m);
    const std::string thm = "spherical Artin group: actdim = obdim = k + sum 2 d_i";
    const std::vector<std::string> hyp = {"W is finite"};
    r.gd = {d + 1, d + 1, "gd A = |S| (Salvetti complex, Deligne)", hyp};
    r.obdim_lower = {value, thm, hyp};
    r.actdim_lower = {value, thm, hyp};
    r.actdim_upper = {value, thm, hyp};
    r.actdim_exact = {value, thm, hyp};
    return r;
  }

  if (r.betti_top_mod2_reduced != 0) {
    r.obdim_lower = {2 * d + 2,
                     "obstructor bound: OL_oslash is a 2d-obstructor, so obdim A >= 2d+2",
                     {"reduced H_d(L;Z/2) != 0", "L_oslash is a flag complex"}};
  } else {
    r.obdim_lower = {std::nullopt, "obstructor bound not applicable", {"reduced H_d(L;Z/2) = 0"}};
  }

  const int lower = std::max(d + 1, r.obdim_lower.value.value_or(0));
  if (r.obdim_lower.value && *r.obdim_lower.value >= d + 1) {
    r.actdim_lower = {lower, "obdim A <= actdim A", r.obdim_lower.hypotheses};
  } else {
    r.actdim_lower = {lower, "actdim A >= gd A >= cd A >= d+1", {}};
  }

  if (r.kpi1_status == Kpi1Status::Unknown) {
    r.gd = {d + 1, std::nullopt, "cd A >= d+1; upper bound needs the K(pi,1)-Conjecture",
            {kpi1_hypothesis(r.kpi1_status)}};
    r.actdim_upper = {std::nullopt, "no upper bound without the K(pi,1)-Conjecture",
                      {kpi1_hypothesis(r.kpi1_status)}};
  } else {
    const std::string kh = kpi1_hypothesis(r.kpi1_status);
    r.gd = {d + 1, d + 1, "gd A = dim L + 1 (Salvetti complex is a model for BA)", {kh}};
    if (r.h_top_integral.is_zero() && d != 2) {
      r.actdim_upper = {2 * d + 1, "Le: actdim A <= 2d+1", {kh, "H^d(L;Z) = 0", "d != 2"}};
    } else if (r.h_top_integral.is_zero()) {
      r.actdim_upper = {2 * d + 2, "actdim A <= 2 gd A (Le refinement suppressed: d = 2)",
                        {kh, "H^d(L;Z) = 0 but d = 2"}};
    } else {
      r.actdim_upper = {2 * d + 2, "actdim A <= 2 gd A", {kh}};
    }
  }

  if (r.actdim_upper.value && *r.actdim_upper.value < lower) {
    throw LemmaViolation("actdim bounds inconsistent: lower " + std::to_string(lower) +
                         " > upper " + std::to_string(*r.actdim_upper.value));
  }
  if (r.actdim_upper.value && *r.actdim_upper.value == lower) {
    std::vector<std::string> hyp = r.actdim_lower.hypotheses;
    for (const auto& h : r.actdim_upper.hypotheses) {
      if (std::find(hyp.begin(), hyp.end(), h) == hyp.end()) hyp.push_back(h);
    }
    r.actdim_exact = {lower, "lower and upper bounds meet", hyp};
  } else {
    r.actdim_exact = {std::nullopt, "bounds do not meet", {}};
  }
  return r;
}

}  // namespace coxnerve
