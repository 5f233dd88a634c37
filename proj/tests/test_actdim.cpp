#include <doctest.h>

#include "coxnerve/actdim.hpp"
#include "coxnerve/error.hpp"
#include "coxnerve/examples.hpp"
#include "helpers.hpp"

using namespace coxnerve;

TEST_CASE("spherical action dimension") {
  CHECK(spherical_actdim(testing::a_n(1)) == 1);
  CHECK(spherical_actdim(testing::a_n(3)) == 5);
  CHECK(spherical_actdim(generate_example("i2_2")) == 2);
  CHECK(spherical_actdim(generate_example("e8")) == 15);
  CHECK(spherical_actdim(testing::path({3, 2})) == 4);  // A2 x A1: k=2, 2*1 + 2*0
  CHECK_THROWS_AS(spherical_actdim(testing::path({0})), InputError);
}

TEST_CASE("K(pi,1) sufficient conditions") {
  CHECK(kpi1_sufficient(generate_example("e8")) == Kpi1Status::ProvedSpherical);
  CHECK(kpi1_sufficient(generate_example("raag-cycle-4")) == Kpi1Status::ProvedFlagNerve);
  const auto affine = testing::cycle(3, 3, Label::finite(2));
  CHECK(kpi1_sufficient(affine) == Kpi1Status::Unknown);
  CHECK(kpi1_sufficient(affine, true) == Kpi1Status::Assumed);
  CHECK(to_string(Kpi1Status::ProvedFlagNerve) == "ProvedFlagNerve");
}

TEST_CASE("report: right-angled 4-cycle") {
  const auto r = action_dimension_report(generate_example("raag-cycle-4"));
  CHECK(r.d == 1);
  CHECK_FALSE(r.spherical);
  CHECK(r.betti_top_mod2_reduced == 1);
  CHECK(r.kpi1_status == Kpi1Status::ProvedFlagNerve);
  CHECK(r.obdim_lower.value == 4);
  CHECK(r.actdim_exact.value == 4);
  CHECK(r.gd.lower == 2);
  CHECK(r.gd.upper == 2);
}

TEST_CASE("report: single generator") {
  const auto r = action_dimension_report(testing::a_n(1));
  CHECK(r.spherical);
  CHECK(r.actdim_exact.value == 1);
  CHECK(r.betti_top_mod2_reduced == 0);
  CHECK(r.kpi1_status == Kpi1Status::ProvedSpherical);
}

TEST_CASE("report: two points") {
  const auto r = action_dimension_report(generate_example("two-points-inf"));
  CHECK(r.d == 0);
  CHECK(r.betti_top_mod2_reduced == 1);
  CHECK(r.kpi1_status == Kpi1Status::ProvedFlagNerve);
  CHECK(r.actdim_exact.value == 2);
}

TEST_CASE("report: pentagon") {
  const auto m = generate_example("pentagon-3");
  const auto r = action_dimension_report(m);
  CHECK(r.d == 1);
  CHECK(r.betti_top_mod2_reduced == 1);
  CHECK(r.kpi1_status == Kpi1Status::ProvedFlagNerve);
  CHECK(r.actdim_exact.value == 4);
  CHECK(subdivide(m).complex.count(0) == 10);
}

TEST_CASE("report: RP2 nerve, Le's refinement does not apply") {
  const auto r = action_dimension_report(generate_example("rp2-nerve"));
  CHECK(r.d == 2);
  CHECK(r.betti_top_mod2_reduced == 1);
  CHECK(r.h_top_integral.torsion.size() == 1);
  CHECK(r.h_top_integral.torsion[0] == 2);
  CHECK(r.obdim_lower.value == 6);
  CHECK(r.actdim_upper.value == 6);
  CHECK(r.actdim_exact.value == 6);
}

TEST_CASE("report: Le's bound fires when top cohomology vanishes") {
  // Right-angled on a path of three vertices: L is a contractible path (d=1),
  // H^1(L;Z) = 0, so the upper bound is 2d+1 = 3; no obstructor bound.
  std::vector<Relation> rel = {{0, 1, Label::finite(2)}, {1, 2, Label::finite(2)}};
  const CoxeterMatrix m(testing::names(3), Label::infinity(), rel);
  const auto r = action_dimension_report(m);
  CHECK(r.d == 1);
  CHECK(r.betti_top_mod2_reduced == 0);
  CHECK(r.h_top_integral.is_zero());
  CHECK(r.actdim_upper.value == 3);
  CHECK_FALSE(r.obdim_lower.value.has_value());
}

TEST_CASE("report: unknown K(pi,1) leaves the upper bound open unless assumed") {
  const auto affine = testing::cycle(3, 3, Label::finite(2));
  const auto r = action_dimension_report(affine);
  CHECK(r.kpi1_status == Kpi1Status::Unknown);
  CHECK_FALSE(r.actdim_upper.value.has_value());
  CHECK_FALSE(r.actdim_exact.value.has_value());
  const auto assumed = action_dimension_report(affine, true);
  CHECK(assumed.kpi1_status == Kpi1Status::Assumed);
  CHECK(assumed.actdim_upper.value.has_value());
}
