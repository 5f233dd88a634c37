#include "coxnerve/serialize.hpp"

#include <cmath>

namespace coxnerve {

using nlohmann::json;

namespace {

json optional_int(const std::optional<int>& v) {
  if (v) return *v;
  return nullptr;
}

json bound_json(const Bound& b) {
  return {{"value", optional_int(b.value)}, {"theorem", b.theorem}, {"hypotheses", b.hypotheses}};
}

json big_json(const BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(x);
  }
  return x.str();
}

double round9(double x) {
  const double r = std::round(x * 1e9) / 1e9;
  return r == 0.0 ? 0.0 : r;  // no negative zero
}

}  // namespace

json to_json(const SimplicialComplex& k) {
  json vertices = json::array();
  for (const auto& v : k.vertices()) {
    if (v.sign == 0) {
      vertices.push_back(v.name);
    } else {
      vertices.push_back({v.name, v.sign});
    }
  }
  json faces = json::array();
  for (int d = 0; d <= k.dim(); ++d) faces.push_back(k.faces(d));
  return {{"vertices", vertices}, {"faces_by_dim", faces}};
}

json to_json(const CoxeterMatrix& m, const std::vector<Root>& roots) {
  json out = json::array();
  for (const Root& r : roots) {
    json coeffs = json::array();
    for (double c : r.coeffs) coeffs.push_back(round9(c));
    json word = json::array();
    for (int s : r.word) word.push_back(m.name(s));
    json support = json::array();
    for (int s : r.support.indices()) support.push_back(m.name(s));
    out.push_back({{"coeffs", coeffs}, {"word", word}, {"support", support}});
  }
  return out;
}

json to_json(const IntegralGroup& g) {
  json torsion = json::array();
  for (const auto& t : g.torsion) torsion.push_back(big_json(t));
  return {{"rank", g.rank}, {"torsion", torsion}};
}

json to_json(const BettiProfile& p) {
  return {{"reduced_betti_mod2", p.reduced_mod2}, {"top_integral_cohomology", to_json(p.integral_top)}};
}

json to_json(const ActdimReport& r) {
  json out;
  out["d"] = r.d;
  out["spherical"] = r.spherical;
  out["k"] = optional_int(r.k);
  out["cd_lower"] = bound_json(r.cd_lower);
  out["gd"] = {{"lower", r.gd.lower},
               {"upper", optional_int(r.gd.upper)},
               {"theorem", r.gd.theorem},
               {"hypotheses", r.gd.hypotheses},
               {"conditional_on_kpi1", !r.spherical}};
  out["kpi1_status"] = to_string(r.kpi1_status);
  out["betti_top_mod2_reduced"] = r.betti_top_mod2_reduced;
  out["h_top_integral"] = to_json(r.h_top_integral);
  out["obdim_lower"] = bound_json(r.obdim_lower);
  out["actdim_lower"] = bound_json(r.actdim_lower);
  out["actdim_upper"] = bound_json(r.actdim_upper);
  out["actdim_exact"] = bound_json(r.actdim_exact);
  return out;
}

}  // namespace coxnerve
