#pragma once

#include <vector>

#include <json.hpp>

#include "coxnerve/actdim.hpp"
#include "coxnerve/homology.hpp"
#include "coxnerve/rootsys.hpp"
#include "coxnerve/simcomplex.hpp"

namespace coxnerve {

/// {"vertices": [...], "faces_by_dim": [[...], ...]}; faces are lists of
/// vertex indices. Signed vertices serialize as [name, sign].
nlohmann::json to_json(const SimplicialComplex& k);

/// Roots as {"coeffs", "word", "support"}; coefficients rounded to 9
/// decimals, word and support as generator names.
nlohmann::json to_json(const CoxeterMatrix& m, const std::vector<Root>& roots);

nlohmann::json to_json(const IntegralGroup& g);
nlohmann::json to_json(const BettiProfile& p);
nlohmann::json to_json(const ActdimReport& r);

}  // namespace coxnerve
