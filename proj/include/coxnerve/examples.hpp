#pragma once

#include <string>
#include <vector>

#include "coxnerve/coxmatrix.hpp"

namespace coxnerve {

/// Builtin inputs: a_N, b_N, d_N, e6, e7, e8, f4, h3, h4, i2_P,
/// raag-cycle-N, pentagon-3, two-points-inf, rp2-nerve.
/// Throws InputError for unknown names or out-of-range parameters.
CoxeterMatrix generate_example(const std::string& name);

/// The input document for `name`, in the format parse_coxeter_matrix reads.
std::string generate_example_document(const std::string& name);

/// A representative name for each builtin family.
std::vector<std::string> example_names();

/// Triangles of the 11-vertex flag triangulation of the real projective
/// plane behind `rp2-nerve`.
const std::vector<std::vector<int>>& rp2_flag_triangles();

}  // namespace coxnerve
