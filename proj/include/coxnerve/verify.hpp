#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "coxnerve/coxmatrix.hpp"

namespace coxnerve {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
};

/// Sylvester test on the cosine form restricted to T: every leading
/// principal minor exceeds 1e-9. Independent of the diagram recognizer.
bool cosine_positive_definite(const CoxeterMatrix& m, GeneratorSet t);

CheckResult check_injective_r(const CoxeterMatrix& m);
CheckResult check_flag(const CoxeterMatrix& m);
CheckResult check_e_t_count(const CoxeterMatrix& m);
CheckResult check_centerless(const CoxeterMatrix& m);
CheckResult check_homo_rank(const CoxeterMatrix& m);
CheckResult check_main_pairs(const CoxeterMatrix& m);
CheckResult check_iso_rank(const CoxeterMatrix& m);
CheckResult check_nested_equivalence(const CoxeterMatrix& m);
CheckResult check_subdivision_betti(const CoxeterMatrix& m);
CheckResult check_classification_oracle(const CoxeterMatrix& m);

/// Every check above, in a fixed order. A LemmaViolation inside a check
/// turns into a failed result rather than propagating.
std::vector<CheckResult> verify_all(const CoxeterMatrix& m);

/// Uniform generator count in [1, max_generators], each pair labelled
/// uniformly from {2, 3, 4, 5, inf}. Uses raw engine output only, so the
/// sequence is identical across standard libraries.
CoxeterMatrix random_coxeter_matrix(std::mt19937_64& rng, int max_generators);

/// Builtin inputs used as the fixed verification corpus.
std::vector<std::string> verification_corpus();

}  // namespace coxnerve
