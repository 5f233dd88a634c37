#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coxnerve/coxmatrix.hpp"

namespace coxnerve {

/// Sequence of generator indices.
using Word = std::vector<int>;

/// Zero/dedup tolerance for root coordinates.
inline constexpr double kRootTolerance = 1e-6;

/// A positive root of a spherical special subgroup, in coordinates indexed by
/// every generator of S (zero outside the subgroup). The reflection it
/// defines is conjugator * simple * conjugator^-1.
struct Root {
  std::vector<double> coeffs;
  Word word;          // reduced word of the reflection
  GeneratorSet support;
  Word conjugator;    // w with r = w s w^-1
  int simple = -1;    // s

  /// Coefficients rounded onto the kRootTolerance grid; the identity of a root.
  std::vector<std::int64_t> key() const;
};

std::vector<std::int64_t> root_key(const std::vector<double>& coeffs);

struct LongestElement {
  Word word;
  int length = 0;
  /// involution[s] = iota_T(s) for s in T, and s itself outside T.
  std::vector<int> involution;

  bool involution_trivial() const;
};

struct ArtinLetter {
  int generator;
  int exponent;  // +1 or -1
  bool operator==(const ArtinLetter&) const = default;
};

using ArtinWord = std::vector<ArtinLetter>;

struct DeltaWords {
  ArtinWord big_delta;  // lift of w_T
  ArtinWord delta;      // generator of the center of A_T
  bool central = false; // iota_T is the identity
};

/// Cosine form restricted to T (rows/columns in generator order):
/// 1 on the diagonal, -cos(pi/m_st) off it, -1 for infinity.
std::vector<std::vector<double>> bilinear_form(const CoxeterMatrix& m, GeneratorSet t);

/// All positive roots of W_T, deterministic order (lexicographic on key, then
/// word). Throws InputError if T is not spherical or |T| > 9.
std::vector<Root> positive_roots(const CoxeterMatrix& m, GeneratorSet t);

/// Full-support root with the largest key. T must be irreducible spherical.
Root choose_r(const CoxeterMatrix& m, GeneratorSet t);

/// Greedy reduced word for the longest element of W_T and its diagram
/// involution.
LongestElement longest_element(const CoxeterMatrix& m, GeneratorSet t);

DeltaWords delta_words(const CoxeterMatrix& m, GeneratorSet t);

/// a_w a_s^2 a_w^-1 from the root's recorded factorization.
ArtinWord epsilon_r_word(const Root& root);

/// Apply the product of simple reflections `word` (rightmost first) to a
/// vector in simple-root coordinates over all of S.
std::vector<double> apply_word(const CoxeterMatrix& m, const Word& word,
                               std::vector<double> v);

std::string format_word(const CoxeterMatrix& m, const Word& w);
std::string format_artin_word(const CoxeterMatrix& m, const ArtinWord& w);
ArtinWord lift(const Word& w);

}  // namespace coxnerve
