#include "coxnerve/rootsys.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "coxnerve/classify.hpp"
#include "coxnerve/error.hpp"

namespace coxnerve {

namespace {

double form(const CoxeterMatrix& m, int s, int t) {
  if (s == t) return 1.0;
  const Label l = m.m(s, t);
  if (l.is_infinite()) return -1.0;
  return -std::cos(std::numbers::pi / static_cast<double>(l.value()));
}

// <phi_s, v> for v in simple-root coordinates.
double pairing(const CoxeterMatrix& m, int s, const std::vector<double>& v) {
  double acc = 0.0;
  for (int t = 0; t < m.size(); ++t) {
    if (v[static_cast<std::size_t>(t)] != 0.0) acc += v[static_cast<std::size_t>(t)] * form(m, s, t);
  }
  return acc;
}

GeneratorSet support_of(const std::vector<double>& coeffs) {
  GeneratorSet out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (std::abs(coeffs[i]) > kRootTolerance) out.insert(static_cast<int>(i));
  }
  return out;
}

void require_spherical(const CoxeterMatrix& m, GeneratorSet t) {
  if (!is_spherical(m, t)) {
    throw InputError("subset " + m.format_subset(t) + " is not spherical");
  }
}

void require_irreducible_spherical(const CoxeterMatrix& m, GeneratorSet t) {
  if (!is_connected(m, t)) {
    throw InputError("subset " + m.format_subset(t) + " is not irreducible");
  }
  require_spherical(m, t);
}

}  // namespace

std::vector<std::int64_t> root_key(const std::vector<double>& coeffs) {
  std::vector<std::int64_t> key(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    key[i] = static_cast<std::int64_t>(std::llround(coeffs[i] / kRootTolerance));
  }
  return key;
}

std::vector<std::int64_t> Root::key() const { return root_key(coeffs); }

bool LongestElement::involution_trivial() const {
  for (std::size_t i = 0; i < involution.size(); ++i) {
    if (involution[i] != static_cast<int>(i)) return false;
  }
  return true;
}

std::vector<std::vector<double>> bilinear_form(const CoxeterMatrix& m, GeneratorSet t) {
  m.check_subset(t);
  if (t.empty()) throw InputError("bilinear form of an empty subset");
  const auto idx = t.indices();
  std::vector<std::vector<double>> b(idx.size(), std::vector<double>(idx.size()));
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (std::size_t j = 0; j < idx.size(); ++j) b[i][j] = form(m, idx[i], idx[j]);
  }
  return b;
}

std::vector<double> apply_word(const CoxeterMatrix& m, const Word& word, std::vector<double> v) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const int s = *it;
    v[static_cast<std::size_t>(s)] -= 2.0 * pairing(m, s, v);
  }
  return v;
}

std::vector<Root> positive_roots(const CoxeterMatrix& m, GeneratorSet t) {
  m.check_subset(t);
  if (t.size() > 9) {
    throw InputError("positive root enumeration is limited to 9 generators, got " +
                     std::to_string(t.size()));
  }
  require_spherical(m, t);

  const auto gens = t.indices();
  const std::size_t n = static_cast<std::size_t>(m.size());
  std::map<std::vector<std::int64_t>, Root> found;
  std::vector<Root> layer;
  for (int s : gens) {
    Root r;
    r.coeffs.assign(n, 0.0);
    r.coeffs[static_cast<std::size_t>(s)] = 1.0;
    r.word = {s};
    r.support = GeneratorSet::single(s);
    r.simple = s;
    found.emplace(r.key(), r);
    layer.push_back(std::move(r));
  }

  // Breadth-first over depth: every non-simple positive root is reached from
  // a shallower one by a simple reflection s with <phi_s, phi> < 0, and that
  // step adds s on both sides of the reflection word.
  while (!layer.empty()) {
    std::map<std::vector<std::int64_t>, Root> next;
    for (const Root& r : layer) {
      for (int s : gens) {
        const double c = pairing(m, s, r.coeffs);
        if (c >= -kRootTolerance) continue;
        Root up;
        up.coeffs = r.coeffs;
        up.coeffs[static_cast<std::size_t>(s)] -= 2.0 * c;
        auto key = up.key();
        if (found.count(key)) continue;
        up.word.reserve(r.word.size() + 2);
        up.word.push_back(s);
        up.word.insert(up.word.end(), r.word.begin(), r.word.end());
        up.word.push_back(s);
        up.conjugator.push_back(s);
        up.conjugator.insert(up.conjugator.end(), r.conjugator.begin(), r.conjugator.end());
        up.simple = r.simple;
        up.support = support_of(up.coeffs);
        auto it = next.find(key);
        if (it == next.end()) {
          next.emplace(std::move(key), std::move(up));
        } else if (up.word < it->second.word) {
          it->second = std::move(up);
        }
      }
    }
    layer.clear();
    for (auto& [key, r] : next) {
      found.emplace(key, r);
      layer.push_back(std::move(r));
    }
  }

  std::vector<Root> out;
  out.reserve(found.size());
  for (auto& [key, r] : found) out.push_back(std::move(r));
  return out;  // std::map order is the key order; keys are unique
}

Root choose_r(const CoxeterMatrix& m, GeneratorSet t) {
  require_irreducible_spherical(m, t);
  auto roots = positive_roots(m, t);
  const Root* best = nullptr;
  for (const Root& r : roots) {
    if (r.support != t) continue;
    if (best == nullptr || r.key() > best->key()) best = &r;
  }
  if (best == nullptr) {
    throw LemmaViolation("no positive root with full support on " + m.format_subset(t));
  }
  return *best;
}

LongestElement longest_element(const CoxeterMatrix& m, GeneratorSet t) {
  m.check_subset(t);
  require_spherical(m, t);
  const auto gens = t.indices();
  const std::size_t k = gens.size();
  std::vector<std::vector<double>> b(k, std::vector<double>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) b[i][j] = form(m, gens[i], gens[j]);
  }

  // cols[j] is the image w(phi_{gens[j]}) in T-coordinates.
  std::vector<std::vector<double>> cols(k, std::vector<double>(k, 0.0));
  for (std::size_t j = 0; j < k; ++j) cols[j][j] = 1.0;

  auto positive = [](const std::vector<double>& v) {
    return std::all_of(v.begin(), v.end(), [](double x) { return x > -kRootTolerance; });
  };

  LongestElement out;
  const std::size_t guard = 100000;
  while (true) {
    std::size_t pick = k;
    for (std::size_t j = 0; j < k; ++j) {
      if (positive(cols[j])) {
        pick = j;
        break;
      }
    }
    if (pick == k) break;
    if (out.word.size() > guard) throw LemmaViolation("longest element search did not stop");
    // w <- w s: column t becomes w(s(phi_t)) = w(phi_t) - 2 B_st w(phi_s).
    const auto ws = cols[pick];
    for (std::size_t j = 0; j < k; ++j) {
      const double c = 2.0 * b[pick][j];
      if (c == 0.0) continue;
      for (std::size_t i = 0; i < k; ++i) cols[j][i] -= c * ws[i];
    }
    out.word.push_back(gens[pick]);
  }
  out.length = static_cast<int>(out.word.size());

  out.involution.resize(static_cast<std::size_t>(m.size()));
  for (int s = 0; s < m.size(); ++s) out.involution[static_cast<std::size_t>(s)] = s;
  for (std::size_t j = 0; j < k; ++j) {
    bool matched = false;
    for (std::size_t u = 0; u < k && !matched; ++u) {
      bool is_neg_simple = true;
      for (std::size_t i = 0; i < k; ++i) {
        const double want = i == u ? -1.0 : 0.0;
        if (std::abs(cols[j][i] - want) > kRootTolerance) {
          is_neg_simple = false;
          break;
        }
      }
      if (is_neg_simple) {
        out.involution[static_cast<std::size_t>(gens[j])] = gens[u];
        matched = true;
      }
    }
    if (!matched) {
      throw LemmaViolation("longest element of " + m.format_subset(t) +
                           " does not send simple roots to negative simple roots");
    }
  }
  return out;
}

ArtinWord lift(const Word& w) {
  ArtinWord out;
  out.reserve(w.size());
  for (int s : w) out.push_back({s, +1});
  return out;
}

DeltaWords delta_words(const CoxeterMatrix& m, GeneratorSet t) {
  require_irreducible_spherical(m, t);
  const LongestElement w = longest_element(m, t);
  DeltaWords out;
  out.big_delta = lift(w.word);
  out.central = w.involution_trivial();
  out.delta = out.big_delta;
  if (!out.central) out.delta.insert(out.delta.end(), out.big_delta.begin(), out.big_delta.end());
  return out;
}

ArtinWord epsilon_r_word(const Root& root) {
  ArtinWord out = lift(root.conjugator);
  out.push_back({root.simple, +1});
  out.push_back({root.simple, +1});
  for (auto it = root.conjugator.rbegin(); it != root.conjugator.rend(); ++it) {
    out.push_back({*it, -1});
  }
  return out;
}

std::string format_word(const CoxeterMatrix& m, const Word& w) {
  std::string out;
  for (int s : w) {
    if (!out.empty()) out += ' ';
    out += m.name(s);
  }
  return out;
}

std::string format_artin_word(const CoxeterMatrix& m, const ArtinWord& w) {
  std::string out;
  for (const auto& l : w) {
    if (!out.empty()) out += ' ';
    out += m.name(l.generator);
    if (l.exponent < 0) out += "^-1";
  }
  return out;
}

}  // namespace coxnerve
