#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "coxnerve/generator_set.hpp"

namespace coxnerve {

/// Entry m_st of a Coxeter matrix: a positive integer or infinity.
/// Infinity is its own state, never a large sentinel integer.
class Label {
 public:
  static constexpr Label finite(std::uint32_t m) { return Label(m); }
  static constexpr Label infinity() { return Label(0); }

  constexpr bool is_infinite() const { return m_ == 0; }
  /// The integer value; only meaningful when finite.
  constexpr std::uint32_t value() const { return m_; }
  /// m_st > 2, i.e. a Coxeter diagram edge. Infinity counts.
  constexpr bool is_edge() const { return m_ == 0 || m_ > 2; }

  std::string to_string() const { return is_infinite() ? "inf" : std::to_string(m_); }

  constexpr bool operator==(const Label&) const = default;

 private:
  constexpr explicit Label(std::uint32_t m) : m_(m) {}
  std::uint32_t m_;
};

struct Relation {
  int s;
  int t;
  Label m;
};

class CoxeterMatrix {
 public:
  /// Unlisted pairs get `default_label`; throws InputError on any invariant
  /// violation (duplicate names, label < 2, repeated pair, bad index).
  CoxeterMatrix(std::vector<std::string> generators, Label default_label,
                const std::vector<Relation>& relations);

  int size() const { return static_cast<int>(generators_.size()); }
  const std::vector<std::string>& generators() const { return generators_; }
  const std::string& name(int i) const { return generators_.at(static_cast<std::size_t>(i)); }
  /// Throws InputError for unknown names.
  int index_of(std::string_view name) const;
  GeneratorSet subset(const std::vector<std::string>& names) const;
  GeneratorSet all() const { return GeneratorSet::first(size()); }

  /// m_st; the diagonal reads as 1.
  Label m(int s, int t) const {
    return labels_[static_cast<std::size_t>(s) * generators_.size() + static_cast<std::size_t>(t)];
  }
  bool adjacent(int s, int t) const { return s != t && m(s, t).is_edge(); }
  /// Generators joined to `s` by a diagram edge.
  GeneratorSet neighbours(int s) const { return neighbours_[static_cast<std::size_t>(s)]; }

  /// Throws InputError if T contains an index outside the generator range.
  void check_subset(GeneratorSet t) const;

  std::string format_subset(GeneratorSet t) const;

  bool operator==(const CoxeterMatrix&) const = default;

 private:
  std::vector<std::string> generators_;
  std::vector<Label> labels_;
  std::vector<GeneratorSet> neighbours_;
};

struct DiagramEdge {
  int s;
  int t;
  Label m;
  bool operator==(const DiagramEdge&) const = default;
};

struct Diagram {
  std::vector<std::string> vertices;
  std::vector<DiagramEdge> edges;  // s < t, sorted
};

/// Edges exactly where m_st > 2, infinity included.
Diagram diagram(const CoxeterMatrix& m);

/// Connected components of the diagram induced on T, ordered by smallest
/// member index.
std::vector<GeneratorSet> components(const CoxeterMatrix& m, GeneratorSet t);

/// Whether the diagram induced on T is connected (and T nonempty).
bool is_connected(const CoxeterMatrix& m, GeneratorSet t);

/// Parse the structured-text document
///   {"generators": [...], "default": 2 | "inf",
///    "relations": [{"pair": [s, t], "m": k | "inf"}, ...]}
CoxeterMatrix parse_coxeter_matrix(std::string_view document);

/// Inverse of parse_coxeter_matrix; relations are emitted for every pair that
/// differs from the chosen default, sorted by generator index.
std::string serialize_coxeter_matrix(const CoxeterMatrix& m, Label default_label);

}  // namespace coxnerve
