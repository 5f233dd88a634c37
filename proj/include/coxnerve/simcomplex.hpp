#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "coxnerve/coxmatrix.hpp"

namespace coxnerve {

/// Sorted list of vertex indices.
using Simplex = std::vector<int>;

/// Vertex label. `sign` is 0 for plain vertices and +1/-1 for the doubled
/// vertices of an octahedralization.
struct VertexLabel {
  std::string name;
  int sign = 0;

  std::string to_string() const;
  bool operator==(const VertexLabel&) const = default;
};

/// Finite abstract simplicial complex storing every face, grouped by
/// dimension and sorted lexicographically within each dimension.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Closes `generators` under nonempty subsets. Every vertex becomes a
  /// 0-face even if no generator mentions it.
  static SimplicialComplex from_generators(std::vector<VertexLabel> vertices,
                                           const std::vector<Simplex>& generators);
  /// `faces` must already be closed under nonempty subsets and contain every
  /// vertex; only sorting and bucketing happen here.
  static SimplicialComplex from_closed_faces(std::vector<VertexLabel> vertices,
                                             std::vector<Simplex> faces);

  const std::vector<VertexLabel>& vertices() const { return vertices_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  /// -1 for the empty complex.
  int dim() const { return static_cast<int>(faces_.size()) - 1; }
  const std::vector<Simplex>& faces(int k) const;
  std::size_t count(int k) const;
  std::size_t total_faces() const;
  bool contains(const Simplex& s) const;
  /// Position of `s` within faces(|s| - 1), or -1.
  long index_of(const Simplex& s) const;
  long euler_characteristic() const;

  bool operator==(const SimplicialComplex&) const = default;

 private:
  std::vector<VertexLabel> vertices_;
  std::vector<std::vector<Simplex>> faces_;
};

/// Faces are the nonempty spherical subsets; vertex i is generator i.
/// Throws InputError above 20 generators.
SimplicialComplex nerve(const CoxeterMatrix& m);

/// Nonempty spherical subsets with connected diagram, by size then
/// lexicographically.
std::vector<GeneratorSet> s_oslash(const CoxeterMatrix& m);

/// Two elements of S_oslash are orthogonal (disjoint, no diagram edge
/// between them) or comparable.
bool nested_pair(const CoxeterMatrix& m, GeneratorSet a, GeneratorSet b);

/// L_oslash together with the generator subset behind each vertex.
struct Subdivision {
  SimplicialComplex complex;
  std::vector<GeneratorSet> pieces;  // vertex i of complex is pieces[i]
};

/// Flag complex on S_oslash whose edges are the orthogonal-or-comparable
/// pairs.
Subdivision subdivide(const CoxeterMatrix& m);

/// The recursive nested-set test, applied literally.
bool nested_oracle(const CoxeterMatrix& m, const std::vector<GeneratorSet>& alpha);

/// Doubles every vertex v into (v,+1) = 2v and (v,-1) = 2v+1.
SimplicialComplex octahedralize(const SimplicialComplex& k);

/// Every clique of the 1-skeleton is a face.
bool is_flag(const SimplicialComplex& k);

/// All cliques of the graph on `n` vertices (as sorted simplices), in the
/// order produced by depth-first extension.
std::vector<Simplex> cliques(std::size_t n, const std::vector<std::vector<int>>& adjacency);

}  // namespace coxnerve
