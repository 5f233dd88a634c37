#include <doctest.h>

#include "coxnerve/abelian.hpp"
#include "coxnerve/error.hpp"
#include "coxnerve/examples.hpp"
#include "coxnerve/rootsys.hpp"
#include "helpers.hpp"

using namespace coxnerve;

namespace {

long ones(const std::vector<int>& v) {
  long n = 0;
  for (int x : v) n += x;
  return n;
}

/// Vertex index of a piece in the subdivision.
int vertex(const Subdivision& sub, GeneratorSet t) {
  for (std::size_t i = 0; i < sub.pieces.size(); ++i) {
    if (sub.pieces[i] == t) return static_cast<int>(i);
  }
  return -1;
}

Simplex face(const Subdivision& sub, std::initializer_list<GeneratorSet> pieces) {
  Simplex f;
  for (auto t : pieces) f.push_back(vertex(sub, t));
  std::sort(f.begin(), f.end());
  return f;
}

}  // namespace

TEST_CASE("reflection index") {
  CHECK(reflection_index(testing::a_n(1)).size() == 1);
  const auto a2 = testing::a_n(2);
  const auto idx = reflection_index(a2);
  REQUIRE(idx.size() == 3);
  CHECK(format_word(a2, idx.roots()[0].word) == "a");
  CHECK(format_word(a2, idx.roots()[1].word) == "b");
  CHECK(format_word(a2, idx.roots()[2].word) == "a b a");
  CHECK(idx.row_of({1.0, 1.0}) == 2);
  CHECK(idx.row_of({2.0, 1.0}) == -1);
  CHECK(reflection_index(generate_example("raag-cycle-4")).size() == 4);
}

TEST_CASE("e vectors") {
  const auto a2 = testing::a_n(2);
  const auto idx = reflection_index(a2);
  const auto es = e_vector(a2, GeneratorSet::single(0), idx);
  CHECK(es == std::vector<int>{1, 0, 0});
  CHECK(ones(e_vector(a2, a2.all(), idx)) == 3);
  const auto b2 = testing::dihedral(4);
  CHECK(ones(e_vector(b2, b2.all(), reflection_index(b2))) == 4);
  const auto a3 = testing::a_n(3);
  CHECK_THROWS_AS(e_vector(a3, a3.subset({"a", "c"}), reflection_index(a3)), InputError);
}

TEST_CASE("j matrix") {
  const auto a2 = testing::a_n(2);
  const auto j = j_matrix(a2);
  CHECK(j.matrix == IntMatrix{{1, 0, 1}, {0, 1, 1}, {0, 0, 1}});
  CHECK(j_rank_checked(j) == 3);
  CHECK(j_matrix(testing::a_n(1)).matrix == IntMatrix{{1}});
  const auto j3 = j_matrix(testing::a_n(3));
  CHECK(j3.matrix.cols() == 6);
  CHECK(j_rank_checked(j3) == 6);
}

TEST_CASE("lattice intersections") {
  const auto a2 = testing::a_n(2);
  const auto sub = subdivide(a2);
  const auto j = j_matrix(a2);
  const auto s = GeneratorSet::single(0), t = GeneratorSet::single(1);
  const auto st = a2.all();
  const Simplex alpha = face(sub, {s, st});
  const Simplex beta = face(sub, {t});
  CHECK(lattice_intersection_check(j, sub.complex, alpha, alpha));
  CHECK(lattice_intersection_check(j, sub.complex, alpha, beta));
  CHECK(lattice_intersection(j, alpha, beta).cols() == 0);

  const auto a3 = testing::a_n(3);
  const auto sub3 = subdivide(a3);
  const auto j3 = j_matrix(a3);
  const auto a = a3.subset({"a"}), b = a3.subset({"b"}), ab = a3.subset({"a", "b"});
  const Simplex x = face(sub3, {a, ab}), y = face(sub3, {b, ab});
  CHECK(lattice_intersection_check(j3, sub3.complex, x, y));
  CHECK(same_lattice(lattice_intersection(j3, x, y), lattice_of(j3, face(sub3, {ab}))));
  CHECK_FALSE(same_lattice(lattice_intersection(j3, x, y), lattice_of(j3, face(sub3, {a}))));
  CHECK_THROWS_AS(lattice_intersection_check(j3, sub3.complex, face(sub3, {a, b}), x), InputError);
}

TEST_CASE("same_lattice") {
  CHECK(same_lattice(IntMatrix{{1, 0}, {0, 1}}, IntMatrix{{1, 1}, {0, 1}}));
  CHECK_FALSE(same_lattice(IntMatrix{{2, 0}, {0, 1}}, IntMatrix{{1, 0}, {0, 1}}));
  CHECK(same_lattice(IntMatrix(2, 0), IntMatrix{{0}, {0}}));
}

TEST_CASE("standard abelian subgroups") {
  const auto a1 = testing::a_n(1);
  const auto sub1 = subdivide(a1);
  const auto h1 = standard_abelian_subgroup(a1, sub1, {0});
  REQUIRE(h1.generators.size() == 1);
  CHECK(h1.generators[0].delta == lift({0}));
  CHECK(h1.rank == 1);

  const auto a2 = testing::a_n(2);
  const auto sub2 = subdivide(a2);
  const auto h2 = standard_abelian_subgroup(a2, sub2, face(sub2, {GeneratorSet::single(0), a2.all()}));
  REQUIRE(h2.generators.size() == 2);
  CHECK(h2.generators[0].delta == lift({0}));
  CHECK(h2.generators[1].delta == lift({0, 1, 0, 0, 1, 0}));
  CHECK(h2.rank == 2);

  const auto a3 = testing::a_n(3);
  const auto sub3 = subdivide(a3);
  const auto h3 = standard_abelian_subgroup(
      a3, sub3, face(sub3, {a3.subset({"a"}), a3.subset({"c"}), a3.all()}));
  CHECK(h3.rank == 3);
}

TEST_CASE("int64 lattice path agrees with the big-integer path") {
  for (const char* name : {"a_4", "b_3", "h3", "d_4", "pentagon-3", "i2_6"}) {
    CAPTURE(name);
    const auto m = generate_example(name);
    const auto sub = subdivide(m);
    const auto fast = j_matrix(m);
    auto slow = fast;
    slow.columns64.clear();
    std::vector<Simplex> faces;
    for (int d = 0; d <= sub.complex.dim(); ++d) {
      for (const auto& f : sub.complex.faces(d)) faces.push_back(f);
    }
    for (std::size_t a = 0; a < faces.size(); a += 3) {
      for (std::size_t b = 0; b < faces.size(); b += 2) {
        CHECK(lattice_intersection_check(fast, sub.complex, faces[a], faces[b]) ==
              lattice_intersection_check(slow, sub.complex, faces[a], faces[b]));
      }
    }
  }
}

TEST_CASE("lattice check detects a broken intersection") {
  // Doctor j so that two columns coincide: J_a cap J_b is then too big.
  const auto a2 = testing::a_n(2);
  const auto sub = subdivide(a2);
  for (bool small : {true, false}) {
    auto j = j_matrix(a2);
    for (std::size_t r = 0; r < j.matrix.rows(); ++r) j.matrix(r, 1) = j.matrix(r, 0);
    j.columns64[1] = j.columns64[0];
    if (!small) j.columns64.clear();
    CHECK_FALSE(lattice_intersection_check(j, sub.complex, {0}, {1}));
  }
}
