#include <doctest.h>

#include "coxnerve/classify.hpp"
#include "coxnerve/error.hpp"
#include "coxnerve/examples.hpp"
#include "helpers.hpp"

using namespace coxnerve;
using testing::path;
using testing::star;

namespace {

std::string type_name(const CoxeterMatrix& m) {
  const auto t = recognize_finite_type(m, m.all());
  return t ? t->name() : "NotFinite";
}

}  // namespace

TEST_CASE("recognize: named types") {
  CHECK(type_name(testing::a_n(1)) == "A1");
  CHECK(type_name(testing::a_n(3)) == "A3");
  CHECK(type_name(path({0})) == "NotFinite");
  CHECK(type_name(path({3, 4, 3})) == "F4");
  CHECK(type_name(path({5, 3, 3})) == "H4");
  CHECK(type_name(path({3, 3, 5})) == "H4");
  CHECK(type_name(star({1, 2, 4})) == "E8");
  CHECK(type_name(star({1, 2, 5})) == "NotFinite");
}

TEST_CASE("recognize: families") {
  CHECK(type_name(path({3})) == "A2");
  CHECK(type_name(path({4})) == "I2(4)");
  CHECK(type_name(path({6})) == "I2(6)");
  CHECK(type_name(path({3, 4})) == "B3");
  CHECK(type_name(path({4, 3, 3})) == "B4");
  CHECK(type_name(path({3, 4, 3, 3})) == "NotFinite");  // affine F4
  CHECK(type_name(path({4, 3, 4})) == "NotFinite");     // affine C3
  CHECK(type_name(path({3, 5})) == "H3");
  CHECK(type_name(path({5, 3, 3, 3})) == "NotFinite");
  CHECK(type_name(path({3, 6})) == "NotFinite");
  CHECK(type_name(star({1, 1, 1})) == "D4");
  CHECK(type_name(star({1, 1, 3})) == "D6");
  CHECK(type_name(star({1, 2, 2})) == "E6");
  CHECK(type_name(star({1, 2, 3})) == "E7");
  CHECK(type_name(star({2, 2, 2})) == "NotFinite");  // affine E6
  CHECK(type_name(star({1, 1, 1, 1})) == "NotFinite");
  CHECK(type_name(testing::cycle(3, 3, Label::finite(2))) == "NotFinite");  // triangle of 3s: affine A2
}

TEST_CASE("recognize: preconditions") {
  const auto m = testing::a_n(3);
  CHECK_THROWS_AS(recognize_finite_type(m, GeneratorSet{}), InputError);
  CHECK_THROWS_AS(recognize_finite_type(m, m.subset({"a", "c"})), InputError);
}

TEST_CASE("is_spherical") {
  const auto two_inf = path({0});
  CHECK(is_spherical(two_inf, GeneratorSet{}));
  CHECK_FALSE(is_spherical(two_inf, two_inf.all()));
  CHECK(is_spherical(testing::a_n(3), testing::a_n(3).all()));
  const auto e8 = generate_example("e8");
  CHECK(is_spherical(e8, e8.all()));
  // Reducible: A2 x A1
  const auto m = path({3, 2});
  CHECK(is_spherical(m, m.all()));
}

TEST_CASE("catalog entries") {
  const auto a1 = catalog(make_finite_type(Family::A, 1));
  CHECK(a1.num_reflections == 1);
  CHECK_FALSE(a1.centerless);
  const auto e8 = catalog(make_finite_type(Family::E8, 8));
  CHECK(e8.num_reflections == 120);
  CHECK_FALSE(e8.centerless);
  const auto i5 = catalog(make_finite_type(Family::I2, 2, 5));
  CHECK(i5.num_reflections == 5);
  CHECK(i5.centerless);
  CHECK(catalog(make_finite_type(Family::A, 4)).num_reflections == 10);
  CHECK(catalog(make_finite_type(Family::B, 4)).num_reflections == 16);
  CHECK(catalog(make_finite_type(Family::D, 5)).num_reflections == 20);
  CHECK(catalog(make_finite_type(Family::E6, 6)).num_reflections == 36);
  CHECK(catalog(make_finite_type(Family::E7, 7)).num_reflections == 63);
  CHECK(catalog(make_finite_type(Family::F4, 4)).num_reflections == 24);
  CHECK(catalog(make_finite_type(Family::H3, 3)).num_reflections == 15);
  CHECK(catalog(make_finite_type(Family::H4, 4)).num_reflections == 60);
  CHECK(catalog(make_finite_type(Family::A, 3)).centerless);
  CHECK_FALSE(catalog(make_finite_type(Family::A, 1)).centerless);
  CHECK_FALSE(catalog(make_finite_type(Family::D, 4)).centerless);
  CHECK(catalog(make_finite_type(Family::D, 5)).centerless);
  CHECK(catalog(make_finite_type(Family::E6, 6)).centerless);
  CHECK_FALSE(catalog(make_finite_type(Family::I2, 2, 8)).centerless);
}

TEST_CASE("recognizer agrees with the determinant oracle on all small labelled graphs") {
  // Every labelling of the complete graph on 3 and 4 vertices from {2,3,4,5,6,inf}.
  const std::vector<Label> labels = {Label::finite(2), Label::finite(3), Label::finite(4),
                                     Label::finite(5), Label::finite(6), Label::infinity()};
  for (int n = 2; n <= 4; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    }
    std::vector<std::size_t> digit(pairs.size(), 0);
    long checked = 0;
    while (true) {
      std::vector<Relation> rel;
      for (std::size_t k = 0; k < pairs.size(); ++k) rel.push_back({pairs[k].first, pairs[k].second, labels[digit[k]]});
      const CoxeterMatrix m(testing::names(n), Label::finite(2), rel);
      if (is_connected(m, m.all())) {
        const bool expected = testing::cosine_oracle(m, m.all());
        CAPTURE(m.size());
        CHECK(recognize_finite_type(m, m.all()).has_value() == expected);
        ++checked;
      }
      std::size_t k = 0;
      while (k < digit.size() && ++digit[k] == labels.size()) digit[k++] = 0;
      if (k == digit.size()) break;
    }
    CHECK(checked > 0);
  }
}
