#include <doctest.h>

#include <set>

#include "rotsys/catalog.hpp"
#include "rotsys/combinatorics.hpp"
#include "rotsys/embedding.hpp"
#include "rotsys/errors.hpp"
#include "test_util.hpp"

using namespace rotsys;

TEST_CASE("face tracing on K4") {
  // Straight-line K4 with one point inside a triangle.
  EmbeddedGraph g{{{1, 3, 2}, {2, 3, 0}, {0, 3, 1}, {2, 0, 1}}};
  const auto faces = planar_faces(g);
  CHECK(faces.size() == 4);
  std::set<std::pair<int, int>> darts;
  for (const auto& f : faces)
    for (const auto& d : f) CHECK(darts.insert(d).second);
  CHECK(darts.size() == 12);
}

TEST_CASE("quadruple table") {
  const auto& table = quadruple_table();
  int drawable = 0, inside = 0, crossing = 0;
  std::set<std::pair<int, int>> crossing_kinds;
  std::set<PreRotationSystem> drawable_classes, all_classes;
  for (int code = 0; code < 16; ++code) {
    const auto pi = quadruple_system(code);
    CHECK(quadruple_code(pi, 0, 1, 2, 3) == code);
    all_classes.insert(canonical_form(pi));
    if (!table[code].drawable) continue;
    ++drawable;
    drawable_classes.insert(canonical_form(pi));
    inside += table[code].d_in_abc;
    if (table[code].cls.crossing()) {
      ++crossing;
      crossing_kinds.insert({static_cast<int>(table[code].cls.pairing), table[code].cls.direction});
    }
  }
  CHECK(drawable == 8);
  CHECK(inside == 4);
  CHECK(crossing == 6);
  CHECK(crossing_kinds.size() == 6);
  CHECK(all_classes.size() == 3);
  CHECK(drawable_classes.size() == 2);
}

TEST_CASE("the obstruction has the forbidden Y signature") {
  // Y(1;2,3,4), Y(2;1,3,4), Y(3;1,2,4), Y(4;1,3,2) all true.
  PreRotationSystem pi({{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 2, 1}});
  CHECK_THROWS_AS(classify_quadruple(pi, 0, 1, 2, 3), NotDrawable);
  CHECK_THROWS_AS(crossing_map(pi), NotDrawable);
  CHECK_FALSE(quadruple_table()[quadruple_code(reflect(pi), 0, 1, 2, 3)].drawable);
}

TEST_CASE("point inside a triangle") {
  PreRotationSystem pi({{1, 3, 2}, {2, 3, 0}, {0, 3, 1}, {2, 0, 1}});
  CHECK(side_contains(pi, 3, 0, 1, 2));
  CHECK_FALSE(side_contains(pi, 3, 0, 2, 1));
  CHECK_FALSE(classify_quadruple(pi, 0, 1, 2, 3).crossing());
  CHECK(crossing_map(pi).count() == 0);
}

TEST_CASE("convex quadrilateral") {
  const auto c4 = convex_position_system(4);
  const auto cls = classify_quadruple(c4, 0, 1, 2, 3);
  CHECK(cls.crossing());
  CHECK(cls.pairing == Pairing::AcBd);
  CHECK(cls.direction == 0);
  CHECK_FALSE(side_contains(c4, 3, 0, 1, 2));
  CHECK(side_contains(c4, 3, 0, 2, 1));
  const auto map = crossing_map(c4);
  CHECK(map.count() == 1);
  CHECK(map.crosses(0, 2, 1, 3));
}

TEST_CASE("convex pentagon crossings") {
  const auto map = crossing_map(convex_position_system(5));
  CHECK(map.count() == 5);
  for (const auto& cp : map.pairs()) {
    const int a = cp.e.first, c = cp.e.second, b = cp.f.first, d = cp.f.second;
    CHECK((a < b && b < c && c < d));
  }
}

TEST_CASE("sides partition the sphere") {
  std::mt19937 rng(3);
  for_each_system(4, [&](const PreRotationSystem& pi) {
    if (!quadruple_table()[quadruple_code(pi, 0, 1, 2, 3)].drawable) return;
    for (int d = 0; d < 4; ++d) {
      std::vector<int> t;
      for (int v = 0; v < 4; ++v)
        if (v != d) t.push_back(v);
      CHECK(side_contains(pi, d, t[0], t[1], t[2]) != side_contains(pi, d, t[0], t[2], t[1]));
      CHECK(side_contains(pi, d, t[0], t[1], t[2]) == side_contains(pi, d, t[1], t[2], t[0]));
    }
  });
}

TEST_CASE("twisted systems follow the T-rule") {
  for (int n = 4; n <= 8; ++n) {
    const auto map = crossing_map(twisted_system(n));
    CHECK(map.count() == static_cast<std::size_t>(binomial(n, 4)));
    for (const auto& cp : map.pairs()) {
      // e = ad, f = bc with a < b < c < d
      CHECK(cp.e.first < cp.f.first);
      CHECK(cp.f.second < cp.e.second);
    }
  }
  const auto t6 = twisted_system(6);
  const auto t5 = canonical_form(twisted_system(5));
  for_each_subset(6, 5, [&](const std::vector<int>& s) { CHECK(canonical_form(restrict_to(t6, s)) == t5); });
  CHECK_FALSE(contains_configuration(twisted_system(5), convex_position_system(5)));
}
