#include <doctest.h>

#include "rotsys/crossval.hpp"
#include "rotsys/derive.hpp"
#include "rotsys/errors.hpp"
#include "rotsys/pipeline.hpp"

using namespace rotsys;

namespace {

const PreRotationSystem& plane_k4() {
  static const PreRotationSystem k4({{1, 3, 2}, {2, 3, 0}, {0, 3, 1}, {2, 0, 1}});
  return k4;
}

bool witness_cycle_is_plane(const PreRotationSystem& pi, const std::vector<Vertex>& c) {
  const auto cm = crossing_map(pi);
  std::vector<Edge> e;
  for (std::size_t i = 0; i < c.size(); ++i) e.push_back(make_edge(c[i], c[(i + 1) % c.size()]));
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j)
      if (cm.crosses(e[i], e[j])) return false;
  return true;
}

}  // namespace

TEST_CASE("oracles on the crossing-free K4") {
  const auto& k4 = plane_k4();
  CHECK(count_empty_triangles(k4) == 4);
  const auto hc = find_plane_hamiltonian_cycle(k4);
  REQUIRE(hc.found);
  CHECK(hc.exhaustive);
  CHECK(witness_cycle_is_plane(k4, hc.witness));
  CHECK(find_plane_hamiltonian_path(k4, 0, 2).found);
  CHECK_FALSE(find_crossing_family(k4, 2).found);
  CHECK_FALSE(all_edges_crossed(k4));
  CHECK(is_convex_definitional(k4));
}

TEST_CASE("convex position") {
  const auto c6 = convex_position_system(6);
  const auto fam = find_crossing_family(c6, 3);
  REQUIRE(fam.found);
  CHECK(fam.witness == std::vector<Vertex>{0, 3, 1, 4, 2, 5});
  CHECK(find_perfect_subdrawing(c6, PerfectKind::Convex, 6).found);
  CHECK_FALSE(find_perfect_subdrawing(c6, PerfectKind::Twisted, 5).found);
  CHECK(is_crossing_maximal(c6));
  CHECK(is_convex_definitional(c6));
  CHECK(is_hconvex_definitional(c6));
}

TEST_CASE("twisted drawings") {
  const auto t5 = twisted_system(5);
  CHECK_FALSE(find_perfect_subdrawing(t5, PerfectKind::Convex, 5).found);
  CHECK(find_perfect_subdrawing(t5, PerfectKind::Twisted, 5).found);
  CHECK(find_crossing_family(t5, 2).found);
  const auto t7 = twisted_system(7);
  CHECK(count_empty_triangles(t7) == 2 * 7 - 4);
  CHECK(find_perfect_subdrawing(t7, PerfectKind::Twisted, 7).found);
}

TEST_CASE("search budgets are reported") {
  const auto c8 = convex_position_system(8);
  const auto r = find_plane_hamiltonian_cycle(c8, OracleBudget{1});
  CHECK_FALSE(r.exhaustive);
  CHECK_FALSE(r.found);
  CHECK_THROWS_AS(is_hconvex_definitional(convex_position_system(9)), OutOfScope);
}

TEST_CASE("generalized twisted classes on 7 elements have 2n - 4 empty triangles") {
  RunConfig c;
  c.n = 7;
  c.gentwisted = true;
  const auto classes = enumerate_systems(build_instance(c), {}, enumeration_options(c, Dedup::Canonical, 0));
  CHECK(classes.size() == 9);
  for (const auto& p : classes) {
    CHECK(count_empty_triangles(p) == 10);
    CHECK(find_plane_hamiltonian_cycle(p).found);
  }
}

TEST_CASE("encodings agree with the oracles on every class up to 6 elements") {
  std::vector<PreRotationSystem> classes = {plane_k4()};
  for (int n = 4; n <= 6; ++n) {
    RunConfig c;
    c.n = n;
    const auto got = enumerate_systems(build_instance(c), {}, enumeration_options(c, Dedup::Canonical, 0));
    classes.insert(classes.end(), got.begin(), got.end());
  }
  CHECK(classes.size() == 1 + 2 + 5 + 102);
  std::size_t disagreements = 0;
  for (const auto& p : classes) {
    for (const auto& d : cross_validate(p)) {
      ++disagreements;
      MESSAGE(d.property << " " << d.system);
    }
  }
  CHECK(disagreements == 0);
}
