#include <doctest.h>

#include <algorithm>
#include <map>

#include "rotsys/catalog.hpp"
#include "rotsys/derive.hpp"
#include "rotsys/drawability.hpp"
#include "rotsys/errors.hpp"
#include "test_util.hpp"

using namespace rotsys;

namespace {

// Tries every order of the crossings along every edge and accepts when the
// embedding with the given rotations satisfies Euler's formula.
bool drawable_by_search(const PreRotationSystem& pi) {
  CrossingMap cm(pi.size());
  try {
    cm = crossing_map(pi);
  } catch (const NotDrawable&) {
    return false;
  }
  auto g = PlanarizationGraph::skeleton(pi.size(), cm.pairs());
  std::vector<std::vector<int>> on(g.edge_orders.size());
  for (std::size_t i = 0; i < cm.pairs().size(); ++i) {
    const auto& p = cm.pairs()[i];
    on[edge_index(pi.size(), p.e.first, p.e.second)].push_back(pi.size() + static_cast<int>(i));
    on[edge_index(pi.size(), p.f.first, p.f.second)].push_back(pi.size() + static_cast<int>(i));
  }
  auto rec = [&](auto&& self, std::size_t e) -> bool {
    if (e == on.size()) return euler_characteristic(embed(pi, g)) == 2;
    auto xs = on[e];
    std::sort(xs.begin(), xs.end());
    const auto ends = g.edge_orders[e];
    do {
      g.edge_orders[e] = {ends.front()};
      g.edge_orders[e].insert(g.edge_orders[e].end(), xs.begin(), xs.end());
      g.edge_orders[e].push_back(ends.back());
      if (self(self, e + 1)) return true;
    } while (std::next_permutation(xs.begin(), xs.end()));
    g.edge_orders[e] = ends;
    return false;
  };
  return rec(rec, 0);
}

}  // namespace

TEST_CASE("drawability on 4 and 5 elements") {
  const ObstructionCatalog none;
  const auto four = enumerate_classes(4, false, false, none, {});
  REQUIRE(four.size() == 3);
  int drawable = 0;
  for (const auto& p : four) drawable += is_drawable(p).drawable;
  CHECK(drawable == 2);

  const auto five = enumerate_classes(5, true, false, builtin_catalog(), {});
  REQUIRE(five.size() == 7);
  drawable = 0;
  for (const auto& p : five) {
    const bool d = is_drawable(p).drawable;
    CHECK(d == drawable_by_search(p));
    CHECK(d == check_class(p, DrawingClass::Drawable));
    drawable += d;
  }
  CHECK(drawable == 5);
}

TEST_CASE("the 5-element obstructions give unsatisfiable planarization instances") {
  const auto& cat = builtin_catalog();
  for (const auto* p : {&*cat.pi5a, &*cat.pi5b}) {
    const auto d = build_drawability_cnf(*p);
    CHECK(solve(d.inst, {}).status == Status::Unsat);
  }
  CHECK_THROWS_AS(build_drawability_cnf(*cat.pi4o), NotDrawable);
  CHECK_FALSE(is_drawable(*cat.pi4o).drawable);
}

TEST_CASE("crossing-free K4 is its own planarization") {
  const auto k4 = PreRotationSystem({{1, 3, 2}, {2, 3, 0}, {0, 3, 1}, {2, 0, 1}});
  const auto d = build_drawability_cnf(k4);
  CHECK(d.skeleton.crossings.empty());
  const auto r = is_drawable(k4);
  REQUIRE(r.drawable);
  CHECK(r.planarization->num_vertices() == 4);
  CHECK(faces_of(k4, *r.planarization).size() == 4);
}

TEST_CASE("K5 with one crossing") {
  for (const auto& p : builtin_catalog().drawable5) {
    const auto cm = crossing_map(p);
    if (cm.count() != 1) continue;
    const auto r = is_drawable(p);
    REQUIRE(r.drawable);
    CHECK(r.planarization->num_vertices() == 6);
    CHECK(r.planarization->num_edges() == 12);
    CHECK(faces_of(p, *r.planarization).size() == 8);
    return;
  }
  FAIL("no drawable 5-class with a single crossing");
}

TEST_CASE("extracted planarizations match the crossing map") {
  std::mt19937 rng(7);
  const auto five = builtin_catalog().drawable5;
  for (const auto& base : five) {
    std::vector<Vertex> perm{0, 1, 2, 3, 4};
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto p = transform(base, perm, rng() % 2);
    const auto r = is_drawable(p);
    REQUIRE(r.drawable);
    const auto& g = *r.planarization;
    const auto cm = crossing_map(p);
    CHECK(g.crossings.size() == cm.count());
    CHECK(g.num_edges() == 10 + 2 * static_cast<int>(cm.count()));
    std::vector<int> seen(g.num_vertices(), 0);
    for (int u = 0; u < 5; ++u)
      for (int v = u + 1; v < 5; ++v) {
        const auto& o = g.order(u, v);
        CHECK(o.front() == u);
        CHECK(o.back() == v);
        CHECK(o.size() == cm.crossing_edges({u, v}).size() + 2);
        for (std::size_t i = 1; i + 1 < o.size(); ++i) ++seen[o[i]];
      }
    for (int x = 5; x < g.num_vertices(); ++x) CHECK(seen[x] == 2);
    // Cross-vertices alternate the two edges.
    const auto emb = embed(p, g);
    for (int x = 5; x < g.num_vertices(); ++x) {
      const auto& rot = emb.rotation[x];
      REQUIRE(rot.size() == 4);
      const auto& cp = g.crossings[x - 5];
      auto on_e = [&](int y) {
        const auto& o = g.order(cp.e.first, cp.e.second);
        return std::find(o.begin(), o.end(), y) != o.end();
      };
      CHECK(on_e(rot[0]) == on_e(rot[2]));
      CHECK(on_e(rot[1]) == on_e(rot[3]));
      CHECK(on_e(rot[0]) != on_e(rot[1]));
    }
  }
}

TEST_CASE("crossing maps separate non-mirror systems on 5 elements") {
  std::map<std::vector<std::pair<Edge, Edge>>, std::vector<PreRotationSystem>> by_map;
  int valid = 0;
  for_each_system(5, [&](const PreRotationSystem& p) {
    CrossingMap cm(5);
    try {
      cm = crossing_map(p);
    } catch (const NotDrawable&) {
      return;
    }
    ++valid;
    std::vector<std::pair<Edge, Edge>> key;
    for (const auto& c : cm.pairs()) key.push_back({c.e, c.f});
    by_map[key].push_back(p);
  });
  CHECK(valid > 0);
  for (const auto& [key, group] : by_map) {
    CHECK(group.size() <= 2);
    if (group.size() == 2) CHECK(reflect(group[0]) == group[1]);
  }
}
