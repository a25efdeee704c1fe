#include <doctest.h>

#include <algorithm>
#include <set>

#include "rotsys/catalog.hpp"
#include "rotsys/combinatorics.hpp"
#include "rotsys/derive.hpp"
#include "rotsys/encode.hpp"
#include "rotsys/errors.hpp"
#include "rotsys/pipeline.hpp"

using namespace rotsys;

namespace {

std::size_t count_classes(const RunConfig& cfg) {
  return enumerate_systems(build_instance(cfg), {}, enumeration_options(cfg, Dedup::Canonical, 0)).size();
}

std::set<std::vector<Vertex>> class_set(const RunConfig& cfg) {
  std::set<std::vector<Vertex>> out;
  for (const auto& p : enumerate_systems(build_instance(cfg), {}, enumeration_options(cfg, Dedup::Canonical, 0)))
    out.insert(canonical_form(p).flat());
  return out;
}

}  // namespace

TEST_CASE("pre-rotation classes without validity clauses") {
  const ObstructionCatalog cat;
  CHECK(enumerate_classes(4, false, false, cat, {}).size() == 3);
  CHECK(enumerate_classes(5, true, false, builtin_catalog(), {}).size() == 7);
}

TEST_CASE("class counts for n = 4..6 in every column") {
  struct Row {
    int n;
    std::size_t all, convex, hconvex, cm, scm, gt;
  };
  for (const Row& r : {Row{4, 2, 2, 2, 2, 2, 1}, Row{5, 5, 3, 3, 5, 5, 1}, Row{6, 102, 16, 15, 102, 95, 3}}) {
    CAPTURE(r.n);
    RunConfig c;
    c.n = r.n;
    CHECK(count_classes(c) == r.all);
    RunConfig cv = c;
    cv.convex = true;
    CHECK(count_classes(cv) == r.convex);
    RunConfig hc = c;
    hc.hconvex = true;
    CHECK(count_classes(hc) == r.hconvex);
    RunConfig cm = c;
    cm.cmonotone = true;
    CHECK(count_classes(cm) == r.cm);
    RunConfig scm = c;
    scm.scmonotone = true;
    CHECK(count_classes(scm) == r.scm);
    RunConfig gt = c;
    gt.gentwisted = true;
    CHECK(count_classes(gt) == r.gt);
  }
}

TEST_CASE("lexicographic minima need no deduplication") {
  for (int n = 4; n <= 6; ++n) {
    RunConfig c;
    c.n = n;
    c.lexmin = true;
    const auto inst = build_instance(c);
    std::set<std::vector<Vertex>> classes;
    const auto stats = enumerate_all(inst, {}, enumeration_options(c, Dedup::None, 0),
                                     [&](const PreRotationSystem& p, const SolveOutcome&) {
                                       classes.insert(canonical_form(p).flat());
                                       return true;
                                     });
    RunConfig plain;
    plain.n = n;
    CHECK(stats.models == classes.size());
    CHECK(classes == class_set(plain));
  }
}

TEST_CASE("subclass model sets are nested") {
  RunConfig c;
  c.n = 6;
  const auto all = class_set(c);
  RunConfig cv = c, hc = c, gt = c;
  cv.convex = true;
  hc.hconvex = true;
  gt.gentwisted = true;
  const auto convex = class_set(cv), hconvex = class_set(hc), twisted = class_set(gt);
  CHECK(std::includes(all.begin(), all.end(), convex.begin(), convex.end()));
  CHECK(std::includes(convex.begin(), convex.end(), hconvex.begin(), hconvex.end()));
  CHECK(std::includes(all.begin(), all.end(), twisted.begin(), twisted.end()));
}

TEST_CASE("decoded crossing variables agree with the crossing map") {
  for (int n = 5; n <= 6; ++n) {
    CnfInstance inst{VarMap(n)};
    inst.n = n;
    emit_prerotation(inst);
    emit_drawability(inst, true, true, builtin_catalog());
    emit_natural(inst, n);
    emit_crossing_defs(inst);
    const auto& V = inst.vars();
    int checked = 0;
    enumerate_all(inst, {}, {}, [&](const PreRotationSystem& p, const SolveOutcome& m) {
      CHECK(check_class(p, DrawingClass::Drawable));
      CHECK(p.rotation(0)[0] == 1);
      const auto cm = crossing_map(p);
      for_each_subset(n, 4, [&](const std::vector<int>& q) {
        int crossed = 0;
        for (int pr = 0; pr < 3; ++pr) {
          const auto [e, f] = pairing_edges(static_cast<Pairing>(pr), q.data());
          const bool c = m.holds(V.c_quad(q.data(), static_cast<Pairing>(pr)));
          CHECK(c == cm.crosses(e, f));
          crossed += c;
          if (c) CHECK(m.holds(V.d_quad(q.data(), static_cast<Pairing>(pr), cm.direction(e, f))));
        }
        CHECK(crossed <= 1);
      });
      ++checked;
      return true;
    });
    CHECK(checked == (n == 5 ? 5 : 102));
  }
}

TEST_CASE("re-asserting decoded Y literals reproduces the system") {
  RunConfig c;
  c.n = 6;
  c.convex = true;
  auto inst = build_instance(c);
  const auto first = solve(inst, {});
  REQUIRE(first.status == Status::Sat);
  const auto pi = decode_model(first, inst.vars());
  for (int a = 0; a < 6; ++a)
    for_each_subset(6, 3, [&](const std::vector<int>& t) {
      if (std::find(t.begin(), t.end(), a) != t.end()) return;
      const Lit y = inst.vars().y_sorted(a, t[0], t[1], t[2]);
      inst.add({pi.ccw(a, t[0], t[1], t[2]) ? y : -y});
    });
  const auto again = solve(inst, {});
  REQUIRE(again.status == Status::Sat);
  CHECK(decode_model(again, inst.vars()) == pi);
}

TEST_CASE("extension modes project to the core") {
  RunConfig c;
  c.n = 5;
  c.scmonotone = true;
  const auto inst = build_instance(c);
  CHECK(inst.vars().elements() == 7);
  const auto out = solve(inst, {});
  REQUIRE(out.status == Status::Sat);
  const auto full = decode_model(out, inst.vars());
  CHECK(full.size() == 7);
  CHECK(check_class(full, DrawingClass::Drawable));
  CHECK(project(full, 5).size() == 5);
}

TEST_CASE("enumeration limit and dedup none") {
  RunConfig c;
  c.n = 6;
  auto got = enumerate_systems(build_instance(c), {}, enumeration_options(c, Dedup::Canonical, 7));
  CHECK(got.size() == 7);
  // Without dedup every natural labeling of every class is reported.
  RunConfig c5;
  c5.n = 5;
  auto none = enumerate_systems(build_instance(c5), {}, enumeration_options(c5, Dedup::None, 0));
  std::set<std::vector<Vertex>> expected;
  for (const auto& p : enumerate_systems(build_instance(c5), {}, enumeration_options(c5, Dedup::Canonical, 0)))
    for (const auto& q : natural_relabelings(p)) expected.insert(q.flat());
  std::set<std::vector<Vertex>> seen;
  for (const auto& p : none) seen.insert(p.flat());
  CHECK(seen.size() == none.size());
  CHECK(seen == expected);
}

TEST_CASE("enumeration order is reproducible") {
  RunConfig c;
  c.n = 6;
  c.convex = true;
  const auto a = enumerate_systems(build_instance(c), {}, enumeration_options(c, Dedup::Canonical, 0));
  const auto b = enumerate_systems(build_instance(c), {}, enumeration_options(c, Dedup::Canonical, 0));
  CHECK(a == b);
}
