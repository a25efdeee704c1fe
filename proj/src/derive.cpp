#include "rotsys/derive.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <string>

#include "rotsys/drawability.hpp"
#include "rotsys/encode.hpp"
#include "rotsys/errors.hpp"
#include "rotsys/oracle.hpp"

namespace rotsys {

namespace {

void expect(const char* what, int got, int want) {
  if (got != want)
    throw CatalogError(std::string(what) + ": derived " + std::to_string(got) + ", expected " + std::to_string(want));
}

std::vector<PreRotationSystem> sorted_canonical(std::vector<PreRotationSystem> v) {
  for (auto& p : v) p = canonical_form(p);
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

std::vector<PreRotationSystem> enumerate_classes(int n, bool forbid4, bool forbid5, const ObstructionCatalog& catalog,
                                                 const SolverOptions& solver) {
  CnfInstance inst{VarMap(n)};
  inst.n = n;
  emit_prerotation(inst);
  emit_drawability(inst, forbid4, forbid5, catalog);
  emit_natural(inst, n);
  return sorted_canonical(enumerate_systems(inst, solver, {}));
}

ObstructionCatalog derive_obstruction_catalog(const SolverOptions& solver, DerivationCounts* counts) {
  const auto start = std::chrono::steady_clock::now();
  DerivationCounts c;
  ObstructionCatalog cat;
  cat.quadruples = quadruple_table();

  const auto all4 = enumerate_classes(4, false, false, cat, solver);
  c.classes4 = static_cast<int>(all4.size());
  std::vector<PreRotationSystem> bad4;
  for (const auto& p : all4) {
    if (is_drawable(p, solver).drawable)
      ++c.drawable4;
    else
      bad4.push_back(p);
  }
  expect("pre-rotation classes on 4 elements", c.classes4, 3);
  expect("drawable classes on 4 elements", c.drawable4, 2);
  cat.pi4o = bad4.front();

  const auto all5 = enumerate_classes(5, true, false, cat, solver);
  c.classes5 = static_cast<int>(all5.size());
  std::vector<PreRotationSystem> bad5;
  for (const auto& p : all5) {
    if (is_drawable(p, solver).drawable)
      cat.drawable5.push_back(p);
    else
      bad5.push_back(p);
  }
  c.drawable5 = static_cast<int>(cat.drawable5.size());
  expect("obstruction-4-free classes on 5 elements", c.classes5, 7);
  expect("drawable classes on 5 elements", c.drawable5, 5);
  cat.pi5a = bad5[0];
  cat.pi5b = bad5[1];

  std::vector<PreRotationSystem> nonconvex5, twisted5;
  for (const auto& p : cat.drawable5) {
    if (is_convex_definitional(p))
      ++c.convex5;
    else
      nonconvex5.push_back(p);
    if (find_perfect_subdrawing(p, PerfectKind::Twisted, 5).found) twisted5.push_back(p);
  }
  c.gentwisted5 = static_cast<int>(twisted5.size());
  expect("convex classes on 5 elements", c.convex5, 3);
  expect("twisted classes on 5 elements", c.gentwisted5, 1);
  cat.conv5a = nonconvex5[0];
  cat.conv5b = nonconvex5[1];
  cat.gt_allowed5 = twisted5.front();

  const auto all6 = enumerate_classes(6, true, true, cat, solver);
  std::vector<PreRotationSystem> convex_not_h;
  for (const auto& p : all6) {
    if (!is_drawable(p, solver).drawable) throw CatalogError("a 6-element candidate class is not drawable");
    ++c.drawable6;
    if (!is_convex_definitional(p)) continue;
    ++c.convex6;
    if (is_hconvex_definitional(p))
      ++c.hconvex6;
    else
      convex_not_h.push_back(p);
  }
  expect("drawable classes on 6 elements", c.drawable6, 102);
  expect("convex classes on 6 elements", c.convex6, 16);
  expect("h-convex classes on 6 elements", c.hconvex6, 15);
  cat.hconv6 = convex_not_h.front();

  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (counts) *counts = c;
  return cat;
}

CrossingMapCheck check_crossing_maps(const std::vector<PreRotationSystem>& classes) {
  CrossingMapCheck out;
  std::map<std::vector<std::pair<Edge, Edge>>, std::vector<PreRotationSystem>> by_map;
  for (const auto& cls : classes)
    for (const auto& p : all_relabelings(cls)) {
      CrossingMap cm(p.size());
      try {
        cm = crossing_map(p);
      } catch (const NotDrawable&) {
        continue;
      }
      std::vector<std::pair<Edge, Edge>> key;
      for (const auto& c : cm.pairs()) key.push_back({c.e, c.f});
      ++out.systems;
      by_map[key].push_back(p);
    }
  out.maps = by_map.size();
  for (const auto& [key, group] : by_map)
    for (std::size_t i = 0; i < group.size(); ++i)
      for (std::size_t j = i + 1; j < group.size(); ++j)
        if (reflect(group[i]) != group[j]) out.collisions.push_back({group[i], group[j]});
  return out;
}

}  // namespace rotsys
