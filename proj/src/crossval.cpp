#include "rotsys/crossval.hpp"

#include "rotsys/catalog.hpp"
#include "rotsys/combinatorics.hpp"
#include "rotsys/encode.hpp"
#include "rotsys/errors.hpp"
#include "rotsys/oracle.hpp"
#include "rotsys/properties.hpp"

namespace rotsys {

bool pinned_sat(const PreRotationSystem& pi, const std::function<void(CnfInstance&)>& emit,
                const SolverOptions& solver) {
  const int n = pi.size();
  CnfInstance inst{VarMap(n)};
  inst.n = n;
  emit_prerotation(inst);
  emit_drawability(inst, true, n >= 5, builtin_catalog());
  emit_crossing_defs(inst);
  inst.family("pin");
  for (int a = 0; a < n; ++a)
    for_each_subset(n, 3, [&](const std::vector<int>& t) {
      if (t[0] == a || t[1] == a || t[2] == a) return;
      const Lit y = inst.vars().y_sorted(a, t[0], t[1], t[2]);
      inst.add({pi.ccw(a, t[0], t[1], t[2]) ? y : -y});
    });
  emit(inst);
  const auto out = solve(inst, solver);
  if (out.status == Status::Unknown) throw SolverError("pinned instance did not finish");
  return out.status == Status::Sat;
}

std::vector<Disagreement> cross_validate(const PreRotationSystem& pi, const SolverOptions& solver) {
  const int n = pi.size();
  std::vector<Disagreement> bad;
  auto expect = [&](const std::string& name, bool sat, bool want) {
    if (sat != want) bad.push_back({name, to_json_line(pi)});
  };

  expect("plane-hc", pinned_sat(pi, [&](CnfInstance& i) { forbid_plane_hamiltonian_cycle(i, n); }, solver),
         !find_plane_hamiltonian_cycle(pi).found);
  expect("plane-hp-1-2", pinned_sat(pi, [&](CnfInstance& i) { forbid_plane_hamiltonian_path(i, n, 0, 1); }, solver),
         !find_plane_hamiltonian_path(pi, 0, 1).found);
  expect("plane-hp-1-n", pinned_sat(pi, [&](CnfInstance& i) { forbid_plane_hamiltonian_path(i, n, 0, n - 1); }, solver),
         !find_plane_hamiltonian_path(pi, 0, n - 1).found);
  expect("plane-hc-plus", pinned_sat(pi, [&](CnfInstance& i) { forbid_hc_plus(i, n); }, solver),
         !find_plane_hc_plus(pi).found);
  for (int k = 1; 2 * k <= n; ++k) {
    std::vector<Edge> m;
    for (int i = 0; i < k; ++i) m.push_back({2 * i, 2 * i + 1});
    bool plane = true;
    const auto cm = crossing_map(pi);
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = i + 1; j < m.size(); ++j) plane &= !cm.crosses(m[i], m[j]);
    expect("matching-hc-" + std::to_string(k),
           pinned_sat(pi, [&](CnfInstance& i) { forbid_matching_friendly_hc(i, n, k, false); }, solver),
           plane && !find_plane_hc_avoiding(pi, m).found);
  }
  for (int k = 3; k <= n; ++k)
    expect("empty-cycle-" + std::to_string(k), pinned_sat(pi, [&](CnfInstance& i) { forbid_empty_k_cycles(i, n, k); }, solver),
           !find_empty_k_cycle(pi, k).found);
  const int t = count_empty_triangles(pi);
  expect("empty-triangles-at-most-count", pinned_sat(pi, [&](CnfInstance& i) { bound_empty_triangles(i, n, t); }, solver), true);
  expect("empty-triangles-below-count",
         pinned_sat(pi, [&](CnfInstance& i) { bound_empty_triangles(i, n, t - 1); }, solver), t == 0);
  expect("all-edges-crossed", pinned_sat(pi, [&](CnfInstance& i) { require_all_edges_crossed(i, n); }, solver),
         all_edges_crossed(pi));
  expect("crossing-maximal", pinned_sat(pi, [&](CnfInstance& i) { require_crossing_maximal(i, n); }, solver),
         is_crossing_maximal(pi));
  for (int k = 2; 2 * k <= n; ++k)
    expect("crossing-family-" + std::to_string(k),
           pinned_sat(pi, [&](CnfInstance& i) { forbid_crossing_family(i, n, k); }, solver),
           !find_crossing_family(pi, k).found);
  for (int k = 4; k <= n; ++k) {
    expect("perfect-convex-" + std::to_string(k),
           pinned_sat(pi, [&](CnfInstance& i) { forbid_perfect_convex(i, n, k); }, solver),
           !find_perfect_subdrawing(pi, PerfectKind::Convex, k).found);
    expect("perfect-twisted-" + std::to_string(k),
           pinned_sat(pi, [&](CnfInstance& i) { forbid_perfect_twisted(i, n, k); }, solver),
           !find_perfect_subdrawing(pi, PerfectKind::Twisted, k).found);
    expect("crossing-maximal-sub-" + std::to_string(k),
           pinned_sat(pi, [&](CnfInstance& i) { forbid_crossing_maximal_subdrawing(i, n, k); }, solver),
           !find_crossing_maximal_subset(pi, k).found);
  }
  const bool convex = is_convex_definitional(pi);
  expect("convex-obstructions", check_class(pi, DrawingClass::Convex), convex);
  expect("convex-clauses", pinned_sat(pi, [&](CnfInstance& i) { emit_convex(i, n, builtin_catalog()); }, solver), convex);
  const bool hconvex = convex && is_hconvex_definitional(pi);
  expect("hconvex-obstructions", check_class(pi, DrawingClass::HConvex), hconvex);
  expect("hconvex-clauses", pinned_sat(pi, [&](CnfInstance& i) { emit_hconvex(i, n, builtin_catalog()); }, solver), hconvex);
  return bad;
}

}  // namespace rotsys
