#pragma once

#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "rotsys/cnf.hpp"
#include "rotsys/planarization.hpp"
#include "rotsys/solver.hpp"

namespace rotsys {

// Planarization search for one pre-rotation system. Planarization vertices
// are the n originals followed by one cross-vertex per crossing pair.
struct DrawabilityCnf {
  CnfInstance inst;
  PlanarizationGraph skeleton;
  // Per edge (edge_index): the cross-vertices on it, ascending.
  std::vector<std::vector<int>> on_edge;
  // O(e, x, y) for cross-vertices x < y on e: x comes before y walking from
  // the smaller endpoint.
  std::map<std::tuple<int, int, int>, int> order_vars;
  int num_vertices = 0;
  // Schnyder orders B(i, u, v), allocated as 3 m x m grids; only u < v is used.
  int schnyder_base = 0;

  int schnyder(int i, int u, int v) const;
};

// Throws NotDrawable when pi contains the 4-element obstruction.
DrawabilityCnf build_drawability_cnf(const PreRotationSystem& pi);

// Subdivision orders read from a model of the instance.
PlanarizationGraph extract_planarization(const DrawabilityCnf& cnf, const SolveOutcome& model);

struct DrawabilityResult {
  bool drawable = false;
  std::optional<PlanarizationGraph> planarization;
};

// False for systems containing the 4-element obstruction. On success the
// planarization's embedding has been checked with Euler's formula.
DrawabilityResult is_drawable(const PreRotationSystem& pi, const SolverOptions& opts = {});

}  // namespace rotsys
