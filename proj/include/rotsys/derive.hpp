#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rotsys/catalog.hpp"
#include "rotsys/solver.hpp"

namespace rotsys {

struct DerivationCounts {
  int classes4 = 0, drawable4 = 0;
  int classes5 = 0, drawable5 = 0, convex5 = 0, gentwisted5 = 0;
  int drawable6 = 0, convex6 = 0, hconvex6 = 0;
  double seconds = 0;
};

// Rebuilds the obstruction catalog from enumeration, the planarization
// search and the definitional convexity checks. Throws CatalogError when a
// class count disagrees with the expected 3/2, 7/5, 5/3/1 and 102/16/15.
ObstructionCatalog derive_obstruction_catalog(const SolverOptions& solver, DerivationCounts* counts = nullptr);

// All classes on n elements of an instance with the given obstructions
// forbidden (natural symmetry breaking, canonical dedup).
std::vector<PreRotationSystem> enumerate_classes(int n, bool forbid4, bool forbid5, const ObstructionCatalog& catalog,
                                                 const SolverOptions& solver);

struct CrossingMapCheck {
  std::size_t systems = 0;  // labeled systems with defined crossings
  std::size_t maps = 0;     // distinct crossing maps among them
  std::vector<std::pair<PreRotationSystem, PreRotationSystem>> collisions;
};

// Expands each class to all labeled copies and reports pairs of systems
// that share a crossing map without being reflections of each other.
CrossingMapCheck check_crossing_maps(const std::vector<PreRotationSystem>& classes);

}  // namespace rotsys
