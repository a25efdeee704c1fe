#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rotsys/crossings.hpp"
#include "rotsys/prerotation.hpp"

namespace rotsys {

// Outcome of an exhaustive search. `found` with a witness, or not found; a
// search that ran out of budget reports exhaustive = false.
struct OracleReport {
  std::string property;
  bool found = false;
  std::vector<Vertex> witness;  // vertex sequence, or edge endpoints pairwise
  bool exhaustive = true;
  std::uint64_t nodes = 0;
};

// Search node budget; 0 means unlimited.
struct OracleBudget {
  std::uint64_t nodes = 0;
};

OracleReport find_plane_hamiltonian_cycle(const PreRotationSystem& pi, OracleBudget budget = {});
OracleReport find_plane_hamiltonian_path(const PreRotationSystem& pi, Vertex a, Vertex b, OracleBudget budget = {});
// Plane Hamiltonian cycle extended by n - 3 further edges to a plane
// subdrawing; witness lists the 2n - 3 edges.
OracleReport find_plane_hc_plus(const PreRotationSystem& pi, OracleBudget budget = {});
// Plane Hamiltonian cycle that crosses none of the given (plane) edges.
OracleReport find_plane_hc_avoiding(const PreRotationSystem& pi, const std::vector<Edge>& avoid,
                                    OracleBudget budget = {});

// Triangles with a side whose interior holds no vertex.
int count_empty_triangles(const PreRotationSystem& pi);
// Plane k-cycle with all remaining vertices on one side.
OracleReport find_empty_k_cycle(const PreRotationSystem& pi, int k, OracleBudget budget = {});

// k pairwise disjoint, pairwise crossing edges; witness as endpoint pairs.
OracleReport find_crossing_family(const PreRotationSystem& pi, int k);

bool all_edges_crossed(const PreRotationSystem& pi);
bool is_crossing_maximal(const PreRotationSystem& pi);
// A k-subset on which every 4-subset has a crossing.
OracleReport find_crossing_maximal_subset(const PreRotationSystem& pi, int k);

enum class PerfectKind { Convex, Twisted };
// A labeled k-subset s_0..s_{k-1} whose crossings are exactly
// {s_i s_k, s_j s_l} (convex) or {s_i s_l, s_j s_k} (twisted), i<j<k<l.
OracleReport find_perfect_subdrawing(const PreRotationSystem& pi, PerfectKind kind, int k);

// Convexity by definition: every triangle has a side S in which every edge
// between two vertices of S crosses no triangle edge.
bool is_convex_definitional(const PreRotationSystem& pi);
// H-convexity by definition: a choice of convex sides closed under
// containment. Throws OutOfScope above max_n.
bool is_hconvex_definitional(const PreRotationSystem& pi, int max_n = 8);

}  // namespace rotsys
