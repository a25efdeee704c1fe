#pragma once

#include <vector>

#include "rotsys/cnf.hpp"

namespace rotsys {

// A cyclic vertex sequence and its edges {pi_i, pi_i+1}.
struct CycleEdgeSet {
  std::vector<Vertex> order;
  std::vector<Edge> edges() const;
};

// Hamiltonian cycles of [n] starting at 0 with order[1] < order[n-1].
std::vector<std::vector<Vertex>> hamiltonian_cycles(int n);
// Cycles on k of the n vertices: every k-subset, starting at its minimum,
// second vertex smaller than the last.
std::vector<std::vector<Vertex>> k_cycles(int n, int k);

// Caps on factorial-size families; -1 disables the check.
struct PropertyLimits {
  int hc_max_n = 12;
  int hc_plus_max_n = 9;
};

// Clause: some disjoint pair within the edge set crosses (empty clause when
// the set has no disjoint pair).
std::vector<Lit> some_crossing(const VarMap& vars, const std::vector<Edge>& edges);

void forbid_plane_hamiltonian_cycle(CnfInstance& inst, int n, const PropertyLimits& lim = {});
void forbid_plane_hamiltonian_path(CnfInstance& inst, int n, Vertex a, Vertex b, const PropertyLimits& lim = {});
void forbid_hc_plus(CnfInstance& inst, int n, const PropertyLimits& lim = {});

// Matching {0,1}, {2,3}, ..., {2k-2, 2k-1} is plane and every plane
// Hamiltonian cycle crosses it. `symmetry` adds the rotation-of-0 units.
void forbid_matching_friendly_hc(CnfInstance& inst, int n, int k, bool symmetry, const PropertyLimits& lim = {});

void forbid_empty_k_cycles(CnfInstance& inst, int n, int k);

// At most max_count unordered triples have an empty side.
void bound_empty_triangles(CnfInstance& inst, int n, int max_count);

void require_all_edges_crossed(CnfInstance& inst, int n);
void require_crossing_maximal(CnfInstance& inst, int n);

void forbid_crossing_family(CnfInstance& inst, int n, int k);

void forbid_perfect_convex(CnfInstance& inst, int n, int a);
void forbid_perfect_twisted(CnfInstance& inst, int n, int b);
void forbid_crossing_maximal_subdrawing(CnfInstance& inst, int n, int k);

// Sinz sequential counter: at most k of the literals are true.
void at_most_k(CnfInstance& inst, const std::vector<Lit>& lits, int k, const char* block_name);

}  // namespace rotsys
