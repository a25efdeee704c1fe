#pragma once

#include <span>
#include <vector>

#include "rotsys/catalog.hpp"
#include "rotsys/cnf.hpp"
#include "rotsys/prerotation.hpp"

namespace rotsys {

// Literals that hold exactly when the vertices s[0..k-1] induce the labeled
// system `labeled` (vertex i of labeled is s[i]). One literal per
// consecutive pair after the smallest element of every row.
std::vector<Lit> signature_literals(const VarMap& vars, std::span<const Vertex> s,
                                    const PreRotationSystem& labeled);

// The clause excluding that labeled subconfiguration.
std::vector<Lit> exclusion_clause(const VarMap& vars, std::span<const Vertex> s,
                                  const PreRotationSystem& labeled);

// Permutation axioms, smallest-first units, X/Y synchronization and the
// ternary clauses restricting the four Y values of any 4 neighbors to cyclic
// patterns.
void emit_prerotation(CnfInstance& inst);

// The four ternary patterns per (a; b<c<d<e).
std::vector<std::vector<Lit>> ternary_clauses(const VarMap& vars, Vertex a, Vertex b, Vertex c, Vertex d,
                                              Vertex e);

// Forbids every labeled copy of the given classes on every k-subset of
// `ground` (k = size of the classes).
void emit_forbidden(CnfInstance& inst, const std::vector<Vertex>& ground,
                    const std::vector<PreRotationSystem>& classes);

// forbid4: the 4-element obstruction (all labelings, both chiralities);
// forbid5: the two non-drawable 5-element obstructions.
void emit_drawability(CnfInstance& inst, bool forbid4, bool forbid5, const ObstructionCatalog& catalog);

// Vertex 0 sees the core vertices 1..core-1 in increasing order.
void emit_natural(CnfInstance& inst, int core);

// Comparator circuits asserting the X vector is lexicographically minimal
// among all 2N(N-1) natural relabelings and reflections. Requires natural.
void emit_lexmin(CnfInstance& inst);

// D variables equal the Y signatures of the labeled crossing systems,
// C = D0 or D1.
void emit_crossing_defs(CnfInstance& inst);

void emit_convex(CnfInstance& inst, int core, const ObstructionCatalog& catalog);
void emit_hconvex(CnfInstance& inst, int core, const ObstructionCatalog& catalog);
// Forbids the drawable 5-classes other than the twisted one.
void emit_gentwisted(CnfInstance& inst, int core, const ObstructionCatalog& catalog);

// Extension elements b1 = core, b2 = core + 1: no edge b1 a_i crosses b2 a_j.
void emit_cmonotone(CnfInstance& inst, int core);
// Selectors S(i, j), j != i: the star at a_i avoids a_j b1 and a_j b2.
void emit_strong_cmonotone(CnfInstance& inst, int core);
// The edge b1 b2 crosses every core edge (generalized twisted via the
// extension); requires emit_cmonotone.
void emit_twisted_ray(CnfInstance& inst, int core);

}  // namespace rotsys
