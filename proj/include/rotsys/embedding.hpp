#pragma once

#include <utility>
#include <vector>

namespace rotsys {

// A combinatorial map: for each vertex, its neighbors in counterclockwise
// order. Faces are traced so that each face lies to the left of its darts.
struct EmbeddedGraph {
  std::vector<std::vector<int>> rotation;

  int num_vertices() const { return static_cast<int>(rotation.size()); }
  int num_edges() const;
};

// A face as its boundary walk of darts (u -> v).
using Face = std::vector<std::pair<int, int>>;

// Traces every face; each dart appears in exactly one face.
std::vector<Face> trace_faces(const EmbeddedGraph& g);

// V - E + F for a connected map; 2 iff the embedding is planar.
int euler_characteristic(const EmbeddedGraph& g);

// Faces of a planar embedding; throws EmbeddingError when V - E + F != 2.
std::vector<Face> planar_faces(const EmbeddedGraph& g);

// Vertices strictly to the left of a closed directed walk (a simple cycle
// given as a vertex sequence) in a planar embedding.
std::vector<int> vertices_left_of(const std::vector<Face>& faces, const std::vector<int>& cycle);

}  // namespace rotsys
