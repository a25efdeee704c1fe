#pragma once

#include <vector>

#include "rotsys/crossings.hpp"
#include "rotsys/embedding.hpp"
#include "rotsys/prerotation.hpp"

namespace rotsys {

// K_n with a degree-4 cross-vertex n + i for the i-th crossing, and for every
// edge {u, v} (u < v) its subdivision order u, x_1, ..., x_k, v.
struct PlanarizationGraph {
  int n = 0;
  std::vector<CrossingPair> crossings;
  std::vector<std::vector<int>> edge_orders;  // indexed by edge_index

  int num_vertices() const { return n + static_cast<int>(crossings.size()); }
  int num_edges() const;
  std::vector<std::pair<int, int>> edges() const;
  const std::vector<int>& order(Vertex u, Vertex v) const { return edge_orders[edge_index(n, u, v)]; }

  // Planarization with every edge order left empty of crossings, to be filled.
  static PlanarizationGraph skeleton(int n, std::vector<CrossingPair> crossings);
};

// Combinatorial embedding: original vertices rotate as in pi, with every
// neighbor replaced by the first subdivision vertex on that edge;
// cross-vertices alternate the two edges with the recorded chirality.
EmbeddedGraph embed(const PreRotationSystem& pi, const PlanarizationGraph& g);

// Faces of the embedding; throws EmbeddingError unless V - E + F = 2.
std::vector<Face> faces_of(const PreRotationSystem& pi, const PlanarizationGraph& g);

// The closed walk through original vertices path[0], path[1], ..., expanded
// along the subdivided edges.
std::vector<int> expand_walk(const PlanarizationGraph& g, const std::vector<Vertex>& path);

}  // namespace rotsys
