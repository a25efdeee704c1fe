#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rotsys/prerotation.hpp"

namespace rotsys {

// Undirected edge, always stored with first < second.
using Edge = std::pair<Vertex, Vertex>;

inline Edge make_edge(Vertex u, Vertex v) { return u < v ? Edge{u, v} : Edge{v, u}; }

inline bool disjoint(Edge e, Edge f) {
  return e.first != f.first && e.first != f.second && e.second != f.first && e.second != f.second;
}

// Rank of {u, v} among the C(n, 2) edges in lexicographic order.
inline int edge_index(int n, Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  return u * (2 * n - u - 1) / 2 + (v - u - 1);
}

// For a 4-set {a, b, c, d} listed in a fixed order, the three ways to split
// it into two disjoint edges.
enum class Pairing : std::uint8_t { AbCd = 0, AcBd = 1, AdBc = 2 };

// The two edges of a pairing over positions (q[0], q[1], q[2], q[3]); the
// first edge always contains q[0].
std::pair<Edge, Edge> pairing_edges(Pairing p, const Vertex q[4]);

struct QuadrupleClass {
  enum class Kind : std::uint8_t { NoCrossing, Crossing };
  Kind kind = Kind::NoCrossing;
  Pairing pairing = Pairing::AbCd;
  // With e = (e0, e1) the edge through the first listed vertex and f =
  // (f0, f1) the other (both in listed order), direction 0 means the
  // crossing point sees e0, f0, e1, f1 counterclockwise; 1 means e0, f1, e1, f0.
  int direction = 0;

  bool crossing() const { return kind == Kind::Crossing; }
  friend bool operator==(const QuadrupleClass&, const QuadrupleClass&) = default;
};

struct CrossingPair {
  Edge e;  // contains the smallest of the four vertices
  Edge f;
  int direction;  // as in QuadrupleClass, for the sorted 4-set
};

// Set of crossing edge pairs of a Pi4o-free pre-rotation system.
class CrossingMap {
 public:
  explicit CrossingMap(int n);

  int size() const { return n_; }
  void add(Edge e, Edge f, int direction);
  bool crosses(Edge e, Edge f) const;
  bool crosses(Vertex u, Vertex v, Vertex x, Vertex y) const {
    return crosses(make_edge(u, v), make_edge(x, y));
  }
  int direction(Edge e, Edge f) const;
  const std::vector<CrossingPair>& pairs() const { return pairs_; }
  std::size_t count() const { return pairs_.size(); }

  // Edges crossing e.
  std::vector<Edge> crossing_edges(Edge e) const;

  // Equality of the crossing pair sets (directions are not compared).
  friend bool operator==(const CrossingMap& a, const CrossingMap& b);

 private:
  int n_;
  int edges_;
  std::vector<std::int8_t> matrix_;  // -1: no crossing, else direction
  std::vector<CrossingPair> pairs_;
};

}  // namespace rotsys
