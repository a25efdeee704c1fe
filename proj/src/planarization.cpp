#include "rotsys/planarization.hpp"

#include <algorithm>

#include "rotsys/errors.hpp"

namespace rotsys {

int PlanarizationGraph::num_edges() const {
  int m = 0;
  for (const auto& o : edge_orders) m += static_cast<int>(o.size()) - 1;
  return m;
}

std::vector<std::pair<int, int>> PlanarizationGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (const auto& o : edge_orders)
    for (std::size_t i = 0; i + 1 < o.size(); ++i) out.emplace_back(o[i], o[i + 1]);
  return out;
}

PlanarizationGraph PlanarizationGraph::skeleton(int n, std::vector<CrossingPair> crossings) {
  PlanarizationGraph g;
  g.n = n;
  g.crossings = std::move(crossings);
  g.edge_orders.resize(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.edge_orders[edge_index(n, u, v)] = {u, v};
  return g;
}

namespace {

// Neighbors of x along edge {u, v}: the one toward u and the one toward v.
std::pair<int, int> along(const PlanarizationGraph& g, Edge e, int x) {
  const auto& o = g.order(e.first, e.second);
  auto it = std::find(o.begin(), o.end(), x);
  if (it == o.end() || it == o.begin() || it + 1 == o.end())
    throw EmbeddingError("cross-vertex missing from its edge order");
  return {*(it - 1), *(it + 1)};
}

}  // namespace

EmbeddedGraph embed(const PreRotationSystem& pi, const PlanarizationGraph& g) {
  const int n = g.n;
  EmbeddedGraph out;
  out.rotation.resize(g.num_vertices());
  for (int a = 0; a < n; ++a)
    for (Vertex b : pi.rotation(a)) {
      const auto& o = g.order(a, b);
      out.rotation[a].push_back(a < b ? o[1] : o[o.size() - 2]);
    }
  for (int i = 0; i < static_cast<int>(g.crossings.size()); ++i) {
    const auto& cp = g.crossings[i];
    const int x = n + i;
    auto [e0, e1] = along(g, cp.e, x);
    auto [f0, f1] = along(g, cp.f, x);
    if (cp.direction == 0)
      out.rotation[x] = {e0, f0, e1, f1};
    else
      out.rotation[x] = {e0, f1, e1, f0};
  }
  return out;
}

std::vector<Face> faces_of(const PreRotationSystem& pi, const PlanarizationGraph& g) {
  return planar_faces(embed(pi, g));
}

std::vector<int> expand_walk(const PlanarizationGraph& g, const std::vector<Vertex>& path) {
  std::vector<int> walk;
  const int k = static_cast<int>(path.size());
  for (int i = 0; i < k; ++i) {
    const Vertex u = path[i], v = path[(i + 1) % k];
    const auto& o = g.order(u, v);
    if (u < v)
      walk.insert(walk.end(), o.begin(), o.end() - 1);
    else
      walk.insert(walk.end(), o.rbegin(), o.rend() - 1);
  }
  return walk;
}

}  // namespace rotsys
