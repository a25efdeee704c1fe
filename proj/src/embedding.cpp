#include "rotsys/embedding.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "rotsys/errors.hpp"

namespace rotsys {

int EmbeddedGraph::num_edges() const {
  std::size_t deg = 0;
  for (const auto& r : rotation) deg += r.size();
  return static_cast<int>(deg / 2);
}

namespace {

int index_of(const std::vector<int>& row, int v) {
  auto it = std::find(row.begin(), row.end(), v);
  if (it == row.end()) throw EmbeddingError("rotation is not symmetric");
  return static_cast<int>(it - row.begin());
}

}  // namespace

std::vector<Face> trace_faces(const EmbeddedGraph& g) {
  const int n = g.num_vertices();
  std::vector<std::vector<bool>> used(n);
  for (int u = 0; u < n; ++u) used[u].assign(g.rotation[u].size(), false);

  std::vector<Face> faces;
  for (int u = 0; u < n; ++u) {
    for (std::size_t k = 0; k < g.rotation[u].size(); ++k) {
      if (used[u][k]) continue;
      Face face;
      int x = u;
      int xi = static_cast<int>(k);
      while (!used[x][xi]) {
        used[x][xi] = true;
        const int y = g.rotation[x][xi];
        face.emplace_back(x, y);
        // Continue with the neighbor of y that precedes x counterclockwise.
        const auto& ry = g.rotation[y];
        const int deg = static_cast<int>(ry.size());
        const int back = index_of(ry, x);
        xi = (back + deg - 1) % deg;
        x = y;
      }
      faces.push_back(std::move(face));
    }
  }
  return faces;
}

int euler_characteristic(const EmbeddedGraph& g) {
  return g.num_vertices() - g.num_edges() + static_cast<int>(trace_faces(g).size());
}

std::vector<Face> planar_faces(const EmbeddedGraph& g) {
  auto faces = trace_faces(g);
  const int chi = g.num_vertices() - g.num_edges() + static_cast<int>(faces.size());
  if (chi != 2)
    throw EmbeddingError("embedding is not planar: V - E + F = " + std::to_string(chi));
  return faces;
}

std::vector<int> vertices_left_of(const std::vector<Face>& faces, const std::vector<int>& cycle) {
  std::map<std::pair<int, int>, int> face_of;
  for (int f = 0; f < static_cast<int>(faces.size()); ++f)
    for (const auto& dart : faces[f]) face_of[dart] = f;

  std::set<std::pair<int, int>> cycle_edges;
  std::set<int> on_cycle(cycle.begin(), cycle.end());
  const int k = static_cast<int>(cycle.size());
  std::vector<int> stack;
  std::vector<bool> inside(faces.size(), false);
  for (int i = 0; i < k; ++i) {
    const int u = cycle[i], v = cycle[(i + 1) % k];
    cycle_edges.insert({std::min(u, v), std::max(u, v)});
    auto it = face_of.find({u, v});
    if (it == face_of.end()) throw EmbeddingError("cycle uses a non-edge");
    if (!inside[it->second]) {
      inside[it->second] = true;
      stack.push_back(it->second);
    }
  }
  while (!stack.empty()) {
    const int f = stack.back();
    stack.pop_back();
    for (const auto& [x, y] : faces[f]) {
      if (cycle_edges.count({std::min(x, y), std::max(x, y)})) continue;
      const int h = face_of.at({y, x});
      if (!inside[h]) {
        inside[h] = true;
        stack.push_back(h);
      }
    }
  }
  std::set<int> result;
  for (int f = 0; f < static_cast<int>(faces.size()); ++f)
    if (inside[f])
      for (const auto& dart : faces[f])
        if (!on_cycle.count(dart.first)) result.insert(dart.first);
  return {result.begin(), result.end()};
}

}  // namespace rotsys
