#include "rotsys/drawability.hpp"

#include <algorithm>
#include <tuple>

#include "rotsys/catalog.hpp"
#include "rotsys/errors.hpp"

namespace rotsys {

int DrawabilityCnf::schnyder(int i, int u, int v) const {
  const int m = num_vertices;
  return schnyder_base + (i * m + u) * m + v;
}

namespace {

// Literal for "u before v in order i" over the upper-triangle variables.
Lit before(const DrawabilityCnf& d, int i, int u, int v) {
  return u < v ? d.schnyder(i, u, v) : -d.schnyder(i, v, u);
}

}  // namespace

DrawabilityCnf build_drawability_cnf(const PreRotationSystem& pi) {
  const int n = pi.size();
  const CrossingMap cm = crossing_map(pi);
  DrawabilityCnf d;
  d.skeleton = PlanarizationGraph::skeleton(n, cm.pairs());
  d.num_vertices = d.skeleton.num_vertices();
  d.on_edge.resize(d.skeleton.edge_orders.size());
  for (std::size_t i = 0; i < cm.pairs().size(); ++i) {
    const auto& p = cm.pairs()[i];
    d.on_edge[edge_index(n, p.e.first, p.e.second)].push_back(n + static_cast<int>(i));
    d.on_edge[edge_index(n, p.f.first, p.f.second)].push_back(n + static_cast<int>(i));
  }

  CnfInstance& inst = d.inst;
  inst.n = n;
  VarMap& V = inst.vars();
  const Lit T = V.fresh_block("true", 1);
  inst.family("constant");
  inst.add({T});

  auto O = [&](int e, int x, int y) -> Lit {
    const int lo = std::min(x, y), hi = std::max(x, y);
    const int v = d.order_vars.at({e, lo, hi});
    return x < y ? v : -v;
  };
  // "x before y" on edge e where the endpoints are fixed extremes.
  std::vector<Edge> edge_of(d.on_edge.size());
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edge_of[edge_index(n, u, v)] = {u, v};
  auto before_on = [&](int e, int x, int y) -> Lit {
    const auto [u, v] = edge_of[e];
    if (x == u || y == v) return T;
    if (x == v || y == u) return -T;
    return O(e, x, y);
  };

  const int order_first = V.num_vars() + 1;
  for (std::size_t e = 0; e < d.on_edge.size(); ++e) {
    const auto& xs = d.on_edge[e];
    for (std::size_t i = 0; i < xs.size(); ++i)
      for (std::size_t j = i + 1; j < xs.size(); ++j) d.order_vars[{static_cast<int>(e), xs[i], xs[j]}] = V.fresh();
  }
  V.mark_block("edge-order", order_first);

  inst.family("edge-order-transitivity");
  for (std::size_t e = 0; e < d.on_edge.size(); ++e) {
    const auto& xs = d.on_edge[e];
    const int ei = static_cast<int>(e);
    for (int x : xs)
      for (int y : xs)
        for (int z : xs)
          if (x != y && y != z && x != z && x < y && x < z) {
            inst.add({-O(ei, x, y), -O(ei, y, z), O(ei, x, z)});
            inst.add({O(ei, x, y), O(ei, y, z), -O(ei, x, z)});
          }
  }

  // Adjacency: consecutive on some edge, i.e. no element strictly between.
  std::map<std::pair<int, int>, Lit> adj;
  const int adj_first = V.num_vars() + 1;
  inst.family("adjacency");
  for (std::size_t e = 0; e < d.on_edge.size(); ++e) {
    const int ei = static_cast<int>(e);
    const auto [u, v] = edge_of[e];
    std::vector<int> elems{u, v};
    elems.insert(elems.end(), d.on_edge[e].begin(), d.on_edge[e].end());
    if (elems.size() == 2) {
      const Lit a = V.fresh();
      adj[{u, v}] = a;
      inst.add({a});
      continue;
    }
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (std::size_t j = i + 1; j < elems.size(); ++j) {
        const int p = std::min(elems[i], elems[j]), q = std::max(elems[i], elems[j]);
        if (p == u && q == v) continue;
        const Lit a = V.fresh();
        adj[{p, q}] = a;
        std::vector<Lit> cl{a};
        for (int z : elems) {
          if (z == p || z == q) continue;
          const Lit b = V.fresh();
          inst.add({-b, before_on(ei, p, z), before_on(ei, q, z)});
          inst.add({-b, before_on(ei, z, p), before_on(ei, z, q)});
          cl.push_back(b);
        }
        inst.add(cl);
      }
  }
  V.mark_block("adjacency", adj_first);

  const int m = d.num_vertices;
  d.schnyder_base = V.fresh_block("schnyder-order", 3 * m * m);
  inst.family("schnyder-transitivity");
  for (int i = 0; i < 3; ++i)
    for (int u = 0; u < m; ++u)
      for (int v = u + 1; v < m; ++v)
        for (int w = v + 1; w < m; ++w) {
          inst.add({-before(d, i, u, v), -before(d, i, v, w), before(d, i, u, w)});
          inst.add({before(d, i, u, v), before(d, i, v, w), -before(d, i, u, w)});
        }

  const int cover_first = V.num_vars() + 1;
  inst.family("schnyder-cover");
  for (const auto& [pq, a] : adj) {
    const auto [p, q] = pq;
    for (int w = 0; w < m; ++w) {
      if (w == p || w == q) continue;
      std::vector<Lit> cl{-a};
      for (int i = 0; i < 3; ++i) {
        const Lit c = V.fresh();
        inst.add({-c, before(d, i, p, w)});
        inst.add({-c, before(d, i, q, w)});
        cl.push_back(c);
      }
      inst.add(cl);
    }
  }
  V.mark_block("schnyder-cover", cover_first);
  return d;
}

PlanarizationGraph extract_planarization(const DrawabilityCnf& d, const SolveOutcome& model) {
  PlanarizationGraph g = d.skeleton;
  for (std::size_t e = 0; e < d.on_edge.size(); ++e) {
    auto xs = d.on_edge[e];
    const int ei = static_cast<int>(e);
    std::sort(xs.begin(), xs.end(), [&](int x, int y) {
      const int lo = std::min(x, y), hi = std::max(x, y);
      const bool lo_first = model.value(d.order_vars.at({ei, lo, hi}));
      return x == lo ? lo_first : !lo_first;
    });
    auto& o = g.edge_orders[e];
    o.insert(o.begin() + 1, xs.begin(), xs.end());
  }
  return g;
}

DrawabilityResult is_drawable(const PreRotationSystem& pi, const SolverOptions& opts) {
  DrawabilityCnf d;
  try {
    d = build_drawability_cnf(pi);
  } catch (const NotDrawable&) {
    return {};
  }
  // Every restriction of a drawing is a drawing; the small instances refute
  // far faster than the full one.
  const int n = pi.size();
  if (n >= 6) {
    std::vector<Vertex> rest(n - 1);
    for (Vertex v = 0; v < n; ++v) {
      for (Vertex u = 0, i = 0; u < n; ++u)
        if (u != v) rest[i++] = u;
      if (!is_drawable(restrict_to(pi, rest), opts).drawable) return {};
    }
  }
  const SolveOutcome out = solve(d.inst, opts);
  if (out.status == Status::Unknown) throw SolverError("drawability query did not finish");
  if (out.status == Status::Unsat) return {};
  PlanarizationGraph g = extract_planarization(d, out);
  faces_of(pi, g);
  return {true, std::move(g)};
}

}  // namespace rotsys
