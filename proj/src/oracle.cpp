#include "rotsys/oracle.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <string>

#include "rotsys/catalog.hpp"
#include "rotsys/combinatorics.hpp"
#include "rotsys/errors.hpp"

namespace rotsys {

namespace {

struct Budgeted {
  OracleBudget budget;
  OracleReport* report;
  bool tick() {
    ++report->nodes;
    if (budget.nodes && report->nodes > budget.nodes) {
      report->exhaustive = false;
      return false;
    }
    return true;
  }
};

bool crosses_any(const CrossingMap& cm, Edge e, const std::vector<Edge>& set) {
  for (const auto& f : set)
    if (disjoint(e, f) && cm.crosses(e, f)) return true;
  return false;
}

// Plane cycles through `verts` (start at the first, second < last) or plane
// paths from verts.front() to `end`; fn returns true to stop.
// Returns false when the budget ran out.
bool plane_walks(const CrossingMap& cm, const std::vector<Vertex>& verts, int end, bool cycle,
                 const std::vector<Edge>& avoid, Budgeted& b,
                 const std::function<bool(const std::vector<Vertex>&)>& fn) {
  const int k = static_cast<int>(verts.size());
  std::vector<Vertex> seq{verts.front()};
  std::vector<Edge> edges;
  std::vector<bool> used(k, false);
  used[0] = true;
  bool stop = false, ok = true;
  auto rec = [&](auto&& self) -> void {
    if (stop || !ok) return;
    if (!b.tick()) {
      ok = false;
      return;
    }
    const int len = static_cast<int>(seq.size());
    if (len == k) {
      if (cycle) {
        if (k >= 3 && seq[1] > seq.back()) return;
        const Edge close = make_edge(seq.back(), seq.front());
        if (crosses_any(cm, close, edges) || crosses_any(cm, close, avoid)) return;
      } else if (seq.back() != end) {
        return;
      }
      stop = fn(seq);
      return;
    }
    // Candidates ordered by how many non-crossing continuations they keep.
    std::vector<std::pair<int, int>> cand;
    for (int i = 1; i < k; ++i) {
      if (used[i]) continue;
      const Vertex v = verts[i];
      if (!cycle && v == end && len != k - 1) continue;
      const Edge e = make_edge(seq.back(), v);
      if (crosses_any(cm, e, edges) || crosses_any(cm, e, avoid)) continue;
      int freedom = 0;
      for (int j = 1; j < k; ++j)
        if (!used[j] && j != i && !cm.crosses(make_edge(v, verts[j]), e)) ++freedom;
      cand.push_back({freedom, i});
    }
    std::sort(cand.begin(), cand.end());
    for (const auto& [f, i] : cand) {
      used[i] = true;
      seq.push_back(verts[i]);
      edges.push_back(make_edge(seq[seq.size() - 2], verts[i]));
      self(self);
      edges.pop_back();
      seq.pop_back();
      used[i] = false;
      if (stop || !ok) return;
    }
  };
  rec(rec);
  return ok;
}

std::vector<Vertex> all_vertices(int n) {
  std::vector<Vertex> v(n);
  for (int i = 0; i < n; ++i) v[i] = i;
  return v;
}

std::vector<Edge> cycle_of(const std::vector<Vertex>& c) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < c.size(); ++i) out.push_back(make_edge(c[i], c[(i + 1) % c.size()]));
  return out;
}

}  // namespace

OracleReport find_plane_hamiltonian_cycle(const PreRotationSystem& pi, OracleBudget budget) {
  return find_plane_hc_avoiding(pi, {}, budget);
}

OracleReport find_plane_hc_avoiding(const PreRotationSystem& pi, const std::vector<Edge>& avoid, OracleBudget budget) {
  OracleReport r;
  r.property = avoid.empty() ? "plane-hc" : "plane-hc-avoiding";
  const CrossingMap cm = crossing_map(pi);
  Budgeted b{budget, &r};
  plane_walks(cm, all_vertices(pi.size()), -1, true, avoid, b, [&](const std::vector<Vertex>& c) {
    r.found = true;
    r.witness = c;
    return true;
  });
  return r;
}

OracleReport find_plane_hamiltonian_path(const PreRotationSystem& pi, Vertex a, Vertex b_end, OracleBudget budget) {
  if (a == b_end) throw InvalidArgument("path endpoints must differ");
  OracleReport r;
  r.property = "plane-hp";
  const CrossingMap cm = crossing_map(pi);
  std::vector<Vertex> verts{a};
  for (int v = 0; v < pi.size(); ++v)
    if (v != a) verts.push_back(v);
  Budgeted b{budget, &r};
  plane_walks(cm, verts, b_end, false, {}, b, [&](const std::vector<Vertex>& p) {
    r.found = true;
    r.witness = p;
    return true;
  });
  return r;
}

OracleReport find_plane_hc_plus(const PreRotationSystem& pi, OracleBudget budget) {
  OracleReport r;
  r.property = "plane-hc-plus";
  const int n = pi.size();
  const CrossingMap cm = crossing_map(pi);
  Budgeted b{budget, &r};
  const int need = n - 3;
  plane_walks(cm, all_vertices(n), -1, true, {}, b, [&](const std::vector<Vertex>& c) {
    auto chosen = cycle_of(c);
    std::vector<Edge> pool;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        const Edge e{u, v};
        if (std::find(chosen.begin(), chosen.end(), e) == chosen.end() && !crosses_any(cm, e, chosen))
          pool.push_back(e);
      }
    std::vector<Edge> extra;
    auto rec = [&](auto&& self, std::size_t from) -> bool {
      if (static_cast<int>(extra.size()) == need) return true;
      if (!b.tick()) return false;
      for (std::size_t i = from; i < pool.size(); ++i) {
        if (static_cast<int>(extra.size() + pool.size() - i) < need) return false;
        if (crosses_any(cm, pool[i], extra)) continue;
        extra.push_back(pool[i]);
        if (self(self, i + 1)) return true;
        extra.pop_back();
      }
      return false;
    };
    if (!rec(rec, 0)) return !r.exhaustive;
    chosen.insert(chosen.end(), extra.begin(), extra.end());
    r.found = true;
    for (const auto& e : chosen) {
      r.witness.push_back(e.first);
      r.witness.push_back(e.second);
    }
    return true;
  });
  return r;
}

int count_empty_triangles(const PreRotationSystem& pi) {
  const int n = pi.size();
  int count = 0;
  for_each_subset(n, 3, [&](const std::vector<int>& t) {
    int inside = 0;
    for (int d = 0; d < n; ++d)
      if (d != t[0] && d != t[1] && d != t[2] && side_contains(pi, d, t[0], t[1], t[2])) ++inside;
    if (inside == 0 || inside == n - 3) ++count;
  });
  return count;
}

OracleReport find_empty_k_cycle(const PreRotationSystem& pi, int k, OracleBudget budget) {
  const int n = pi.size();
  if (k < 3 || k > n) throw InvalidArgument("cycle length must satisfy 3 <= k <= n");
  OracleReport r;
  r.property = "empty-cycle-" + std::to_string(k);
  const CrossingMap cm = crossing_map(pi);
  Budgeted b{budget, &r};
  for_each_subset(n, k, [&](const std::vector<int>& s) {
    if (r.found || !r.exhaustive) return;
    std::vector<Vertex> off;
    for (int v = 0; v < n; ++v)
      if (!std::binary_search(s.begin(), s.end(), v)) off.push_back(v);
    plane_walks(cm, s, -1, true, {}, b, [&](const std::vector<Vertex>& c) {
      const auto ce = cycle_of(c);
      for (std::size_t i = 1; i < off.size(); ++i) {
        int parity = 0;
        for (const auto& e : ce) parity ^= cm.crosses(make_edge(off[0], off[i]), e) ? 1 : 0;
        if (parity) return false;
      }
      r.found = true;
      r.witness = c;
      return true;
    });
  });
  return r;
}

OracleReport find_crossing_family(const PreRotationSystem& pi, int k) {
  OracleReport r;
  r.property = "crossing-family-" + std::to_string(k);
  const int n = pi.size();
  const CrossingMap cm = crossing_map(pi);
  std::vector<Edge> all;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) all.push_back({u, v});
  std::vector<Edge> cur;
  auto rec = [&](auto&& self, std::size_t from) -> bool {
    ++r.nodes;
    if (static_cast<int>(cur.size()) == k) return true;
    for (std::size_t i = from; i < all.size(); ++i) {
      bool ok = true;
      for (const auto& f : cur)
        if (!disjoint(all[i], f) || !cm.crosses(all[i], f)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      cur.push_back(all[i]);
      if (self(self, i + 1)) return true;
      cur.pop_back();
    }
    return false;
  };
  if (rec(rec, 0)) {
    r.found = true;
    for (const auto& e : cur) {
      r.witness.push_back(e.first);
      r.witness.push_back(e.second);
    }
  }
  return r;
}

bool all_edges_crossed(const PreRotationSystem& pi) {
  const CrossingMap cm = crossing_map(pi);
  const int n = pi.size();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (cm.crossing_edges({u, v}).empty()) return false;
  return true;
}

namespace {

bool quad_crossed(const CrossingMap& cm, const std::vector<int>& q) {
  return cm.crosses(q[0], q[1], q[2], q[3]) || cm.crosses(q[0], q[2], q[1], q[3]) ||
         cm.crosses(q[0], q[3], q[1], q[2]);
}

}  // namespace

bool is_crossing_maximal(const PreRotationSystem& pi) {
  return find_crossing_maximal_subset(pi, pi.size()).found;
}

OracleReport find_crossing_maximal_subset(const PreRotationSystem& pi, int k) {
  OracleReport r;
  r.property = "crossing-maximal-" + std::to_string(k);
  const CrossingMap cm = crossing_map(pi);
  if (k > pi.size()) return r;
  for_each_subset(pi.size(), k, [&](const std::vector<int>& s) {
    if (r.found) return;
    ++r.nodes;
    bool all = true;
    for_each_subset_of(s, 4, [&](const std::vector<int>& q) {
      if (all && !quad_crossed(cm, q)) all = false;
    });
    if (all) {
      r.found = true;
      r.witness = s;
    }
  });
  return r;
}

OracleReport find_perfect_subdrawing(const PreRotationSystem& pi, PerfectKind kind, int k) {
  OracleReport r;
  r.property = std::string(kind == PerfectKind::Convex ? "perfect-convex-" : "perfect-twisted-") +
                 std::to_string(k);
  const CrossingMap cm = crossing_map(pi);
  if (k > pi.size() || k < 4) return r;
  for_each_subset(pi.size(), k, [&](const std::vector<int>& subset) {
    if (r.found) return;
    std::vector<Vertex> s(subset.begin(), subset.end());
    do {
      ++r.nodes;
      if (kind == PerfectKind::Convex && s[1] > s.back()) continue;
      if (kind == PerfectKind::Twisted && s.front() > s.back()) continue;
      bool match = true;
      for_each_subset(k, 4, [&](const std::vector<int>& p) {
        if (!match) return;
        const Vertex a = s[p[0]], b = s[p[1]], c = s[p[2]], d = s[p[3]];
        const bool ac_bd = cm.crosses(a, c, b, d), ad_bc = cm.crosses(a, d, b, c), ab_cd = cm.crosses(a, b, c, d);
        match = kind == PerfectKind::Convex ? (ac_bd && !ad_bc && !ab_cd) : (ad_bc && !ac_bd && !ab_cd);
      });
      if (match) {
        r.found = true;
        r.witness = s;
        return;
      }
    } while (std::next_permutation(s.begin() + (kind == PerfectKind::Convex ? 1 : 0), s.end()));
  });
  return r;
}

namespace {

struct TriangleSides {
  std::vector<std::vector<int>> triangles;  // sorted triples
  // inside[t][s]: vertices strictly inside side s (0: abc, 1: acb)
  std::vector<std::array<std::vector<bool>, 2>> inside;
  std::vector<std::array<bool, 2>> convex;
};

TriangleSides triangle_sides(const PreRotationSystem& pi) {
  const int n = pi.size();
  const CrossingMap cm = crossing_map(pi);
  TriangleSides ts;
  for_each_subset(n, 3, [&](const std::vector<int>& t) {
    std::array<std::vector<bool>, 2> in{std::vector<bool>(n, false), std::vector<bool>(n, false)};
    for (int d = 0; d < n; ++d) {
      if (d == t[0] || d == t[1] || d == t[2]) continue;
      (side_contains(pi, d, t[0], t[1], t[2]) ? in[0] : in[1])[d] = true;
    }
    std::array<bool, 2> conv{};
    for (int s = 0; s < 2; ++s) {
      std::vector<Vertex> closed(t.begin(), t.end());
      for (int d = 0; d < n; ++d)
        if (in[s][d]) closed.push_back(d);
      bool ok = true;
      for (std::size_t i = 0; i < closed.size() && ok; ++i)
        for (std::size_t j = i + 1; j < closed.size() && ok; ++j) {
          const Edge e = make_edge(closed[i], closed[j]);
          for (const Edge& f : {Edge{t[0], t[1]}, Edge{t[1], t[2]}, Edge{t[0], t[2]}})
            if (disjoint(e, f) && cm.crosses(e, f)) ok = false;
        }
      conv[s] = ok;
    }
    ts.triangles.push_back(t);
    ts.inside.push_back(in);
    ts.convex.push_back(conv);
  });
  return ts;
}

// 2-SAT via strongly connected components of the implication graph.
bool two_sat(int vars, const std::vector<std::pair<int, int>>& clauses) {
  const int m = 2 * vars;
  auto node = [](int lit) { return lit > 0 ? 2 * (lit - 1) : 2 * (-lit - 1) + 1; };
  std::vector<std::vector<int>> g(m), gr(m);
  for (const auto& [a, b] : clauses) {
    g[node(-a)].push_back(node(b));
    g[node(-b)].push_back(node(a));
    gr[node(b)].push_back(node(-a));
    gr[node(a)].push_back(node(-b));
  }
  std::vector<int> order, comp(m, -1);
  std::vector<bool> seen(m, false);
  for (int s = 0; s < m; ++s) {
    if (seen[s]) continue;
    std::vector<std::pair<int, std::size_t>> st{{s, 0}};
    seen[s] = true;
    while (!st.empty()) {
      auto& [v, i] = st.back();
      if (i < g[v].size()) {
        const int w = g[v][i++];
        if (!seen[w]) {
          seen[w] = true;
          st.push_back({w, 0});
        }
      } else {
        order.push_back(v);
        st.pop_back();
      }
    }
  }
  int c = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (comp[*it] >= 0) continue;
    std::vector<int> st{*it};
    comp[*it] = c;
    while (!st.empty()) {
      const int v = st.back();
      st.pop_back();
      for (int w : gr[v])
        if (comp[w] < 0) {
          comp[w] = c;
          st.push_back(w);
        }
    }
    ++c;
  }
  for (int v = 0; v < vars; ++v)
    if (comp[2 * v] == comp[2 * v + 1]) return false;
  return true;
}

}  // namespace

bool is_convex_definitional(const PreRotationSystem& pi) {
  const auto ts = triangle_sides(pi);
  for (const auto& c : ts.convex)
    if (!c[0] && !c[1]) return false;
  return true;
}

bool is_hconvex_definitional(const PreRotationSystem& pi, int max_n) {
  const int n = pi.size();
  if (n > max_n) throw OutOfScope("h-convexity check limited to n <= " + std::to_string(max_n));
  const auto ts = triangle_sides(pi);
  const int m = static_cast<int>(ts.triangles.size());
  // Variable t + 1 true: side abc chosen for triangle t.
  auto lit = [](int t, int s) { return s == 0 ? t + 1 : -(t + 1); };
  std::vector<std::pair<int, int>> clauses;
  for (int t = 0; t < m; ++t)
    for (int s = 0; s < 2; ++s)
      if (!ts.convex[t][s]) clauses.push_back({-lit(t, s), -lit(t, s)});
  for (int t = 0; t < m; ++t)
    for (int s = 0; s < 2; ++s) {
      const auto& T = ts.triangles[t];
      auto in_closed = [&](Vertex v) {
        return v == T[0] || v == T[1] || v == T[2] || ts.inside[t][s][v];
      };
      for (int u = 0; u < m; ++u) {
        if (u == t) continue;
        const auto& U = ts.triangles[u];
        if (!in_closed(U[0]) || !in_closed(U[1]) || !in_closed(U[2])) continue;
        Vertex x = -1;
        for (Vertex v : T)
          if (v != U[0] && v != U[1] && v != U[2]) x = v;
        for (int s2 = 0; s2 < 2; ++s2)
          if (ts.inside[u][s2][x]) clauses.push_back({-lit(t, s), -lit(u, s2)});
      }
    }
  return two_sat(m, clauses);
}

}  // namespace rotsys
