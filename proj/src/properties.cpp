#include "rotsys/properties.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <string>

#include "rotsys/catalog.hpp"
#include "rotsys/combinatorics.hpp"
#include "rotsys/errors.hpp"

namespace rotsys {

std::vector<Edge> CycleEdgeSet::edges() const {
  std::vector<Edge> out;
  const std::size_t k = order.size();
  for (std::size_t i = 0; i < k; ++i) out.push_back(make_edge(order[i], order[(i + 1) % k]));
  return out;
}

namespace {

std::vector<Edge> path_edges(const std::vector<Vertex>& p) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) out.push_back(make_edge(p[i], p[i + 1]));
  return out;
}

std::vector<Edge> cycle_edges(const std::vector<Vertex>& c) { return CycleEdgeSet{c}.edges(); }

void check_cap(int n, int cap, const char* what) {
  if (cap >= 0 && n > cap)
    throw ConfigError(std::string(what) + " at n=" + std::to_string(n) + " exceeds the factorial cap of " +
                      std::to_string(cap) + "; raise the cap to proceed");
}

}  // namespace

std::vector<std::vector<Vertex>> k_cycles(int n, int k) {
  std::vector<std::vector<Vertex>> out;
  for_each_subset(n, k, [&](const std::vector<int>& s) {
    std::vector<Vertex> rest(s.begin() + 1, s.end());
    do {
      if (k >= 3 && rest.front() > rest.back()) continue;
      std::vector<Vertex> c{s[0]};
      c.insert(c.end(), rest.begin(), rest.end());
      out.push_back(std::move(c));
    } while (std::next_permutation(rest.begin(), rest.end()));
  });
  return out;
}

std::vector<std::vector<Vertex>> hamiltonian_cycles(int n) { return k_cycles(n, n); }

std::vector<Lit> some_crossing(const VarMap& vars, const std::vector<Edge>& edges) {
  std::vector<Lit> cl;
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j)
      if (disjoint(edges[i], edges[j])) cl.push_back(vars.c(edges[i], edges[j]));
  return cl;
}

void forbid_plane_hamiltonian_cycle(CnfInstance& inst, int n, const PropertyLimits& lim) {
  check_cap(n, lim.hc_max_n, "plane Hamiltonian cycle encoding");
  inst.family("plane-hc");
  for (const auto& c : hamiltonian_cycles(n)) inst.add(some_crossing(inst.vars(), cycle_edges(c)));
}

void forbid_plane_hamiltonian_path(CnfInstance& inst, int n, Vertex a, Vertex b, const PropertyLimits& lim) {
  if (a == b || a < 0 || b < 0 || a >= n || b >= n) throw InvalidArgument("path endpoints must be distinct vertices");
  check_cap(n, lim.hc_max_n, "plane Hamiltonian path encoding");
  inst.family("plane-hp");
  std::vector<Vertex> mid;
  for (int v = 0; v < n; ++v)
    if (v != a && v != b) mid.push_back(v);
  do {
    std::vector<Vertex> p{a};
    p.insert(p.end(), mid.begin(), mid.end());
    p.push_back(b);
    inst.add(some_crossing(inst.vars(), path_edges(p)));
  } while (std::next_permutation(mid.begin(), mid.end()));
}

void forbid_hc_plus(CnfInstance& inst, int n, const PropertyLimits& lim) {
  check_cap(n, lim.hc_plus_max_n, "plane Hamiltonian 2n-3 subdrawing encoding");
  inst.family("plane-hc-plus");
  const int extra = 2 * n - 3 - n;
  for (const auto& c : hamiltonian_cycles(n)) {
    const auto ce = cycle_edges(c);
    std::vector<Edge> others;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (std::find(ce.begin(), ce.end(), Edge{u, v}) == ce.end()) others.push_back({u, v});
    for_each_subset(static_cast<int>(others.size()), extra, [&](const std::vector<int>& pick) {
      auto edges = ce;
      for (int i : pick) edges.push_back(others[i]);
      inst.add(some_crossing(inst.vars(), edges));
    });
  }
}

void forbid_matching_friendly_hc(CnfInstance& inst, int n, int k, bool symmetry, const PropertyLimits& lim) {
  if (k < 0 || 2 * k > n) throw InvalidArgument("matching size must satisfy 0 <= 2k <= n");
  check_cap(n, lim.hc_max_n, "matching-friendly Hamiltonian cycle encoding");
  const auto& V = inst.vars();
  std::vector<Edge> M;
  for (int i = 0; i < k; ++i) M.push_back({2 * i, 2 * i + 1});

  inst.family("matching-plane");
  for (std::size_t i = 0; i < M.size(); ++i)
    for (std::size_t j = i + 1; j < M.size(); ++j) inst.add({-V.c(M[i], M[j])});

  if (symmetry && k >= 1) {
    inst.family("matching-symmetry");
    for (int i = 1; i < k; ++i) inst.add({V.y(0, 1, 2 * i, 2 * i + 1)});
    for (int i = 1; i < k; ++i)
      for (int j = i + 1; j < k; ++j) inst.add({V.y(0, 1, 2 * i, 2 * j)});
    for (int x = 2 * k; x < n; ++x)
      for (int y = x + 1; y < n; ++y) inst.add({V.y(0, 1, x, y)});
  }

  inst.family("matching-hc");
  for (const auto& c : hamiltonian_cycles(n)) {
    const auto ce = cycle_edges(c);
    auto cl = some_crossing(V, ce);
    for (const auto& e : ce)
      for (const auto& m : M)
        if (disjoint(e, m)) cl.push_back(V.c(e, m));
    inst.add(cl);
  }
}

void forbid_empty_k_cycles(CnfInstance& inst, int n, int k) {
  if (k < 3 || k > n) throw InvalidArgument("empty cycle length must satisfy 3 <= k <= n");
  auto& V = inst.vars();
  const int first = V.num_vars() + 1;
  inst.family("empty-cycles");
  for (const auto& c : k_cycles(n, k)) {
    const auto ce = cycle_edges(c);
    std::vector<Vertex> off;
    for (int v = 0; v < n; ++v)
      if (std::find(c.begin(), c.end(), v) == c.end()) off.push_back(v);
    auto master = some_crossing(V, ce);
    if (!off.empty()) {
      const Vertex p0 = off.front();
      for (std::size_t qi = 1; qi < off.size(); ++qi) {
        const Vertex q = off[qi];
        const Lit w = V.fresh();
        std::vector<Lit> cr;
        for (const auto& e : ce) cr.push_back(V.c({p0, q}, e));
        for (int mask = 0; mask < (1 << k); ++mask) {
          std::vector<Lit> cl;
          for (int i = 0; i < k; ++i) cl.push_back((mask >> i & 1) ? -cr[i] : cr[i]);
          cl.push_back(std::popcount(static_cast<unsigned>(mask)) % 2 ? w : -w);
          inst.add(cl);
        }
        master.push_back(w);
      }
    }
    inst.add(master);
  }
  V.mark_block("w" + std::to_string(k), first);
}

void bound_empty_triangles(CnfInstance& inst, int n, int max_count) {
  if (max_count < 0) throw InvalidArgument("empty triangle bound must be non-negative");
  auto& V = inst.vars();
  const auto& table = quadruple_table();
  const int first = V.num_vars() + 1;
  inst.family("empty-triangles");
  std::vector<Lit> triangles;
  for_each_subset(n, 3, [&](const std::vector<int>& t) {
    const Lit any = V.fresh();
    std::vector<Lit> sides;
    for (const auto& [a, b, c] : {std::array{t[0], t[1], t[2]}, std::array{t[0], t[2], t[1]}}) {
      const Lit e = V.fresh();
      std::vector<Lit> all{e};
      for (int d = 0; d < n; ++d) {
        if (d == a || d == b || d == c) continue;
        const Lit ed = V.fresh();
        const Lit y[4] = {V.y(a, b, c, d), V.y(b, a, c, d), V.y(c, a, b, d), V.y(d, a, b, c)};
        for (int code = 0; code < 16; ++code) {
          std::vector<Lit> cl;
          for (int i = 0; i < 4; ++i) cl.push_back((code >> i & 1) ? -y[i] : y[i]);
          const bool inside = table[code].drawable && table[code].d_in_abc;
          cl.push_back(inside ? -ed : ed);
          inst.add(cl);
        }
        inst.add({-e, ed});
        all.push_back(-ed);
      }
      inst.add(all);
      sides.push_back(e);
    }
    inst.add({-any, sides[0], sides[1]});
    inst.add({-sides[0], any});
    inst.add({-sides[1], any});
    triangles.push_back(any);
  });
  V.mark_block("empty-triangles", first);
  at_most_k(inst, triangles, max_count, "empty-triangle-counter");
}

void require_all_edges_crossed(CnfInstance& inst, int n) {
  const auto& V = inst.vars();
  inst.family("all-edges-crossed");
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      std::vector<Lit> cl;
      for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
          if (disjoint({u, v}, {x, y})) cl.push_back(V.c({u, v}, {x, y}));
      inst.add(cl);
    }
}

void require_crossing_maximal(CnfInstance& inst, int n) {
  const auto& V = inst.vars();
  inst.family("crossing-maximal");
  for_each_subset(n, 4, [&](const std::vector<int>& q) {
    inst.add({V.c_quad(q.data(), Pairing::AbCd), V.c_quad(q.data(), Pairing::AcBd), V.c_quad(q.data(), Pairing::AdBc)});
  });
}

void forbid_crossing_family(CnfInstance& inst, int n, int k) {
  if (k < 2) throw InvalidArgument("crossing family size must be at least 2");
  const auto& V = inst.vars();
  inst.family("crossing-family");
  if (2 * k > n) return;
  // Matchings of size k as sorted edge lists.
  std::vector<Edge> cur;
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, int from_edge_u, int from_edge_v) -> void {
    if (static_cast<int>(cur.size()) == k) {
      std::vector<Lit> cl;
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) cl.push_back(-V.c(cur[i], cur[j]));
      inst.add(cl);
      return;
    }
    for (int u = from_edge_u; u < n; ++u)
      for (int v = (u == from_edge_u ? from_edge_v : u + 1); v < n; ++v) {
        if (used[u] || used[v]) continue;
        used[u] = used[v] = true;
        cur.push_back({u, v});
        self(self, u, v + 1);
        cur.pop_back();
        used[u] = used[v] = false;
      }
  };
  rec(rec, 0, 1);
}

void forbid_perfect_convex(CnfInstance& inst, int n, int a) {
  const auto& V = inst.vars();
  inst.family("forbid-perfect-convex");
  if (a < 4 || a > n) return;
  for (const auto& s : k_cycles(n, a)) {
    std::vector<Lit> cl;
    for_each_subset(a, 4, [&](const std::vector<int>& p) {
      cl.push_back(-V.c({s[p[0]], s[p[2]]}, {s[p[1]], s[p[3]]}));
    });
    inst.add(cl);
  }
}

void forbid_perfect_twisted(CnfInstance& inst, int n, int b) {
  const auto& V = inst.vars();
  inst.family("forbid-perfect-twisted");
  if (b < 4 || b > n) return;
  for_each_subset(n, b, [&](const std::vector<int>& subset) {
    std::vector<Vertex> s(subset.begin(), subset.end());
    do {
      if (s.front() > s.back()) continue;
      std::vector<Lit> cl;
      for_each_subset(b, 4, [&](const std::vector<int>& p) {
        cl.push_back(-V.c({s[p[0]], s[p[3]]}, {s[p[1]], s[p[2]]}));
      });
      inst.add(cl);
    } while (std::next_permutation(s.begin(), s.end()));
  });
}

void forbid_crossing_maximal_subdrawing(CnfInstance& inst, int n, int k) {
  auto& V = inst.vars();
  inst.family("forbid-crossing-maximal-sub");
  if (k < 4 || k > n) return;
  const int base = V.fresh_block("crossed", static_cast<int>(binomial(n, 4)));
  auto rank = [](const std::vector<int>& q) {
    return static_cast<int>(binomial(q[0], 1) + binomial(q[1], 2) + binomial(q[2], 3) + binomial(q[3], 4));
  };
  for_each_subset(n, 4, [&](const std::vector<int>& q) {
    const Lit x = base + rank(q);
    const Lit c[3] = {V.c_quad(q.data(), Pairing::AbCd), V.c_quad(q.data(), Pairing::AcBd),
                      V.c_quad(q.data(), Pairing::AdBc)};
    inst.add({-x, c[0], c[1], c[2]});
    for (Lit ci : c) inst.add({-ci, x});
  });
  for_each_subset(n, k, [&](const std::vector<int>& s) {
    std::vector<Lit> cl;
    for_each_subset_of(s, 4, [&](const std::vector<int>& q) { cl.push_back(-(base + rank(q))); });
    inst.add(cl);
  });
}

void at_most_k(CnfInstance& inst, const std::vector<Lit>& x, int k, const char* block_name) {
  auto& V = inst.vars();
  const int m = static_cast<int>(x.size());
  if (k >= m) return;
  if (k == 0) {
    for (Lit l : x) inst.add({-l});
    return;
  }
  const int base = V.fresh_block(block_name ? block_name : "counter", (m - 1) * k);
  auto s = [&](int i, int j) { return base + i * k + j; };  // i in [0, m-1), j in [0, k)
  inst.add({-x[0], s(0, 0)});
  for (int j = 1; j < k; ++j) inst.add({-s(0, j)});
  for (int i = 1; i < m - 1; ++i) {
    inst.add({-x[i], s(i, 0)});
    inst.add({-s(i - 1, 0), s(i, 0)});
    for (int j = 1; j < k; ++j) {
      inst.add({-x[i], -s(i - 1, j - 1), s(i, j)});
      inst.add({-s(i - 1, j), s(i, j)});
    }
    inst.add({-x[i], -s(i - 1, k - 1)});
  }
  inst.add({-x[m - 1], -s(m - 2, k - 1)});
}

}  // namespace rotsys
