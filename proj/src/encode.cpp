#include "rotsys/encode.hpp"

#include <map>
#include <tuple>

#include "rotsys/combinatorics.hpp"
#include "rotsys/errors.hpp"

namespace rotsys {

namespace {

std::vector<Lit> chain_literals(const VarMap& vars, std::span<const Vertex> s, std::span<const Vertex> flat) {
  const int k = static_cast<int>(s.size());
  std::vector<Lit> lits;
  lits.reserve(static_cast<std::size_t>(k) * (k - 3));
  for (int i = 0; i < k; ++i) {
    const Vertex* row = flat.data() + static_cast<std::size_t>(i) * (k - 1);
    for (int j = 1; j + 1 < k - 1; ++j) lits.push_back(vars.y(s[i], s[row[0]], s[row[j]], s[row[j + 1]]));
  }
  return lits;
}

std::vector<Lit> negated(std::vector<Lit> lits) {
  for (auto& l : lits) l = -l;
  return lits;
}

// Literals true iff the sorted 4-set q carries the given code.
std::array<Lit, 4> quad_literals(const VarMap& vars, const Vertex q[4], int code) {
  const std::array<Lit, 4> y = {vars.y_sorted(q[0], q[1], q[2], q[3]), vars.y_sorted(q[1], q[0], q[2], q[3]),
                                vars.y_sorted(q[2], q[0], q[1], q[3]), vars.y_sorted(q[3], q[0], q[1], q[2])};
  std::array<Lit, 4> out;
  for (int i = 0; i < 4; ++i) out[i] = (code >> i & 1) ? y[i] : -y[i];
  return out;
}

std::vector<Vertex> range(int k) {
  std::vector<Vertex> v(k);
  for (int i = 0; i < k; ++i) v[i] = i;
  return v;
}

}  // namespace

std::vector<Lit> signature_literals(const VarMap& vars, std::span<const Vertex> s, const PreRotationSystem& labeled) {
  if (labeled.size() != static_cast<int>(s.size())) throw InvalidArgument("signature size mismatch");
  return chain_literals(vars, s, labeled.flat());
}

std::vector<Lit> exclusion_clause(const VarMap& vars, std::span<const Vertex> s, const PreRotationSystem& labeled) {
  return negated(signature_literals(vars, s, labeled));
}

std::vector<std::vector<Lit>> ternary_clauses(const VarMap& vars, Vertex a, Vertex b, Vertex c, Vertex d, Vertex e) {
  const Lit A = vars.y(a, b, c, d), B = vars.y(a, b, c, e), C = vars.y(a, b, d, e), D = vars.y(a, c, d, e);
  return {{-A, B, -C}, {A, -B, C}, {-B, C, -D}, {B, -C, D}, {-A, -C, D}, {A, C, -D}, {-A, B, D}, {A, -B, -D}};
}

void emit_prerotation(CnfInstance& inst) {
  const auto& V = inst.vars();
  const int N = V.elements();
  const int L = N - 1;

  inst.family("permutation");
  for (int a = 0; a < N; ++a) {
    for (int i = 0; i < L; ++i) {
      std::vector<Lit> alo;
      for (int b = 0; b < N; ++b)
        if (b != a) alo.push_back(V.x(a, i, b));
      inst.add(alo);
      for (int b = 0; b < N; ++b)
        for (int c = b + 1; c < N; ++c)
          if (b != a && c != a) inst.add({-V.x(a, i, b), -V.x(a, i, c)});
    }
    for (int b = 0; b < N; ++b) {
      if (b == a) continue;
      std::vector<Lit> alo;
      for (int i = 0; i < L; ++i) alo.push_back(V.x(a, i, b));
      inst.add(alo);
    }
  }

  inst.family("smallest-first");
  for (int a = 0; a < N; ++a) inst.add({V.x(a, 0, a == 0 ? 1 : 0)});

  inst.family("xy-sync");
  for (int a = 0; a < N; ++a)
    for_each_subset(L, 3, [&](const std::vector<int>& pos) {
      for (int b = 0; b < N; ++b)
        for (int c = 0; c < N; ++c)
          for (int d = 0; d < N; ++d) {
            if (b == a || c == a || d == a || b == c || b == d || c == d) continue;
            inst.add({-V.x(a, pos[0], b), -V.x(a, pos[1], c), -V.x(a, pos[2], d), V.y(a, b, c, d)});
          }
    });

  inst.family("cyclic-patterns");
  for (int a = 0; a < N; ++a) {
    std::vector<Vertex> others;
    for (int v = 0; v < N; ++v)
      if (v != a) others.push_back(v);
    for_each_subset_of(others, 4, [&](const std::vector<int>& t) {
      for (const auto& cl : ternary_clauses(V, a, t[0], t[1], t[2], t[3])) inst.add(cl);
    });
  }
}

void emit_forbidden(CnfInstance& inst, const std::vector<Vertex>& ground, const std::vector<PreRotationSystem>& classes) {
  if (classes.empty()) return;
  const int k = classes.front().size();
  const auto copies = labeled_copies(classes);
  for_each_subset_of(ground, k, [&](const std::vector<int>& s) {
    for (const auto& flat : copies) inst.add(negated(chain_literals(inst.vars(), s, flat)));
  });
}

void emit_drawability(CnfInstance& inst, bool forbid4, bool forbid5, const ObstructionCatalog& catalog) {
  const int N = inst.vars().elements();
  if (forbid4) {
    inst.family("forbid-4");
    for_each_subset(N, 4, [&](const std::vector<int>& q) {
      for (int code = 0; code < 16; ++code) {
        if (catalog.quadruples[code].drawable) continue;
        auto lits = quad_literals(inst.vars(), q.data(), code);
        inst.add({-lits[0], -lits[1], -lits[2], -lits[3]});
      }
    });
  }
  if (forbid5) {
    inst.family("forbid-5");
    emit_forbidden(inst, range(N),
                   {ObstructionCatalog::need(catalog.pi5a, "pi5a"), ObstructionCatalog::need(catalog.pi5b, "pi5b")});
  }
}

void emit_natural(CnfInstance& inst, int core) {
  inst.family("natural");
  for_each_subset(core - 1, 3, [&](const std::vector<int>& t) {
    inst.add({inst.vars().y_sorted(0, t[0] + 1, t[1] + 1, t[2] + 1)});
  });
}

void emit_lexmin(CnfInstance& inst) {
  auto& V = inst.vars();
  const int N = V.elements();
  const int L = N - 1;
  if (N < 4) return;
  inst.family("lexmin");
  const int first_aux = V.num_vars() + 1;
  const Lit T = V.fresh();
  inst.add({T});

  // Drops false constants; skips clauses containing a true constant.
  auto put = [&](std::initializer_list<Lit> lits) {
    std::vector<Lit> cl;
    for (Lit l : lits) {
      if (l == T) return;
      if (l != -T) cl.push_back(l);
    }
    inst.add(cl);
  };

  std::map<std::tuple<int, int, int, int>, Lit> off_cache;
  // b lies j steps counterclockwise after a around f.
  auto off = [&](int f, int a, int b, int j) -> Lit {
    if (j == 0) return a == b ? T : -T;
    if (a == b) return -T;
    auto key = std::make_tuple(f, a, b, j);
    if (auto it = off_cache.find(key); it != off_cache.end()) return it->second;
    const Lit v = V.fresh();
    off_cache.emplace(key, v);
    for (int i = 0; i < L; ++i) {
      put({-V.x(f, i, a), -V.x(f, (i + j) % L, b), v});
      put({-V.x(f, i, a), V.x(f, (i + j) % L, b), -v});
    }
    return v;
  };

  for (int f = 0; f < N; ++f)
    for (int s = 0; s < N; ++s) {
      if (s == f) continue;
      for (int dir : {1, -1}) {
        if (f == 0 && s == 1 && dir == 1) continue;
        auto step = [&](int g, int a, int b, int j) { return dir > 0 ? off(g, a, b, j) : off(g, b, a, j); };
        // P(v, l): vertex v receives label l.
        auto P = [&](int v, int l) -> Lit {
          if (l == 0) return v == f ? T : -T;
          if (v == f) return -T;
          return step(f, s, v, l - 1);
        };
        // R(a, j, B): the vertex j steps after f around a receives label B.
        std::vector<Lit> Rc(static_cast<std::size_t>(N) * N * N, 0);
        auto R = [&](int a, int j, int B) {
          Lit& r = Rc[(static_cast<std::size_t>(a) * N + j) * N + B];
          if (r != 0) return r;
          r = V.fresh();
          for (int t = 0; t < N; ++t) {
            if (t == a || t == f) continue;
            const Lit o = step(a, f, t, j), p = P(t, B);
            put({-o, -p, r});
            put({-o, -r, p});
          }
          return r;
        };
        Lit eq_prev = T;
        for (int A = 1; A <= L; ++A)
          for (int j = 1; j <= L - 1; ++j) {
            // Z[B]: the candidate has value B at row A, position j.
            std::vector<Lit> Z(N, 0);
            for (int B = 1; B <= L; ++B) {
              if (B == A) continue;
              Z[B] = V.fresh();
              for (int a = 0; a < N; ++a) {
                if (a == f) continue;
                const Lit r = R(a, j, B), pa = P(a, A);
                put({-pa, -r, Z[B]});
                put({-pa, -Z[B], r});
              }
            }
            for (int B = 1; B <= L; ++B)
              for (int Bc = 1; Bc < B; ++Bc)
                if (B != A && Bc != A) put({-eq_prev, -V.x(A, j, B), -Z[Bc]});
            if (A == L && j == L - 1) continue;
            const Lit eq = V.fresh();
            put({-eq, eq_prev});
            for (int B = 1; B <= L; ++B) {
              if (B == A) continue;
              put({-eq, -V.x(A, j, B), Z[B]});
              put({-eq, -Z[B], V.x(A, j, B)});
              put({-eq_prev, -V.x(A, j, B), -Z[B], eq});
            }
            eq_prev = eq;
          }
      }
    }
  V.mark_block("lexmin", first_aux);
}

void emit_crossing_defs(CnfInstance& inst) {
  const auto& V = inst.vars();
  const auto& table = quadruple_table();
  inst.family("crossing-defs");
  for_each_subset(V.elements(), 4, [&](const std::vector<int>& q) {
    for (int code = 0; code < 16; ++code) {
      const auto& e = table[code];
      if (!e.drawable || !e.cls.crossing()) continue;
      const int D = V.d_quad(q.data(), e.cls.pairing, e.cls.direction);
      const auto lits = quad_literals(V, q.data(), code);
      for (Lit l : lits) inst.add({-D, l});
      inst.add({-lits[0], -lits[1], -lits[2], -lits[3], D});
    }
    for (int p = 0; p < 3; ++p) {
      const auto pr = static_cast<Pairing>(p);
      const int C = V.c_quad(q.data(), pr), D0 = V.d_quad(q.data(), pr, 0), D1 = V.d_quad(q.data(), pr, 1);
      inst.add({-C, D0, D1});
      inst.add({-D0, C});
      inst.add({-D1, C});
    }
  });
}

void emit_convex(CnfInstance& inst, int core, const ObstructionCatalog& catalog) {
  inst.family("convex");
  emit_forbidden(inst, range(core),
                 {ObstructionCatalog::need(catalog.conv5a, "conv5a"), ObstructionCatalog::need(catalog.conv5b, "conv5b")});
}

void emit_hconvex(CnfInstance& inst, int core, const ObstructionCatalog& catalog) {
  emit_convex(inst, core, catalog);
  inst.family("hconvex");
  emit_forbidden(inst, range(core), {ObstructionCatalog::need(catalog.hconv6, "hconv6")});
}

void emit_gentwisted(CnfInstance& inst, int core, const ObstructionCatalog& catalog) {
  if (catalog.drawable5.size() != 5) throw CatalogError("catalog lacks the drawable 5-element classes");
  const auto allowed = canonical_form(ObstructionCatalog::need(catalog.gt_allowed5, "gt_allowed5"));
  std::vector<PreRotationSystem> others;
  for (const auto& d : catalog.drawable5)
    if (canonical_form(d) != allowed) others.push_back(d);
  inst.family("gentwisted");
  emit_forbidden(inst, range(core), others);
}

void emit_cmonotone(CnfInstance& inst, int core) {
  const auto& V = inst.vars();
  if (V.elements() != core + 2) throw ConfigError("c-monotone encoding needs two extension elements");
  const int b1 = core, b2 = core + 1;
  inst.family("cmonotone");
  for (int i = 0; i < core; ++i)
    for (int j = 0; j < core; ++j)
      if (i != j) inst.add({-V.c({b1, i}, {b2, j})});
}

void emit_strong_cmonotone(CnfInstance& inst, int core) {
  auto& V = inst.vars();
  const int b1 = core, b2 = core + 1;
  const int base = V.fresh_block("scm-selectors", core * core);
  auto S = [&](int i, int j) { return base + i * core + j; };
  inst.family("strong-cmonotone");
  for (int i = 0; i < core; ++i) {
    std::vector<Lit> alo;
    for (int j = 0; j < core; ++j)
      if (j != i) alo.push_back(S(i, j));
    inst.add(alo);
    for (int j = 0; j < core; ++j) {
      if (j == i) {
        inst.add({-S(i, j)});
        continue;
      }
      for (int x = 0; x < core; ++x) {
        if (x == i || x == j) continue;
        for (int b : {b1, b2}) inst.add({-S(i, j), -V.c({i, x}, {j, b})});
      }
    }
  }
}

void emit_twisted_ray(CnfInstance& inst, int core) {
  const auto& V = inst.vars();
  const int b1 = core, b2 = core + 1;
  inst.family("twisted-ray");
  for (int u = 0; u < core; ++u)
    for (int v = u + 1; v < core; ++v) inst.add({V.c({b1, b2}, {u, v})});
}

}  // namespace rotsys
