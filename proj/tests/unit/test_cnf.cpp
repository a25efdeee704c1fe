#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "rotsys/combinatorics.hpp"
#include "rotsys/encode.hpp"
#include "rotsys/errors.hpp"
#include "rotsys/pipeline.hpp"

using namespace rotsys;

namespace {

// Is (x, y, z) counterclockwise in the cyclic sequence `cyc`?
bool cyclic_ccw(const std::vector<int>& cyc, int x, int y, int z) {
  auto pos = [&](int v) { return static_cast<int>(std::find(cyc.begin(), cyc.end(), v) - cyc.begin()); };
  const int px = pos(x), py = (pos(y) - px + 4) % 4, pz = (pos(z) - px + 4) % 4;
  return py < pz;
}

bool satisfies(const std::vector<std::vector<Lit>>& clauses, const std::vector<bool>& val) {
  for (const auto& cl : clauses) {
    bool sat = false;
    for (Lit l : cl) sat |= (l > 0) == val[std::abs(l)];
    if (!sat) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("variable blocks have the closed-form sizes") {
  VarMap v4(4);
  CHECK(v4.num_vars() == 36 + 4 + 3 + 6);
  VarMap v5(5);
  CHECK(v5.y_sorted(0, 1, 2, 3) == 80 + 1);
  CHECK(v5.num_vars() == 80 + 20 + 3 * 5 + 6 * 5);
  // (3, 4, 2) is a cyclic rotation of (2, 3, 4).
  CHECK(v5.y(1, 3, 4, 2) == v5.y_sorted(1, 2, 3, 4));
  CHECK(v5.y(1, 3, 2, 4) == -v5.y_sorted(1, 2, 3, 4));
  std::set<int> ids;
  for (int a = 0; a < 5; ++a)
    for (int i = 0; i < 4; ++i)
      for (int b = 0; b < 5; ++b)
        if (b != a) ids.insert(v5.x(a, i, b));
  CHECK(ids.size() == 80);
  CHECK(*ids.begin() == 1);
  CHECK(*ids.rbegin() == 80);
}

TEST_CASE("ternary clauses admit exactly the six cyclic orders of four neighbors") {
  VarMap vars(5);
  const auto clauses = ternary_clauses(vars, 0, 1, 2, 3, 4);
  const Lit A = vars.y(0, 1, 2, 3), B = vars.y(0, 1, 2, 4), C = vars.y(0, 1, 3, 4), D = vars.y(0, 2, 3, 4);
  std::set<int> realizable;
  std::vector<int> perm{1, 2, 3, 4};
  do {
    auto val = [&](int b, int c, int d) { return cyclic_ccw(perm, b, c, d); };
    realizable.insert(val(1, 2, 3) | val(1, 2, 4) << 1 | val(1, 3, 4) << 2 | val(2, 3, 4) << 3);
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  CHECK(realizable.size() == 6);
  int allowed = 0;
  for (int mask = 0; mask < 16; ++mask) {
    std::vector<bool> val(vars.num_vars() + 1, false);
    val[std::abs(A)] = (mask & 1) == (A > 0);
    val[std::abs(B)] = ((mask >> 1) & 1) == (B > 0);
    val[std::abs(C)] = ((mask >> 2) & 1) == (C > 0);
    val[std::abs(D)] = ((mask >> 3) & 1) == (D > 0);
    const bool ok = satisfies(clauses, val);
    CHECK(ok == (realizable.count(mask) == 1));
    allowed += ok;
  }
  CHECK(allowed == 6);
}

TEST_CASE("clause families have their closed-form counts") {
  RunConfig cfg;
  cfg.n = 6;
  const auto inst = build_instance(cfg);
  CHECK(inst.family_count("cyclic-patterns") == 8 * 6 * binomial(5, 4));
  CHECK(inst.family_count("smallest-first") == 6);
  CHECK(inst.family_count("forbid-4") == 8 * binomial(6, 4));
  CHECK(inst.family_count("natural") == binomial(5, 3));

  RunConfig c5;
  c5.n = 5;
  CHECK(build_instance(c5).family_count("natural") == 4);
  CHECK(build_instance(c5).family_count("forbid-4") == 8 * 5);

  RunConfig hc;
  hc.n = 7;
  hc.hc = true;
  const auto hinst = build_instance(hc);
  CHECK(hinst.family_count("plane-hc") == 360);
  CHECK(hinst.family_count("crossing-defs") == 39 * binomial(7, 4));

  RunConfig hp;
  hp.n = 6;
  hp.hp = std::pair{0, 1};
  CHECK(build_instance(hp).family_count("plane-hp") == 24);

  RunConfig hcp;
  hcp.n = 6;
  hcp.hc_plus = true;
  CHECK(build_instance(hcp).family_count("plane-hc-plus") == 60 * binomial(9, 3));

  RunConfig crf;
  crf.n = 6;
  crf.crf = 3;
  CHECK(build_instance(crf).family_count("crossing-family") == 15);

  RunConfig lex;
  lex.n = 4;
  lex.lexmin = true;
  const auto linst = build_instance(lex);
  int circuits = 0;
  for (const auto& b : linst.vars().blocks())
    if (b.name == "lexmin") ++circuits;
  CHECK(circuits >= 1);
}

TEST_CASE("factorial caps refuse oversized families") {
  RunConfig hc;
  hc.n = 13;
  hc.hc = true;
  CHECK_THROWS_AS(build_instance(hc), ConfigError);
  RunConfig hcp;
  hcp.n = 10;
  hcp.hc_plus = true;
  CHECK_THROWS_AS(build_instance(hcp), ConfigError);
}

TEST_CASE("inconsistent flags are rejected") {
  RunConfig a;
  a.n = 8;
  a.ht_plus = 2;
  a.natural = Toggle::On;
  CHECK_THROWS_AS(validate(a), ConfigError);
  a.natural = Toggle::Auto;
  CHECK_NOTHROW(validate(a));
  CHECK_FALSE(natural_enabled(a));

  RunConfig b;
  b.n = 7;
  b.gentwisted = true;
  b.forbid5 = false;
  CHECK_THROWS_AS(validate(b), ConfigError);

  RunConfig c;
  c.n = 6;
  c.cmonotone = true;
  c.lexmin = true;
  CHECK_THROWS_AS(validate(c), ConfigError);

  RunConfig d;
  d.n = 6;
  d.empty_cycles = {7};
  CHECK_THROWS_AS(validate(d), ConfigError);
}

TEST_CASE("DIMACS export is deterministic and parses back") {
  RunConfig cfg;
  cfg.n = 6;
  cfg.convex = true;
  cfg.hc = true;
  const std::string a = to_dimacs(build_instance(cfg));
  const std::string b = to_dimacs(build_instance(cfg));
  CHECK(a == b);
  CHECK(a.find("c flags -c -HC") != std::string::npos);
  CHECK(a.find("c x-block 1..150") != std::string::npos);

  const auto inst = build_instance(cfg);
  std::istringstream in(a);
  const auto parsed = parse_dimacs(in);
  CHECK(parsed.num_vars == inst.vars().num_vars());
  REQUIRE(parsed.clauses.size() == inst.num_clauses());
  std::multiset<std::vector<Lit>> want, got(parsed.clauses.begin(), parsed.clauses.end());
  inst.for_each_clause([&](std::span<const Lit> cl) { want.insert(std::vector<Lit>(cl.begin(), cl.end())); });
  CHECK(want == got);
}

TEST_CASE("empty instance exports an empty problem line") {
  CnfInstance inst;
  const auto text = to_dimacs(inst);
  CHECK(text.find("p cnf 0 0\n") != std::string::npos);
}

TEST_CASE("clauses with unallocated literals are refused") {
  CnfInstance inst{VarMap(4)};
  CHECK_THROWS(inst.add({1000}));
  CHECK_THROWS(inst.add({0}));
}
