// Acceptance suite: one PASS/FAIL line per check, non-zero exit when any
// check fails.
#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "rotsys/catalog.hpp"
#include "rotsys/crossval.hpp"
#include "rotsys/derive.hpp"
#include "rotsys/drawability.hpp"
#include "rotsys/encode.hpp"
#include "rotsys/errors.hpp"
#include "rotsys/oracle.hpp"
#include "rotsys/pipeline.hpp"

using namespace rotsys;

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;
std::string witness_dir = ".";

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

void line(int criterion, bool ok, const std::string& what, double seconds = -1, double limit = -1) {
  if (!ok) ++failures;
  std::cout << (ok ? "PASS" : "FAIL") << " [" << criterion << "] " << what;
  if (seconds >= 0) {
    std::cout << std::fixed << std::setprecision(1) << " (" << seconds << " s";
    if (limit > 0) std::cout << ", limit " << limit << " s";
    std::cout << ")";
    std::cout.unsetf(std::ios::fixed);
  }
  std::cout << std::endl;
}

RunConfig config(int n, const std::function<void(RunConfig&)>& set = {}) {
  RunConfig c;
  c.n = n;
  if (set) set(c);
  return c;
}

std::string describe(const RunConfig& c) {
  std::string s = "n=" + std::to_string(c.n);
  for (const auto& f : canonical_flags(c)) s += " " + f;
  return s;
}

struct Run {
  Status status = Status::Unknown;
  std::optional<PreRotationSystem> witness;
  double seconds = 0;
};

// Solves with a wall-clock limit; a SAT witness is written to the witness
// directory under `tag`.
Run solve_config(const RunConfig& c, double limit, const std::string& tag = "") {
  const auto t = Clock::now();
  SolverOptions s;
  s.timeout = limit;
  const auto inst = build_instance(c);
  const auto out = solve(inst, s);
  Run r;
  r.status = out.status;
  r.seconds = since(t);
  if (out.status == Status::Sat) {
    r.witness = project(decode_model(out, inst.vars()), c.n);
    if (!tag.empty()) {
      std::ofstream f(witness_dir + "/witness_" + tag + ".jsonl");
      f << to_json_line(*r.witness) << "\n";
    }
  }
  return r;
}

void expect_status(int criterion, const RunConfig& c, Status want, double limit, const std::string& tag = "") {
  const auto r = solve_config(c, limit, tag);
  line(criterion, r.status == want && r.seconds <= limit,
       describe(c) + ": " + to_string(r.status) + ", expected " + to_string(want), r.seconds, limit);
  if (r.witness) {
    bool ok = true;
    std::string failed;
    for (const auto& w : check_witness(c, *r.witness)) {
      ok &= w.ok && w.exhaustive;
      if (!w.ok || !w.exhaustive) failed += " " + w.property;
    }
    line(criterion, ok, describe(c) + ": witness confirmed by oracles" + (ok ? "" : " (failed:" + failed + ")"));
  }
}

std::size_t count_classes(const RunConfig& c, double* seconds = nullptr) {
  const auto t = Clock::now();
  const auto stats = enumerate_all(build_instance(c), {}, enumeration_options(c, Dedup::Canonical, 0),
                                   [](const PreRotationSystem&, const SolveOutcome&) { return true; });
  if (seconds) *seconds = since(t);
  return stats.emitted;
}

std::vector<PreRotationSystem> classes(const RunConfig& c) {
  return enumerate_systems(build_instance(c), {}, enumeration_options(c, Dedup::Canonical, 0));
}

// --- criteria ---------------------------------------------------------------

void catalog_derivation() {
  const auto t = Clock::now();
  DerivationCounts c;
  try {
    const auto cat = derive_obstruction_catalog({}, &c);
    const double s = since(t);
    line(1, c.classes4 == 3 && c.drawable4 == 2, "n=4: " + std::to_string(c.classes4) + " pre-rotation classes, " +
                                                     std::to_string(c.drawable4) + " drawable (3, 2)");
    line(1, c.classes5 == 7 && c.drawable5 == 5, "n=5: " + std::to_string(c.classes5) + " obstruction-4-free classes, " +
                                                     std::to_string(c.drawable5) + " drawable (7, 5)");
    line(1, c.drawable6 == 102, "n=6: " + std::to_string(c.drawable6) + " drawable classes (102)");
    line(1, cat.to_json() == builtin_catalog().to_json(), "derived catalog equals the frozen catalog");
    line(1, s <= 600, "derivation runtime", s, 600);
  } catch (const CatalogError& e) {
    line(1, false, std::string("derivation: ") + e.what(), since(t), 600);
  }
}

void table_counts(bool long_runs) {
  struct Cell {
    int n;
    const char* column;
    std::size_t want;
  };
  const std::vector<Cell> cells = {
      {4, "all", 2},     {4, "convex", 2},    {4, "hconvex", 2},   {4, "cmonotone", 2},  {4, "scmonotone", 2},
      {4, "gentwisted", 1}, {5, "all", 5},    {5, "convex", 3},    {5, "hconvex", 3},    {5, "cmonotone", 5},
      {5, "scmonotone", 5}, {5, "gentwisted", 1}, {6, "all", 102}, {6, "convex", 16},   {6, "hconvex", 15},
      {6, "cmonotone", 102}, {6, "scmonotone", 95}, {6, "gentwisted", 3}, {7, "all", 11556}, {7, "convex", 139},
      {7, "hconvex", 126}, {7, "cmonotone", 11556}, {7, "scmonotone", 8373}, {7, "gentwisted", 9}};
  std::vector<Cell> extra;
  if (long_runs) extra = {{8, "gentwisted", 32}, {9, "gentwisted", 115}};
  double total = 0;
  auto run = [&](const Cell& cell) {
    const std::string col = cell.column;
    const auto c = config(cell.n, [&](RunConfig& r) {
      r.convex = col == "convex";
      r.hconvex = col == "hconvex";
      r.cmonotone = col == "cmonotone";
      r.scmonotone = col == "scmonotone";
      r.gentwisted = col == "gentwisted";
      // The full column at n = 7 uses lexicographic minima.
      r.lexmin = col == "all" && cell.n >= 7;
    });
    double s = 0;
    const auto got = count_classes(c, &s);
    total += s;
    line(2, got == cell.want,
         "n=" + std::to_string(cell.n) + " " + col + ": " + std::to_string(got) + " classes (" +
             std::to_string(cell.want) + ")",
         s);
  };
  for (const auto& cell : cells) run(cell);
  line(2, total <= 6 * 3600, "class table runtime n=4..7", total, 6 * 3600);
  for (const auto& cell : extra) run(cell);
}

void rafla(bool long_runs) {
  expect_status(3, config(8, [](RunConfig& c) { c.hc = true; }), Status::Unsat, 1800);
  if (long_runs) expect_status(3, config(9, [](RunConfig& c) { c.hc = true; }), Status::Unsat, 24 * 3600);
}

void empty_cycles(bool long_runs) {
  std::vector<int> sizes{7};
  if (long_runs) sizes.push_back(8);
  for (int n : sizes) {
    const double limit = n == 7 ? 3600 : 12 * 3600;
    double total = 0;
    bool ok = true;
    for (int k = 3; k <= n; ++k) {
      const auto r = solve_config(config(n, [&](RunConfig& c) { c.empty_cycles = {k}; }), limit);
      total += r.seconds;
      ok &= r.status == Status::Unsat;
      line(4, r.status == Status::Unsat,
           "n=" + std::to_string(n) + " --emptycycles " + std::to_string(k) + ": " + to_string(r.status), r.seconds);
    }
    line(4, ok && total <= limit, "n=" + std::to_string(n) + " all k UNSAT", total, limit);
  }
}

void empty_triangles(bool long_runs) {
  expect_status(5, config(7, [](RunConfig& c) { c.etupp = 2 * 7 - 5; }), Status::Unsat, 1800);
  const auto c = config(7, [](RunConfig& r) { r.etupp = 2 * 7 - 4; });
  const auto r = solve_config(c, 1800, "etupp_n7");
  const int count = r.witness ? count_empty_triangles(*r.witness) : -1;
  line(5, r.status == Status::Sat && count == 10,
       describe(c) + ": " + to_string(r.status) + ", oracle counts " + std::to_string(count) + " empty triangles (10)",
       r.seconds);
  if (long_runs) expect_status(5, config(8, [](RunConfig& c) { c.etupp = 2 * 8 - 5; }), Status::Unsat, 24 * 3600);
}

void uncrossed_edges(bool long_runs) {
  const auto t = Clock::now();
  expect_status(6, config(7, [](RunConfig& c) { c.aec = true; }), Status::Unsat, 3600);
  expect_status(6, config(8, [](RunConfig& c) { c.aec = true; }), Status::Sat, 3600, "aec_n8");
  line(6, since(t) <= 3600, "-aec runtime", since(t), 3600);
  const int max_n = long_runs ? 10 : 8;
  for (int n = 5; n <= max_n; ++n)
    expect_status(6, config(n, [](RunConfig& c) {
                    c.crmax = true;
                    c.aec = true;
                  }),
                  Status::Unsat, 12 * 3600);
}

void ramsey(bool long_runs) {
  expect_status(7, config(11, [](RunConfig& c) {
                  c.convex = true;
                  c.perfect_convex = 5;
                }),
                Status::Unsat, 600);
  expect_status(7, config(10, [](RunConfig& c) {
                  c.hconvex = true;
                  c.perfect_convex = 5;
                }),
                Status::Sat, 7200, "hc_C5_n10");
  expect_status(7, config(7, [](RunConfig& c) {
                  c.gentwisted = true;
                  c.perfect_twisted = 6;
                }),
                Status::Unsat, 7200);
  expect_status(7, config(6, [](RunConfig& c) {
                  c.gentwisted = true;
                  c.perfect_twisted = 6;
                }),
                Status::Sat, 7200, "gt_T6_n6");
  expect_status(7, config(10, [](RunConfig& c) {
                  c.gentwisted = true;
                  c.perfect_twisted = 7;
                }),
                Status::Unsat, 7200);
  expect_status(7, config(9, [](RunConfig& c) {
                  c.gentwisted = true;
                  c.perfect_twisted = 7;
                }),
                Status::Sat, 7200, "gt_T7_n9");
  if (long_runs)
    expect_status(7, config(13, [](RunConfig& c) {
                    c.perfect_convex = 5;
                    c.perfect_twisted = 5;
                  }),
                  Status::Unsat, 7 * 24 * 3600);
}

void crossing_families(bool long_runs) {
  const auto c = config(10, [](RunConfig& r) {
    r.hconvex = true;
    r.crf = 3;
  });
  const auto r = solve_config(c, 7200, "crf3_n10");
  const bool quasiplanar = r.witness && !find_crossing_family(*r.witness, 3).found;
  line(8, r.status == Status::Sat && quasiplanar,
       describe(c) + ": " + to_string(r.status) + (quasiplanar ? ", witness is 3-quasiplanar" : ""), r.seconds);
  if (r.witness) line(8, check_class(*r.witness, DrawingClass::HConvex), "witness is h-convex");
  if (long_runs) expect_status(8, config(11, [](RunConfig& r) { r.crf = 3; }), Status::Unsat, 30 * 24 * 3600);
}

void cross_validation() {
  const auto t = Clock::now();
  const ObstructionCatalog none;
  std::size_t systems = 0, bad = 0;
  for (int n = 5; n <= 6; ++n)
    for (const auto& p : classes(config(n))) {
      ++systems;
      for (const auto& d : cross_validate(p)) {
        ++bad;
        std::cout << "  disagreement " << d.property << " " << d.system << "\n";
      }
    }
  line(9, systems == 107 && bad == 0,
       "oracles vs encodings on " + std::to_string(systems) + " classes (5 + 102): " + std::to_string(bad) +
           " disagreements");

  // Both directions of the obstruction characterization: every candidate
  // class is drawable exactly when it avoids the obstructions.
  std::size_t candidates = 0, mismatch = 0;
  auto compare = [&](const std::vector<PreRotationSystem>& list) {
    for (const auto& p : list) {
      ++candidates;
      mismatch += is_drawable(p).drawable != check_class(p, DrawingClass::Drawable);
    }
  };
  compare(enumerate_classes(4, false, false, none, {}));
  compare(enumerate_classes(5, true, false, builtin_catalog(), {}));
  compare(enumerate_classes(6, true, false, builtin_catalog(), {}));
  line(9, mismatch == 0,
       "drawability search vs obstruction test on " + std::to_string(candidates) + " classes: " +
           std::to_string(mismatch) + " mismatches");
  line(9, since(t) <= 1800, "cross-validation runtime", since(t), 1800);
}

void crossing_map_check() {
  const auto t = Clock::now();
  const auto five = enumerate_classes(5, true, false, builtin_catalog(), {});
  const auto r = check_crossing_maps(five);
  const double s = since(t);
  line(10, five.size() == 7 && r.collisions.empty() && s <= 60,
       std::to_string(r.systems) + " labeled obstruction-4-free systems on 5 elements, " + std::to_string(r.maps) +
           " crossing maps, " + std::to_string(r.collisions.size()) + " non-mirror collisions",
       s, 60);
}

void determinism() {
  const std::vector<RunConfig> configs = {
      config(6), config(7, [](RunConfig& c) { c.convex = true; }),
      config(6, [](RunConfig& c) { c.cmonotone = true; }), config(7, [](RunConfig& c) { c.hc = true; }),
      config(7, [](RunConfig& c) {
        c.empty_cycles = {4};
        c.etupp = 9;
      }),
      config(7, [](RunConfig& c) { c.lexmin = true; }), config(8, [](RunConfig& c) { c.gentwisted = true; }),
      config(8, [](RunConfig& c) {
        c.crf = 3;
        c.perfect_convex = 5;
      })};
  for (const auto& c : configs)
    line(11, to_dimacs(build_instance(c)) == to_dimacs(build_instance(c)), describe(c) + ": identical DIMACS bytes");
  for (const auto& c : {config(6), config(7, [](RunConfig& r) { r.hconvex = true; })})
    line(11, classes(c) == classes(c), describe(c) + ": identical enumeration order");
}

const std::map<int, std::pair<std::string, std::function<void(bool)>>>& criteria() {
  static const std::map<int, std::pair<std::string, std::function<void(bool)>>> m = {
      {1, {"catalog derivation", [](bool) { catalog_derivation(); }}},
      {2, {"class counts", table_counts}},
      {3, {"plane Hamiltonian cycles", rafla}},
      {4, {"empty k-cycles", empty_cycles}},
      {5, {"empty triangles", empty_triangles}},
      {6, {"uncrossed edges", uncrossed_edges}},
      {7, {"Ramsey numbers", ramsey}},
      {8, {"crossing families", crossing_families}},
      {9, {"cross-validation", [](bool) { cross_validation(); }}},
      {10, {"crossing maps", [](bool) { crossing_map_check(); }}},
      {11, {"determinism", [](bool) { determinism(); }}},
  };
  return m;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance checks"};
  std::vector<int> selected;
  bool long_runs = false, list = false;
  app.add_option("-c,--criterion", selected, "Criteria to run (default: all)");
  app.add_flag("--long", long_runs, "Include the long-running targets");
  app.add_flag("--list", list, "List criteria");
  app.add_option("--witness-dir", witness_dir, "Where SAT witnesses are written");
  CLI11_PARSE(app, argc, argv);

  if (list) {
    for (const auto& [id, c] : criteria()) std::cout << id << " " << c.first << "\n";
    return 0;
  }
  if (selected.empty())
    for (const auto& [id, c] : criteria()) selected.push_back(id);
  for (int id : selected) {
    const auto it = criteria().find(id);
    if (it == criteria().end()) {
      std::cerr << "unknown criterion " << id << "\n";
      return 2;
    }
    try {
      it->second.second(long_runs);
    } catch (const std::exception& e) {
      line(id, false, it->second.first + ": " + e.what());
    }
  }
  std::cout << (failures == 0 ? "all checks passed" : std::to_string(failures) + " checks failed") << "\n";
  return failures == 0 ? 0 : 1;
}
