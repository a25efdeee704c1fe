#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "rotsys/catalog.hpp"
#include "rotsys/crossval.hpp"
#include "rotsys/derive.hpp"
#include "rotsys/drawability.hpp"
#include "rotsys/errors.hpp"
#include "rotsys/oracle.hpp"
#include "rotsys/pipeline.hpp"
#include "rotsys/planarization.hpp"
#include "rotsys/version.hpp"

using namespace rotsys;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitSat = 10;
constexpr int kExitUnsat = 20;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitEnvironment = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Legacy spellings that CLI11 cannot express as single-dash names.
const std::map<std::string, std::string>& legacy_aliases() {
  static const std::map<std::string, std::string> m = {
      {"-v4", "--v4"},
      {"-v5", "--v5"},
      {"-nat", "--no-natural"},
      {"--nat", "--natural"},
      {"-lex", "--lex"},
      {"-hc", "--hconvex"},
      {"-cm", "--cmonotone"},
      {"-scm", "--scmonotone"},
      {"-gt", "--gentwisted"},
      {"-HC", "--plane-hc"},
      {"-HC+", "--hc-plus"},
      {"-HT+", "--ht-plus"},
      {"-aec", "--aec"},
      {"-crmax", "--crmax"},
      {"-crf", "--crf"},
      {"-etupp", "--etupp"},
      {"-r2f", "--r2f"},
      {"--forbidAllPairsHP", "--forbid-all-pairs-hp"},
      {"--forbidHP", "--forbid-hp"},
      {"--emptycycles", "--empty-cycles"},
      {"--checkATgraphs", "--check-at-graphs"},
  };
  return m;
}

std::vector<std::string> normalize_args(int argc, char** argv) {
  std::vector<std::string> out;
  for (int i = argc - 1; i >= 1; --i) {
    const std::string a = argv[i];
    const auto it = legacy_aliases().find(a);
    out.push_back(it == legacy_aliases().end() ? a : it->second);
  }
  return out;  // reversed, as CLI11::parse(std::vector) expects
}

struct Options {
  RunConfig cfg;
  bool natural_on = false, natural_off = false;
  std::vector<int> hp;
  bool enumerate = false, list = false, check_at = false, check = false, solve_too = false;
  std::string r2f, dimacs, witness = "witness.jsonl", summary;
  std::string solver_path, backend = "incremental", proof, dedup = "canonical";
  double timeout = 0;
  std::size_t limit = 0;
  int jobs = 1;
  std::uint64_t oracle_nodes = 0;
};

SolverOptions solver_options(const Options& o) {
  SolverOptions s;
  if (o.backend == "subprocess" || !o.solver_path.empty() || !o.proof.empty()) s.backend = Backend::Subprocess;
  s.solver_path = o.solver_path;
  s.timeout = o.timeout;
  s.proof_path = o.proof;
  return s;
}

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

json instance_json(const CnfInstance& inst) {
  json j;
  j["elements"] = inst.vars().elements();
  j["vars"] = inst.vars().num_vars();
  j["clauses"] = inst.num_clauses();
  return j;
}

void write_summary(const Options& o, const json& j) {
  if (o.summary.empty()) return;
  std::ofstream f(o.summary);
  if (!f) throw std::ios_base::failure("cannot write " + o.summary);
  f << j.dump(2) << "\n";
}

std::ofstream open_output(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::ios_base::failure("cannot write " + path);
  return f;
}

std::vector<PreRotationSystem> read_systems(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::ios_base::failure("cannot read " + path);
  std::vector<PreRotationSystem> out;
  std::string line;
  while (std::getline(f, line))
    if (line.find_first_not_of(" \t\r") != std::string::npos) out.push_back(from_json_line(line));
  return out;
}

json witness_json(const std::vector<Vertex>& w) {
  json a = json::array();
  for (Vertex v : w) a.push_back(v + 1);
  return a;
}

int report_checks(const std::vector<WitnessCheck>& checks, json& summary) {
  int failed = 0;
  json arr = json::array();
  for (const auto& c : checks) {
    const char* verdict = !c.exhaustive ? "budget exhausted" : c.ok ? "ok" : "FAILED";
    std::cout << "check " << c.property << ": " << verdict << "\n";
    failed += c.exhaustive && !c.ok;
    arr.push_back({{"property", c.property}, {"ok", c.ok}, {"exhaustive", c.exhaustive}});
  }
  summary["checks"] = arr;
  return failed;
}

int run_export(const Options& o, const CnfInstance& inst) {
  if (o.dimacs == "-") {
    write_dimacs(inst, std::cout);
    return 0;
  }
  auto f = open_output(o.dimacs);
  write_dimacs(inst, f);
  std::cout << "wrote " << o.dimacs << " (" << inst.vars().num_vars() << " variables, " << inst.num_clauses()
            << " clauses)\n";
  for (const auto& b : inst.vars().blocks()) std::cout << "  " << b.name << " " << b.first << ".." << b.last << "\n";
  json s{{"mode", "export"}, {"n", o.cfg.n}, {"dimacs", o.dimacs}, {"instance", instance_json(inst)}};
  write_summary(o, s);
  return 0;
}

int run_solve(const Options& o, const CnfInstance& inst) {
  const auto start = std::chrono::steady_clock::now();
  const auto out = solve(inst, solver_options(o));
  json s{{"mode", "solve"}, {"n", o.cfg.n}, {"flags", canonical_flags(o.cfg)}, {"status", to_string(out.status)},
         {"instance", instance_json(inst)}};
  s["solver"] = {{"backend", o.backend}, {"seconds", out.seconds}, {"exit_code", out.exit_code}};
  int code = 0;
  if (out.status == Status::Sat) {
    const auto pi = project(decode_model(out, inst.vars()), o.cfg.n);
    auto f = open_output(o.witness);
    f << to_json_line(pi) << "\n";
    std::cout << "SAT\nwitness " << o.witness << "\n";
    s["witness"] = o.witness;
    code = kExitSat;
    if (o.check && report_checks(check_witness(o.cfg, pi, {o.oracle_nodes}), s) > 0) code = kExitMismatch;
  } else if (out.status == Status::Unsat) {
    std::cout << "UNSAT\n";
    code = kExitUnsat;
  } else {
    std::cout << "UNKNOWN\n";
  }
  s["seconds"] = seconds_since(start);
  std::cout << "time " << s["seconds"].get<double>() << " s\n";
  write_summary(o, s);
  return code;
}

int run_all_pairs(const Options& o) {
  const auto start = std::chrono::steady_clock::now();
  const auto results = solve_all_pairs_hp(o.cfg, solver_options(o), o.jobs);
  json s{{"mode", "solve"}, {"n", o.cfg.n}, {"flags", canonical_flags(o.cfg)}};
  json pairs = json::array();
  bool any_sat = false, any_unknown = false;
  for (const auto& r : results) {
    std::cout << "pair " << r.a + 1 << " " << r.b + 1 << ": " << to_string(r.outcome.status) << "\n";
    pairs.push_back({{"a", r.a + 1}, {"b", r.b + 1}, {"status", to_string(r.outcome.status)}});
    if (r.outcome.status == Status::Sat && !any_sat) {
      RunConfig c = o.cfg;
      c.all_pairs_hp = false;
      c.hp = std::pair{r.a, r.b};
      const auto pi = project(decode_model(r.outcome, build_instance(c).vars()), o.cfg.n);
      auto f = open_output(o.witness);
      f << to_json_line(pi) << "\n";
      s["witness"] = o.witness;
    }
    any_sat |= r.outcome.status == Status::Sat;
    any_unknown |= r.outcome.status == Status::Unknown;
  }
  s["pairs"] = pairs;
  const char* status = any_sat ? "SAT" : any_unknown ? "UNKNOWN" : "UNSAT";
  s["status"] = status;
  s["seconds"] = seconds_since(start);
  std::cout << status << "\n";
  if (any_sat) std::cout << "witness " << o.witness << "\n";
  write_summary(o, s);
  return any_sat ? kExitSat : any_unknown ? 0 : kExitUnsat;
}

int run_enumerate(const Options& o, const CnfInstance& inst) {
  const auto start = std::chrono::steady_clock::now();
  std::ofstream file;
  if (!o.r2f.empty()) file = open_output(o.r2f);
  std::vector<PreRotationSystem> found;
  const Dedup dedup = o.dedup == "none" ? Dedup::None : Dedup::Canonical;
  json s{{"mode", "enumerate"}, {"n", o.cfg.n}, {"flags", canonical_flags(o.cfg)}, {"instance", instance_json(inst)}};
  EnumerationStats stats;
  try {
    stats = enumerate_all(inst, solver_options(o), enumeration_options(o.cfg, dedup, o.limit),
                          [&](const PreRotationSystem& p, const SolveOutcome&) {
                            const auto line = to_json_line(p);
                            if (o.list) std::cout << line << "\n";
                            if (file.is_open()) file << line << "\n";
                            if (o.check_at) found.push_back(p);
                            return true;
                          });
  } catch (const EnumerationAborted& e) {
    std::cout << "UNKNOWN: " << e.what() << "\n";
    s["status"] = "UNKNOWN";
    write_summary(o, s);
    return 0;
  }
  std::cout << "count " << stats.emitted << "\n";
  std::cout << "time " << stats.seconds << " s\n";
  s["status"] = "complete";
  s["count"] = stats.emitted;
  s["models"] = stats.models;
  s["blocking_clauses"] = stats.blocking_clauses;
  if (!o.r2f.empty()) s["output"] = o.r2f;
  int code = 0;
  if (o.check_at) {
    const auto r = check_crossing_maps(found);
    std::cout << "crossing maps: " << r.systems << " labeled systems, " << r.maps << " distinct maps, "
              << r.collisions.size() << " non-mirror collisions\n";
    for (const auto& [a, b] : r.collisions) std::cout << "  " << to_json_line(a) << " " << to_json_line(b) << "\n";
    s["crossing_maps"] = {{"systems", r.systems}, {"maps", r.maps}, {"collisions", r.collisions.size()}};
    if (!r.collisions.empty()) code = kExitMismatch;
  }
  s["seconds"] = seconds_since(start);
  write_summary(o, s);
  return code;
}

int run_main(const Options& o) {
  if (o.cfg.n <= 0) throw UsageError("missing n (or a subcommand)");
  if (o.cfg.all_pairs_hp && o.enumerate) throw UsageError("--forbidAllPairsHP cannot be combined with -a");
  if (o.cfg.all_pairs_hp) {
    validate(o.cfg);
    return run_all_pairs(o);
  }
  const auto inst = build_instance(o.cfg);
  if (!o.dimacs.empty()) {
    run_export(o, inst);
    if (!o.solve_too && !o.enumerate) return 0;
  }
  return o.enumerate ? run_enumerate(o, inst) : run_solve(o, inst);
}

// One oracle verdict for one system.
json verdict(const PreRotationSystem& pi, const std::string& property, int k, const std::vector<int>& ends,
             OracleBudget budget) {
  json j{{"property", property}};
  auto report = [&](const OracleReport& r) {
    j["found"] = r.found;
    if (r.found) j["witness"] = witness_json(r.witness);
    j["exhaustive"] = r.exhaustive;
  };
  auto need_k = [&] {
    if (k <= 0) throw UsageError("property " + property + " needs --k");
  };
  if (property == "drawable") {
    j["value"] = check_class(pi, DrawingClass::Drawable);
  } else if (property == "convex") {
    j["value"] = is_convex_definitional(pi);
  } else if (property == "hconvex") {
    j["value"] = is_convex_definitional(pi) && is_hconvex_definitional(pi);
  } else if (property == "gentwisted") {
    j["value"] = check_class(pi, DrawingClass::GenTwisted);
  } else if (property == "crossings") {
    const auto cm = crossing_map(pi);
    j["value"] = cm.count();
    json pairs = json::array();
    for (const auto& c : cm.pairs()) pairs.push_back({c.e.first + 1, c.e.second + 1, c.f.first + 1, c.f.second + 1});
    j["pairs"] = pairs;
  } else if (property == "plane-hc") {
    report(find_plane_hamiltonian_cycle(pi, budget));
  } else if (property == "plane-hp") {
    if (ends.size() != 2) throw UsageError("plane-hp needs --ends a b");
    report(find_plane_hamiltonian_path(pi, ends[0] - 1, ends[1] - 1, budget));
  } else if (property == "hc-plus") {
    report(find_plane_hc_plus(pi, budget));
  } else if (property == "empty-cycle") {
    need_k();
    report(find_empty_k_cycle(pi, k, budget));
  } else if (property == "empty-triangles") {
    j["value"] = count_empty_triangles(pi);
  } else if (property == "all-edges-crossed") {
    j["value"] = all_edges_crossed(pi);
  } else if (property == "crossing-maximal") {
    j["value"] = is_crossing_maximal(pi);
  } else if (property == "crossing-family") {
    need_k();
    report(find_crossing_family(pi, k));
  } else if (property == "perfect-convex") {
    need_k();
    report(find_perfect_subdrawing(pi, PerfectKind::Convex, k));
  } else if (property == "perfect-twisted") {
    need_k();
    report(find_perfect_subdrawing(pi, PerfectKind::Twisted, k));
  } else if (property == "crossing-maximal-sub") {
    need_k();
    report(find_crossing_maximal_subset(pi, k));
  } else {
    throw UsageError("unknown property " + property);
  }
  return j;
}

int run_verify(const std::string& path, const std::string& property, int k, const std::vector<int>& ends,
               const Options& o) {
  const auto systems = read_systems(path);
  std::size_t disagreements = 0;
  for (std::size_t i = 0; i < systems.size(); ++i) {
    json j{{"line", i + 1}};
    if (property == "cross-validate") {
      json bad = json::array();
      for (const auto& d : cross_validate(systems[i], solver_options(o))) bad.push_back(d.property);
      disagreements += bad.size();
      j["property"] = property;
      j["disagreements"] = bad;
    } else {
      try {
        j.update(verdict(systems[i], property, k, ends, {o.oracle_nodes}));
      } catch (const NotDrawable& e) {
        j["property"] = property;
        j["error"] = e.what();
      }
    }
    std::cout << j.dump() << "\n";
  }
  std::cerr << "verified " << systems.size() << " systems";
  if (property == "cross-validate") std::cerr << ", " << disagreements << " disagreements";
  std::cerr << "\n";
  write_summary(o, json{{"mode", "verify"}, {"property", property}, {"systems", systems.size()},
                        {"disagreements", disagreements}});
  return disagreements > 0 ? kExitMismatch : 0;
}

int run_draw(const std::string& path, const Options& o) {
  const auto systems = read_systems(path);
  std::size_t drawable = 0;
  for (std::size_t i = 0; i < systems.size(); ++i) {
    const auto r = is_drawable(systems[i], solver_options(o));
    json j{{"line", i + 1}, {"drawable", r.drawable}};
    if (r.drawable) {
      ++drawable;
      const auto& g = *r.planarization;
      j["vertices"] = g.num_vertices();
      j["edges"] = g.num_edges();
      j["faces"] = faces_of(systems[i], g).size();
      j["crossings"] = g.crossings.size();
    }
    std::cout << j.dump() << "\n";
  }
  std::cerr << "drawable " << drawable << " of " << systems.size() << "\n";
  write_summary(o, json{{"mode", "draw"}, {"systems", systems.size()}, {"drawable", drawable}});
  return 0;
}

int run_derive(const std::string& out_path, const Options& o) {
  DerivationCounts c;
  const auto cat = derive_obstruction_catalog(solver_options(o), &c);
  auto f = open_output(out_path);
  f << cat.to_json() << "\n";
  std::cout << "pre-rotation classes n=4: " << c.classes4 << " (" << c.drawable4 << " drawable)\n"
            << "obstruction-4-free classes n=5: " << c.classes5 << " (" << c.drawable5 << " drawable, " << c.convex5
            << " convex, " << c.gentwisted5 << " generalized twisted)\n"
            << "drawable classes n=6: " << c.drawable6 << " (" << c.convex6 << " convex, " << c.hconvex6
            << " h-convex)\n"
            << "catalog " << out_path << "\ntime " << c.seconds << " s\n";
  write_summary(o, json{{"mode", "derive-catalog"},
                        {"catalog", out_path},
                        {"classes4", c.classes4},
                        {"drawable4", c.drawable4},
                        {"classes5", c.classes5},
                        {"drawable5", c.drawable5},
                        {"drawable6", c.drawable6},
                        {"convex6", c.convex6},
                        {"hconvex6", c.hconvex6},
                        {"seconds", c.seconds}});
  return 0;
}

int run_table(int from, int to, const std::vector<std::string>& columns, const Options& o) {
  json rows = json::array();
  std::cout << "n";
  for (const auto& c : columns) std::cout << "\t" << c;
  std::cout << "\n";
  for (int n = from; n <= to; ++n) {
    json row{{"n", n}};
    std::cout << n;
    for (const auto& col : columns) {
      RunConfig c;
      c.n = n;
      if (col == "convex") c.convex = true;
      else if (col == "hconvex") c.hconvex = true;
      else if (col == "cmonotone") c.cmonotone = true;
      else if (col == "scmonotone") c.scmonotone = true;
      else if (col == "gentwisted") c.gentwisted = true;
      else if (col != "all") throw UsageError("unknown column " + col);
      const auto t = std::chrono::steady_clock::now();
      const auto stats = enumerate_all(build_instance(c), solver_options(o),
                                       enumeration_options(c, Dedup::Canonical, 0),
                                       [](const PreRotationSystem&, const SolveOutcome&) { return true; });
      row[col] = {{"count", stats.emitted}, {"seconds", seconds_since(t)}};
      std::cout << "\t" << stats.emitted << std::flush;
    }
    std::cout << "\n";
    rows.push_back(row);
  }
  write_summary(o, json{{"mode", "table"}, {"rows", rows}});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SAT-based generation and verification of rotation systems of complete graphs", "rotsys"};
  app.set_version_flag("--version", kVersion);
  Options o;
  RunConfig& c = o.cfg;

  app.add_option("n", c.n, "Number of vertices");
  app.add_flag("--v4", [&](std::int64_t) { c.forbid4 = false; }, "Allow the 4-element obstruction (-v4)");
  app.add_flag("--v5", [&](std::int64_t) { c.forbid5 = false; }, "Allow the 5-element obstructions (-v5)");
  app.add_flag("--natural", o.natural_on, "Force natural symmetry breaking (--nat)");
  app.add_flag("--no-natural", o.natural_off, "Disable natural symmetry breaking (-nat)");
  app.add_flag("--lex", c.lexmin, "Lexicographic-minimum symmetry breaking (-lex)");
  app.add_flag("-c,--convex", c.convex, "Convex drawings");
  app.add_flag("--hconvex", c.hconvex, "H-convex drawings (-hc)");
  app.add_flag("--cmonotone", c.cmonotone, "C-monotone drawings (-cm)");
  app.add_flag("--scmonotone", c.scmonotone, "Strongly c-monotone drawings (-scm)");
  app.add_flag("--gentwisted", c.gentwisted, "Generalized twisted drawings (-gt)");
  app.add_flag("--plane-hc", c.hc, "Forbid plane Hamiltonian cycles (-HC)");
  app.add_flag("--hc-plus", c.hc_plus, "Forbid plane Hamiltonian cycles extendable by n-3 edges (-HC+)");
  app.add_option("--ht-plus", c.ht_plus, "Forbid plane HC compatible with the matching of size k (-HT+ k)");
  app.add_option("--forbid-hp", o.hp, "Forbid plane Hamiltonian paths between a and b (--forbidHP a b)")
      ->expected(2);
  app.add_flag("--forbid-all-pairs-hp", c.all_pairs_hp, "One instance per vertex pair (--forbidAllPairsHP)");
  app.add_option("--empty-cycles", c.empty_cycles, "Forbid empty k-cycles (--emptycycles k, repeatable)")
      ->expected(1)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  app.add_option("--etupp", c.etupp, "At most k empty triangles (-etupp k)");
  app.add_flag("--aec", c.aec, "Every edge is crossed (-aec)");
  app.add_flag("--crmax", c.crmax, "Crossing-maximal drawings (-crmax)");
  app.add_option("--crf", c.crf, "Forbid crossing families of size k (-crf k)");
  app.add_option("-C,--perfect-convex", c.perfect_convex, "Forbid perfect convex subdrawings C_a");
  app.add_option("-T,--perfect-twisted", c.perfect_twisted, "Forbid perfect twisted subdrawings T_b");
  app.add_option("-X,--crossing-maximal-sub", c.crossmax_sub, "Forbid crossing-maximal subdrawings of size k");
  app.add_option("--hc-max-n", c.limits.hc_max_n, "Largest n for the plane-HC family");
  app.add_option("--hc-plus-max-n", c.limits.hc_plus_max_n, "Largest n for the HC+ family");

  app.add_flag("-a,--all", o.enumerate, "Enumerate all solutions");
  app.add_flag("-l,--list", o.list, "Print enumerated systems as JSON lines");
  app.add_option("--r2f", o.r2f, "Write enumerated systems to a file (-r2f)");
  app.add_option("--limit", o.limit, "Stop after this many systems");
  app.add_option("--dedup", o.dedup, "canonical or none")->check(CLI::IsMember({"canonical", "none"}));
  app.add_flag("--check-at-graphs", o.check_at, "Check that crossing maps separate non-mirror systems");
  app.add_option("-o,--output", o.dimacs, "Write the instance as DIMACS (- for stdout)");
  app.add_flag("--solve", o.solve_too, "Solve after -o");
  app.add_option("-w,--witness", o.witness, "Witness file for SAT results");
  app.add_flag("--check", o.check, "Check the witness with the oracles");
  app.add_option("--oracle-nodes", o.oracle_nodes, "Node budget per oracle search (0: none)");

  app.add_option("--solver", o.solver_path, "External solver executable (implies --backend subprocess)");
  app.add_option("--backend", o.backend, "incremental or subprocess")
      ->check(CLI::IsMember({"incremental", "subprocess"}));
  app.add_option("--timeout", o.timeout, "Seconds per solver call");
  app.add_option("--proof", o.proof, "Proof output path passed to the solver");
  app.add_option("--jobs", o.jobs, "Parallel instances for --forbidAllPairsHP")->check(CLI::PositiveNumber);
  app.add_option("--summary", o.summary, "Write a JSON summary");

  std::string file, property = "cross-validate", catalog_out = "catalog.json";
  std::vector<std::string> columns{"all", "convex", "hconvex", "cmonotone", "scmonotone", "gentwisted"};
  int k = 0, from = 4, to = 6;
  std::vector<int> ends;
  auto* verify = app.add_subcommand("verify", "Run oracles on JSON-lines systems");
  verify->add_option("file", file, "JSON-lines input")->required();
  verify->add_option("-p,--property", property, "Property, or cross-validate against the encodings");
  verify->add_option("-k,--k", k, "Size parameter");
  verify->add_option("--ends", ends, "Path endpoints for plane-hp")->expected(2);
  auto* draw = app.add_subcommand("draw", "Decide drawability of JSON-lines systems");
  draw->add_option("file", file, "JSON-lines input")->required();
  auto* derive = app.add_subcommand("derive-catalog", "Derive the obstruction catalog");
  derive->add_option("-o,--output", catalog_out, "Catalog file");
  auto* table = app.add_subcommand("table", "Count classes per drawing class");
  table->add_option("--from", from, "Smallest n");
  table->add_option("--to", to, "Largest n");
  table->add_option("--columns", columns, "all convex hconvex cmonotone scmonotone gentwisted");
  app.require_subcommand(0, 1);

  try {
    app.parse(normalize_args(argc, argv));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (o.natural_on && o.natural_off) throw UsageError("--nat and -nat are exclusive");
    c.natural = o.natural_on ? Toggle::On : o.natural_off ? Toggle::Off : Toggle::Auto;
    if (!o.hp.empty()) c.hp = std::pair{o.hp[0] - 1, o.hp[1] - 1};
    if (*verify) return run_verify(file, property, k, ends, o);
    if (*draw) return run_draw(file, o);
    if (*derive) return run_derive(catalog_out, o);
    if (*table) return run_table(from, to, columns, o);
    return run_main(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const OutOfScope& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitEnvironment;
  }
}
