#include "rotsys/pipeline.hpp"

#include <atomic>
#include <thread>

#include "rotsys/encode.hpp"
#include "rotsys/errors.hpp"

namespace rotsys {

namespace {

bool extension_mode(const RunConfig& cfg) {
  return cfg.cmonotone || cfg.scmonotone || (cfg.gentwisted && cfg.n < 7);
}

// Properties phrased over crossing variables (empty triangles read Y only).
bool crossing_properties(const RunConfig& cfg) {
  return cfg.hc || cfg.hc_plus || cfg.ht_plus >= 0 || cfg.hp || cfg.all_pairs_hp || !cfg.empty_cycles.empty() ||
         cfg.aec || cfg.crmax || cfg.crf > 0 || cfg.perfect_convex > 0 || cfg.perfect_twisted > 0 ||
         cfg.crossmax_sub > 0;
}

}  // namespace

bool natural_enabled(const RunConfig& cfg) {
  if (cfg.natural == Toggle::Auto) return cfg.ht_plus < 2;
  return cfg.natural == Toggle::On;
}

int instance_elements(const RunConfig& cfg) { return extension_mode(cfg) ? cfg.n + 2 : cfg.n; }

bool needs_crossing_defs(const RunConfig& cfg) { return extension_mode(cfg) || crossing_properties(cfg); }

void validate(const RunConfig& cfg) {
  const int n = cfg.n;
  if (n < 3) throw ConfigError("n must be at least 3");
  if (cfg.ht_plus >= 2 && cfg.natural == Toggle::On)
    throw ConfigError("-HT+ with k >= 2 cannot be combined with natural symmetry breaking");
  if (cfg.ht_plus >= 0 && 2 * cfg.ht_plus > n) throw ConfigError("-HT+ k needs 2k <= n");
  if (cfg.gentwisted && !cfg.forbid5) throw ConfigError("-gt cannot be combined with -v5");
  if (cfg.lexmin && !natural_enabled(cfg)) throw ConfigError("-lex requires natural symmetry breaking");
  if (cfg.lexmin && extension_mode(cfg))
    throw ConfigError("-lex is not available with the c-monotone extension (-cm, -scm, or -gt below n = 7)");
  if (!cfg.forbid4 && (needs_crossing_defs(cfg) || cfg.etupp >= 0 || cfg.convex || cfg.hconvex || cfg.gentwisted))
    throw ConfigError("-v4 admits systems without crossing semantics; drop the subclass and property flags");
  if (cfg.hp) {
    const auto [a, b] = *cfg.hp;
    if (a == b || a < 0 || b < 0 || a >= n || b >= n) throw ConfigError("--forbidHP needs two distinct vertices");
  }
  for (int k : cfg.empty_cycles)
    if (k < 3 || k > n) throw ConfigError("--emptycycles k needs 3 <= k <= n");
  if (cfg.crf == 1 || cfg.crf < 0) throw ConfigError("-crf k needs k >= 2");
}

std::vector<std::string> canonical_flags(const RunConfig& cfg) {
  std::vector<std::string> f;
  auto num = [&](const char* name, int v) { f.push_back(std::string(name) + " " + std::to_string(v)); };
  if (!cfg.forbid4) f.push_back("-v4");
  if (!cfg.forbid5) f.push_back("-v5");
  if (cfg.natural == Toggle::Off) f.push_back("-nat");
  if (cfg.natural == Toggle::On) f.push_back("--natural");
  if (cfg.lexmin) f.push_back("-lex");
  if (cfg.convex) f.push_back("-c");
  if (cfg.hconvex) f.push_back("-hc");
  if (cfg.cmonotone) f.push_back("-cm");
  if (cfg.scmonotone) f.push_back("-scm");
  if (cfg.gentwisted) f.push_back("-gt");
  if (cfg.hc) f.push_back("-HC");
  if (cfg.hc_plus) f.push_back("-HC+");
  if (cfg.ht_plus >= 0) num("-HT+", cfg.ht_plus);
  if (cfg.hp) f.push_back("--forbidHP " + std::to_string(cfg.hp->first + 1) + " " + std::to_string(cfg.hp->second + 1));
  if (cfg.all_pairs_hp) f.push_back("--forbidAllPairsHP");
  for (int k : cfg.empty_cycles) num("--emptycycles", k);
  if (cfg.etupp >= 0) num("-etupp", cfg.etupp);
  if (cfg.aec) f.push_back("-aec");
  if (cfg.crmax) f.push_back("-crmax");
  if (cfg.crf > 0) num("-crf", cfg.crf);
  if (cfg.perfect_convex > 0) num("-C", cfg.perfect_convex);
  if (cfg.perfect_twisted > 0) num("-T", cfg.perfect_twisted);
  if (cfg.crossmax_sub > 0) num("-X", cfg.crossmax_sub);
  return f;
}

CnfInstance build_instance(const RunConfig& cfg, const ObstructionCatalog& catalog) {
  validate(cfg);
  const int n = cfg.n;
  CnfInstance inst{VarMap(instance_elements(cfg))};
  inst.n = n;
  inst.flags = canonical_flags(cfg);

  emit_prerotation(inst);
  emit_drawability(inst, cfg.forbid4, cfg.forbid5, catalog);
  if (natural_enabled(cfg)) emit_natural(inst, n);
  if (cfg.lexmin) emit_lexmin(inst);
  if (needs_crossing_defs(cfg)) emit_crossing_defs(inst);

  if (cfg.hconvex)
    emit_hconvex(inst, n, catalog);
  else if (cfg.convex)
    emit_convex(inst, n, catalog);
  if (extension_mode(cfg)) emit_cmonotone(inst, n);
  if (cfg.scmonotone) emit_strong_cmonotone(inst, n);
  if (cfg.gentwisted) {
    if (n >= 7)
      emit_gentwisted(inst, n, catalog);
    else
      emit_twisted_ray(inst, n);
  }

  if (cfg.hc) forbid_plane_hamiltonian_cycle(inst, n, cfg.limits);
  if (cfg.hc_plus) forbid_hc_plus(inst, n, cfg.limits);
  if (cfg.ht_plus >= 0) forbid_matching_friendly_hc(inst, n, cfg.ht_plus, !natural_enabled(cfg), cfg.limits);
  if (cfg.hp) forbid_plane_hamiltonian_path(inst, n, cfg.hp->first, cfg.hp->second, cfg.limits);
  for (int k : cfg.empty_cycles) forbid_empty_k_cycles(inst, n, k);
  if (cfg.etupp >= 0) bound_empty_triangles(inst, n, cfg.etupp);
  if (cfg.aec) require_all_edges_crossed(inst, n);
  if (cfg.crmax) require_crossing_maximal(inst, n);
  if (cfg.crf > 0) forbid_crossing_family(inst, n, cfg.crf);
  if (cfg.perfect_convex > 0) forbid_perfect_convex(inst, n, cfg.perfect_convex);
  if (cfg.perfect_twisted > 0) forbid_perfect_twisted(inst, n, cfg.perfect_twisted);
  if (cfg.crossmax_sub > 0) forbid_crossing_maximal_subdrawing(inst, n, cfg.crossmax_sub);
  return inst;
}

EnumerationOptions enumeration_options(const RunConfig& cfg, Dedup dedup, std::size_t limit) {
  EnumerationOptions o;
  o.dedup = dedup;
  o.limit = limit;
  o.core = cfg.n;
  o.natural = natural_enabled(cfg);
  o.lexmin = cfg.lexmin;
  return o;
}

std::vector<PairOutcome> solve_all_pairs_hp(const RunConfig& cfg, const SolverOptions& solver, int jobs,
                                            const ObstructionCatalog& catalog) {
  std::vector<PairOutcome> out;
  for (int a = 0; a < cfg.n; ++a)
    for (int b = a + 1; b < cfg.n; ++b) out.push_back({a, b, {}});
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (std::size_t i = next++; i < out.size() && !failed; i = next++) {
      try {
        RunConfig c = cfg;
        c.all_pairs_hp = false;
        c.hp = std::pair{out[i].a, out[i].b};
        out[i].outcome = solve(build_instance(c, catalog), solver);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int j = 0; j < std::max(1, jobs); ++j) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

std::vector<WitnessCheck> check_witness(const RunConfig& cfg, const PreRotationSystem& pi, OracleBudget budget) {
  std::vector<WitnessCheck> out;
  auto cls = [&](const char* name, DrawingClass c) { out.push_back({name, check_class(pi, c)}); };
  auto none = [&](const std::string& name, const OracleReport& r) { out.push_back({name, !r.found, r.exhaustive}); };
  auto num = [](const char* name, int k) { return std::string(name) + " " + std::to_string(k); };

  if (cfg.forbid4 && cfg.forbid5) cls("drawable", DrawingClass::Drawable);
  if (cfg.hconvex) cls("hconvex", DrawingClass::HConvex);
  if (cfg.convex || cfg.hconvex) cls("convex", DrawingClass::Convex);
  if (cfg.gentwisted && cfg.n >= 7) cls("gentwisted", DrawingClass::GenTwisted);

  if (cfg.hc) none("no plane hamiltonian cycle", find_plane_hamiltonian_cycle(pi, budget));
  if (cfg.hc_plus) none("no plane hc+", find_plane_hc_plus(pi, budget));
  if (cfg.ht_plus >= 0) {
    std::vector<Edge> m;
    for (int i = 0; i < cfg.ht_plus; ++i) m.push_back({2 * i, 2 * i + 1});
    const auto cm = crossing_map(pi);
    bool plane = true;
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = i + 1; j < m.size(); ++j) plane &= !cm.crosses(m[i], m[j]);
    const auto r = find_plane_hc_avoiding(pi, m, budget);
    out.push_back({num("matching without plane hc", cfg.ht_plus), plane && !r.found, r.exhaustive});
  }
  if (cfg.hp) none("no plane hamiltonian path", find_plane_hamiltonian_path(pi, cfg.hp->first, cfg.hp->second, budget));
  for (int k : cfg.empty_cycles) none(num("no empty cycle", k), find_empty_k_cycle(pi, k, budget));
  if (cfg.etupp >= 0) out.push_back({num("empty triangles at most", cfg.etupp), count_empty_triangles(pi) <= cfg.etupp});
  if (cfg.aec) out.push_back({"all edges crossed", all_edges_crossed(pi)});
  if (cfg.crmax) out.push_back({"crossing maximal", is_crossing_maximal(pi)});
  if (cfg.crf > 0) none(num("no crossing family", cfg.crf), find_crossing_family(pi, cfg.crf));
  if (cfg.perfect_convex > 0)
    none(num("no perfect convex", cfg.perfect_convex),
         find_perfect_subdrawing(pi, PerfectKind::Convex, cfg.perfect_convex));
  if (cfg.perfect_twisted > 0)
    none(num("no perfect twisted", cfg.perfect_twisted),
         find_perfect_subdrawing(pi, PerfectKind::Twisted, cfg.perfect_twisted));
  if (cfg.crossmax_sub > 0)
    none(num("no crossing maximal subdrawing", cfg.crossmax_sub), find_crossing_maximal_subset(pi, cfg.crossmax_sub));
  return out;
}

}  // namespace rotsys
