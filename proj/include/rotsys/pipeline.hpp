#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rotsys/catalog.hpp"
#include "rotsys/cnf.hpp"
#include "rotsys/oracle.hpp"
#include "rotsys/properties.hpp"
#include "rotsys/solver.hpp"

namespace rotsys {

enum class Toggle { Auto, On, Off };

// Everything that shapes one instance. Flag names in comments are the
// command-line spellings.
struct RunConfig {
  int n = 0;

  bool forbid4 = true;  // -v4 clears
  bool forbid5 = true;  // -v5 clears
  Toggle natural = Toggle::Auto;  // -nat clears, --natural sets
  bool lexmin = false;            // -lex

  bool convex = false;      // -c
  bool hconvex = false;     // -hc
  bool cmonotone = false;   // -cm
  bool scmonotone = false;  // -scm
  bool gentwisted = false;  // -gt

  bool hc = false;                           // -HC
  bool hc_plus = false;                      // -HC+
  int ht_plus = -1;                          // -HT+ k
  std::optional<std::pair<int, int>> hp;     // --forbidHP a b (0-based)
  bool all_pairs_hp = false;                 // --forbidAllPairsHP
  std::vector<int> empty_cycles;             // --emptycycles k
  int etupp = -1;                            // -etupp k
  bool aec = false;                          // -aec
  bool crmax = false;                        // -crmax
  int crf = 0;                               // -crf k
  int perfect_convex = 0;                    // -C a
  int perfect_twisted = 0;                   // -T b
  int crossmax_sub = 0;                      // -X k
  PropertyLimits limits;
};

// Throws ConfigError on inconsistent flags.
void validate(const RunConfig& cfg);

// Natural symmetry breaking after resolving Auto.
bool natural_enabled(const RunConfig& cfg);

// Elements of the instance: n, or n + 2 with the extension vertices.
int instance_elements(const RunConfig& cfg);

// True when some emitted family reads the crossing variables.
bool needs_crossing_defs(const RunConfig& cfg);

// The flags as a canonical argument list (recorded in DIMACS headers).
std::vector<std::string> canonical_flags(const RunConfig& cfg);

// Emission order: pre-rotation axioms, drawability, symmetry breaking,
// crossing definitions, subclass restrictions, properties.
CnfInstance build_instance(const RunConfig& cfg, const ObstructionCatalog& catalog = builtin_catalog());

// Enumeration options matching the instance's symmetry breaking.
EnumerationOptions enumeration_options(const RunConfig& cfg, Dedup dedup, std::size_t limit);

struct PairOutcome {
  int a = 0, b = 0;
  SolveOutcome outcome;
};

// One instance per unordered pair {a, b} with plane a-b paths forbidden,
// solved on up to `jobs` threads. Results are in pair order.
std::vector<PairOutcome> solve_all_pairs_hp(const RunConfig& cfg, const SolverOptions& solver, int jobs,
                                            const ObstructionCatalog& catalog = builtin_catalog());

struct WitnessCheck {
  std::string property;
  bool ok = false;
  bool exhaustive = true;
};

// Oracle verdicts for a decoded solution (projected to the core): the
// system lies in the requested classes and has every requested property.
// Classes without a combinatorial oracle (c-monotone, generalized twisted
// below 7 elements) are not checked.
std::vector<WitnessCheck> check_witness(const RunConfig& cfg, const PreRotationSystem& pi, OracleBudget budget = {});

}  // namespace rotsys
