#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rotsys/cnf.hpp"
#include "rotsys/prerotation.hpp"

namespace rotsys {

enum class Status { Sat, Unsat, Unknown };
const char* to_string(Status s);

struct SolveOutcome {
  Status status = Status::Unknown;
  // values[v] is +1 or -1 for v in 1..num_vars; empty unless Sat.
  std::vector<signed char> values;
  double seconds = 0;
  int exit_code = 0;

  bool value(int var) const { return values.at(var) > 0; }
  bool holds(Lit l) const { return l > 0 ? value(l) : !value(-l); }
};

enum class Backend { Subprocess, Incremental };

struct SolverOptions {
  Backend backend = Backend::Incremental;
  // Executable for the subprocess backend; empty selects the default.
  std::string solver_path;
  // Wall-clock limit per solve call in seconds; 0 means none.
  double timeout = 0;
  // Passed to the solver as a proof output path (not checked here).
  std::string proof_path;
};

// $ROTSYS_SOLVER, else the bundled cadical binary, else "cadical" on PATH.
std::string default_solver_path();

// A solver loaded with an instance; clauses may be added between calls.
class SolverSession {
 public:
  virtual ~SolverSession() = default;
  virtual void add_clause(std::span<const Lit> clause) = 0;
  virtual SolveOutcome solve() = 0;
};

std::unique_ptr<SolverSession> open_session(const CnfInstance& inst, const SolverOptions& opts);

SolveOutcome solve(const CnfInstance& inst, const SolverOptions& opts);

// Parses solver output ("s" and "v" lines, comments tolerated).
SolveOutcome parse_solver_output(const std::string& text, int num_vars);

// Reads the X block into a pre-rotation system over all elements of the
// variable map and checks the Y block against it.
PreRotationSystem decode_model(const SolveOutcome& model, const VarMap& vars);

// Restriction of a decoded system to its first `core` elements.
PreRotationSystem project(const PreRotationSystem& pi, int core);

enum class Dedup { Canonical, None };

struct EnumerationOptions {
  Dedup dedup = Dedup::Canonical;
  std::size_t limit = 0;  // 0: unlimited
  // Core elements; the model is projected to them before dedup and blocking.
  int core = 0;
  // Block only natural relabelings of a found class (valid when the instance
  // carries natural symmetry breaking); otherwise every relabeling.
  bool natural = true;
  // Lexicographic minima are unique per class: block the model only.
  bool lexmin = false;
};

struct EnumerationStats {
  std::size_t models = 0;
  std::size_t emitted = 0;
  std::size_t blocking_clauses = 0;
  double seconds = 0;
};

// Called for each reported system (projected to the core) with its model;
// returning false stops the enumeration.
using EnumerationVisitor = std::function<bool(const PreRotationSystem&, const SolveOutcome&)>;

// Solve, decode, report, block; repeats until Unsat or the limit. Throws
// EnumerationAborted on an Unknown outcome.
EnumerationStats enumerate_all(const CnfInstance& inst, const SolverOptions& solver, const EnumerationOptions& opts,
                               const EnumerationVisitor& visit);

// Convenience: collects the reported systems.
std::vector<PreRotationSystem> enumerate_systems(const CnfInstance& inst, const SolverOptions& solver,
                                                 const EnumerationOptions& opts);

}  // namespace rotsys
