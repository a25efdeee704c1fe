#pragma once

#include <functional>
#include <string>
#include <vector>

#include "rotsys/cnf.hpp"
#include "rotsys/prerotation.hpp"
#include "rotsys/solver.hpp"

namespace rotsys {

// Satisfiability of the base instance with crossing definitions, the given
// extra clauses, and every Y variable fixed to the value in pi.
bool pinned_sat(const PreRotationSystem& pi, const std::function<void(CnfInstance&)>& emit,
                const SolverOptions& solver = {});

struct Disagreement {
  std::string property;
  std::string system;
};

// Compares every encoded property with its oracle on one drawable system.
// A forbidding encoding is satisfiable exactly when the oracle finds no
// witness; a requiring encoding exactly when the oracle confirms.
std::vector<Disagreement> cross_validate(const PreRotationSystem& pi, const SolverOptions& solver = {});

}  // namespace rotsys
