#pragma once

#include <cstdint>
#include <functional>

#include "mrta/objective.hpp"
#include "mrta/plan.hpp"
#include "mrta/types.hpp"

namespace mrta {

struct OracleResult {
  MissionPlan best_plan;
  ObjectiveBreakdown best_objective;
  std::uint64_t plans_enumerated = 0;
};

/// Called for every enumerated candidate with the oracle's own feasibility
/// verdict; lets tests cross-check the oracle against check_feasibility.
using OracleObserver = std::function<void(const MissionPlan&, bool feasible)>;

/// Exhaustive exact solver for tiny instances: every capable assignment
/// crossed with every global task permutation, restricted per robot to its
/// tasks. Feasibility inside the oracle is decided by a DFS cycle check,
/// independent of the Kahn-style peeling used elsewhere. Refuses instances
/// with more than `max_tasks` tasks.
OracleResult solve_exact(const Instance& instance, int max_tasks = 7,
                         const OracleObserver& observer = nullptr);

}  // namespace mrta
