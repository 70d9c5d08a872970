#pragma once

#include <vector>

#include "mrta/objective.hpp"
#include "mrta/plan.hpp"
#include "mrta/types.hpp"

namespace mrta {

/// Unassigned tasks split by whether all their precedence predecessors are
/// already assigned. Both sets are kept ordered ascending by task id.
struct TaskPools {
  std::vector<int> executable;
  std::vector<int> blocked;
};

TaskPools init_pools(const std::vector<Task>& tasks, const PrecedenceSet& precedence);

struct ConstructResult {
  MissionPlan plan;
  ObjectiveBreakdown objective;
};

/// Greedy constructive heuristic: repeatedly appends the (executable task,
/// alliance) pair with the smallest objective increment as a new leaf of the
/// member routes, unblocking successors as it goes, then attaches the end
/// nodes. Ties go to the later candidate in iteration order (tasks ascending,
/// alliances as declared). The result is always feasible.
ConstructResult construct(const Instance& instance);

}  // namespace mrta
