#pragma once

#include <cstdint>
#include <vector>

#include "mrta/objective.hpp"
#include "mrta/plan.hpp"
#include "mrta/types.hpp"

namespace mrta {

struct SearchConfig {
  /// 0 = unlimited sweeps.
  std::uint32_t max_sweeps = 0;
  /// A sweep's best candidate is accepted only if it lowers the objective by
  /// more than this.
  double min_improvement = 0.0;
};

struct SearchStats {
  std::uint32_t sweeps = 0;
  std::uint64_t candidates_evaluated = 0;   // acyclic candidates scored
  std::uint64_t candidates_infeasible = 0;  // discarded by the cycle check
  double j_initial = 0.0;
  double j_final = 0.0;
  double improvement_percent = 0.0;
};

/// All plans reachable by moving `task_id` to any capable alliance, at every
/// combination of insertion positions across that alliance's routes. The
/// input plan itself is excluded; candidates are not yet feasibility-checked.
std::vector<MissionPlan> enumerate_relocations(const MissionPlan& plan, int task_id,
                                               const Instance& instance);

struct ImproveResult {
  MissionPlan plan;
  ObjectiveBreakdown objective;
  SearchStats stats;
};

/// Steepest-descent local search over the relocate neighborhood. Each sweep
/// enumerates every relocation of the sweep-start plan, drops candidates
/// whose augmented plan is cyclic, evaluates the rest, and commits the best
/// strictly improving one. Stops at a relocate-local optimum or after
/// `max_sweeps`. Ties go to the first candidate in enumeration order (task
/// ascending, alliances as declared, insertion positions lexicographic).
ImproveResult improve(const MissionPlan& plan, const Instance& instance,
                      const SearchConfig& config = {});

}  // namespace mrta
