#include "mrta/local_search.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "mrta/feasibility.hpp"

namespace mrta {

std::vector<MissionPlan> enumerate_relocations(const MissionPlan& plan, int task_id,
                                               const Instance& instance) {
  if (!plan.has_task(task_id)) {
    throw std::invalid_argument("task " + std::to_string(task_id) + " is not in the plan");
  }

  std::vector<MissionPlan> candidates;
  for (const Alliance& alliance : instance.alliances) {
    if (!instance.static_costs.is_capable(task_id, alliance.id)) continue;

    // Insertion slots per member after the task is removed from its holders.
    std::vector<int> slot_count;
    slot_count.reserve(alliance.members.size());
    for (int member : alliance.members) {
      const auto& route = plan.routes[static_cast<std::size_t>(member) - 1];
      auto removed = static_cast<int>(route.size()) -
                     static_cast<int>(std::count(route.begin(), route.end(), task_id));
      slot_count.push_back(removed + 1);
    }

    std::vector<int> slots(alliance.members.size(), 1);
    while (true) {
      std::map<int, int> positions;
      for (std::size_t i = 0; i < alliance.members.size(); ++i) {
        positions[alliance.members[i]] = slots[i];
      }
      MissionPlan candidate = relocate(plan, task_id, alliance, positions);
      if (candidate != plan) {
        candidates.push_back(std::move(candidate));
      }

      // Advance the lexicographic odometer, last member fastest.
      auto i = static_cast<int>(slots.size()) - 1;
      while (i >= 0 && slots[static_cast<std::size_t>(i)] == slot_count[static_cast<std::size_t>(i)]) {
        slots[static_cast<std::size_t>(i)] = 1;
        --i;
      }
      if (i < 0) break;
      ++slots[static_cast<std::size_t>(i)];
    }
  }
  return candidates;
}

ImproveResult improve(const MissionPlan& plan, const Instance& instance,
                      const SearchConfig& config) {
  const Coverage coverage = plan.complete ? Coverage::AllTasks : Coverage::AssignedOnly;
  if (!check_feasibility(plan, instance, coverage).feasible) {
    throw InfeasiblePlanError("improve requires a feasible input plan");
  }

  ImproveResult result;
  result.plan = plan;
  result.objective = evaluate(augment(plan, instance.precedence), instance);
  result.stats.j_initial = result.objective.total;

  while (true) {
    ++result.stats.sweeps;

    // Steepest descent against the sweep-start snapshot.
    bool have_best = false;
    MissionPlan best;
    ObjectiveBreakdown best_objective;
    for (const auto& [task_id, alliance_id] : result.plan.assignment) {
      for (MissionPlan& candidate : enumerate_relocations(result.plan, task_id, instance)) {
        AugmentedPlan augmented = augment(candidate, instance.precedence);
        if (!is_acyclic(as_digraph(augmented)).acyclic) {
          ++result.stats.candidates_infeasible;
          continue;
        }
        ObjectiveBreakdown objective = evaluate(augmented, instance);
        ++result.stats.candidates_evaluated;
        if (!have_best || objective.total < best_objective.total) {  // first wins ties
          have_best = true;
          best = std::move(candidate);
          best_objective = objective;
        }
      }
    }

    if (!have_best || !(result.objective.total - best_objective.total > config.min_improvement)) {
      break;  // relocate-local optimum (within the improvement threshold)
    }
    result.plan = std::move(best);
    result.objective = best_objective;
    if (config.max_sweeps != 0 && result.stats.sweeps >= config.max_sweeps) break;
  }

  result.stats.j_final = result.objective.total;
  result.stats.improvement_percent =
      result.stats.j_initial > 0.0
          ? 100.0 * (result.stats.j_initial - result.stats.j_final) / result.stats.j_initial
          : 0.0;
  return result;
}

}  // namespace mrta
