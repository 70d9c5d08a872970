#include "mrta/construct.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace mrta {

TaskPools init_pools(const std::vector<Task>& tasks, const PrecedenceSet& precedence) {
  TaskPools pools;
  for (const Task& task : tasks) {
    if (precedence.predecessors_of(task.id).empty()) {
      pools.executable.push_back(task.id);
    } else {
      pools.blocked.push_back(task.id);
    }
  }
  return pools;
}

ConstructResult construct(const Instance& instance) {
  TaskPools pools = init_pools(instance.tasks, instance.precedence);
  MissionPlan plan = MissionPlan::empty_for(instance.robot_count());
  double j = evaluate(augment(plan, instance.precedence), instance).total;

  while (!pools.executable.empty()) {
    double delta_min = std::numeric_limits<double>::infinity();
    MissionPlan best;
    double best_j = 0.0;
    int committed_task = 0;
    bool found = false;

    for (int task_id : pools.executable) {
      for (const Alliance& alliance : instance.alliances) {
        if (!instance.static_costs.is_capable(task_id, alliance.id)) continue;

        MissionPlan candidate = plan;
        for (int member : alliance.members) {
          candidate.routes[static_cast<std::size_t>(member) - 1].push_back(task_id);
        }
        candidate.assignment[task_id] = alliance.id;

        const double j_candidate =
            evaluate(augment(candidate, instance.precedence), instance).total;
        const double delta = j_candidate - j;
        if (delta <= delta_min) {  // later candidates win ties
          delta_min = delta;
          best = std::move(candidate);
          best_j = j_candidate;
          committed_task = task_id;
          found = true;
        }
      }
    }

    if (!found) {
      // Only possible when some executable task has no capable alliance.
      throw std::invalid_argument("task " + std::to_string(pools.executable.front()) +
                                  " has no capable alliance");
    }

    plan = std::move(best);
    j = best_j;

    // Unblock tasks whose last unassigned predecessor was just committed.
    for (auto it = pools.blocked.begin(); it != pools.blocked.end();) {
      bool unblocked = true;
      for (int pred : instance.precedence.predecessors_of(*it)) {
        if (!plan.has_task(pred)) {
          unblocked = false;
          break;
        }
      }
      if (unblocked) {
        pools.executable.push_back(*it);
        it = pools.blocked.erase(it);
      } else {
        ++it;
      }
    }
    std::erase(pools.executable, committed_task);
    std::sort(pools.executable.begin(), pools.executable.end());
  }

  if (!pools.blocked.empty()) {
    // Unreachable on validated instances: every blocked task waiting on
    // another blocked task means the precedence relation is cyclic.
    throw std::invalid_argument("precedence cycle blocks task " +
                                std::to_string(pools.blocked.front()));
  }

  plan.complete = true;
  ConstructResult result;
  result.objective = evaluate(augment(plan, instance.precedence), instance);
  result.plan = std::move(plan);
  return result;
}

}  // namespace mrta
