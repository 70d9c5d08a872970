#include "mrta/feasibility.hpp"

#include <algorithm>
#include <string>

namespace mrta {

AcyclicityResult is_acyclic(const Digraph& g) {
  const std::size_t n = g.vertices.size();
  std::vector<std::size_t> in_degree(n, 0);
  for (const auto& targets : g.out) {
    for (int target : targets) ++in_degree[static_cast<std::size_t>(target)];
  }

  std::vector<int> stack;
  for (std::size_t v = 0; v < n; ++v) {
    if (in_degree[v] == 0) stack.push_back(static_cast<int>(v));
  }

  std::size_t removed = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++removed;
    for (int next : g.out[static_cast<std::size_t>(v)]) {
      if (--in_degree[static_cast<std::size_t>(next)] == 0) stack.push_back(next);
    }
  }

  AcyclicityResult result;
  result.acyclic = removed == n;
  if (!result.acyclic) {
    for (std::size_t v = 0; v < n; ++v) {
      if (in_degree[v] > 0) result.residue.push_back(g.vertices[v]);
    }
  }
  return result;
}

namespace {

void check_structure(const MissionPlan& plan, const Instance& instance, Coverage coverage) {
  const int m = instance.robot_count();
  if (static_cast<int>(plan.routes.size()) != m) {
    throw std::invalid_argument("plan has " + std::to_string(plan.routes.size()) +
                                " routes for " + std::to_string(m) + " robots");
  }

  for (const auto& [task_id, alliance_id] : plan.assignment) {
    if (task_id < 1 || task_id > instance.task_count()) {
      throw std::invalid_argument("plan assigns unknown task " + std::to_string(task_id));
    }
    const Alliance* alliance = instance.find_alliance(alliance_id);
    if (!alliance) {
      throw std::invalid_argument("task " + std::to_string(task_id) +
                                  " assigned to unknown alliance " + std::to_string(alliance_id));
    }
    // The task must appear exactly once in every member's route and nowhere else.
    for (int robot = 1; robot <= m; ++robot) {
      const auto& route = plan.routes[static_cast<std::size_t>(robot) - 1];
      const auto count = std::count(route.begin(), route.end(), task_id);
      const auto expected = alliance->contains(robot) ? 1 : 0;
      if (count != expected) {
        throw std::invalid_argument("task " + std::to_string(task_id) + " appears " +
                                    std::to_string(count) + " times in route of robot " +
                                    std::to_string(robot) + ", expected " +
                                    std::to_string(expected));
      }
    }
  }

  for (int robot = 1; robot <= m; ++robot) {
    for (int task_id : plan.routes[static_cast<std::size_t>(robot) - 1]) {
      if (!plan.has_task(task_id)) {
        throw std::invalid_argument("route of robot " + std::to_string(robot) +
                                    " contains unassigned task " + std::to_string(task_id));
      }
    }
  }

  if (coverage == Coverage::AllTasks &&
      static_cast<int>(plan.assignment.size()) != instance.task_count()) {
    throw std::invalid_argument("plan covers " + std::to_string(plan.assignment.size()) +
                                " of " + std::to_string(instance.task_count()) + " tasks");
  }
}

}  // namespace

FeasibilityVerdict check_feasibility(const MissionPlan& plan, const Instance& instance,
                                     Coverage coverage) {
  check_structure(plan, instance, coverage);

  FeasibilityVerdict verdict;
  for (const auto& [task_id, alliance_id] : plan.assignment) {
    if (!instance.static_costs.is_capable(task_id, alliance_id)) {
      Violation v;
      v.kind = Violation::Kind::IncapableAssignment;
      v.task = task_id;
      verdict.violations.push_back(std::move(v));
    }
  }

  const AugmentedPlan augmented = augment(plan, instance.precedence);
  AcyclicityResult cycle_check = is_acyclic(as_digraph(augmented));
  if (!cycle_check.acyclic) {
    Violation v;
    v.kind = Violation::Kind::Cycle;
    v.witness = std::move(cycle_check.residue);
    verdict.violations.push_back(std::move(v));
  }

  verdict.feasible = verdict.violations.empty();
  return verdict;
}

}  // namespace mrta
