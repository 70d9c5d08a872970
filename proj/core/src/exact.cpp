#include "mrta/exact.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace mrta {

namespace {

// Three-color DFS cycle check, independent of the in-degree peeling in
// is_acyclic.
bool dfs_acyclic(const Digraph& g) {
  enum class Color { White, Gray, Black };
  std::vector<Color> color(g.vertices.size(), Color::White);

  struct Frame {
    int vertex;
    std::size_t edge = 0;
  };
  std::vector<Frame> stack;
  for (std::size_t root = 0; root < g.vertices.size(); ++root) {
    if (color[root] != Color::White) continue;
    color[root] = Color::Gray;
    stack.push_back({static_cast<int>(root)});
    while (!stack.empty()) {
      Frame& frame = stack.back();
      const auto& targets = g.out[static_cast<std::size_t>(frame.vertex)];
      if (frame.edge < targets.size()) {
        const int next = targets[frame.edge++];
        if (color[static_cast<std::size_t>(next)] == Color::Gray) return false;
        if (color[static_cast<std::size_t>(next)] == Color::White) {
          color[static_cast<std::size_t>(next)] = Color::Gray;
          stack.push_back({next});
        }
      } else {
        color[static_cast<std::size_t>(frame.vertex)] = Color::Black;
        stack.pop_back();
      }
    }
  }
  return true;
}

}  // namespace

OracleResult solve_exact(const Instance& instance, int max_tasks, const OracleObserver& observer) {
  const int n = instance.task_count();
  if (n > max_tasks) {
    throw std::invalid_argument("exact solver refuses " + std::to_string(n) + " tasks (limit " +
                                std::to_string(max_tasks) + ")");
  }

  // Capable alliances per task, declaration order.
  std::vector<std::vector<const Alliance*>> capable(static_cast<std::size_t>(n));
  for (int t = 1; t <= n; ++t) {
    for (const Alliance& alliance : instance.alliances) {
      if (instance.static_costs.is_capable(t, alliance.id)) {
        capable[static_cast<std::size_t>(t) - 1].push_back(&alliance);
      }
    }
    if (capable[static_cast<std::size_t>(t) - 1].empty()) {
      throw std::invalid_argument("task " + std::to_string(t) + " has no capable alliance");
    }
  }

  OracleResult result;
  bool have_best = false;

  std::vector<std::size_t> choice(static_cast<std::size_t>(n), 0);
  while (true) {
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 1);
    do {
      MissionPlan plan = MissionPlan::empty_for(instance.robot_count());
      plan.complete = true;
      for (int task_id : order) {
        const Alliance* alliance = capable[static_cast<std::size_t>(task_id) - 1]
                                          [choice[static_cast<std::size_t>(task_id) - 1]];
        plan.assignment[task_id] = alliance->id;
        for (int member : alliance->members) {
          plan.routes[static_cast<std::size_t>(member) - 1].push_back(task_id);
        }
      }
      ++result.plans_enumerated;

      const AugmentedPlan augmented = augment(plan, instance.precedence);
      const bool feasible = dfs_acyclic(as_digraph(augmented));
      if (observer) observer(plan, feasible);
      if (!feasible) continue;

      const ObjectiveBreakdown objective = evaluate(augmented, instance);
      if (!have_best || objective.total < result.best_objective.total) {
        have_best = true;
        result.best_objective = objective;
        result.best_plan = std::move(plan);
      }
    } while (std::next_permutation(order.begin(), order.end()));

    // Next assignment combination.
    int t = n - 1;
    while (t >= 0 && choice[static_cast<std::size_t>(t)] + 1 ==
                         capable[static_cast<std::size_t>(t)].size()) {
      choice[static_cast<std::size_t>(t)] = 0;
      --t;
    }
    if (t < 0) break;
    ++choice[static_cast<std::size_t>(t)];
  }

  if (!have_best) {
    throw std::runtime_error("no feasible plan found; instance violates its assumptions");
  }
  return result;
}

}  // namespace mrta
