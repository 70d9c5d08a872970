#pragma once

// Shared fixtures and independent oracles for the test suites. Everything
// here is intentionally separate from the library's own code paths: the
// duration table is restated by hand, and the graph oracles use different
// algorithms than the library (exhaustive order search and DFS coloring
// instead of in-degree peeling).

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mrta/plan.hpp"
#include "mrta/types.hpp"

namespace mrta::test {

inline std::vector<Robot> paper_robots() {
  return {
      {1, {0.0, 0.0}, std::nullopt, 2.0},
      {2, {0.0, 0.0}, std::nullopt, 2.0},
      {3, {0.0, 0.0}, std::nullopt, 1.0},
  };
}

inline std::vector<Alliance> paper_alliances() {
  return {{1, {1}}, {2, {2}}, {3, {3}}, {4, {1, 2}}, {5, {1, 3}}, {6, {2, 3}}};
}

/// Hand-restated duration table (seconds); nullopt = incapable.
inline std::optional<double> paper_duration(const std::string& type, int alliance_id) {
  struct Row {
    const char* type;
    std::optional<double> cost[6];
  };
  static const Row rows[] = {
      {"A", {100, 100, 100, std::nullopt, std::nullopt, std::nullopt}},
      {"B", {std::nullopt, std::nullopt, std::nullopt, 110, 100, std::nullopt}},
      {"C", {std::nullopt, std::nullopt, std::nullopt, std::nullopt, 100, std::nullopt}},
      {"D", {std::nullopt, std::nullopt, 200, std::nullopt, std::nullopt, 100}},
  };
  for (const Row& row : rows) {
    if (type == row.type) return row.cost[static_cast<std::size_t>(alliance_id) - 1];
  }
  return std::nullopt;
}

/// Instance with the paper's robots, alliances and duration table, and the
/// given typed tasks.
inline Instance make_paper_instance(const std::vector<std::pair<std::string, Position>>& tasks,
                                    std::vector<std::pair<int, int>> precedence = {}) {
  Instance instance;
  instance.robots = paper_robots();
  instance.alliances = paper_alliances();
  int id = 1;
  for (const auto& [type, position] : tasks) {
    instance.tasks.push_back({id, type, position});
    for (const Alliance& alliance : instance.alliances) {
      if (auto cost = paper_duration(type, alliance.id)) {
        instance.static_costs.set(id, alliance.id, *cost);
      } else {
        instance.static_costs.set_incapable(id, alliance.id);
      }
    }
    ++id;
  }
  instance.precedence = PrecedenceSet(std::move(precedence));
  return instance;
}

/// Two robots, four tasks, t2 done by the coalition {r1,r2}, one precedence
/// arc t1 -> t3. Every task-alliance pair is capable (duration 10) so
/// relocations are unrestricted unless a test tightens the table.
inline Instance fig2_instance() {
  Instance instance;
  instance.robots = {
      {1, {0.0, 0.0}, std::nullopt, 1.0},
      {2, {0.0, 5.0}, std::nullopt, 1.0},
  };
  instance.alliances = {{1, {1}}, {2, {2}}, {3, {1, 2}}};
  for (int t = 1; t <= 4; ++t) {
    instance.tasks.push_back({t, "A", {static_cast<double>(t), 0.0}});
    for (int a = 1; a <= 3; ++a) instance.static_costs.set(t, a, 10.0);
  }
  instance.precedence = PrecedenceSet({{1, 3}});
  return instance;
}

inline MissionPlan fig2_plan() {
  MissionPlan plan;
  plan.routes = {{1, 2, 3}, {4, 2}};
  plan.assignment = {{1, 1}, {2, 3}, {3, 1}, {4, 2}};
  plan.complete = true;
  return plan;
}

/// One robot, chain of three tasks.
inline Instance fig1_instance() {
  Instance instance;
  instance.robots = {{1, {0.0, 0.0}, std::nullopt, 1.0}};
  instance.alliances = {{1, {1}}};
  for (int t = 1; t <= 3; ++t) {
    instance.tasks.push_back({t, "A", {static_cast<double>(t), 0.0}});
    instance.static_costs.set(t, 1, 10.0);
  }
  return instance;
}

inline MissionPlan fig1_plan() {
  MissionPlan plan;
  plan.routes = {{1, 2, 3}};
  plan.assignment = {{1, 1}, {2, 1}, {3, 1}};
  plan.complete = true;
  return plan;
}

// ---------------------------------------------------------------------------
// Independent graph oracles.

/// Exhaustive topological-order existence: branch over every removable
/// source, memoized on the removed set. Usable up to ~20 vertices.
inline bool exhaustive_topo_order_exists(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::uint32_t> preds(static_cast<std::size_t>(n), 0);
  for (const auto& [from, to] : edges) {
    preds[static_cast<std::size_t>(to)] |= (1u << from);
  }
  std::map<std::uint32_t, bool> memo;
  const std::uint32_t all = n == 32 ? ~0u : ((1u << n) - 1u);

  auto search = [&](auto&& self, std::uint32_t removed) -> bool {
    if (removed == all) return true;
    auto it = memo.find(removed);
    if (it != memo.end()) return it->second;
    bool ok = false;
    for (int v = 0; v < n && !ok; ++v) {
      const std::uint32_t bit = 1u << v;
      if (removed & bit) continue;
      if ((preds[static_cast<std::size_t>(v)] & ~removed) == 0) {
        ok = self(self, removed | bit);
      }
    }
    memo[removed] = ok;
    return ok;
  };
  return search(search, 0);
}

/// The same check as a recursive three-color DFS (second independent route).
inline bool dfs_is_acyclic(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(n));
  for (const auto& [from, to] : edges) out[static_cast<std::size_t>(from)].push_back(to);
  std::vector<int> color(static_cast<std::size_t>(n), 0);
  auto visit = [&](auto&& self, int v) -> bool {
    color[static_cast<std::size_t>(v)] = 1;
    for (int next : out[static_cast<std::size_t>(v)]) {
      if (color[static_cast<std::size_t>(next)] == 1) return false;
      if (color[static_cast<std::size_t>(next)] == 0 && !self(self, next)) return false;
    }
    color[static_cast<std::size_t>(v)] = 2;
    return true;
  };
  for (int v = 0; v < n; ++v) {
    if (color[static_cast<std::size_t>(v)] == 0 && !visit(visit, v)) return false;
  }
  return true;
}

/// Digraph over anonymous task vertices 0..n-1, for feeding is_acyclic.
inline Digraph make_digraph(int n, const std::vector<std::pair<int, int>>& edges) {
  Digraph g;
  for (int v = 0; v < n; ++v) g.vertices.push_back(Vertex::task(v + 1));
  g.out.resize(static_cast<std::size_t>(n));
  for (const auto& [from, to] : edges) g.out[static_cast<std::size_t>(from)].push_back(to);
  return g;
}

// ---------------------------------------------------------------------------
// Random generators; each test passes its own fixed seed.

inline std::vector<std::pair<int, int>> random_edges(std::mt19937_64& rng, int n,
                                                     double density) {
  std::vector<std::pair<int, int>> edges;
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a != b && coin(rng) < density) edges.emplace_back(a, b);
    }
  }
  return edges;
}

/// Random instance over the paper's robots and duration table with
/// 1..max_tasks tasks of random type, random positions, and random forward
/// precedence arcs (always acyclic).
inline Instance random_tiny_instance(std::mt19937_64& rng, int max_tasks) {
  static const char* kTypes[] = {"A", "B", "C", "D"};
  std::uniform_int_distribution<int> count(1, max_tasks);
  std::uniform_int_distribution<int> type(0, 3);
  std::uniform_real_distribution<double> coord(-60.0, 60.0);
  std::uniform_real_distribution<double> coin(0.0, 1.0);

  const int n = count(rng);
  std::vector<std::pair<std::string, Position>> tasks;
  tasks.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    tasks.emplace_back(kTypes[type(rng)], Position{coord(rng), coord(rng)});
  }
  std::vector<std::pair<int, int>> precedence;
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      if (coin(rng) < 0.2) precedence.emplace_back(a, b);
    }
  }
  return make_paper_instance(tasks, std::move(precedence));
}

/// Random feasible complete plan: random capable assignment, random
/// precedence-respecting global order, routes by restriction.
inline MissionPlan random_feasible_plan(std::mt19937_64& rng, const Instance& instance) {
  const int n = instance.task_count();
  MissionPlan plan = MissionPlan::empty_for(instance.robot_count());
  plan.complete = true;

  for (int t = 1; t <= n; ++t) {
    std::vector<const Alliance*> capable;
    for (const Alliance& alliance : instance.alliances) {
      if (instance.static_costs.is_capable(t, alliance.id)) capable.push_back(&alliance);
    }
    std::uniform_int_distribution<std::size_t> pick(0, capable.size() - 1);
    plan.assignment[t] = capable[pick(rng)]->id;
  }

  // Random topological order of the precedence relation.
  std::vector<int> in_degree(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& [before, after] : instance.precedence.pairs()) {
    ++in_degree[static_cast<std::size_t>(after)];
  }
  std::vector<int> ready;
  for (int t = 1; t <= n; ++t) {
    if (in_degree[static_cast<std::size_t>(t)] == 0) ready.push_back(t);
  }
  std::vector<int> order;
  while (!ready.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, ready.size() - 1);
    const std::size_t chosen = pick(rng);
    const int t = ready[chosen];
    ready.erase(ready.begin() + static_cast<std::ptrdiff_t>(chosen));
    order.push_back(t);
    for (int next : instance.precedence.successors_of(t)) {
      if (--in_degree[static_cast<std::size_t>(next)] == 0) ready.push_back(next);
    }
  }

  for (int t : order) {
    for (int member : instance.alliance(plan.assignment.at(t)).members) {
      plan.routes[static_cast<std::size_t>(member) - 1].push_back(t);
    }
  }
  return plan;
}

/// True when `after` differs from `before` by relocating exactly one task.
inline bool differs_by_one_relocation(const MissionPlan& before, const MissionPlan& after) {
  if (before == after) return false;
  std::vector<int> moved;
  for (const auto& [task, alliance] : before.assignment) {
    auto it = after.assignment.find(task);
    if (it == after.assignment.end()) return false;
    if (it->second != alliance) moved.push_back(task);
  }
  if (before.assignment.size() != after.assignment.size()) return false;

  auto strip = [](const MissionPlan& plan, int task) {
    MissionPlan copy = plan;
    for (auto& route : copy.routes) {
      route.erase(std::remove(route.begin(), route.end(), task), route.end());
    }
    copy.assignment.erase(task);
    return copy;
  };

  if (moved.size() > 1) return false;
  if (moved.size() == 1) {
    return strip(before, moved.front()) == strip(after, moved.front());
  }
  // Same alliances everywhere: some task moved within its routes.
  for (const auto& [task, alliance] : before.assignment) {
    if (strip(before, task) == strip(after, task)) return true;
  }
  return false;
}

}  // namespace mrta::test
