#include "mrta/types.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace mrta {

double distance(const Position& a, const Position& b) {
  return std::hypot(b.x - a.x, b.y - a.y);
}

bool Alliance::contains(int robot_id) const {
  return std::binary_search(members.begin(), members.end(), robot_id);
}

PrecedenceSet::PrecedenceSet(std::vector<std::pair<int, int>> pairs) : pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

std::vector<int> PrecedenceSet::predecessors_of(int task) const {
  std::vector<int> result;
  for (const auto& [before, after] : pairs_) {
    if (after == task) result.push_back(before);
  }
  return result;
}

std::vector<int> PrecedenceSet::successors_of(int task) const {
  std::vector<int> result;
  for (const auto& [before, after] : pairs_) {
    if (before == task) result.push_back(after);
  }
  return result;
}

void StaticCostTable::set(int task_id, int alliance_id, double cost) {
  if (!(cost >= 0.0) || !std::isfinite(cost)) {
    throw std::invalid_argument("static cost must be finite and nonnegative");
  }
  incapable_.erase({task_id, alliance_id});
  entries_[{task_id, alliance_id}] = cost;
}

void StaticCostTable::set_incapable(int task_id, int alliance_id) {
  entries_.erase({task_id, alliance_id});
  incapable_.insert({task_id, alliance_id});
}

std::optional<double> StaticCostTable::finite_cost(int task_id, int alliance_id) const {
  auto it = entries_.find({task_id, alliance_id});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

bool StaticCostTable::is_capable(int task_id, int alliance_id) const {
  return entries_.count({task_id, alliance_id}) != 0;
}

const Robot& Instance::robot(int id) const {
  if (id < 1 || id > robot_count()) throw std::invalid_argument("unknown robot id");
  return robots[static_cast<std::size_t>(id) - 1];
}

const Task& Instance::task(int id) const {
  if (id < 1 || id > task_count()) throw std::invalid_argument("unknown task id");
  return tasks[static_cast<std::size_t>(id) - 1];
}

const Alliance* Instance::find_alliance(int id) const {
  for (const auto& a : alliances) {
    if (a.id == id) return &a;
  }
  return nullptr;
}

const Alliance& Instance::alliance(int id) const {
  const Alliance* a = find_alliance(id);
  if (!a) throw std::invalid_argument("unknown alliance id");
  return *a;
}

std::string ValidationReport::to_string() const {
  std::ostringstream out;
  for (const auto& issue : issues) {
    out << issue.section << ": " << issue.message << "\n";
  }
  return out.str();
}

namespace {

bool precedence_acyclic(int task_count, const PrecedenceSet& precedence) {
  std::vector<int> in_degree(static_cast<std::size_t>(task_count) + 1, 0);
  std::vector<std::vector<int>> out(static_cast<std::size_t>(task_count) + 1);
  for (const auto& [before, after] : precedence.pairs()) {
    out[static_cast<std::size_t>(before)].push_back(after);
    ++in_degree[static_cast<std::size_t>(after)];
  }
  std::vector<int> stack;
  for (int t = 1; t <= task_count; ++t) {
    if (in_degree[static_cast<std::size_t>(t)] == 0) stack.push_back(t);
  }
  int removed = 0;
  while (!stack.empty()) {
    int t = stack.back();
    stack.pop_back();
    ++removed;
    for (int next : out[static_cast<std::size_t>(t)]) {
      if (--in_degree[static_cast<std::size_t>(next)] == 0) stack.push_back(next);
    }
  }
  return removed == task_count;
}

}  // namespace

ValidationReport validate(const Instance& instance) {
  ValidationReport report;
  auto fail = [&report](std::string section, std::string message) {
    report.issues.push_back({std::move(section), std::move(message)});
  };

  const int m = instance.robot_count();
  const int n = instance.task_count();

  if (m == 0) fail("robots", "at least one robot is required");
  for (int i = 0; i < m; ++i) {
    const Robot& r = instance.robots[static_cast<std::size_t>(i)];
    std::string where = "robots[" + std::to_string(i) + "]";
    if (r.id != i + 1) fail(where, "robot ids must be 1.." + std::to_string(m) + " in order");
    if (!(r.speed > 0.0) || !std::isfinite(r.speed)) fail(where, "speed must be > 0");
    if (!std::isfinite(r.start_position.x) || !std::isfinite(r.start_position.y)) {
      fail(where, "start position must be finite");
    }
    if (r.end_position &&
        (!std::isfinite(r.end_position->x) || !std::isfinite(r.end_position->y))) {
      fail(where, "end position must be finite");
    }
  }

  for (int i = 0; i < n; ++i) {
    const Task& t = instance.tasks[static_cast<std::size_t>(i)];
    std::string where = "tasks[" + std::to_string(i) + "]";
    if (t.id != i + 1) fail(where, "task ids must be 1.." + std::to_string(n) + " in order");
    if (!std::isfinite(t.position.x) || !std::isfinite(t.position.y)) {
      fail(where, "position must be finite");
    }
  }

  std::set<int> alliance_ids;
  std::set<std::vector<int>> member_sets;
  for (std::size_t i = 0; i < instance.alliances.size(); ++i) {
    const Alliance& a = instance.alliances[i];
    std::string where = "alliances[" + std::to_string(i) + "]";
    if (!alliance_ids.insert(a.id).second) {
      fail(where, "duplicate alliance id " + std::to_string(a.id));
    }
    if (a.members.empty()) fail(where, "alliance must have at least one member");
    if (!std::is_sorted(a.members.begin(), a.members.end()) ||
        std::adjacent_find(a.members.begin(), a.members.end()) != a.members.end()) {
      fail(where, "members must be sorted and unique");
    }
    for (int member : a.members) {
      if (member < 1 || member > m) {
        fail(where, "unknown robot id " + std::to_string(member));
      }
    }
    if (!member_sets.insert(a.members).second) {
      fail(where, "duplicate alliance member set");
    }
  }
  if (instance.alliances.empty()) fail("alliances", "at least one alliance is required");

  for (const auto& [key, cost] : instance.static_costs.finite_entries()) {
    const auto& [task_id, alliance_id] = key;
    std::string where = "static_costs(" + std::to_string(task_id) + "," +
                        std::to_string(alliance_id) + ")";
    if (task_id < 1 || task_id > n) fail(where, "unknown task id");
    if (!alliance_ids.count(alliance_id)) fail(where, "unknown alliance id");
    if (!(cost >= 0.0) || !std::isfinite(cost)) fail(where, "cost must be finite and >= 0");
  }
  for (const auto& [task_id, alliance_id] : instance.static_costs.incapable_entries()) {
    std::string where = "static_costs(" + std::to_string(task_id) + "," +
                        std::to_string(alliance_id) + ")";
    if (task_id < 1 || task_id > n) fail(where, "unknown task id");
    if (!alliance_ids.count(alliance_id)) fail(where, "unknown alliance id");
  }

  // Solvability: every task needs at least one capable alliance.
  for (int t = 1; t <= n; ++t) {
    bool capable = false;
    for (const auto& a : instance.alliances) {
      if (instance.static_costs.is_capable(t, a.id)) {
        capable = true;
        break;
      }
    }
    if (!capable) {
      fail("static_costs", "task " + std::to_string(t) + " has no capable alliance");
    }
  }

  for (const auto& [before, after] : instance.precedence.pairs()) {
    std::string where = "precedence(" + std::to_string(before) + "," + std::to_string(after) + ")";
    if (before == after) fail(where, "a task cannot precede itself");
    if (before < 1 || before > n || after < 1 || after > n) fail(where, "unknown task id");
  }
  if (report.ok() && !precedence_acyclic(n, instance.precedence)) {
    fail("precedence", "the precedence relation contains a cycle");
  }

  const ObjectiveWeights& w = instance.weights;
  if (!(w.makespan >= 0.0 && w.avg_finish >= 0.0 && w.avg_distance >= 0.0)) {
    fail("weights", "weights must be nonnegative");
  } else if (w.makespan == 0.0 && w.avg_finish == 0.0 && w.avg_distance == 0.0) {
    fail("weights", "at least one weight must be positive");
  }

  return report;
}

void require_valid(const Instance& instance) {
  ValidationReport report = validate(instance);
  if (!report.ok()) {
    throw std::invalid_argument("invalid instance:\n" + report.to_string());
  }
}

}  // namespace mrta
