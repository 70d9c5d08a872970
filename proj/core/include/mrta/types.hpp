#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mrta {

/// 2-D Cartesian point, meters.
struct Position {
  double x = 0.0;
  double y = 0.0;

  bool operator==(const Position&) const = default;
};

double distance(const Position& a, const Position& b);

struct Task {
  int id = 0;                // 1-based, contiguous within an Instance
  std::string type_label;    // free-form category tag, e.g. "A"
  Position position;

  bool operator==(const Task&) const = default;
};

struct Robot {
  int id = 0;                // 1-based, contiguous within an Instance
  Position start_position;
  std::optional<Position> end_position;  // absent = arbitrary end, zero terminal travel
  double speed = 1.0;        // m/s, > 0

  bool operator==(const Robot&) const = default;
};

struct Alliance {
  int id = 0;
  std::vector<int> members;  // robot ids, kept sorted ascending

  bool contains(int robot_id) const;
  bool operator==(const Alliance&) const = default;
};

/// Ordered task-id pairs (before, after); sorted, unique.
class PrecedenceSet {
 public:
  PrecedenceSet() = default;
  explicit PrecedenceSet(std::vector<std::pair<int, int>> pairs);

  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
  bool empty() const { return pairs_.empty(); }
  std::size_t size() const { return pairs_.size(); }

  /// Task ids that must finish before `task` may start.
  std::vector<int> predecessors_of(int task) const;
  std::vector<int> successors_of(int task) const;

  bool operator==(const PrecedenceSet&) const = default;

 private:
  std::vector<std::pair<int, int>> pairs_;
};

/// Execution cost per (task, alliance); an absent entry means the alliance
/// is incapable of the task (conceptually infinite cost).
class StaticCostTable {
 public:
  void set(int task_id, int alliance_id, double cost);
  void set_incapable(int task_id, int alliance_id);

  /// nullopt = infinite (incapable).
  std::optional<double> finite_cost(int task_id, int alliance_id) const;
  bool is_capable(int task_id, int alliance_id) const;

  const std::map<std::pair<int, int>, double>& finite_entries() const { return entries_; }
  const std::set<std::pair<int, int>>& incapable_entries() const { return incapable_; }

  bool operator==(const StaticCostTable&) const = default;

 private:
  std::map<std::pair<int, int>, double> entries_;
  std::set<std::pair<int, int>> incapable_;  // explicitly declared infinite
};

struct ObjectiveWeights {
  double makespan = 1.0;      // weight on the latest finishing time
  double avg_finish = 0.2;    // weight on the mean robot finishing time
  double avg_distance = 0.1;  // weight on the mean driven distance

  bool operator==(const ObjectiveWeights&) const = default;
};

/// A complete problem input. Alliance iteration order is declaration order;
/// task iteration is ascending by id.
struct Instance {
  std::vector<Robot> robots;        // index = id - 1
  std::vector<Task> tasks;          // index = id - 1
  std::vector<Alliance> alliances;  // declaration order
  StaticCostTable static_costs;
  PrecedenceSet precedence;
  ObjectiveWeights weights;

  int robot_count() const { return static_cast<int>(robots.size()); }
  int task_count() const { return static_cast<int>(tasks.size()); }

  const Robot& robot(int id) const;
  const Task& task(int id) const;
  const Alliance* find_alliance(int id) const;  // nullptr if unknown
  const Alliance& alliance(int id) const;       // throws if unknown

  bool operator==(const Instance&) const = default;
};

/// One problem with an Instance, reported with section context.
struct ValidationIssue {
  std::string section;  // e.g. "precedence", "static_costs"
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;

  bool ok() const { return issues.empty(); }
  std::string to_string() const;
};

/// Checks every structural invariant plus the two solvability assumptions:
/// each task has at least one capable alliance and the precedence digraph
/// is acyclic. Returns all violations found, not just the first.
ValidationReport validate(const Instance& instance);

/// Throws std::invalid_argument with the full report if validation fails.
void require_valid(const Instance& instance);

}  // namespace mrta
