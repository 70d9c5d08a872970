#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <vector>

#include "mrta/types.hpp"

namespace mrta {

/// Node of a mission plan: a robot's start node, a task node, or a robot's
/// end node.
struct Vertex {
  enum class Kind { Start, Task, End };

  Kind kind = Kind::Start;
  int id = 0;  // robot id for Start/End, task id for Task

  static Vertex start(int robot_id) { return {Kind::Start, robot_id}; }
  static Vertex task(int task_id) { return {Kind::Task, task_id}; }
  static Vertex end(int robot_id) { return {Kind::End, robot_id}; }

  auto operator<=>(const Vertex&) const = default;
};

std::string to_string(const Vertex& v);

/// Union of per-robot directed path graphs. Each robot's path is stored as
/// the ordered list of task ids it visits; the start node is implicit at the
/// front and, once `complete` is set, the end node is implicit at the back.
struct MissionPlan {
  std::vector<std::vector<int>> routes;  // routes[l-1]: task ids of robot l, in visit order
  std::map<int, int> assignment;         // task id -> alliance id
  bool complete = false;                 // end nodes attached

  bool operator==(const MissionPlan&) const = default;

  static MissionPlan empty_for(int robot_count);

  /// Vertex sequence of one robot: start, tasks, end-if-complete.
  std::vector<Vertex> vertex_sequence(int robot_id) const;

  bool has_task(int task_id) const { return assignment.count(task_id) != 0; }
};

/// Mission plan plus the precedence arcs whose endpoints are both in the plan.
struct AugmentedPlan {
  MissionPlan base;
  std::vector<std::pair<int, int>> precedence_arcs;

  bool operator==(const AugmentedPlan&) const = default;
};

/// Attaches the precedence arcs relevant to the plan (both endpoints
/// assigned), so partial plans carry only the active constraints.
AugmentedPlan augment(const MissionPlan& plan, const PrecedenceSet& precedence);

enum class EdgeKind { Path, Precedence };

struct IncomingEdge {
  Vertex from;
  EdgeKind kind = EdgeKind::Path;
  int robot = 0;  // traversing robot for Path edges, 0 for Precedence

  bool operator==(const IncomingEdge&) const = default;
};

/// Predecessors of `v`: one path edge per robot traversing `v`, plus, with
/// `include_precedence`, the precedence arcs ending at `v`. With the flag on
/// the result names every predecessor node of `v`.
std::vector<IncomingEdge> incoming_edges(const AugmentedPlan& plan, const Vertex& v,
                                         bool include_precedence);

/// Materialized digraph with a deterministic vertex order: start nodes by
/// robot id, task nodes by task id, end nodes by robot id. Parallel edges
/// are kept (a coalition pair traversing the same two tasks contributes one
/// edge per robot).
struct Digraph {
  std::vector<Vertex> vertices;
  std::vector<std::vector<int>> out;  // adjacency by vertex index

  std::size_t vertex_count() const { return vertices.size(); }
  std::size_t edge_count() const;
  int index_of(const Vertex& v) const;  // -1 if absent
};

Digraph as_digraph(const AugmentedPlan& plan);

/// Moves one task to `target_alliance`, inserting it at the given 1-based
/// position in each member's route (1 = first task, route length after
/// removal + 1 = last). Returns a new plan; the input is untouched.
MissionPlan relocate(const MissionPlan& plan, int task_id, const Alliance& target_alliance,
                     const std::map<int, int>& insert_positions);

}  // namespace mrta
