#include "mrta/plan.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace mrta {

std::string to_string(const Vertex& v) {
  switch (v.kind) {
    case Vertex::Kind::Start:
      return "s" + std::to_string(v.id);
    case Vertex::Kind::Task:
      return "t" + std::to_string(v.id);
    case Vertex::Kind::End:
      return "e" + std::to_string(v.id);
  }
  return "?";
}

MissionPlan MissionPlan::empty_for(int robot_count) {
  MissionPlan plan;
  plan.routes.resize(static_cast<std::size_t>(robot_count));
  return plan;
}

std::vector<Vertex> MissionPlan::vertex_sequence(int robot_id) const {
  if (robot_id < 1 || robot_id > static_cast<int>(routes.size())) {
    throw std::invalid_argument("unknown robot id " + std::to_string(robot_id));
  }
  std::vector<Vertex> seq;
  const auto& route = routes[static_cast<std::size_t>(robot_id) - 1];
  seq.reserve(route.size() + 2);
  seq.push_back(Vertex::start(robot_id));
  for (int t : route) seq.push_back(Vertex::task(t));
  if (complete) seq.push_back(Vertex::end(robot_id));
  return seq;
}

AugmentedPlan augment(const MissionPlan& plan, const PrecedenceSet& precedence) {
  AugmentedPlan result;
  result.base = plan;
  for (const auto& [before, after] : precedence.pairs()) {
    if (plan.has_task(before) && plan.has_task(after)) {
      result.precedence_arcs.emplace_back(before, after);
    }
  }
  return result;
}

namespace {

bool vertex_known(const AugmentedPlan& plan, const Vertex& v) {
  const int m = static_cast<int>(plan.base.routes.size());
  switch (v.kind) {
    case Vertex::Kind::Start:
    case Vertex::Kind::End:
      return v.id >= 1 && v.id <= m;
    case Vertex::Kind::Task:
      return plan.base.has_task(v.id);
  }
  return false;
}

}  // namespace

std::vector<IncomingEdge> incoming_edges(const AugmentedPlan& plan, const Vertex& v,
                                         bool include_precedence) {
  if (!vertex_known(plan, v)) {
    throw std::invalid_argument("vertex " + to_string(v) + " is not part of the plan");
  }
  std::vector<IncomingEdge> edges;
  const int m = static_cast<int>(plan.base.routes.size());
  for (int robot = 1; robot <= m; ++robot) {
    const auto seq = plan.base.vertex_sequence(robot);
    for (std::size_t i = 1; i < seq.size(); ++i) {
      if (seq[i] == v) {
        edges.push_back({seq[i - 1], EdgeKind::Path, robot});
      }
    }
  }
  if (include_precedence && v.kind == Vertex::Kind::Task) {
    for (const auto& [before, after] : plan.precedence_arcs) {
      if (after == v.id) {
        edges.push_back({Vertex::task(before), EdgeKind::Precedence, 0});
      }
    }
  }
  return edges;
}

std::size_t Digraph::edge_count() const {
  std::size_t count = 0;
  for (const auto& targets : out) count += targets.size();
  return count;
}

int Digraph::index_of(const Vertex& v) const {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] == v) return static_cast<int>(i);
  }
  return -1;
}

Digraph as_digraph(const AugmentedPlan& plan) {
  const int m = static_cast<int>(plan.base.routes.size());

  Digraph g;
  std::map<Vertex, int> index;
  auto add_vertex = [&g, &index](const Vertex& v) {
    index.emplace(v, static_cast<int>(g.vertices.size()));
    g.vertices.push_back(v);
  };

  for (int robot = 1; robot <= m; ++robot) add_vertex(Vertex::start(robot));
  for (const auto& [task_id, alliance_id] : plan.base.assignment) add_vertex(Vertex::task(task_id));
  for (int robot = 1; robot <= m; ++robot) add_vertex(Vertex::end(robot));

  g.out.resize(g.vertices.size());
  for (int robot = 1; robot <= m; ++robot) {
    const auto seq = plan.base.vertex_sequence(robot);
    for (std::size_t i = 1; i < seq.size(); ++i) {
      g.out[static_cast<std::size_t>(index.at(seq[i - 1]))].push_back(index.at(seq[i]));
    }
  }
  for (const auto& [before, after] : plan.precedence_arcs) {
    g.out[static_cast<std::size_t>(index.at(Vertex::task(before)))].push_back(
        index.at(Vertex::task(after)));
  }
  return g;
}

MissionPlan relocate(const MissionPlan& plan, int task_id, const Alliance& target_alliance,
                     const std::map<int, int>& insert_positions) {
  auto assigned = plan.assignment.find(task_id);
  if (assigned == plan.assignment.end()) {
    throw std::invalid_argument("task " + std::to_string(task_id) + " is not in the plan");
  }

  MissionPlan result = plan;
  for (auto& route : result.routes) {
    route.erase(std::remove(route.begin(), route.end(), task_id), route.end());
  }

  for (int member : target_alliance.members) {
    if (member < 1 || member > static_cast<int>(result.routes.size())) {
      throw std::invalid_argument("alliance member " + std::to_string(member) +
                                  " is not a robot of the plan");
    }
    auto pos = insert_positions.find(member);
    if (pos == insert_positions.end()) {
      throw std::invalid_argument("missing insertion position for robot " +
                                  std::to_string(member));
    }
    auto& route = result.routes[static_cast<std::size_t>(member) - 1];
    const int slot = pos->second;
    if (slot < 1 || slot > static_cast<int>(route.size()) + 1) {
      throw std::invalid_argument("insertion position " + std::to_string(slot) +
                                  " out of range for robot " + std::to_string(member));
    }
    route.insert(route.begin() + (slot - 1), task_id);
  }

  result.assignment[task_id] = target_alliance.id;
  return result;
}

}  // namespace mrta
