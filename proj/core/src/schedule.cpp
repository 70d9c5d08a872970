#include "mrta/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace mrta {

TravelLeg travel(const Position& from, const Position& to, double speed) {
  if (!(speed > 0.0)) {
    throw std::invalid_argument("speed must be > 0");
  }
  TravelLeg leg;
  leg.distance = distance(from, to);
  leg.duration = leg.distance / speed;
  return leg;
}

const RobotTimeline& Schedule::timeline(int robot_id) const {
  if (robot_id < 1 || robot_id > static_cast<int>(robots.size())) {
    throw std::invalid_argument("unknown robot id " + std::to_string(robot_id));
  }
  return robots[static_cast<std::size_t>(robot_id) - 1];
}

const VertexTiming& Schedule::at(int robot_id, const Vertex& v) const {
  for (const VertexTiming& timing : timeline(robot_id).vertices) {
    if (timing.vertex == v) return timing;
  }
  throw std::invalid_argument("vertex " + to_string(v) + " not on robot " +
                              std::to_string(robot_id));
}

namespace {

struct Cursor {
  std::size_t next = 0;  // index of the next unprocessed task in the route
  double time = 0.0;
  Position position;
};

void check_plan_structure(const MissionPlan& plan, const Instance& instance) {
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
    for (int robot = 1; robot <= m; ++robot) {
      const auto& route = plan.routes[static_cast<std::size_t>(robot) - 1];
      const auto count = std::count(route.begin(), route.end(), task_id);
      if (count != (alliance->contains(robot) ? 1 : 0)) {
        throw std::invalid_argument("route of robot " + std::to_string(robot) +
                                    " does not match the alliance of task " +
                                    std::to_string(task_id));
      }
    }
  }
  for (const auto& route : plan.routes) {
    for (int task_id : route) {
      if (!plan.has_task(task_id)) {
        throw std::invalid_argument("route contains unassigned task " + std::to_string(task_id));
      }
    }
  }
}

}  // namespace

Schedule simulate(const AugmentedPlan& plan, const Instance& instance) {
  check_plan_structure(plan.base, instance);

  const int m = instance.robot_count();
  Schedule schedule;
  schedule.robots.resize(static_cast<std::size_t>(m));
  std::vector<Cursor> cursors(static_cast<std::size_t>(m));

  for (int robot = 1; robot <= m; ++robot) {
    const Robot& r = instance.robot(robot);
    RobotTimeline& timeline = schedule.robots[static_cast<std::size_t>(robot) - 1];
    timeline.robot = robot;
    VertexTiming at_start;
    at_start.vertex = Vertex::start(robot);
    timeline.vertices.push_back(at_start);
    cursors[static_cast<std::size_t>(robot) - 1].position = r.start_position;
  }

  std::map<int, double> finish_of;  // processed task -> finish time
  const std::size_t total_tasks = plan.base.assignment.size();

  while (finish_of.size() < total_tasks) {
    bool progressed = false;
    for (int robot = 1; robot <= m; ++robot) {
      Cursor& cursor = cursors[static_cast<std::size_t>(robot) - 1];
      const auto& route = plan.base.routes[static_cast<std::size_t>(robot) - 1];
      if (cursor.next >= route.size()) continue;
      const int task_id = route[cursor.next];
      const Alliance& alliance = instance.alliance(plan.base.assignment.at(task_id));

      // The task is processable once it is the next vertex of every member
      // and every precedence predecessor in the plan has finished.
      bool ready = true;
      for (int member : alliance.members) {
        const Cursor& member_cursor = cursors[static_cast<std::size_t>(member) - 1];
        const auto& member_route = plan.base.routes[static_cast<std::size_t>(member) - 1];
        if (member_cursor.next >= member_route.size() ||
            member_route[member_cursor.next] != task_id) {
          ready = false;
          break;
        }
      }
      double preds_finish = 0.0;
      if (ready) {
        for (const auto& [before, after] : plan.precedence_arcs) {
          if (after != task_id) continue;
          auto done = finish_of.find(before);
          if (done == finish_of.end()) {
            ready = false;
            break;
          }
          preds_finish = std::max(preds_finish, done->second);
        }
      }
      if (!ready) continue;

      const auto duration = instance.static_costs.finite_cost(task_id, alliance.id);
      if (!duration) {
        throw InfeasiblePlanError("task " + std::to_string(task_id) +
                                  " is assigned to an incapable alliance");
      }
      const Position& task_pos = instance.task(task_id).position;

      double start = preds_finish;
      std::vector<std::pair<int, TravelLeg>> legs;  // (member, travel)
      legs.reserve(alliance.members.size());
      for (int member : alliance.members) {
        Cursor& member_cursor = cursors[static_cast<std::size_t>(member) - 1];
        TravelLeg leg = travel(member_cursor.position, task_pos, instance.robot(member).speed);
        legs.emplace_back(member, leg);
        start = std::max(start, member_cursor.time + leg.duration);
      }
      const double finish = start + *duration;

      for (const auto& [member, leg] : legs) {
        Cursor& member_cursor = cursors[static_cast<std::size_t>(member) - 1];
        RobotTimeline& timeline = schedule.robots[static_cast<std::size_t>(member) - 1];
        VertexTiming timing;
        timing.vertex = Vertex::task(task_id);
        timing.arrival = member_cursor.time + leg.duration;
        timing.start = start;
        timing.finish = finish;
        timing.wait = start - timing.arrival;
        timing.travel_time = leg.duration;
        timing.travel_distance = leg.distance;
        timeline.vertices.push_back(timing);
        timeline.total_distance += leg.distance;
        member_cursor.time = finish;
        member_cursor.position = task_pos;
        ++member_cursor.next;
      }
      finish_of.emplace(task_id, finish);
      progressed = true;
    }
    if (!progressed) {
      throw InfeasiblePlanError("plan admits no processing order (cyclic dependencies)");
    }
  }

  for (int robot = 1; robot <= m; ++robot) {
    Cursor& cursor = cursors[static_cast<std::size_t>(robot) - 1];
    RobotTimeline& timeline = schedule.robots[static_cast<std::size_t>(robot) - 1];
    if (plan.base.complete) {
      const Robot& r = instance.robot(robot);
      TravelLeg leg;  // absent end position: the robot stops where it is
      if (r.end_position) {
        leg = travel(cursor.position, *r.end_position, r.speed);
      }
      VertexTiming timing;
      timing.vertex = Vertex::end(robot);
      timing.arrival = cursor.time + leg.duration;
      timing.start = timing.arrival;
      timing.finish = timing.arrival;
      timing.travel_time = leg.duration;
      timing.travel_distance = leg.distance;
      timeline.vertices.push_back(timing);
      timeline.total_distance += leg.distance;
      cursor.time = timing.finish;
    }
    timeline.finishing_time = cursor.time;
  }

  return schedule;
}

}  // namespace mrta
