#pragma once

#include <stdexcept>
#include <vector>

#include "mrta/plan.hpp"
#include "mrta/types.hpp"

namespace mrta {

/// Thrown when a simulation or evaluation is asked to process a plan that is
/// not feasible (cyclic augmented plan or an incapable assignment).
class InfeasiblePlanError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TravelLeg {
  double distance = 0.0;  // m
  double duration = 0.0;  // s
};

/// Euclidean distance and the time a robot of `speed` needs for it.
TravelLeg travel(const Position& from, const Position& to, double speed);

struct VertexTiming {
  Vertex vertex;
  double arrival = 0.0;          // s, reaching the vertex position
  double start = 0.0;            // s, work begins (= arrival + wait)
  double finish = 0.0;           // s, work done (start + duration)
  double wait = 0.0;             // s, idle before start
  double travel_time = 0.0;      // s, getting here from the previous vertex
  double travel_distance = 0.0;  // m
};

struct RobotTimeline {
  int robot = 0;
  std::vector<VertexTiming> vertices;  // start, tasks in visit order, end-if-complete
  double finishing_time = 0.0;
  double total_distance = 0.0;
};

struct Schedule {
  std::vector<RobotTimeline> robots;  // index = robot id - 1

  const RobotTimeline& timeline(int robot_id) const;
  const VertexTiming& at(int robot_id, const Vertex& v) const;
};

/// Forward temporal simulation of an augmented plan. Vertices are processed
/// in a topological order of the augmented graph; a task starts once every
/// coalition member has arrived and every precedence predecessor has
/// finished, and occupies all members for its full duration. Throws
/// InfeasiblePlanError on cyclic plans or infinite static costs,
/// std::invalid_argument on structural mismatches.
Schedule simulate(const AugmentedPlan& plan, const Instance& instance);

}  // namespace mrta
