#include "mrta/objective.hpp"

#include <algorithm>

namespace mrta {

ObjectiveBreakdown breakdown_from(const Schedule& schedule, const ObjectiveWeights& weights) {
  ObjectiveBreakdown result;
  if (schedule.robots.empty()) return result;

  double finish_sum = 0.0;
  double distance_sum = 0.0;
  for (const RobotTimeline& timeline : schedule.robots) {
    result.makespan = std::max(result.makespan, timeline.finishing_time);
    finish_sum += timeline.finishing_time;
    distance_sum += timeline.total_distance;
  }
  const double m = static_cast<double>(schedule.robots.size());
  result.avg_finish = finish_sum / m;
  result.avg_distance = distance_sum / m;
  result.total = weights.makespan * result.makespan + weights.avg_finish * result.avg_finish +
                 weights.avg_distance * result.avg_distance;
  return result;
}

ObjectiveBreakdown evaluate(const AugmentedPlan& plan, const Instance& instance) {
  return breakdown_from(simulate(plan, instance), instance.weights);
}

}  // namespace mrta
