#pragma once

#include "mrta/plan.hpp"
#include "mrta/schedule.hpp"
#include "mrta/types.hpp"

namespace mrta {

struct ObjectiveBreakdown {
  double makespan = 0.0;      // latest finishing time over all robots, s
  double avg_finish = 0.0;    // mean robot finishing time, s
  double avg_distance = 0.0;  // mean driven distance, m
  double total = 0.0;         // weighted sum

  bool operator==(const ObjectiveBreakdown&) const = default;
};

ObjectiveBreakdown breakdown_from(const Schedule& schedule, const ObjectiveWeights& weights);

/// Simulates the plan and aggregates the weighted objective. Partial plans
/// are evaluated on their assigned content only.
ObjectiveBreakdown evaluate(const AugmentedPlan& plan, const Instance& instance);

}  // namespace mrta
