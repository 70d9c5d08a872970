#pragma once

#include <vector>

#include "mrta/plan.hpp"
#include "mrta/types.hpp"

namespace mrta {

struct AcyclicityResult {
  bool acyclic = true;
  /// Vertices left after exhaustive source removal; every cycle lies within.
  std::vector<Vertex> residue;
};

/// In-degree peeling (Kahn-style), O(|V|+|E|).
AcyclicityResult is_acyclic(const Digraph& g);

struct Violation {
  enum class Kind { IncapableAssignment, Cycle };

  Kind kind = Kind::IncapableAssignment;
  int task = 0;                  // offending task for IncapableAssignment
  std::vector<Vertex> witness;   // residue vertices for Cycle
};

struct FeasibilityVerdict {
  bool feasible = true;
  std::vector<Violation> violations;
};

enum class Coverage {
  AllTasks,      // plan must cover exactly the instance's task set
  AssignedOnly,  // partial plans: check only assigned tasks
};

/// Feasibility = every covered task is assigned to a capable alliance and
/// the augmented plan (precedence restricted to covered tasks) is acyclic.
/// Structural mismatches (unknown ids, a task missing from a member's route)
/// throw std::invalid_argument; they are input errors, not infeasibility.
FeasibilityVerdict check_feasibility(const MissionPlan& plan, const Instance& instance,
                                     Coverage coverage = Coverage::AllTasks);

}  // namespace mrta
