#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mrta/types.hpp"

namespace mrta {

/// Problem class code <a>A<b>BCD: `count_a` tasks of type A and
/// `count_each_bcd` tasks of each of the types B, C and D.
struct ProblemClass {
  int count_a = 3;
  int count_each_bcd = 1;

  int task_count() const { return count_a + 3 * count_each_bcd; }
  std::string code() const;

  bool operator==(const ProblemClass&) const = default;
};

/// Parses codes like "3A2BCD". Throws std::invalid_argument on anything else.
ProblemClass parse_class_code(const std::string& code);

/// The six benchmark classes, smallest first.
std::vector<ProblemClass> standard_classes();

struct GeneratorConfig {
  ProblemClass problem_class;
  std::uint64_t seed = 0;
};

/// Typed tasks (ids 1..n in type order A,B,C,D, positions unset) plus the
/// three template precedence arcs: first A before second A, third A before
/// first B, first C before first D. Requires count_a >= 3.
std::pair<std::vector<Task>, PrecedenceSet> class_tasks_and_precedence(const ProblemClass& pc);

/// Task position on a radius-50 ring with an offset of length `l1` in
/// direction `theta1`: the ring angle is 2*pi*i/total + pi/total.
Position task_position(int task_id, int total, double l1, double theta1);

/// Name of the pseudo-random scheme recorded in generated files: mt19937_64,
/// uniform doubles from the top 53 bits, per task one draw for the offset
/// length in [0,10) and one for the offset angle in [0,2*pi).
extern const char* const kGeneratorRngName;

/// Deterministic benchmark instance: three robots at the origin with speeds
/// (2,2,1) and arbitrary end positions, the six standard alliances, the
/// type-keyed duration table expanded per task, and seeded task positions.
Instance generate(const GeneratorConfig& config);

}  // namespace mrta
