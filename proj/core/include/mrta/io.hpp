#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "mrta/local_search.hpp"
#include "mrta/objective.hpp"
#include "mrta/plan.hpp"
#include "mrta/schedule.hpp"
#include "mrta/types.hpp"

namespace mrta {

/// Raised for malformed documents; validation problems carry the full report.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InstanceMeta {
  int format_version = 1;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> class_code;
  std::optional<std::string> rng;
};

struct InstanceDocument {
  Instance instance;
  InstanceMeta meta;
};

/// Canonical text form; parse(serialize(x)) is byte-identical to serialize(x).
std::string serialize_instance(const InstanceDocument& doc);
InstanceDocument parse_instance_text(const std::string& text);

void write_instance_file(const InstanceDocument& doc, const std::filesystem::path& path);
InstanceDocument read_instance_file(const std::filesystem::path& path);

/// FNV-1a 64 over the canonical serialized instance, hex encoded.
std::string instance_checksum(const InstanceDocument& doc);

struct SolverMeta {
  std::string algorithm;  // "construct" or "construct+improve"
  std::uint32_t sweeps = 0;
  std::optional<std::uint64_t> seed;
};

struct PlanDocument {
  std::string instance_path;
  std::string instance_checksum;
  MissionPlan plan;
  Schedule schedule;
  ObjectiveBreakdown objective;
  ObjectiveWeights weights;
  SolverMeta solver;
};

std::string serialize_plan(const PlanDocument& doc);
PlanDocument parse_plan_text(const std::string& text);

void write_plan_file(const PlanDocument& doc, const std::filesystem::path& path);
PlanDocument read_plan_file(const std::filesystem::path& path);

struct VerifyOutcome {
  bool ok = true;
  std::vector<std::string> problems;
};

/// Re-checks a stored plan against its instance: checksum, feasibility,
/// schedule reproduction, and the stored objective within 1e-9 relative.
VerifyOutcome verify_plan(const PlanDocument& doc, const InstanceDocument& instance);

/// Graphviz rendering: one colored path per robot, precedence arcs black and
/// dashed, task nodes labeled with id and type.
std::string export_dot(const AugmentedPlan& plan, const Instance& instance);

/// CSV rows {robot, segment_kind, task, t_start, t_end}; per robot the
/// segments tile [0, finishing time]. Zero-length travel/wait rows are
/// omitted.
std::string export_gantt(const AugmentedPlan& plan, const Schedule& schedule);

/// Shortest round-trip decimal form, used everywhere numbers are written.
std::string format_double(double value);

}  // namespace mrta
