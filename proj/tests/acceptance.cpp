// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Tolerances and sample sizes are pinned here, not configurable.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "mrta/benchmark.hpp"
#include "mrta/construct.hpp"
#include "mrta/exact.hpp"
#include "mrta/feasibility.hpp"
#include "mrta/generator.hpp"
#include "mrta/io.hpp"
#include "mrta/local_search.hpp"
#include "mrta/objective.hpp"

using namespace mrta;

namespace {

struct CriterionResult {
  bool pass = false;
  std::string detail;
};

// Independent topological-order existence check: build an order by DFS
// postorder reversal, then verify every edge points forward. Shares no code
// with the library's in-degree peeling.
bool independent_topo_order_exists(const Digraph& g) {
  const std::size_t n = g.vertices.size();
  std::vector<int> state(n, 0);
  std::vector<int> order;
  order.reserve(n);
  bool cyclic = false;

  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    state[v] = 1;
    for (int next : g.out[v]) {
      if (state[static_cast<std::size_t>(next)] == 1) {
        cyclic = true;
      } else if (state[static_cast<std::size_t>(next)] == 0) {
        visit(static_cast<std::size_t>(next));
      }
      if (cyclic) return;
    }
    state[v] = 2;
    order.push_back(static_cast<int>(v));
  };
  for (std::size_t v = 0; v < n && !cyclic; ++v) {
    if (state[v] == 0) visit(v);
  }
  if (cyclic) return false;

  std::reverse(order.begin(), order.end());
  std::vector<int> rank(n, 0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    rank[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  }
  for (std::size_t v = 0; v < n; ++v) {
    for (int next : g.out[v]) {
      if (rank[v] >= rank[static_cast<std::size_t>(next)]) return false;
    }
  }
  return true;
}

struct RunRecord {
  std::string class_code;
  int tasks = 0;
  double improvement_percent = 0.0;
  double construct_seconds = 0.0;
  double improve_seconds = 0.0;
  bool all_feasible = false;
};

constexpr int kInstancesPerClass = 100;
std::vector<RunRecord> g_runs;  // filled once, read by criteria 1, 2 and 7

void execute_runs() {
  for (const ProblemClass& pc : standard_classes()) {
    for (int i = 0; i < kInstancesPerClass; ++i) {
      const Instance instance = generate({pc, static_cast<std::uint64_t>(i) + 1});
      RunRecord record;
      record.class_code = pc.code();
      record.tasks = pc.task_count();

      auto t0 = std::chrono::steady_clock::now();
      const ConstructResult constructed = construct(instance);
      record.construct_seconds = std::chrono::duration<double>(
          std::chrono::steady_clock::now() - t0).count();

      t0 = std::chrono::steady_clock::now();
      const ImproveResult improved = improve(constructed.plan, instance);
      record.improve_seconds = std::chrono::duration<double>(
          std::chrono::steady_clock::now() - t0).count();
      record.improvement_percent = improved.stats.improvement_percent;

      const bool init_ok =
          check_feasibility(constructed.plan, instance).feasible &&
          independent_topo_order_exists(
              as_digraph(augment(constructed.plan, instance.precedence)));
      const bool final_ok =
          check_feasibility(improved.plan, instance).feasible &&
          independent_topo_order_exists(
              as_digraph(augment(improved.plan, instance.precedence)));
      record.all_feasible = init_ok && final_ok;
      g_runs.push_back(std::move(record));
    }
  }
}

// Criterion 1: every constructed and improved plan across 6 classes x 100
// instances is feasible by both the library check and the independent
// topological-order check. Zero failures allowed.
CriterionResult feasibility_reproduction() {
  int failures = 0;
  for (const RunRecord& run : g_runs) {
    if (!run.all_feasible) ++failures;
  }
  char buffer[128];
  std::snprintf(buffer, sizeof buffer, "%zu runs, %d infeasible", g_runs.size(), failures);
  return {failures == 0 && g_runs.size() == 600, buffer};
}

// Criterion 2: mean improvement > 0 for every class; classes with >= 9 tasks
// reach mean >= 3% and max >= 10%.
CriterionResult improvement_trend() {
  std::map<std::string, std::pair<double, double>> stats;  // class -> (sum, max)
  std::map<std::string, int> counts;
  std::map<std::string, int> tasks;
  for (const RunRecord& run : g_runs) {
    auto& [sum, max_value] = stats[run.class_code];
    sum += run.improvement_percent;
    max_value = std::max(max_value, run.improvement_percent);
    ++counts[run.class_code];
    tasks[run.class_code] = run.tasks;
  }

  bool pass = true;
  std::string detail;
  for (const auto& [code, data] : stats) {
    const double mean = data.first / counts[code];
    const double peak = data.second;
    bool ok = mean > 0.0;
    if (tasks[code] >= 9) ok = ok && mean >= 3.0 && peak >= 10.0;
    pass = pass && ok;
    char buffer[96];
    std::snprintf(buffer, sizeof buffer, "%s%s mean %.2f%% max %.2f%%",
                  detail.empty() ? "" : ", ", code.c_str(), mean, peak);
    detail += buffer;
    if (!ok) detail += " <-- FAIL";
  }
  return {pass, detail};
}

// Criterion 3: on 50 tiny instances the heuristic never beats the oracle,
// matches it in at least 40% of cases, and the oracle's per-plan feasibility
// verdicts agree with check_feasibility.
CriterionResult oracle_optimality() {
  std::mt19937_64 rng(904);
  int equal = 0;
  int below_oracle = 0;
  std::uint64_t verdict_mismatches = 0;
  const int kSamples = 50;

  for (int i = 0; i < kSamples; ++i) {
    const Instance instance = test::random_tiny_instance(rng, 5);
    const ConstructResult constructed = construct(instance);
    const ImproveResult improved = improve(constructed.plan, instance);
    const OracleResult oracle =
        solve_exact(instance, 7, [&](const MissionPlan& plan, bool feasible) {
          if (check_feasibility(plan, instance).feasible != feasible) ++verdict_mismatches;
        });

    const double scale = std::max(1.0, std::fabs(oracle.best_objective.total));
    if (improved.objective.total < oracle.best_objective.total - 1e-9 * scale) ++below_oracle;
    if (std::fabs(improved.objective.total - oracle.best_objective.total) <= 1e-9 * scale) {
      ++equal;
    }
  }

  char buffer[160];
  std::snprintf(buffer, sizeof buffer,
                "%d/%d optimal (need >= %d), %d below oracle, %llu verdict mismatches", equal,
                kSamples, kSamples * 40 / 100, below_oracle,
                static_cast<unsigned long long>(verdict_mismatches));
  return {below_oracle == 0 && equal * 100 >= kSamples * 40 && verdict_mismatches == 0, buffer};
}

// Criterion 4: after natural termination on 30 instances of the 9-task
// class, re-enumerating the full relocate neighborhood finds no feasible
// strictly improving candidate.
CriterionResult local_optimum_certificate() {
  int violations = 0;
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Instance instance = generate({{3, 2}, seed});
    const ImproveResult result = improve(construct(instance).plan, instance);
    for (const auto& [task_id, alliance_id] : result.plan.assignment) {
      for (const MissionPlan& candidate :
           enumerate_relocations(result.plan, task_id, instance)) {
        const AugmentedPlan augmented = augment(candidate, instance.precedence);
        if (!is_acyclic(as_digraph(augmented)).acyclic) continue;
        if (evaluate(augmented, instance).total < result.objective.total) ++violations;
      }
    }
  }
  return {violations == 0, "30 instances, " + std::to_string(violations) +
                               " improving candidates after termination"};
}

// Criterion 5: the Kahn-style check agrees with exhaustive topological-order
// search on 1000 random digraphs of up to 12 vertices.
CriterionResult acyclicity_equivalence() {
  std::mt19937_64 rng(905);
  std::uniform_int_distribution<int> size(1, 12);
  std::uniform_real_distribution<double> density(0.0, 0.6);
  int disagreements = 0;
  int cyclic_seen = 0;
  const int kGraphs = 1000;
  for (int i = 0; i < kGraphs; ++i) {
    const int n = size(rng);
    const auto edges = test::random_edges(rng, n, density(rng));
    const bool expected = test::exhaustive_topo_order_exists(n, edges);
    const bool actual = is_acyclic(test::make_digraph(n, edges)).acyclic;
    if (expected != actual) ++disagreements;
    if (!expected) ++cyclic_seen;
  }
  char buffer[96];
  std::snprintf(buffer, sizeof buffer, "%d graphs (%d cyclic), %d disagreements", kGraphs,
                cyclic_seen, disagreements);
  return {disagreements == 0, buffer};
}

// Criterion 6: on 100 random feasible plans, per-robot finishing time equals
// the sum of durations, waits and travel times within 1e-9 relative.
CriterionResult schedule_conservation() {
  std::mt19937_64 rng(906);
  int violations = 0;
  for (int i = 0; i < 100; ++i) {
    const Instance instance = test::random_tiny_instance(rng, 5);
    const MissionPlan plan = test::random_feasible_plan(rng, instance);
    const Schedule schedule = simulate(augment(plan, instance.precedence), instance);
    for (const RobotTimeline& timeline : schedule.robots) {
      double sum = 0.0;
      for (const VertexTiming& timing : timeline.vertices) {
        sum += (timing.finish - timing.start) + timing.wait + timing.travel_time;
      }
      const double scale = std::max(1.0, std::fabs(timeline.finishing_time));
      if (std::fabs(sum - timeline.finishing_time) > 1e-9 * scale) ++violations;
    }
  }
  return {violations == 0, "100 plans, " + std::to_string(violations) + " identity violations"};
}

// Criterion 7: construction under 0.1 s and improvement under 60 s per
// 6A3BCD instance (sanity ceiling, not a reproduction of reported timings).
CriterionResult runtime_bound() {
  double worst_construct = 0.0;
  double worst_improve = 0.0;
  for (const RunRecord& run : g_runs) {
    if (run.class_code != "6A3BCD") continue;
    worst_construct = std::max(worst_construct, run.construct_seconds);
    worst_improve = std::max(worst_improve, run.improve_seconds);
  }
  char buffer[96];
  std::snprintf(buffer, sizeof buffer, "worst construct %.4f s (< 0.1), worst improve %.2f s (< 60)",
                worst_construct, worst_improve);
  return {worst_construct < 0.1 && worst_improve < 60.0, buffer};
}

// Criterion 8: identical seeds yield byte-identical instance files, plan
// files and benchmark CSVs.
CriterionResult determinism() {
  bool pass = true;
  std::string detail;

  auto make_instance_text = [](std::uint64_t seed) {
    InstanceDocument doc;
    doc.instance = generate({{3, 2}, seed});
    doc.meta.seed = seed;
    doc.meta.class_code = "3A2BCD";
    doc.meta.rng = kGeneratorRngName;
    return serialize_instance(doc);
  };
  for (std::uint64_t seed : {1ull, 99ull}) {
    if (make_instance_text(seed) != make_instance_text(seed)) {
      pass = false;
      detail += "instance bytes differ; ";
    }
  }

  auto make_plan_text = [](std::uint64_t seed) {
    InstanceDocument doc;
    doc.instance = generate({{3, 2}, seed});
    doc.meta.seed = seed;
    const ImproveResult improved = improve(construct(doc.instance).plan, doc.instance);
    PlanDocument plan_doc;
    plan_doc.instance_path = "instance.json";
    plan_doc.instance_checksum = instance_checksum(doc);
    plan_doc.plan = improved.plan;
    plan_doc.schedule = simulate(augment(improved.plan, doc.instance.precedence), doc.instance);
    plan_doc.objective = improved.objective;
    plan_doc.weights = doc.instance.weights;
    plan_doc.solver.algorithm = "construct+improve";
    plan_doc.solver.sweeps = improved.stats.sweeps;
    plan_doc.solver.seed = seed;
    return serialize_plan(plan_doc);
  };
  if (make_plan_text(7) != make_plan_text(7)) {
    pass = false;
    detail += "plan bytes differ; ";
  }

  auto make_csv = []() {
    BenchmarkOptions options;
    options.classes = {{3, 1}, {3, 2}};
    options.instances_per_class = 5;
    options.seed = 3;
    options.include_timings = false;  // wall-clock columns are never reproducible
    options.jobs = 4;
    return benchmark_csv(run_benchmark(options));
  };
  if (make_csv() != make_csv()) {
    pass = false;
    detail += "benchmark csv bytes differ; ";
  }

  if (pass) detail = "instance, plan and benchmark bytes identical across reruns";
  return {pass, detail};
}

}  // namespace

int main() {
  std::printf("running 600 construct+improve runs (6 classes x 100 instances)...\n");
  execute_runs();

  struct Criterion {
    const char* name;
    CriterionResult (*run)();
  };
  const Criterion criteria[] = {
      {"feasibility reproduction", feasibility_reproduction},
      {"improvement trend", improvement_trend},
      {"oracle optimality", oracle_optimality},
      {"local-optimum certificate", local_optimum_certificate},
      {"acyclicity oracle equivalence", acyclicity_equivalence},
      {"schedule conservation", schedule_conservation},
      {"runtime bound", runtime_bound},
      {"determinism", determinism},
  };

  int failures = 0;
  int index = 0;
  for (const Criterion& criterion : criteria) {
    ++index;
    const CriterionResult result = criterion.run();
    std::printf("[%d/8] %-30s %s  (%s)\n", index, criterion.name,
                result.pass ? "PASS" : "FAIL", result.detail.c_str());
    if (!result.pass) ++failures;
  }

  if (failures == 0) {
    std::printf("all acceptance criteria pass\n");
  } else {
    std::printf("%d acceptance criteria FAILED\n", failures);
  }
  return failures;
}
