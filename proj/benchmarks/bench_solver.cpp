#include <benchmark/benchmark.h>

#include "mrta/construct.hpp"
#include "mrta/feasibility.hpp"
#include "mrta/generator.hpp"
#include "mrta/local_search.hpp"

using namespace mrta;

namespace {

ProblemClass class_by_index(int index) { return standard_classes()[static_cast<std::size_t>(index)]; }

void BM_Construct(benchmark::State& state) {
  const Instance instance = generate({class_by_index(static_cast<int>(state.range(0))), 1});
  for (auto _ : state) {
    benchmark::DoNotOptimize(construct(instance));
  }
  state.SetLabel(class_by_index(static_cast<int>(state.range(0))).code());
}
BENCHMARK(BM_Construct)->DenseRange(0, 5);

void BM_Improve(benchmark::State& state) {
  const Instance instance = generate({class_by_index(static_cast<int>(state.range(0))), 1});
  const ConstructResult start = construct(instance);
  for (auto _ : state) {
    benchmark::DoNotOptimize(improve(start.plan, instance));
  }
  state.SetLabel(class_by_index(static_cast<int>(state.range(0))).code());
}
BENCHMARK(BM_Improve)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

void BM_Simulate(benchmark::State& state) {
  const Instance instance = generate({{6, 3}, 1});
  const AugmentedPlan plan = augment(construct(instance).plan, instance.precedence);
  for (auto _ : state) {
    benchmark::DoNotOptimize(simulate(plan, instance));
  }
}
BENCHMARK(BM_Simulate);

void BM_IsAcyclic(benchmark::State& state) {
  const Instance instance = generate({{6, 3}, 1});
  const Digraph g = as_digraph(augment(construct(instance).plan, instance.precedence));
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_acyclic(g));
  }
}
BENCHMARK(BM_IsAcyclic);

void BM_EnumerateRelocations(benchmark::State& state) {
  const Instance instance = generate({{6, 3}, 1});
  const MissionPlan plan = construct(instance).plan;
  for (auto _ : state) {
    for (const auto& [task_id, alliance_id] : plan.assignment) {
      benchmark::DoNotOptimize(enumerate_relocations(plan, task_id, instance));
    }
  }
}
BENCHMARK(BM_EnumerateRelocations);

}  // namespace

BENCHMARK_MAIN();
