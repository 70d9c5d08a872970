#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "mrta/generator.hpp"
#include "mrta/local_search.hpp"
#include "mrta/types.hpp"

namespace mrta {

struct BenchmarkOptions {
  std::vector<ProblemClass> classes;  // default: the six standard classes
  int instances_per_class = 100;
  std::uint64_t seed = 1;  // instance i uses seed + i
  ObjectiveWeights weights;
  SearchConfig search;
  /// Wall-clock timing columns vary across runs; with them off, identical
  /// seeds give byte-identical CSVs.
  bool include_timings = true;
  unsigned jobs = 1;
  /// Where a reproduction bundle is written if a run ever yields an
  /// infeasible plan. Empty = next to the current directory.
  std::filesystem::path repro_dir;
};

struct BenchmarkRow {
  std::string class_code;
  std::uint64_t seed = 0;
  double j_init = 0.0;
  double j_final = 0.0;
  double improvement_percent = 0.0;
  double construct_ms = 0.0;
  double improve_ms = 0.0;
  std::uint32_t sweeps = 0;
  bool feasible_init = false;
  bool feasible_final = false;
};

struct BenchmarkSummary {
  std::string class_code;
  int instances = 0;
  double mean_improvement_percent = 0.0;
  double min_improvement_percent = 0.0;
  double max_improvement_percent = 0.0;
};

struct BenchmarkReport {
  std::vector<BenchmarkRow> rows;  // ordered by (class code, seed)
  std::vector<BenchmarkSummary> summaries;
  bool include_timings = true;
};

/// generate -> construct -> improve -> verify for every (class, seed);
/// instances run concurrently when jobs > 1, output order is deterministic.
/// An infeasible constructed or improved plan aborts with a reproduction
/// bundle on disk and a std::runtime_error naming it.
BenchmarkReport run_benchmark(const BenchmarkOptions& options);

std::string benchmark_csv(const BenchmarkReport& report);
void write_benchmark_csv(const BenchmarkReport& report, const std::filesystem::path& path);

}  // namespace mrta
