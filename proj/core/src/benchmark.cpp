#include "mrta/benchmark.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "mrta/construct.hpp"
#include "mrta/feasibility.hpp"
#include "mrta/io.hpp"

namespace mrta {

namespace {

struct Job {
  ProblemClass problem_class;
  std::uint64_t seed = 0;
};

double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since)
      .count();
}

}  // namespace

BenchmarkReport run_benchmark(const BenchmarkOptions& options) {
  std::vector<ProblemClass> classes =
      options.classes.empty() ? standard_classes() : options.classes;

  std::vector<Job> jobs;
  for (const ProblemClass& pc : classes) {
    for (int i = 0; i < options.instances_per_class; ++i) {
      jobs.push_back({pc, options.seed + static_cast<std::uint64_t>(i)});
    }
  }

  BenchmarkReport report;
  report.include_timings = options.include_timings;
  report.rows.resize(jobs.size());

  std::atomic<std::size_t> next{0};
  std::mutex failure_mutex;
  std::vector<std::string> failures;

  auto worker = [&]() {
    while (true) {
      const std::size_t index = next.fetch_add(1);
      if (index >= jobs.size()) return;
      const Job& job = jobs[index];

      Instance instance = generate({job.problem_class, job.seed});
      instance.weights = options.weights;

      BenchmarkRow row;
      row.class_code = job.problem_class.code();
      row.seed = job.seed;

      auto t0 = std::chrono::steady_clock::now();
      ConstructResult constructed = construct(instance);
      row.construct_ms = elapsed_ms(t0);
      row.j_init = constructed.objective.total;
      row.feasible_init = check_feasibility(constructed.plan, instance).feasible;

      t0 = std::chrono::steady_clock::now();
      ImproveResult improved = improve(constructed.plan, instance, options.search);
      row.improve_ms = elapsed_ms(t0);
      row.j_final = improved.objective.total;
      row.improvement_percent = improved.stats.improvement_percent;
      row.sweeps = improved.stats.sweeps;
      row.feasible_final = check_feasibility(improved.plan, instance).feasible;

      if (!row.feasible_init || !row.feasible_final) {
        // Leave the evidence on disk before aborting the whole run.
        const std::filesystem::path dir =
            options.repro_dir.empty() ? std::filesystem::path(".") : options.repro_dir;
        const std::string stem = "repro_" + row.class_code + "_s" + std::to_string(job.seed);
        InstanceDocument doc;
        doc.instance = instance;
        doc.meta.seed = job.seed;
        doc.meta.class_code = row.class_code;
        doc.meta.rng = kGeneratorRngName;
        write_instance_file(doc, dir / (stem + ".instance.json"));

        const MissionPlan& bad = row.feasible_init ? improved.plan : constructed.plan;
        PlanDocument plan_doc;
        plan_doc.instance_path = (dir / (stem + ".instance.json")).string();
        plan_doc.instance_checksum = instance_checksum(doc);
        plan_doc.plan = bad;
        plan_doc.schedule = {};  // infeasible plans have no schedule
        plan_doc.weights = instance.weights;
        plan_doc.solver.algorithm = row.feasible_init ? "construct+improve" : "construct";
        plan_doc.solver.sweeps = improved.stats.sweeps;
        plan_doc.solver.seed = job.seed;
        write_plan_file(plan_doc, dir / (stem + ".plan.json"));

        std::lock_guard<std::mutex> lock(failure_mutex);
        failures.push_back("infeasible plan for class " + row.class_code + " seed " +
                           std::to_string(job.seed) + "; reproduction bundle: " +
                           (dir / stem).string() + ".*");
      }

      report.rows[index] = std::move(row);
    }
  };

  unsigned jobs_n = options.jobs;
  if (jobs_n == 0) {
    jobs_n = std::max(1u, std::thread::hardware_concurrency());
  }
  jobs_n = std::min<unsigned>(jobs_n, static_cast<unsigned>(std::max<std::size_t>(jobs.size(), 1)));

  if (jobs_n <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(jobs_n);
    for (unsigned i = 0; i < jobs_n; ++i) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  if (!failures.empty()) {
    std::string message = "benchmark aborted:";
    for (const std::string& f : failures) message += "\n  " + f;
    throw std::runtime_error(message);
  }

  std::sort(report.rows.begin(), report.rows.end(), [](const auto& a, const auto& b) {
    return std::tie(a.class_code, a.seed) < std::tie(b.class_code, b.seed);
  });

  for (const BenchmarkRow& row : report.rows) {
    if (report.summaries.empty() || report.summaries.back().class_code != row.class_code) {
      BenchmarkSummary summary;
      summary.class_code = row.class_code;
      summary.min_improvement_percent = row.improvement_percent;
      summary.max_improvement_percent = row.improvement_percent;
      report.summaries.push_back(summary);
    }
    BenchmarkSummary& summary = report.summaries.back();
    ++summary.instances;
    summary.mean_improvement_percent += row.improvement_percent;
    summary.min_improvement_percent =
        std::min(summary.min_improvement_percent, row.improvement_percent);
    summary.max_improvement_percent =
        std::max(summary.max_improvement_percent, row.improvement_percent);
  }
  for (BenchmarkSummary& summary : report.summaries) {
    summary.mean_improvement_percent /= summary.instances;
  }

  return report;
}

std::string benchmark_csv(const BenchmarkReport& report) {
  std::ostringstream out;
  out << "class,seed,j_init,j_final,improvement_percent,construct_ms,improve_ms,sweeps,"
         "feasible_init,feasible_final\n";
  for (const BenchmarkRow& row : report.rows) {
    out << row.class_code << "," << row.seed << "," << format_double(row.j_init) << ","
        << format_double(row.j_final) << "," << format_double(row.improvement_percent) << ",";
    if (report.include_timings) {
      out << format_double(row.construct_ms) << "," << format_double(row.improve_ms);
    } else {
      out << ",";
    }
    out << "," << row.sweeps << "," << (row.feasible_init ? "true" : "false") << ","
        << (row.feasible_final ? "true" : "false") << "\n";
  }
  out << "class,instances,mean_improvement_percent,min_improvement_percent,"
         "max_improvement_percent\n";
  for (const BenchmarkSummary& summary : report.summaries) {
    out << summary.class_code << "," << summary.instances << ","
        << format_double(summary.mean_improvement_percent) << ","
        << format_double(summary.min_improvement_percent) << ","
        << format_double(summary.max_improvement_percent) << "\n";
  }
  return out.str();
}

void write_benchmark_csv(const BenchmarkReport& report, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << benchmark_csv(report);
}

}  // namespace mrta
