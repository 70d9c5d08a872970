// Command line front end: generate benchmark instances, solve them, verify
// and export stored plans, run the exact oracle, and drive the benchmark
// harness. Exit codes: 0 success, 1 validation/infeasibility failure, 2 usage.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mrta/benchmark.hpp"
#include "mrta/construct.hpp"
#include "mrta/exact.hpp"
#include "mrta/feasibility.hpp"
#include "mrta/generator.hpp"
#include "mrta/io.hpp"
#include "mrta/local_search.hpp"

namespace {

namespace fs = std::filesystem;

mrta::ObjectiveWeights parse_weights(const std::string& spec) {
  std::istringstream in(spec);
  mrta::ObjectiveWeights w{};
  char comma1 = 0;
  char comma2 = 0;
  if (!(in >> w.makespan >> comma1 >> w.avg_finish >> comma2 >> w.avg_distance) ||
      comma1 != ',' || comma2 != ',' || !in.eof()) {
    throw CLI::ValidationError("--weights", "expected w1,w2,w3");
  }
  return w;
}

void print_objective(const mrta::ObjectiveBreakdown& objective) {
  std::cout << "  makespan:     " << mrta::format_double(objective.makespan) << " s\n"
            << "  avg finish:   " << mrta::format_double(objective.avg_finish) << " s\n"
            << "  avg distance: " << mrta::format_double(objective.avg_distance) << " m\n"
            << "  total:        " << mrta::format_double(objective.total) << "\n";
}

void print_routes(const mrta::MissionPlan& plan) {
  for (std::size_t i = 0; i < plan.routes.size(); ++i) {
    std::cout << "  robot " << i + 1 << ":";
    for (int task : plan.routes[i]) std::cout << " t" << task;
    std::cout << "\n";
  }
}

int cmd_generate(const std::string& class_code, int count, std::uint64_t seed,
                 const std::string& out_dir) {
  const mrta::ProblemClass pc = mrta::parse_class_code(class_code);
  fs::create_directories(out_dir);
  for (int i = 0; i < count; ++i) {
    const std::uint64_t instance_seed = seed + static_cast<std::uint64_t>(i);
    mrta::InstanceDocument doc;
    doc.instance = mrta::generate({pc, instance_seed});
    doc.meta.seed = instance_seed;
    doc.meta.class_code = pc.code();
    doc.meta.rng = mrta::kGeneratorRngName;
    const fs::path path =
        fs::path(out_dir) / (pc.code() + "_s" + std::to_string(instance_seed) + ".json");
    mrta::write_instance_file(doc, path);
    std::cout << path.string() << "\n";
  }
  return 0;
}

int cmd_solve(const std::string& instance_path, std::string out_path, bool no_improve,
              const std::optional<std::string>& weights_spec, std::uint32_t max_sweeps,
              double min_improvement) {
  mrta::InstanceDocument doc = mrta::read_instance_file(instance_path);
  if (weights_spec) {
    doc.instance.weights = parse_weights(*weights_spec);
  }

  mrta::ConstructResult constructed = mrta::construct(doc.instance);
  mrta::MissionPlan plan = constructed.plan;
  mrta::ObjectiveBreakdown objective = constructed.objective;

  mrta::PlanDocument plan_doc;
  plan_doc.solver.algorithm = "construct";
  if (!no_improve) {
    mrta::SearchConfig config;
    config.max_sweeps = max_sweeps;
    config.min_improvement = min_improvement;
    mrta::ImproveResult improved = mrta::improve(plan, doc.instance, config);
    plan = std::move(improved.plan);
    objective = improved.objective;
    plan_doc.solver.algorithm = "construct+improve";
    plan_doc.solver.sweeps = improved.stats.sweeps;
    std::cout << "improvement: " << mrta::format_double(improved.stats.improvement_percent)
              << "% over " << improved.stats.sweeps << " sweeps\n";
  }

  const mrta::FeasibilityVerdict verdict = mrta::check_feasibility(plan, doc.instance);
  if (!verdict.feasible) {
    std::cerr << "solver produced an infeasible plan\n";
    return 1;
  }

  plan_doc.instance_path = instance_path;
  plan_doc.instance_checksum = mrta::instance_checksum(doc);
  plan_doc.plan = plan;
  plan_doc.schedule = mrta::simulate(mrta::augment(plan, doc.instance.precedence), doc.instance);
  plan_doc.objective = objective;
  plan_doc.weights = doc.instance.weights;
  plan_doc.solver.seed = doc.meta.seed;

  if (out_path.empty()) {
    out_path = fs::path(instance_path).replace_extension(".plan.json").string();
  }
  mrta::write_plan_file(plan_doc, out_path);

  std::cout << "plan written to " << out_path << "\n";
  print_routes(plan);
  print_objective(objective);
  return 0;
}

mrta::InstanceDocument load_instance_for_plan(const mrta::PlanDocument& plan_doc,
                                              const fs::path& plan_path,
                                              const std::string& instance_override) {
  if (!instance_override.empty()) {
    return mrta::read_instance_file(instance_override);
  }
  const fs::path stored = plan_doc.instance_path;
  if (fs::exists(stored)) {
    return mrta::read_instance_file(stored);
  }
  // Fall back to the path interpreted relative to the plan file.
  return mrta::read_instance_file(plan_path.parent_path() / stored);
}

int cmd_verify(const std::string& plan_path, const std::string& instance_path) {
  const mrta::PlanDocument plan_doc = mrta::read_plan_file(plan_path);
  const mrta::InstanceDocument instance_doc =
      load_instance_for_plan(plan_doc, plan_path, instance_path);
  const mrta::VerifyOutcome outcome = mrta::verify_plan(plan_doc, instance_doc);
  if (!outcome.ok) {
    for (const std::string& problem : outcome.problems) {
      std::cerr << "FAIL: " << problem << "\n";
    }
    return 1;
  }
  std::cout << "plan verifies: feasible, schedule and objective reproduce\n";
  return 0;
}

int cmd_export(const std::string& plan_path, const std::string& format,
               const std::string& instance_path, const std::string& out_path) {
  const mrta::PlanDocument plan_doc = mrta::read_plan_file(plan_path);
  const mrta::InstanceDocument instance_doc =
      load_instance_for_plan(plan_doc, plan_path, instance_path);

  mrta::Instance instance = instance_doc.instance;
  instance.weights = plan_doc.weights;
  const mrta::AugmentedPlan augmented = mrta::augment(plan_doc.plan, instance.precedence);

  std::string text;
  if (format == "dot") {
    text = mrta::export_dot(augmented, instance);
  } else {
    text = mrta::export_gantt(augmented, mrta::simulate(augmented, instance));
  }

  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << text;
    std::cout << "written to " << out_path << "\n";
  }
  return 0;
}

int cmd_exact(const std::string& instance_path, int max_tasks,
              const std::optional<std::string>& weights_spec) {
  mrta::InstanceDocument doc = mrta::read_instance_file(instance_path);
  if (weights_spec) {
    doc.instance.weights = parse_weights(*weights_spec);
  }
  const mrta::OracleResult result = mrta::solve_exact(doc.instance, max_tasks);
  std::cout << "optimum over " << result.plans_enumerated << " enumerated plans:\n";
  print_routes(result.best_plan);
  print_objective(result.best_objective);
  return 0;
}

int cmd_benchmark(const std::string& classes_spec, int count, std::uint64_t seed,
                  const std::string& out_path, bool no_timing, unsigned jobs,
                  const std::optional<std::string>& weights_spec, std::uint32_t max_sweeps,
                  double min_improvement) {
  mrta::BenchmarkOptions options;
  if (!classes_spec.empty()) {
    std::istringstream in(classes_spec);
    std::string code;
    while (std::getline(in, code, ',')) {
      options.classes.push_back(mrta::parse_class_code(code));
    }
  }
  options.instances_per_class = count;
  options.seed = seed;
  options.include_timings = !no_timing;
  options.jobs = jobs;
  if (weights_spec) options.weights = parse_weights(*weights_spec);
  options.search.max_sweeps = max_sweeps;
  options.search.min_improvement = min_improvement;
  options.repro_dir = fs::path(out_path).parent_path();

  const mrta::BenchmarkReport report = mrta::run_benchmark(options);
  mrta::write_benchmark_csv(report, out_path);

  std::cout << report.rows.size() << " runs written to " << out_path << "\n";
  for (const mrta::BenchmarkSummary& summary : report.summaries) {
    std::cout << "  " << summary.class_code << ": mean improvement "
              << mrta::format_double(summary.mean_improvement_percent) << "% (min "
              << mrta::format_double(summary.min_improvement_percent) << "%, max "
              << mrta::format_double(summary.max_improvement_percent) << "%)\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-robot task allocation and scheduling solver"};
  app.require_subcommand(1);

  // generate
  std::string gen_class;
  int gen_count = 1;
  std::uint64_t gen_seed = 1;
  std::string gen_out = ".";
  CLI::App* generate = app.add_subcommand("generate", "Generate benchmark instances");
  generate->add_option("--class", gen_class, "Problem class code, e.g. 3A2BCD")->required();
  generate->add_option("--count", gen_count, "Number of instances")->check(CLI::PositiveNumber);
  generate->add_option("--seed", gen_seed, "Seed of the first instance");
  generate->add_option("--out", gen_out, "Output directory");

  // solve
  std::string solve_instance;
  std::string solve_out;
  bool solve_no_improve = false;
  std::optional<std::string> solve_weights;
  std::uint32_t solve_max_sweeps = 0;
  double solve_min_improvement = 0.0;
  CLI::App* solve = app.add_subcommand("solve", "Construct and improve a mission plan");
  solve->add_option("instance", solve_instance, "Instance file")->required();
  solve->add_option("--out", solve_out, "Plan output path (default: <instance>.plan.json)");
  solve->add_flag("--no-improve", solve_no_improve, "Skip the local search");
  solve->add_option("--weights", solve_weights, "Objective weights w1,w2,w3");
  solve->add_option("--max-sweeps", solve_max_sweeps, "Local search sweep limit (0 = unlimited)");
  solve->add_option("--min-improvement", solve_min_improvement,
                    "Stop when a sweep improves the objective by less than this");

  // verify
  std::string verify_plan_path;
  std::string verify_instance;
  CLI::App* verify = app.add_subcommand("verify", "Re-check a stored plan against its instance");
  verify->add_option("plan", verify_plan_path, "Plan file")->required();
  verify->add_option("--instance", verify_instance, "Instance file (default: path stored in plan)");

  // export
  std::string export_plan_path;
  std::string export_format;
  std::string export_instance;
  std::string export_out;
  CLI::App* export_cmd = app.add_subcommand("export", "Export a stored plan as dot or gantt CSV");
  export_cmd->add_option("plan", export_plan_path, "Plan file")->required();
  export_cmd->add_option("--format", export_format, "dot or gantt")
      ->required()
      ->check(CLI::IsMember({"dot", "gantt"}));
  export_cmd->add_option("--instance", export_instance, "Instance file override");
  export_cmd->add_option("--out", export_out, "Output path (default: stdout)");

  // exact
  std::string exact_instance;
  int exact_max_tasks = 7;
  std::optional<std::string> exact_weights;
  CLI::App* exact = app.add_subcommand("exact", "Exhaustive optimum for tiny instances");
  exact->add_option("instance", exact_instance, "Instance file")->required();
  exact->add_option("--max-tasks", exact_max_tasks, "Refusal limit");
  exact->add_option("--weights", exact_weights, "Objective weights w1,w2,w3");

  // benchmark
  std::string bench_classes;
  int bench_count = 100;
  std::uint64_t bench_seed = 1;
  std::string bench_out;
  bool bench_no_timing = false;
  unsigned bench_jobs = 0;
  std::optional<std::string> bench_weights;
  std::uint32_t bench_max_sweeps = 0;
  double bench_min_improvement = 0.0;
  CLI::App* benchmark =
      app.add_subcommand("benchmark", "generate/construct/improve/verify over many instances");
  benchmark->add_option("--classes", bench_classes,
                        "Comma separated class codes (default: all six)");
  benchmark->add_option("--count", bench_count, "Instances per class")->check(CLI::PositiveNumber);
  benchmark->add_option("--seed", bench_seed, "Seed of the first instance");
  benchmark->add_option("--out", bench_out, "CSV report path")->required();
  benchmark->add_flag("--no-timing", bench_no_timing,
                      "Omit wall-clock columns so reruns are byte-identical");
  benchmark->add_option("--jobs", bench_jobs, "Worker threads (0 = hardware)");
  benchmark->add_option("--weights", bench_weights, "Objective weights w1,w2,w3");
  benchmark->add_option("--max-sweeps", bench_max_sweeps, "Local search sweep limit");
  benchmark->add_option("--min-improvement", bench_min_improvement,
                        "Local search improvement threshold");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (generate->parsed()) return cmd_generate(gen_class, gen_count, gen_seed, gen_out);
    if (solve->parsed()) {
      return cmd_solve(solve_instance, solve_out, solve_no_improve, solve_weights,
                       solve_max_sweeps, solve_min_improvement);
    }
    if (verify->parsed()) return cmd_verify(verify_plan_path, verify_instance);
    if (export_cmd->parsed()) {
      return cmd_export(export_plan_path, export_format, export_instance, export_out);
    }
    if (exact->parsed()) return cmd_exact(exact_instance, exact_max_tasks, exact_weights);
    if (benchmark->parsed()) {
      return cmd_benchmark(bench_classes, bench_count, bench_seed, bench_out, bench_no_timing,
                           bench_jobs, bench_weights, bench_max_sweeps, bench_min_improvement);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
