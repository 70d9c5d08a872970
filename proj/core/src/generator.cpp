#include "mrta/generator.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace mrta {

const char* const kGeneratorRngName = "mt19937_64/u53";

std::string ProblemClass::code() const {
  return std::to_string(count_a) + "A" + std::to_string(count_each_bcd) + "BCD";
}

ProblemClass parse_class_code(const std::string& code) {
  std::size_t pos = 0;
  auto read_number = [&code, &pos]() {
    std::size_t begin = pos;
    while (pos < code.size() && std::isdigit(static_cast<unsigned char>(code[pos]))) ++pos;
    if (pos == begin) throw std::invalid_argument("bad problem class code: " + code);
    return std::stoi(code.substr(begin, pos - begin));
  };
  ProblemClass pc;
  pc.count_a = read_number();
  if (pos >= code.size() || code[pos] != 'A') {
    throw std::invalid_argument("bad problem class code: " + code);
  }
  ++pos;
  pc.count_each_bcd = read_number();
  if (code.substr(pos) != "BCD") {
    throw std::invalid_argument("bad problem class code: " + code);
  }
  if (pc.count_a < 1 || pc.count_each_bcd < 1) {
    throw std::invalid_argument("problem class counts must be >= 1: " + code);
  }
  return pc;
}

std::vector<ProblemClass> standard_classes() {
  return {{3, 1}, {3, 2}, {3, 3}, {6, 1}, {6, 2}, {6, 3}};
}

std::pair<std::vector<Task>, PrecedenceSet> class_tasks_and_precedence(const ProblemClass& pc) {
  if (pc.count_a < 3) {
    throw std::invalid_argument("problem class needs at least three type-A tasks");
  }
  if (pc.count_each_bcd < 1) {
    throw std::invalid_argument("problem class needs at least one task per type B, C, D");
  }

  std::vector<Task> tasks;
  tasks.reserve(static_cast<std::size_t>(pc.task_count()));
  int next_id = 1;
  auto add_type = [&tasks, &next_id](const char* label, int count) {
    for (int i = 0; i < count; ++i) {
      Task task;
      task.id = next_id++;
      task.type_label = label;
      tasks.push_back(std::move(task));
    }
  };
  add_type("A", pc.count_a);
  add_type("B", pc.count_each_bcd);
  add_type("C", pc.count_each_bcd);
  add_type("D", pc.count_each_bcd);

  const int a = pc.count_a;
  const int b = pc.count_each_bcd;
  const int c = pc.count_each_bcd;
  PrecedenceSet precedence(std::vector<std::pair<int, int>>{
      {1, 2},                      // first A before second A
      {3, a + 1},                  // third A before first B
      {a + b + 1, a + b + c + 1},  // first C before first D
  });
  return {std::move(tasks), std::move(precedence)};
}

Position task_position(int task_id, int total, double l1, double theta1) {
  if (task_id < 1 || task_id > total) {
    throw std::invalid_argument("task id out of range");
  }
  if (!(l1 >= 0.0 && l1 <= 10.0)) {
    throw std::invalid_argument("offset length must be in [0, 10]");
  }
  if (!(theta1 >= 0.0 && theta1 < 2.0 * std::numbers::pi)) {
    throw std::invalid_argument("offset angle must be in [0, 2*pi)");
  }
  const double theta0 = 2.0 * std::numbers::pi * task_id / total + std::numbers::pi / total;
  return {50.0 * std::cos(theta0) + l1 * std::cos(theta1),
          50.0 * std::sin(theta0) + l1 * std::sin(theta1)};
}

namespace {

// Uniform double in [0, 1) from the top 53 bits; identical on every platform,
// unlike std::uniform_real_distribution.
double uniform53(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct TypeCosts {
  const char* label;
  // parallel to the alliance list below; negative = incapable
  double by_alliance[6];
};

constexpr double kIncapable = -1.0;

// Duration per task type and alliance, seconds.
constexpr TypeCosts kDurationTable[] = {
    {"A", {100, 100, 100, kIncapable, kIncapable, kIncapable}},
    {"B", {kIncapable, kIncapable, kIncapable, 110, 100, kIncapable}},
    {"C", {kIncapable, kIncapable, kIncapable, kIncapable, 100, kIncapable}},
    {"D", {kIncapable, kIncapable, 200, kIncapable, kIncapable, 100}},
};

}  // namespace

Instance generate(const GeneratorConfig& config) {
  auto [tasks, precedence] = class_tasks_and_precedence(config.problem_class);

  Instance instance;
  instance.robots = {
      {1, {0.0, 0.0}, std::nullopt, 2.0},
      {2, {0.0, 0.0}, std::nullopt, 2.0},
      {3, {0.0, 0.0}, std::nullopt, 1.0},
  };
  instance.alliances = {
      {1, {1}}, {2, {2}}, {3, {3}}, {4, {1, 2}}, {5, {1, 3}}, {6, {2, 3}},
  };

  std::mt19937_64 rng(config.seed);
  const int total = static_cast<int>(tasks.size());
  for (Task& task : tasks) {
    const double l1 = 10.0 * uniform53(rng);
    const double theta1 = 2.0 * std::numbers::pi * uniform53(rng);
    task.position = task_position(task.id, total, l1, theta1);
  }

  for (const Task& task : tasks) {
    for (const TypeCosts& row : kDurationTable) {
      if (task.type_label != row.label) continue;
      for (std::size_t a = 0; a < 6; ++a) {
        const int alliance_id = static_cast<int>(a) + 1;
        if (row.by_alliance[a] < 0.0) {
          instance.static_costs.set_incapable(task.id, alliance_id);
        } else {
          instance.static_costs.set(task.id, alliance_id, row.by_alliance[a]);
        }
      }
    }
  }

  instance.tasks = std::move(tasks);
  instance.precedence = std::move(precedence);
  return instance;
}

}  // namespace mrta
