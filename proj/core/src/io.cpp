#include "mrta/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mrta/feasibility.hpp"

namespace mrta {

using json = nlohmann::ordered_json;

std::string format_double(double value) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, result.ptr);
}

namespace {

constexpr const char* kInstanceFormat = "mrta-instance";
constexpr const char* kPlanFormat = "mrta-plan";
constexpr int kFormatVersion = 1;

json position_to_json(const Position& p) { return json::array({p.x, p.y}); }

Position position_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ParseError(where + ": expected [x, y]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

const json& require(const json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(where + ": missing \"" + key + "\"");
  return *it;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

json weights_to_json(const ObjectiveWeights& w) {
  return {{"makespan", w.makespan}, {"avg_finish", w.avg_finish}, {"avg_distance", w.avg_distance}};
}

ObjectiveWeights weights_from_json(const json& j, const std::string& where) {
  ObjectiveWeights w;
  w.makespan = require(j, "makespan", where).get<double>();
  w.avg_finish = require(j, "avg_finish", where).get<double>();
  w.avg_distance = require(j, "avg_distance", where).get<double>();
  return w;
}

}  // namespace

std::string serialize_instance(const InstanceDocument& doc) {
  const Instance& inst = doc.instance;
  json root;
  root["format"] = kInstanceFormat;
  root["version"] = doc.meta.format_version;

  json meta = json::object();
  if (doc.meta.seed) meta["seed"] = *doc.meta.seed;
  if (doc.meta.class_code) meta["class"] = *doc.meta.class_code;
  if (doc.meta.rng) meta["rng"] = *doc.meta.rng;
  root["meta"] = meta;

  root["weights"] = weights_to_json(inst.weights);

  json robots = json::array();
  for (const Robot& r : inst.robots) {
    json robot = {{"id", r.id}, {"start", position_to_json(r.start_position)}, {"speed", r.speed}};
    if (r.end_position) robot["end"] = position_to_json(*r.end_position);
    robots.push_back(std::move(robot));
  }
  root["robots"] = std::move(robots);

  json tasks = json::array();
  for (const Task& t : inst.tasks) {
    tasks.push_back(
        {{"id", t.id}, {"type", t.type_label}, {"position", position_to_json(t.position)}});
  }
  root["tasks"] = std::move(tasks);

  json alliances = json::array();
  for (const Alliance& a : inst.alliances) {
    alliances.push_back({{"id", a.id}, {"members", a.members}});
  }
  root["alliances"] = std::move(alliances);

  json costs = json::array();
  {
    // Merge finite and incapable entries in (task, alliance) order.
    auto finite = inst.static_costs.finite_entries().begin();
    auto finite_end = inst.static_costs.finite_entries().end();
    auto inf = inst.static_costs.incapable_entries().begin();
    auto inf_end = inst.static_costs.incapable_entries().end();
    while (finite != finite_end || inf != inf_end) {
      const bool take_finite = inf == inf_end || (finite != finite_end && finite->first < *inf);
      if (take_finite) {
        costs.push_back({{"task", finite->first.first},
                         {"alliance", finite->first.second},
                         {"duration", finite->second}});
        ++finite;
      } else {
        costs.push_back({{"task", inf->first}, {"alliance", inf->second}, {"duration", "inf"}});
        ++inf;
      }
    }
  }
  root["static_costs"] = std::move(costs);

  json precedence = json::array();
  for (const auto& [before, after] : inst.precedence.pairs()) {
    precedence.push_back(json::array({before, after}));
  }
  root["precedence"] = std::move(precedence);

  return root.dump(2) + "\n";
}

namespace {

InstanceDocument decode_instance(const json& root) {
  InstanceDocument doc;
  doc.meta.format_version = require(root, "version", "document").get<int>();
  std::vector<std::string> problems;

  if (auto meta = root.find("meta"); meta != root.end()) {
    if (meta->contains("seed")) doc.meta.seed = (*meta)["seed"].get<std::uint64_t>();
    if (meta->contains("class")) doc.meta.class_code = (*meta)["class"].get<std::string>();
    if (meta->contains("rng")) doc.meta.rng = (*meta)["rng"].get<std::string>();
  }

  doc.instance.weights = weights_from_json(require(root, "weights", "document"), "weights");

  const json& robots = require(root, "robots", "document");
  for (std::size_t i = 0; i < robots.size(); ++i) {
    const json& r = robots[i];
    const std::string where = "robots[" + std::to_string(i) + "]";
    Robot robot;
    robot.id = require(r, "id", where).get<int>();
    robot.start_position = position_from_json(require(r, "start", where), where + ".start");
    robot.speed = require(r, "speed", where).get<double>();
    if (r.contains("end")) robot.end_position = position_from_json(r["end"], where + ".end");
    doc.instance.robots.push_back(std::move(robot));
  }

  const json& tasks = require(root, "tasks", "document");
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const json& t = tasks[i];
    const std::string where = "tasks[" + std::to_string(i) + "]";
    Task task;
    task.id = require(t, "id", where).get<int>();
    task.type_label = require(t, "type", where).get<std::string>();
    task.position = position_from_json(require(t, "position", where), where + ".position");
    doc.instance.tasks.push_back(std::move(task));
  }

  const json& alliances = require(root, "alliances", "document");
  for (std::size_t i = 0; i < alliances.size(); ++i) {
    const json& a = alliances[i];
    const std::string where = "alliances[" + std::to_string(i) + "]";
    Alliance alliance;
    alliance.id = require(a, "id", where).get<int>();
    alliance.members = require(a, "members", where).get<std::vector<int>>();
    doc.instance.alliances.push_back(std::move(alliance));
  }

  const json& costs = require(root, "static_costs", "document");
  for (std::size_t i = 0; i < costs.size(); ++i) {
    const json& entry = costs[i];
    const std::string where = "static_costs[" + std::to_string(i) + "]";
    const int task_id = require(entry, "task", where).get<int>();
    const int alliance_id = require(entry, "alliance", where).get<int>();
    const json& duration = require(entry, "duration", where);
    if (duration.is_string()) {
      if (duration.get<std::string>() != "inf") {
        problems.push_back(where + ": duration must be a number or \"inf\"");
        continue;
      }
      doc.instance.static_costs.set_incapable(task_id, alliance_id);
    } else if (duration.is_number()) {
      const double value = duration.get<double>();
      if (!(value >= 0.0) || !std::isfinite(value)) {
        problems.push_back(where + ": duration must be finite and >= 0");
        continue;
      }
      doc.instance.static_costs.set(task_id, alliance_id, value);
    } else {
      problems.push_back(where + ": duration must be a number or \"inf\"");
    }
  }

  const json& precedence = require(root, "precedence", "document");
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < precedence.size(); ++i) {
    const json& p = precedence[i];
    const std::string where = "precedence[" + std::to_string(i) + "]";
    if (!p.is_array() || p.size() != 2) {
      problems.push_back(where + ": expected [before, after]");
      continue;
    }
    pairs.emplace_back(p[0].get<int>(), p[1].get<int>());
  }
  doc.instance.precedence = PrecedenceSet(std::move(pairs));

  if (!problems.empty()) {
    std::string message = "invalid instance document:";
    for (const std::string& p : problems) message += "\n" + p;
    throw ParseError(message);
  }
  return doc;
}

}  // namespace

InstanceDocument parse_instance_text(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed document: ") + e.what());
  }
  if (!root.is_object()) throw ParseError("malformed document: top level must be an object");
  if (require(root, "format", "document").get<std::string>() != kInstanceFormat) {
    throw ParseError("document: not an instance file");
  }
  if (require(root, "version", "document").get<int>() != kFormatVersion) {
    throw ParseError("document: unsupported format version");
  }

  InstanceDocument doc;
  try {
    doc = decode_instance(root);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed document: ") + e.what());
  }

  ValidationReport report = validate(doc.instance);
  if (!report.ok()) {
    throw ParseError("invalid instance:\n" + report.to_string());
  }
  return doc;
}

void write_instance_file(const InstanceDocument& doc, const std::filesystem::path& path) {
  write_file(path, serialize_instance(doc));
}

InstanceDocument read_instance_file(const std::filesystem::path& path) {
  try {
    return parse_instance_text(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::string instance_checksum(const InstanceDocument& doc) {
  const std::string text = serialize_instance(doc);
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 0x100000001b3ull;
  }
  char buffer[32];
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, hash, 16);
  return "fnv1a64:" + std::string(buffer, result.ptr);
}

namespace {

json timing_to_json(const VertexTiming& t) {
  return {{"vertex", to_string(t.vertex)},
          {"arrival", t.arrival},
          {"start", t.start},
          {"finish", t.finish},
          {"wait", t.wait},
          {"travel_time", t.travel_time},
          {"travel_distance", t.travel_distance}};
}

Vertex vertex_from_string(const std::string& s, const std::string& where) {
  if (s.size() < 2) throw ParseError(where + ": bad vertex \"" + s + "\"");
  const int id = std::atoi(s.c_str() + 1);
  switch (s[0]) {
    case 's':
      return Vertex::start(id);
    case 't':
      return Vertex::task(id);
    case 'e':
      return Vertex::end(id);
    default:
      throw ParseError(where + ": bad vertex \"" + s + "\"");
  }
}

}  // namespace

std::string serialize_plan(const PlanDocument& doc) {
  json root;
  root["format"] = kPlanFormat;
  root["version"] = kFormatVersion;
  root["instance"] = {{"path", doc.instance_path}, {"checksum", doc.instance_checksum}};

  json solver = json::object();
  solver["algorithm"] = doc.solver.algorithm;
  solver["sweeps"] = doc.solver.sweeps;
  if (doc.solver.seed) solver["seed"] = *doc.solver.seed;
  root["solver"] = std::move(solver);

  root["weights"] = weights_to_json(doc.weights);

  json routes = json::array();
  for (std::size_t i = 0; i < doc.plan.routes.size(); ++i) {
    routes.push_back({{"robot", static_cast<int>(i) + 1}, {"tasks", doc.plan.routes[i]}});
  }
  root["routes"] = std::move(routes);
  root["complete"] = doc.plan.complete;

  json assignment = json::array();
  for (const auto& [task_id, alliance_id] : doc.plan.assignment) {
    assignment.push_back({{"task", task_id}, {"alliance", alliance_id}});
  }
  root["assignment"] = std::move(assignment);

  root["objective"] = {{"makespan", doc.objective.makespan},
                       {"avg_finish", doc.objective.avg_finish},
                       {"avg_distance", doc.objective.avg_distance},
                       {"total", doc.objective.total}};

  json schedule = json::array();
  for (const RobotTimeline& timeline : doc.schedule.robots) {
    json vertices = json::array();
    for (const VertexTiming& timing : timeline.vertices) vertices.push_back(timing_to_json(timing));
    schedule.push_back({{"robot", timeline.robot},
                        {"finishing_time", timeline.finishing_time},
                        {"total_distance", timeline.total_distance},
                        {"vertices", std::move(vertices)}});
  }
  root["schedule"] = std::move(schedule);

  return root.dump(2) + "\n";
}

namespace {

PlanDocument decode_plan(const json& root) {
  PlanDocument doc;
  const json& instance = require(root, "instance", "document");
  doc.instance_path = require(instance, "path", "instance").get<std::string>();
  doc.instance_checksum = require(instance, "checksum", "instance").get<std::string>();

  const json& solver = require(root, "solver", "document");
  doc.solver.algorithm = require(solver, "algorithm", "solver").get<std::string>();
  doc.solver.sweeps = require(solver, "sweeps", "solver").get<std::uint32_t>();
  if (solver.contains("seed")) doc.solver.seed = solver["seed"].get<std::uint64_t>();

  doc.weights = weights_from_json(require(root, "weights", "document"), "weights");

  const json& routes = require(root, "routes", "document");
  for (const json& r : routes) {
    doc.plan.routes.push_back(require(r, "tasks", "routes").get<std::vector<int>>());
  }
  doc.plan.complete = require(root, "complete", "document").get<bool>();

  for (const json& a : require(root, "assignment", "document")) {
    doc.plan.assignment[require(a, "task", "assignment").get<int>()] =
        require(a, "alliance", "assignment").get<int>();
  }

  const json& objective = require(root, "objective", "document");
  doc.objective.makespan = require(objective, "makespan", "objective").get<double>();
  doc.objective.avg_finish = require(objective, "avg_finish", "objective").get<double>();
  doc.objective.avg_distance = require(objective, "avg_distance", "objective").get<double>();
  doc.objective.total = require(objective, "total", "objective").get<double>();

  for (const json& r : require(root, "schedule", "document")) {
    RobotTimeline timeline;
    timeline.robot = require(r, "robot", "schedule").get<int>();
    timeline.finishing_time = require(r, "finishing_time", "schedule").get<double>();
    timeline.total_distance = require(r, "total_distance", "schedule").get<double>();
    for (const json& v : require(r, "vertices", "schedule")) {
      VertexTiming timing;
      timing.vertex = vertex_from_string(require(v, "vertex", "schedule").get<std::string>(),
                                         "schedule");
      timing.arrival = require(v, "arrival", "schedule").get<double>();
      timing.start = require(v, "start", "schedule").get<double>();
      timing.finish = require(v, "finish", "schedule").get<double>();
      timing.wait = require(v, "wait", "schedule").get<double>();
      timing.travel_time = require(v, "travel_time", "schedule").get<double>();
      timing.travel_distance = require(v, "travel_distance", "schedule").get<double>();
      timeline.vertices.push_back(timing);
    }
    doc.schedule.robots.push_back(std::move(timeline));
  }

  return doc;
}

}  // namespace

PlanDocument parse_plan_text(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed document: ") + e.what());
  }
  if (!root.is_object() ||
      require(root, "format", "document").get<std::string>() != kPlanFormat) {
    throw ParseError("document: not a plan file");
  }
  if (require(root, "version", "document").get<int>() != kFormatVersion) {
    throw ParseError("document: unsupported format version");
  }
  try {
    return decode_plan(root);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed document: ") + e.what());
  }
}

void write_plan_file(const PlanDocument& doc, const std::filesystem::path& path) {
  write_file(path, serialize_plan(doc));
}

PlanDocument read_plan_file(const std::filesystem::path& path) {
  try {
    return parse_plan_text(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

namespace {

bool close_relative(double a, double b, double tolerance) {
  const double scale = std::max({std::fabs(a), std::fabs(b), 1.0});
  return std::fabs(a - b) <= tolerance * scale;
}

}  // namespace

VerifyOutcome verify_plan(const PlanDocument& doc, const InstanceDocument& instance) {
  constexpr double kTolerance = 1e-9;
  VerifyOutcome outcome;
  auto problem = [&outcome](std::string message) {
    outcome.ok = false;
    outcome.problems.push_back(std::move(message));
  };

  const std::string checksum = instance_checksum(instance);
  if (checksum != doc.instance_checksum) {
    problem("instance checksum mismatch: plan was solved against " + doc.instance_checksum +
            ", given instance is " + checksum);
    return outcome;
  }

  FeasibilityVerdict verdict;
  try {
    verdict = check_feasibility(doc.plan, instance.instance);
  } catch (const std::invalid_argument& e) {
    problem(std::string("plan does not fit the instance: ") + e.what());
    return outcome;
  }
  if (!verdict.feasible) {
    for (const Violation& v : verdict.violations) {
      if (v.kind == Violation::Kind::IncapableAssignment) {
        problem("task " + std::to_string(v.task) + " is assigned to an incapable alliance");
      } else {
        std::string cycle = "augmented plan contains a cycle through {";
        for (std::size_t i = 0; i < v.witness.size(); ++i) {
          if (i) cycle += ", ";
          cycle += to_string(v.witness[i]);
        }
        problem(cycle + "}");
      }
    }
    return outcome;
  }

  Instance weighted = instance.instance;
  weighted.weights = doc.weights;  // the plan's stored weights are authoritative
  const AugmentedPlan augmented = augment(doc.plan, weighted.precedence);
  const Schedule schedule = simulate(augmented, weighted);
  const ObjectiveBreakdown objective = breakdown_from(schedule, weighted.weights);

  if (!close_relative(objective.total, doc.objective.total, kTolerance) ||
      !close_relative(objective.makespan, doc.objective.makespan, kTolerance) ||
      !close_relative(objective.avg_finish, doc.objective.avg_finish, kTolerance) ||
      !close_relative(objective.avg_distance, doc.objective.avg_distance, kTolerance)) {
    problem("stored objective does not match re-simulation: stored total " +
            format_double(doc.objective.total) + ", recomputed " + format_double(objective.total));
  }

  if (schedule.robots.size() != doc.schedule.robots.size()) {
    problem("stored schedule has wrong robot count");
    return outcome;
  }
  for (std::size_t i = 0; i < schedule.robots.size(); ++i) {
    const RobotTimeline& fresh = schedule.robots[i];
    const RobotTimeline& stored = doc.schedule.robots[i];
    if (fresh.vertices.size() != stored.vertices.size()) {
      problem("robot " + std::to_string(fresh.robot) + ": stored timeline has wrong length");
      continue;
    }
    if (!close_relative(fresh.finishing_time, stored.finishing_time, kTolerance) ||
        !close_relative(fresh.total_distance, stored.total_distance, kTolerance)) {
      problem("robot " + std::to_string(fresh.robot) + ": stored totals do not reproduce");
    }
    for (std::size_t v = 0; v < fresh.vertices.size(); ++v) {
      const VertexTiming& a = fresh.vertices[v];
      const VertexTiming& b = stored.vertices[v];
      if (a.vertex != b.vertex || !close_relative(a.arrival, b.arrival, kTolerance) ||
          !close_relative(a.start, b.start, kTolerance) ||
          !close_relative(a.finish, b.finish, kTolerance) ||
          !close_relative(a.wait, b.wait, kTolerance) ||
          !close_relative(a.travel_time, b.travel_time, kTolerance) ||
          !close_relative(a.travel_distance, b.travel_distance, kTolerance)) {
        problem("robot " + std::to_string(fresh.robot) + ", vertex " + to_string(a.vertex) +
                ": stored times do not reproduce");
      }
    }
  }

  return outcome;
}

namespace {

const char* robot_color(int robot_id) {
  static constexpr const char* kPalette[] = {"red",    "blue",   "green3", "orange",
                                             "purple", "brown",  "cyan3",  "magenta"};
  return kPalette[static_cast<std::size_t>(robot_id - 1) % std::size(kPalette)];
}

}  // namespace

std::string export_dot(const AugmentedPlan& plan, const Instance& instance) {
  std::ostringstream out;
  out << "digraph mission {\n";
  out << "  rankdir=LR;\n";

  const int m = static_cast<int>(plan.base.routes.size());
  for (int robot = 1; robot <= m; ++robot) {
    out << "  s" << robot << " [shape=pentagon, color=" << robot_color(robot) << ", label=\"s"
        << robot << "\"];\n";
  }
  for (const auto& [task_id, alliance_id] : plan.base.assignment) {
    const Task& task = instance.task(task_id);
    out << "  t" << task_id << " [shape=circle, label=\"t" << task_id << "^" << task.type_label
        << "\"];\n";
  }
  for (int robot = 1; robot <= m; ++robot) {
    out << "  e" << robot << " [shape=triangle, color=" << robot_color(robot) << ", label=\"e"
        << robot << "\"];\n";
  }

  for (int robot = 1; robot <= m; ++robot) {
    const auto seq = plan.base.vertex_sequence(robot);
    for (std::size_t i = 1; i < seq.size(); ++i) {
      out << "  " << to_string(seq[i - 1]) << " -> " << to_string(seq[i])
          << " [color=" << robot_color(robot) << "];\n";
    }
  }
  for (const auto& [before, after] : plan.precedence_arcs) {
    out << "  t" << before << " -> t" << after << " [color=black, style=dashed];\n";
  }
  out << "}\n";
  return out.str();
}

std::string export_gantt(const AugmentedPlan& plan, const Schedule& schedule) {
  if (plan.base.routes.size() != schedule.robots.size()) {
    throw std::invalid_argument("schedule does not belong to the plan");
  }
  std::ostringstream out;
  out << "robot,segment,task,t_start,t_end\n";
  for (const RobotTimeline& timeline : schedule.robots) {
    for (const VertexTiming& timing : timeline.vertices) {
      if (timing.vertex.kind == Vertex::Kind::Start) continue;
      const std::string task_field =
          timing.vertex.kind == Vertex::Kind::Task ? std::to_string(timing.vertex.id) : "";
      const double travel_begin = timing.arrival - timing.travel_time;
      if (timing.travel_time > 0.0) {
        out << timeline.robot << ",travel," << task_field << "," << format_double(travel_begin)
            << "," << format_double(timing.arrival) << "\n";
      }
      if (timing.wait > 0.0) {
        out << timeline.robot << ",wait," << task_field << "," << format_double(timing.arrival)
            << "," << format_double(timing.start) << "\n";
      }
      if (timing.vertex.kind == Vertex::Kind::Task) {
        out << timeline.robot << ",task," << task_field << "," << format_double(timing.start)
            << "," << format_double(timing.finish) << "\n";
      }
    }
  }
  return out.str();
}

}  // namespace mrta
