// io.hpp: JSON instance and schedule files, and CSV exports.
//
// Needs nlohmann/json ("json.hpp" on the include path). Keys are emitted in a
// fixed order so output is byte-stable.
#pragma once

#include <cstdio>
#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "rsched/core.hpp"
#include "rsched/schedule.hpp"

namespace rsched::io {

using Json = nlohmann::ordered_json;

inline Json graph_to_json(const Graph& g) {
  Json j;
  switch (g.kind()) {
    case TopologyKind::Path:
      j["type"] = "path";
      j["n"] = g.vertex_count();
      break;
    case TopologyKind::Cycle:
      j["type"] = "cycle";
      j["n"] = g.vertex_count();
      break;
    case TopologyKind::Tadpole:
      j["type"] = "tadpole";
      j["cycle"] = g.cycle_length();
      j["path"] = g.path_length();
      break;
    case TopologyKind::General: {
      j["type"] = "general";
      j["n"] = g.vertex_count();
      Json edges = Json::array();
      for (auto [u, v] : g.edges()) edges.push_back({u, v});
      j["edges"] = std::move(edges);
      break;
    }
  }
  return j;
}

inline Json instance_to_json(const Instance& inst) {
  Json j;
  j["graph"] = graph_to_json(inst.graph);
  Json tasks = Json::array();
  for (const auto& t : inst.tasks) tasks.push_back(Json{{"vertex", t.vertex}, {"duration", t.duration}});
  j["tasks"] = std::move(tasks);
  Json robots = Json::array();
  for (const auto& r : inst.robots) robots.push_back(Json{{"start", r.start}});
  j["robots"] = std::move(robots);
  return j;
}

namespace detail {

template <class T>
T field(const Json& j, const char* key, const char* where) {
  if (!j.is_object() || !j.contains(key))
    throw Error(ErrorCode::Parse, std::string(where) + ": missing \"" + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw Error(ErrorCode::Parse, std::string(where) + ": \"" + key + "\" has the wrong type");
  }
}

inline const Json& array_field(const Json& j, const char* key, const char* where) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_array())
    throw Error(ErrorCode::Parse, std::string(where) + ": \"" + key + "\" must be an array");
  return j.at(key);
}

inline Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::Parse, std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace detail

inline Graph graph_from_json(const Json& j) {
  auto type = detail::field<std::string>(j, "type", "graph");
  if (type == "path") return Graph::path(detail::field<int>(j, "n", "graph"));
  if (type == "cycle") return Graph::cycle(detail::field<int>(j, "n", "graph"));
  if (type == "tadpole")
    return Graph::tadpole(detail::field<int>(j, "cycle", "graph"), detail::field<int>(j, "path", "graph"));
  if (type == "general") {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (const auto& e : detail::array_field(j, "edges", "graph")) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
        throw Error(ErrorCode::Parse, "graph: each edge must be a pair of integers");
      edges.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    return Graph::general(detail::field<int>(j, "n", "graph"), edges);
  }
  throw Error(ErrorCode::Parse, "graph: unknown type \"" + type + "\"");
}

/// Parses and validates an instance. Unknown top-level keys (such as a
/// gadget's "threshold") are ignored.
inline Instance instance_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("graph")) throw Error(ErrorCode::Parse, "instance: missing \"graph\"");
  Graph g = graph_from_json(j.at("graph"));
  std::vector<Task> tasks;
  for (const auto& t : detail::array_field(j, "tasks", "instance"))
    tasks.push_back({detail::field<int>(t, "vertex", "task"), detail::field<int>(t, "duration", "task")});
  std::vector<Vertex> starts;
  for (const auto& r : detail::array_field(j, "robots", "instance"))
    starts.push_back(detail::field<int>(r, "start", "robot"));
  Instance inst = make_instance(std::move(g), std::move(tasks), starts);
  require_valid(inst);
  return inst;
}

inline std::string serialize_instance(const Instance& inst) { return instance_to_json(inst).dump(2) + "\n"; }
inline Instance parse_instance(const std::string& text) { return instance_from_json(detail::parse_text(text)); }

inline Json schedule_to_json(const Schedule& c) {
  Json segs = Json::array();
  for (const auto& seg : c.segments) {
    if (const auto* w = std::get_if<WalkSegment>(&seg)) {
      Json moves = Json::array();
      for (const auto& m : w->moves) moves.push_back({m.from, m.to});
      segs.push_back(Json{{"walk", std::move(moves)}});
    } else {
      segs.push_back(Json{{"task", std::get<TaskSegment>(seg).vertex}});
    }
  }
  return Json{{"robot", c.robot}, {"segments", std::move(segs)}};
}

inline Json schedules_to_json(const ScheduleSet& cs) {
  Json arr = Json::array();
  for (const auto& c : cs.schedules) arr.push_back(schedule_to_json(c));
  return Json{{"schedules", std::move(arr)}};
}

inline ScheduleSet schedules_from_json(const Json& j) {
  ScheduleSet cs;
  for (const auto& s : detail::array_field(j, "schedules", "schedule set")) {
    Schedule c{detail::field<int>(s, "robot", "schedule"), {}};
    for (const auto& seg : detail::array_field(s, "segments", "schedule")) {
      if (seg.is_object() && seg.contains("walk")) {
        WalkSegment w;
        for (const auto& m : detail::array_field(seg, "walk", "walk segment")) {
          if (!m.is_array() || m.size() != 2 || !m[0].is_number_integer() || !m[1].is_number_integer())
            throw Error(ErrorCode::Parse, "walk segment: each move must be a pair of integers");
          w.moves.push_back(Move{m[0].get<int>(), m[1].get<int>()});
        }
        c.segments.emplace_back(std::move(w));
      } else if (seg.is_object() && seg.contains("task")) {
        c.segments.emplace_back(TaskSegment{detail::field<int>(seg, "task", "task segment")});
      } else {
        throw Error(ErrorCode::Parse, "segment must have a \"walk\" or a \"task\" key");
      }
    }
    cs.schedules.push_back(std::move(c));
  }
  return cs;
}

/// One schedule per line inside the "schedules" array.
inline std::string serialize_schedules(const ScheduleSet& cs) {
  std::string out = "{\n  \"schedules\": [";
  for (size_t i = 0; i < cs.schedules.size(); ++i) {
    out += i ? ",\n    " : "\n    ";
    out += schedule_to_json(cs.schedules[i]).dump();
  }
  out += cs.schedules.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

inline ScheduleSet parse_schedules(const std::string& text) { return schedules_from_json(detail::parse_text(text)); }

/// Instance JSON with an extra "threshold" key.
inline std::string serialize_gadget(const Instance& inst, int threshold) {
  Json j = instance_to_json(inst);
  j["threshold"] = threshold;
  return j.dump(2) + "\n";
}

struct BenchRow {
  std::string id;
  std::string algo;
  int n = 0;
  int k = 0;
  int m = 0;
  int makespan = 0;
  std::optional<int> oracle_makespan;
  double wall_ms = 0.0;
};

inline std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream os;
  os << "id,algo,n,k,m,makespan,oracle_makespan,wall_ms\n";
  for (const auto& r : rows) {
    os << r.id << ',' << r.algo << ',' << r.n << ',' << r.k << ',' << r.m << ',' << r.makespan << ',';
    if (r.oracle_makespan) os << *r.oracle_makespan;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", r.wall_ms);
    os << ',' << buf << '\n';
  }
  return os.str();
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Parse, "cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Parse, "cannot write " + path);
  out << text;
}

}  // namespace rsched::io
