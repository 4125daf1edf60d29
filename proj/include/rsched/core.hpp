// core.hpp: graph topologies, tasks, robots and instances shared by every solver.
//
// Vertex ids are 1-based throughout (v_1..v_n), including every file format.
// Tadpole layout: vertices 1..m form the cycle c_1..c_m, vertices m+1..m+n
// form the tail p_1..p_n, and the bridge edge is (1, m+1).
#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rsched {

using Vertex = int;

enum class ErrorCode {
  InvalidSize,
  InvalidRange,
  InvalidInstance,
  UnknownTask,
  MalformedSchedule,
  Precondition,
  Topology,
  Resource,
  Parse,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidSize: return "invalid-size";
    case ErrorCode::InvalidRange: return "invalid-range";
    case ErrorCode::InvalidInstance: return "invalid-instance";
    case ErrorCode::UnknownTask: return "unknown-task";
    case ErrorCode::MalformedSchedule: return "malformed-schedule";
    case ErrorCode::Precondition: return "precondition";
    case ErrorCode::Topology: return "topology";
    case ErrorCode::Resource: return "resource";
    case ErrorCode::Parse: return "parse";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

enum class TopologyKind { Path, Cycle, Tadpole, General };

inline const char* to_string(TopologyKind kind) {
  switch (kind) {
    case TopologyKind::Path: return "path";
    case TopologyKind::Cycle: return "cycle";
    case TopologyKind::Tadpole: return "tadpole";
    case TopologyKind::General: return "general";
  }
  return "unknown";
}

/// Undirected simple graph plus the topology tag the solvers dispatch on.
/// Immutable after construction.
class Graph {
 public:
  Graph() = default;

  static Graph path(int n) {
    if (n < 1) throw Error(ErrorCode::InvalidSize, "path needs n >= 1, got " + std::to_string(n));
    Graph g(TopologyKind::Path, n);
    for (int i = 1; i < n; ++i) g.link(i, i + 1);
    return g;
  }

  static Graph cycle(int n) {
    if (n < 3) throw Error(ErrorCode::InvalidSize, "cycle needs n >= 3, got " + std::to_string(n));
    Graph g(TopologyKind::Cycle, n);
    for (int i = 1; i < n; ++i) g.link(i, i + 1);
    g.link(n, 1);
    return g;
  }

  /// (m, n)-tadpole: an m-cycle joined to an n-vertex tail by one bridge edge.
  static Graph tadpole(int cycle_len, int path_len) {
    if (cycle_len < 3 || path_len < 1) {
      throw Error(ErrorCode::InvalidSize, "tadpole needs cycle >= 3 and path >= 1, got (" +
                                              std::to_string(cycle_len) + ", " +
                                              std::to_string(path_len) + ")");
    }
    Graph g(TopologyKind::Tadpole, cycle_len + path_len);
    g.cycle_len_ = cycle_len;
    g.path_len_ = path_len;
    for (int i = 1; i < cycle_len; ++i) g.link(i, i + 1);
    g.link(cycle_len, 1);
    g.link(1, cycle_len + 1);
    for (int i = cycle_len + 1; i < cycle_len + path_len; ++i) g.link(i, i + 1);
    return g;
  }

  static Graph general(int n, std::span<const std::pair<Vertex, Vertex>> edges) {
    if (n < 1) throw Error(ErrorCode::InvalidSize, "graph needs n >= 1, got " + std::to_string(n));
    Graph g(TopologyKind::General, n);
    std::set<std::pair<Vertex, Vertex>> seen;
    for (auto [u, v] : edges) {
      if (u < 1 || u > n || v < 1 || v > n) {
        throw Error(ErrorCode::InvalidRange, "edge (" + std::to_string(u) + ", " +
                                                 std::to_string(v) + ") outside 1.." +
                                                 std::to_string(n));
      }
      if (u == v) throw Error(ErrorCode::InvalidRange, "self-loop edge at " + std::to_string(u));
      if (!seen.insert(std::minmax(u, v)).second) {
        throw Error(ErrorCode::InvalidRange, "duplicate edge (" + std::to_string(u) + ", " +
                                                 std::to_string(v) + ")");
      }
      g.link(u, v);
    }
    return g;
  }

  TopologyKind kind() const noexcept { return kind_; }
  int vertex_count() const noexcept { return n_; }
  bool contains(Vertex v) const noexcept { return v >= 1 && v <= n_; }

  /// Only meaningful for tadpoles.
  int cycle_length() const noexcept { return cycle_len_; }
  int path_length() const noexcept { return path_len_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(static_cast<size_t>(v)); }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

  bool has_edge(Vertex u, Vertex v) const {
    if (!contains(u) || !contains(v)) return false;
    auto nb = neighbors(u);
    return std::find(nb.begin(), nb.end(), v) != nb.end();
  }

  /// A legal single-timestep move: an edge or a self-loop.
  bool is_move(Vertex u, Vertex v) const { return u == v ? contains(u) : has_edge(u, v); }

  /// Edges as (u, v) with u < v, sorted.
  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 1; u <= n_; ++u)
      for (Vertex v : neighbors(u))
        if (u < v) out.emplace_back(u, v);
    std::sort(out.begin(), out.end());
    return out;
  }

  int edge_count() const { return static_cast<int>(edges().size()); }

  /// Same kind, same size, same edge set.
  friend bool operator==(const Graph& a, const Graph& b) {
    return a.kind_ == b.kind_ && a.n_ == b.n_ && a.cycle_len_ == b.cycle_len_ &&
           a.path_len_ == b.path_len_ && a.edges() == b.edges();
  }

  /// Retag a graph whose shape is known to match (used by relabeling code).
  Graph as_general() const {
    Graph g = *this;
    g.kind_ = TopologyKind::General;
    g.cycle_len_ = g.path_len_ = 0;
    return g;
  }

 private:
  Graph(TopologyKind kind, int n) : kind_(kind), n_(n), adj_(static_cast<size_t>(n) + 1) {}

  void link(Vertex u, Vertex v) {
    adj_[static_cast<size_t>(u)].push_back(v);
    adj_[static_cast<size_t>(v)].push_back(u);
    std::sort(adj_[static_cast<size_t>(u)].begin(), adj_[static_cast<size_t>(u)].end());
    std::sort(adj_[static_cast<size_t>(v)].begin(), adj_[static_cast<size_t>(v)].end());
  }

  TopologyKind kind_ = TopologyKind::General;
  int n_ = 0;
  int cycle_len_ = 0;
  int path_len_ = 0;
  std::vector<std::vector<Vertex>> adj_;
};

inline Graph build_path(int n) { return Graph::path(n); }
inline Graph build_cycle(int n) { return Graph::cycle(n); }
inline Graph build_tadpole(int cycle_len, int path_len) {
  return Graph::tadpole(cycle_len, path_len);
}

struct Task {
  Vertex vertex = 0;
  int duration = 1;

  friend bool operator==(const Task&, const Task&) = default;
};

struct Robot {
  int id = 0;  // 1-based, equals position in Instance::robots + 1
  Vertex start = 0;

  friend bool operator==(const Robot&, const Robot&) = default;
};

struct Instance {
  Graph graph;
  std::vector<Task> tasks;  // sorted by vertex
  std::vector<Robot> robots;

  int robot_count() const { return static_cast<int>(robots.size()); }
  int task_count() const { return static_cast<int>(tasks.size()); }

  /// Index into `tasks` of the task on `v`, if any.
  std::optional<int> task_at(Vertex v) const {
    auto it = std::lower_bound(tasks.begin(), tasks.end(), v,
                               [](const Task& t, Vertex x) { return t.vertex < x; });
    if (it == tasks.end() || it->vertex != v) return std::nullopt;
    return static_cast<int>(it - tasks.begin());
  }

  bool equal_durations() const {
    return std::all_of(tasks.begin(), tasks.end(),
                       [&](const Task& t) { return t.duration == tasks.front().duration; });
  }

  int total_duration() const {
    int s = 0;
    for (const auto& t : tasks) s += t.duration;
    return s;
  }

  friend bool operator==(const Instance&, const Instance&) = default;
};

/// Builds an instance with tasks sorted by vertex and robot ids 1..k in the
/// order the starts are given. Does not validate; see validate_instance.
inline Instance make_instance(Graph graph, std::vector<Task> tasks, std::span<const Vertex> starts) {
  Instance inst{std::move(graph), std::move(tasks), {}};
  std::stable_sort(inst.tasks.begin(), inst.tasks.end(),
                   [](const Task& a, const Task& b) { return a.vertex < b.vertex; });
  for (size_t i = 0; i < starts.size(); ++i)
    inst.robots.push_back(Robot{static_cast<int>(i) + 1, starts[i]});
  return inst;
}

inline Instance make_instance(Graph graph, std::vector<Task> tasks,
                              std::initializer_list<Vertex> starts) {
  return make_instance(std::move(graph), std::move(tasks),
                       std::span<const Vertex>(starts.begin(), starts.size()));
}

enum class InstanceViolationKind {
  VertexOutOfRange,
  NonPositiveDuration,
  TaskCollision,
  TasksUnsorted,
  DuplicateStart,
  RobotIdMismatch,
};

struct InstanceViolation {
  InstanceViolationKind kind;
  std::string message;
};

/// Every violated Instance invariant; empty means valid.
inline std::vector<InstanceViolation> validate_instance(const Instance& inst) {
  std::vector<InstanceViolation> out;
  const Graph& g = inst.graph;
  for (size_t i = 0; i < inst.tasks.size(); ++i) {
    const Task& t = inst.tasks[i];
    if (!g.contains(t.vertex)) {
      out.push_back({InstanceViolationKind::VertexOutOfRange,
                     "task " + std::to_string(i + 1) + " on vertex " + std::to_string(t.vertex) +
                         " outside 1.." + std::to_string(g.vertex_count())});
    }
    if (t.duration < 1) {
      out.push_back({InstanceViolationKind::NonPositiveDuration,
                     "task on vertex " + std::to_string(t.vertex) + " has duration " +
                         std::to_string(t.duration)});
    }
    if (i > 0 && inst.tasks[i - 1].vertex == t.vertex) {
      out.push_back({InstanceViolationKind::TaskCollision,
                     "two tasks on vertex " + std::to_string(t.vertex)});
    } else if (i > 0 && inst.tasks[i - 1].vertex > t.vertex) {
      out.push_back({InstanceViolationKind::TasksUnsorted,
                     "tasks not sorted by vertex at position " + std::to_string(i + 1)});
    }
  }
  std::set<Vertex> starts;
  for (size_t i = 0; i < inst.robots.size(); ++i) {
    const Robot& r = inst.robots[i];
    if (r.id != static_cast<int>(i) + 1) {
      out.push_back({InstanceViolationKind::RobotIdMismatch,
                     "robot at position " + std::to_string(i + 1) + " has id " +
                         std::to_string(r.id)});
    }
    if (!g.contains(r.start)) {
      out.push_back({InstanceViolationKind::VertexOutOfRange,
                     "robot " + std::to_string(r.id) + " starts on vertex " +
                         std::to_string(r.start) + " outside 1.." +
                         std::to_string(g.vertex_count())});
    }
    if (!starts.insert(r.start).second) {
      out.push_back({InstanceViolationKind::DuplicateStart,
                     "robots share start vertex " + std::to_string(r.start)});
    }
  }
  return out;
}

inline void require_valid(const Instance& inst) {
  auto violations = validate_instance(inst);
  if (violations.empty()) return;
  std::ostringstream os;
  for (size_t i = 0; i < violations.size(); ++i)
    os << (i ? "; " : "") << violations[i].message;
  throw Error(ErrorCode::InvalidInstance, os.str());
}

inline void require_topology(const Instance& inst, TopologyKind kind) {
  if (inst.graph.kind() != kind) {
    throw Error(ErrorCode::Topology, std::string("expected a ") + to_string(kind) +
                                         " instance, got " + to_string(inst.graph.kind()));
  }
}

/// Induced path P_{i,j} of a path graph. `offset` maps a sub-path vertex x back
/// to the original vertex x + offset.
struct SubPath {
  Graph graph;
  int offset = 0;

  Vertex to_original(Vertex local) const { return local + offset; }
  Vertex to_local(Vertex original) const { return original - offset; }
};

inline SubPath subpath(const Graph& path, Vertex i, Vertex j) {
  if (path.kind() != TopologyKind::Path) throw Error(ErrorCode::Topology, "subpath needs a path");
  if (i > j) {
    throw Error(ErrorCode::InvalidRange,
                "subpath range " + std::to_string(i) + ".." + std::to_string(j) + " is empty");
  }
  if (!path.contains(i) || !path.contains(j)) {
    throw Error(ErrorCode::InvalidRange, "subpath range " + std::to_string(i) + ".." +
                                             std::to_string(j) + " outside 1.." +
                                             std::to_string(path.vertex_count()));
  }
  return SubPath{Graph::path(j - i + 1), i - 1};
}

/// All-pairs hop distances (BFS from every vertex). dist[u][v], 1-based.
inline std::vector<std::vector<int>> all_pairs_distances(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> dist(static_cast<size_t>(n) + 1,
                                     std::vector<int>(static_cast<size_t>(n) + 1, -1));
  std::vector<Vertex> queue;
  for (Vertex s = 1; s <= n; ++s) {
    auto& d = dist[static_cast<size_t>(s)];
    queue.assign(1, s);
    d[static_cast<size_t>(s)] = 0;
    for (size_t head = 0; head < queue.size(); ++head) {
      Vertex u = queue[head];
      for (Vertex v : g.neighbors(u)) {
        if (d[static_cast<size_t>(v)] < 0) {
          d[static_cast<size_t>(v)] = d[static_cast<size_t>(u)] + 1;
          queue.push_back(v);
        }
      }
    }
  }
  return dist;
}

inline bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  auto d = all_pairs_distances(g);
  for (Vertex v = 1; v <= g.vertex_count(); ++v)
    if (d[1][static_cast<size_t>(v)] < 0) return false;
  return true;
}

}  // namespace rsched
