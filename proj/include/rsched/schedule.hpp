// schedule.hpp: schedules, the walk representation W(C), time spans, and the
// task-completing / collision-free validator.
#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "rsched/core.hpp"

namespace rsched {

/// One timestep of movement. from == to is a self-loop (wait or work).
struct Move {
  Vertex from = 0;
  Vertex to = 0;

  bool is_loop() const { return from == to; }
  friend bool operator==(const Move&, const Move&) = default;
};

using WalkRep = std::vector<Move>;

struct WalkSegment {
  std::vector<Move> moves;
  friend bool operator==(const WalkSegment&, const WalkSegment&) = default;
};

/// Works the instance task located on `vertex` for its full duration.
struct TaskSegment {
  Vertex vertex = 0;
  friend bool operator==(const TaskSegment&, const TaskSegment&) = default;
};

using Segment = std::variant<WalkSegment, TaskSegment>;

struct Schedule {
  int robot = 0;
  std::vector<Segment> segments;

  friend bool operator==(const Schedule&, const Schedule&) = default;
};

struct ScheduleSet {
  std::vector<Schedule> schedules;

  friend bool operator==(const ScheduleSet&, const ScheduleSet&) = default;
};

/// Flattens a schedule: walks are concatenated and each task of duration d
/// becomes d self-loops. Throws UnknownTask / MalformedSchedule.
inline WalkRep walk_representation(const Schedule& c, const Instance& inst) {
  WalkRep rep;
  std::optional<Vertex> at;
  auto chain = [&](Vertex from, const std::string& where) {
    if (at && *at != from) {
      throw Error(ErrorCode::MalformedSchedule,
                  "robot " + std::to_string(c.robot) + ": " + where + " starts at " +
                      std::to_string(from) + " but the robot is on " + std::to_string(*at));
    }
  };
  for (const Segment& seg : c.segments) {
    if (const auto* walk = std::get_if<WalkSegment>(&seg)) {
      if (walk->moves.empty()) {
        throw Error(ErrorCode::MalformedSchedule,
                    "robot " + std::to_string(c.robot) + ": empty walk segment");
      }
      for (const Move& mv : walk->moves) {
        chain(mv.from, "move (" + std::to_string(mv.from) + "," + std::to_string(mv.to) + ")");
        if (!inst.graph.is_move(mv.from, mv.to)) {
          throw Error(ErrorCode::MalformedSchedule,
                      "robot " + std::to_string(c.robot) + ": (" + std::to_string(mv.from) +
                          "," + std::to_string(mv.to) + ") is not an edge or self-loop");
        }
        rep.push_back(mv);
        at = mv.to;
      }
    } else {
      Vertex v = std::get<TaskSegment>(seg).vertex;
      auto idx = inst.task_at(v);
      if (!idx) {
        throw Error(ErrorCode::UnknownTask,
                    "robot " + std::to_string(c.robot) + ": no task on vertex " + std::to_string(v));
      }
      chain(v, "task on " + std::to_string(v));
      rep.insert(rep.end(), static_cast<size_t>(inst.tasks[static_cast<size_t>(*idx)].duration),
                 Move{v, v});
      at = v;
    }
  }
  return rep;
}

/// |C|: total walk length plus total task duration.
inline int time_span(const Schedule& c, const Instance& inst) {
  return static_cast<int>(walk_representation(c, inst).size());
}

inline int time_span(const ScheduleSet& cs, const Instance& inst) {
  int span = 0;
  for (const auto& c : cs.schedules) span = std::max(span, time_span(c, inst));
  return span;
}

/// Appends self-loops at the last vertex (or `start` when w is empty).
inline WalkRep pad_to(WalkRep w, int span, Vertex start) {
  if (span < static_cast<int>(w.size())) {
    throw Error(ErrorCode::Precondition, "cannot pad a walk of length " +
                                             std::to_string(w.size()) + " down to " +
                                             std::to_string(span));
  }
  Vertex last = w.empty() ? start : w.back().to;
  w.resize(static_cast<size_t>(span), Move{last, last});
  return w;
}

enum class ViolationKind {
  MissingSchedule,
  DuplicateSchedule,
  UnknownRobot,
  Malformed,
  WrongStart,
  UnknownTask,
  MissingTask,
  DuplicateTask,
  SharedStart,
  VertexCollision,
  SourceCollision,
  EdgeSwap,
};

inline const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::MissingSchedule: return "missing-schedule";
    case ViolationKind::DuplicateSchedule: return "duplicate-schedule";
    case ViolationKind::UnknownRobot: return "unknown-robot";
    case ViolationKind::Malformed: return "malformed";
    case ViolationKind::WrongStart: return "wrong-start";
    case ViolationKind::UnknownTask: return "unknown-task";
    case ViolationKind::MissingTask: return "missing-task";
    case ViolationKind::DuplicateTask: return "duplicate-task";
    case ViolationKind::SharedStart: return "shared-start";
    case ViolationKind::VertexCollision: return "vertex-collision";
    case ViolationKind::SourceCollision: return "source-collision";
    case ViolationKind::EdgeSwap: return "edge-swap";
  }
  return "unknown";
}

struct Violation {
  ViolationKind kind;
  int robot = 0;        // robot id, 0 if not applicable
  int other_robot = 0;  // second robot of a collision
  int timestep = 0;     // 1-based; 0 for start / structural problems
  Vertex vertex = 0;
  std::string message;
};

struct Verdict {
  std::vector<Violation> violations;
  int span = 0;

  bool valid() const { return violations.empty(); }

  std::string summary() const {
    if (valid()) return "valid, span " + std::to_string(span);
    std::ostringstream os;
    os << "invalid (" << violations.size() << " violation" << (violations.size() == 1 ? "" : "s")
       << ")";
    for (const auto& v : violations) os << "\n  " << to_string(v.kind) << ": " << v.message;
    return os.str();
  }
};

/// Checks structure, task completion and collisions. Every walk is padded with
/// self-loops at its final vertex up to the span of the whole set.
inline Verdict validate_set(const ScheduleSet& cs, const Instance& inst) {
  Verdict verdict;
  auto& out = verdict.violations;
  const int k = inst.robot_count();

  std::vector<const Schedule*> by_robot(static_cast<size_t>(k), nullptr);
  for (const auto& c : cs.schedules) {
    if (c.robot < 1 || c.robot > k) {
      out.push_back({ViolationKind::UnknownRobot, c.robot, 0, 0, 0,
                     "schedule for unknown robot " + std::to_string(c.robot)});
      continue;
    }
    auto& slot = by_robot[static_cast<size_t>(c.robot - 1)];
    if (slot) {
      out.push_back({ViolationKind::DuplicateSchedule, c.robot, 0, 0, 0,
                     "robot " + std::to_string(c.robot) + " has more than one schedule"});
      continue;
    }
    slot = &c;
  }

  std::vector<WalkRep> reps(static_cast<size_t>(k));
  std::vector<int> task_owner(inst.tasks.size(), 0);
  for (int r = 0; r < k; ++r) {
    const Robot& robot = inst.robots[static_cast<size_t>(r)];
    const Schedule* c = by_robot[static_cast<size_t>(r)];
    if (!c) {
      out.push_back({ViolationKind::MissingSchedule, robot.id, 0, 0, 0,
                     "robot " + std::to_string(robot.id) + " has no schedule"});
      continue;
    }
    try {
      reps[static_cast<size_t>(r)] = walk_representation(*c, inst);
    } catch (const Error& e) {
      out.push_back({e.code() == ErrorCode::UnknownTask ? ViolationKind::UnknownTask
                                                        : ViolationKind::Malformed,
                     robot.id, 0, 0, 0, e.what()});
      continue;
    }
    const auto& rep = reps[static_cast<size_t>(r)];
    if (!rep.empty() && rep.front().from != robot.start) {
      out.push_back({ViolationKind::WrongStart, robot.id, 0, 0, rep.front().from,
                     "robot " + std::to_string(robot.id) + " starts its schedule on " +
                         std::to_string(rep.front().from) + " instead of " +
                         std::to_string(robot.start)});
    }
    for (const Segment& seg : c->segments) {
      if (const auto* task = std::get_if<TaskSegment>(&seg)) {
        int idx = *inst.task_at(task->vertex);
        int& owner = task_owner[static_cast<size_t>(idx)];
        if (owner != 0) {
          out.push_back({ViolationKind::DuplicateTask, robot.id, owner, 0, task->vertex,
                         "task on vertex " + std::to_string(task->vertex) +
                             " is worked more than once (robots " + std::to_string(owner) +
                             " and " + std::to_string(robot.id) + ")"});
        } else {
          owner = robot.id;
        }
      }
    }
  }
  for (size_t i = 0; i < inst.tasks.size(); ++i) {
    if (task_owner[i] == 0) {
      out.push_back({ViolationKind::MissingTask, 0, 0, 0, inst.tasks[i].vertex,
                     "task on vertex " + std::to_string(inst.tasks[i].vertex) +
                         " is not completed by any schedule"});
    }
  }

  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      if (inst.robots[static_cast<size_t>(a)].start == inst.robots[static_cast<size_t>(b)].start) {
        out.push_back({ViolationKind::SharedStart, a + 1, b + 1, 0,
                       inst.robots[static_cast<size_t>(a)].start,
                       "robots " + std::to_string(a + 1) + " and " + std::to_string(b + 1) +
                           " both start on " +
                           std::to_string(inst.robots[static_cast<size_t>(a)].start)});
      }
    }
  }

  int span = 0;
  for (const auto& rep : reps) span = std::max(span, static_cast<int>(rep.size()));
  verdict.span = span;
  for (int r = 0; r < k; ++r) {
    reps[static_cast<size_t>(r)] =
        pad_to(std::move(reps[static_cast<size_t>(r)]), span, inst.robots[static_cast<size_t>(r)].start);
  }
  for (int s = 0; s < span; ++s) {
    for (int a = 0; a < k; ++a) {
      const Move& ma = reps[static_cast<size_t>(a)][static_cast<size_t>(s)];
      for (int b = a + 1; b < k; ++b) {
        const Move& mb = reps[static_cast<size_t>(b)][static_cast<size_t>(s)];
        auto pair = "robots " + std::to_string(a + 1) + " and " + std::to_string(b + 1);
        auto when = " at timestep " + std::to_string(s + 1);
        if (ma.to == mb.to) {
          out.push_back({ViolationKind::VertexCollision, a + 1, b + 1, s + 1, ma.to,
                         pair + " both occupy " + std::to_string(ma.to) + when});
        }
        if (ma.from == mb.from) {
          out.push_back({ViolationKind::SourceCollision, a + 1, b + 1, s + 1, ma.from,
                         pair + " both leave " + std::to_string(ma.from) + when});
        }
        if (!ma.is_loop() && ma.from == mb.to && ma.to == mb.from) {
          out.push_back({ViolationKind::EdgeSwap, a + 1, b + 1, s + 1, ma.from,
                         pair + " swap along edge (" + std::to_string(ma.from) + "," +
                             std::to_string(ma.to) + ")" + when});
        }
      }
    }
  }
  return verdict;
}

/// One row per robot. Cell s is the vertex occupied after timestep s, with
/// '*' for task work and '~' for a wait (including the padding after the
/// robot's own schedule ends). Rows are "R<id>:" followed by the cells.
inline std::string gantt(const ScheduleSet& cs, const Instance& inst) {
  if (cs.schedules.empty()) return {};
  std::vector<WalkRep> reps;
  std::vector<std::vector<char>> marks;
  int span = 0;
  for (const auto& c : cs.schedules) {
    reps.push_back(walk_representation(c, inst));
    std::vector<char> m;
    for (const Segment& seg : c.segments) {
      if (const auto* walk = std::get_if<WalkSegment>(&seg)) {
        for (const Move& mv : walk->moves) m.push_back(mv.is_loop() ? '~' : ' ');
      } else {
        Vertex v = std::get<TaskSegment>(seg).vertex;
        m.insert(m.end(), static_cast<size_t>(inst.tasks[static_cast<size_t>(*inst.task_at(v))].duration),
                 '*');
      }
    }
    marks.push_back(std::move(m));
    span = std::max(span, static_cast<int>(reps.back().size()));
  }
  size_t width = std::to_string(inst.graph.vertex_count()).size() + 1;
  std::ostringstream os;
  for (size_t i = 0; i < cs.schedules.size(); ++i) {
    const Schedule& c = cs.schedules[i];
    Vertex start = inst.robots.at(static_cast<size_t>(c.robot - 1)).start;
    WalkRep rep = pad_to(reps[i], span, start);
    os << "R" << c.robot << ":";
    for (int s = 0; s < span; ++s) {
      char mark = s < static_cast<int>(marks[i].size()) ? marks[i][static_cast<size_t>(s)] : '~';
      std::string cell = std::to_string(rep[static_cast<size_t>(s)].to);
      if (mark != ' ') cell += mark;
      os << ' ' << std::string(width > cell.size() ? width - cell.size() : 0, ' ') << cell;
    }
    os << '\n';
  }
  return os.str();
}

/// Walks and tasks back into segments. `work[s]` is true when timestep s is
/// spent on the task at that vertex and `work_start[s]` marks the first
/// timestep of each task block.
inline Schedule schedule_from_steps(int robot, const WalkRep& moves, const std::vector<bool>& work,
                                    const std::vector<bool>& work_start) {
  Schedule c{robot, {}};
  WalkSegment walk;
  for (size_t s = 0; s < moves.size(); ++s) {
    if (work[s]) {
      if (work_start[s]) {
        if (!walk.moves.empty()) {
          c.segments.emplace_back(std::move(walk));
          walk = {};
        }
        c.segments.emplace_back(TaskSegment{moves[s].to});
      }
    } else {
      walk.moves.push_back(moves[s]);
    }
  }
  if (!walk.moves.empty()) c.segments.emplace_back(std::move(walk));
  return c;
}

/// Renames every vertex of `cs` through `map` (robot ids are kept).
template <class F>
ScheduleSet relabel(const ScheduleSet& cs, F map) {
  ScheduleSet out;
  for (const auto& c : cs.schedules) {
    Schedule r{c.robot, {}};
    for (const auto& seg : c.segments) {
      if (const auto* w = std::get_if<WalkSegment>(&seg)) {
        WalkSegment mw;
        for (const auto& mv : w->moves) mw.moves.push_back(Move{map(mv.from), map(mv.to)});
        r.segments.emplace_back(std::move(mw));
      } else {
        r.segments.emplace_back(TaskSegment{map(std::get<TaskSegment>(seg).vertex)});
      }
    }
    out.schedules.push_back(std::move(r));
  }
  return out;
}

}  // namespace rsched
