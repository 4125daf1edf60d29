// path_solver.hpp: scheduling on path graphs.
//
// A single robot goes to the nearer extreme task and sweeps to the other end.
// Several robots split the sorted task list into contiguous blocks, either by
// trying every split point (two robots) or by a dynamic programme (k robots).
//
// Optimal when all durations are equal; a k-approximation otherwise.
#pragma once

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rsched/core.hpp"
#include "rsched/executor.hpp"
#include "rsched/oracle.hpp"
#include "rsched/schedule.hpp"

namespace rsched::path {

/// Closed-form span of the fastest single-robot schedule:
/// min(|s - i_1|, |s - i_m|) + i_m - i_1 + sum of durations. Zero for no tasks.
inline int one_robot_span(std::span<const Task> tasks, Vertex start) {
  if (tasks.empty()) return 0;
  int first = tasks.front().vertex, last = tasks.back().vertex;
  int work = 0;
  for (const auto& t : tasks) work += t.duration;
  return std::min(std::abs(start - first), std::abs(start - last)) + last - first + work;
}

/// Prefix sums so that the span of any contiguous block is O(1).
class BlockSpans {
 public:
  explicit BlockSpans(std::span<const Task> tasks) : tasks_(tasks), prefix_(tasks.size() + 1, 0) {
    for (size_t i = 0; i < tasks.size(); ++i) prefix_[i + 1] = prefix_[i] + tasks[i].duration;
  }

  /// Span for one robot at `start` doing tasks [lo, hi) (0-based, half open).
  long span(size_t lo, size_t hi, Vertex start) const {
    if (lo >= hi) return 0;
    long first = tasks_[lo].vertex, last = tasks_[hi - 1].vertex;
    return std::min(std::abs(start - first), std::abs(start - last)) + last - first + prefix_[hi] -
           prefix_[lo];
  }

 private:
  std::span<const Task> tasks_;
  std::vector<long> prefix_;
};

/// Itinerary of the fastest single-robot schedule. `task_index` gives each
/// task's index in the owning instance. Tasks on the way to the first extreme
/// are done on the return sweep, i.e. at their last visit.
inline Plan one_robot_plan(std::span<const Task> tasks, std::span<const int> task_index, Vertex start) {
  Plan plan;
  if (tasks.empty()) return plan;
  const Vertex first = tasks.front().vertex, last = tasks.back().vertex;
  const bool right_first = std::abs(start - last) <= std::abs(start - first);
  Vertex at = start;
  auto walk_to = [&](Vertex v) {
    while (at != v) {
      at += (v > at) ? 1 : -1;
      plan.push_back(PlanStep::move(at));
    }
  };
  auto sweep = [&](auto begin, auto end) {
    for (auto i = begin; i != end; ++i) {
      walk_to(tasks[i].vertex);
      plan.push_back(PlanStep::work(task_index[i], tasks[i].vertex));
    }
  };
  if (right_first) {
    walk_to(last);
    for (size_t i = tasks.size(); i-- > 0;) {
      walk_to(tasks[i].vertex);
      plan.push_back(PlanStep::work(task_index[i], tasks[i].vertex));
    }
  } else {
    walk_to(first);
    sweep(size_t{0}, tasks.size());
  }
  return plan;
}

namespace detail {

inline std::vector<int> iota_indices(size_t n, int from = 0) {
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), from);
  return idx;
}

inline void require_path_instance(const Instance& inst) {
  require_topology(inst, TopologyKind::Path);
  require_valid(inst);
}

/// Robot indices (into inst.robots) ordered left to right by start vertex.
inline std::vector<int> robots_left_to_right(const Instance& inst) {
  auto order = iota_indices(inst.robots.size());
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return inst.robots[static_cast<size_t>(a)].start < inst.robots[static_cast<size_t>(b)].start;
  });
  return order;
}

inline Execution run_or_throw(const Instance& inst, std::vector<Plan> plans) {
  auto ex = execute_plans(inst, std::move(plans));
  if (!ex) throw Error(ErrorCode::Resource, "plan execution did not terminate");
  auto verdict = validate_set(ex->schedules, inst);
  if (!verdict.valid()) {
    throw Error(ErrorCode::MalformedSchedule, "internal: produced an invalid schedule set: " +
                                                  verdict.summary());
  }
  return *ex;
}

}  // namespace detail

/// Fastest schedule for a single robot; the instance must have exactly one robot.
inline Schedule solve_one_robot(const Instance& inst) {
  detail::require_path_instance(inst);
  if (inst.robot_count() != 1) throw Error(ErrorCode::Precondition, "expected exactly one robot");
  for (const auto& t : inst.tasks)
    if (!inst.graph.contains(t.vertex)) throw Error(ErrorCode::InvalidRange, "task outside path");
  auto idx = detail::iota_indices(inst.tasks.size());
  auto ex = detail::run_or_throw(inst, {one_robot_plan(inst.tasks, idx, inst.robots[0].start)});
  return ex.schedules.schedules.front();
}

struct SplitCandidate {
  int split = 0;  // tasks t_1..t_split go to the left robot
  int left_span = 0;
  int right_span = 0;
};

struct TwoRobotResult {
  ScheduleSet schedules;
  int split = 0;
  int makespan = 0;  // span of the emitted set
  int predicted = 0;  // max of the two single-robot spans at the chosen split
  std::vector<SplitCandidate> candidates;  // split = 0..m
};

/// The partition algorithm for two robots. The left robot's schedule lives on
/// P_{1, max(i_L, i_q)}, the right robot's on P_{min(i_{q+1}, i_R), n}.
inline TwoRobotResult solve_two_robot_partition(const Instance& inst) {
  detail::require_path_instance(inst);
  if (inst.robot_count() != 2) throw Error(ErrorCode::Precondition, "expected exactly two robots");
  const auto order = detail::robots_left_to_right(inst);
  const int left = order[0], right = order[1];
  const Vertex sl = inst.robots[static_cast<size_t>(left)].start;
  const Vertex sr = inst.robots[static_cast<size_t>(right)].start;
  const int n = inst.graph.vertex_count();
  const int m = inst.task_count();
  std::span<const Task> tasks(inst.tasks);

  auto local_span = [&](const SubPath& sp, std::span<const Task> block, Vertex start) {
    std::vector<Task> local;
    for (const auto& t : block) local.push_back({sp.to_local(t.vertex), t.duration});
    return one_robot_span(local, sp.to_local(start));
  };

  TwoRobotResult res;
  int best = std::numeric_limits<int>::max();
  for (int q = 0; q <= m; ++q) {
    SplitCandidate cand{q, 0, 0};
    if (q > 0) {
      auto sp = subpath(inst.graph, 1, std::max(sl, tasks[static_cast<size_t>(q - 1)].vertex));
      cand.left_span = local_span(sp, tasks.first(static_cast<size_t>(q)), sl);
    }
    if (q < m) {
      auto sp = subpath(inst.graph, std::min(tasks[static_cast<size_t>(q)].vertex, sr), n);
      cand.right_span = local_span(sp, tasks.subspan(static_cast<size_t>(q)), sr);
    }
    res.candidates.push_back(cand);
    int worst = std::max(cand.left_span, cand.right_span);
    if (worst < best) {
      best = worst;
      res.split = q;
    }
  }
  res.predicted = best;

  auto idx = detail::iota_indices(inst.tasks.size());
  std::span<const int> ids(idx);
  const auto q = static_cast<size_t>(res.split);
  std::vector<Plan> plans(2);
  plans[static_cast<size_t>(left)] = one_robot_plan(tasks.first(q), ids.first(q), sl);
  plans[static_cast<size_t>(right)] = one_robot_plan(tasks.subspan(q), ids.subspan(q), sr);
  auto ex = detail::run_or_throw(inst, std::move(plans));
  res.schedules = std::move(ex.schedules);
  res.makespan = ex.span;
  return res;
}

/// S[c, l]: fastest time for robots 1..c (left to right) to finish tasks
/// t_1..t_l, and the split r chosen for robot c (it takes t_{r+1}..t_l).
class DpTable {
 public:
  DpTable() = default;
  DpTable(int robots, int tasks)
      : robots_(robots),
        tasks_(tasks),
        spans_(static_cast<size_t>(robots) * static_cast<size_t>(tasks + 1), 0),
        splits_(spans_.size(), 0) {}

  int robots() const { return robots_; }
  int tasks() const { return tasks_; }

  /// 1 <= c <= robots, 0 <= l <= tasks.
  long span(int c, int l) const { return spans_[index(c, l)]; }
  int split(int c, int l) const { return splits_[index(c, l)]; }
  long& span(int c, int l) { return spans_[index(c, l)]; }
  int& split(int c, int l) { return splits_[index(c, l)]; }

  std::vector<long> row(int c) const {
    std::vector<long> out;
    for (int l = 1; l <= tasks_; ++l) out.push_back(span(c, l));
    return out;
  }

  /// Rows are robots, columns are task prefixes 1..m.
  std::string to_csv() const {
    std::ostringstream os;
    os << "c";
    for (int l = 1; l <= tasks_; ++l) os << ',' << l;
    os << '\n';
    for (int c = 1; c <= robots_; ++c) {
      os << c;
      for (int l = 1; l <= tasks_; ++l) os << ',' << span(c, l);
      os << '\n';
    }
    return os.str();
  }

 private:
  size_t index(int c, int l) const {
    return static_cast<size_t>(c - 1) * static_cast<size_t>(tasks_ + 1) + static_cast<size_t>(l);
  }

  int robots_ = 0;
  int tasks_ = 0;
  std::vector<long> spans_;
  std::vector<int> splits_;
};

/// Fills the table for robots at `starts` (strictly increasing) and tasks
/// sorted by vertex. Robot c may take any suffix t_{r+1..l}, r in [0, l];
/// ties go to the smallest r.
inline DpTable fill_dp_table(std::span<const Task> tasks, std::span<const Vertex> starts) {
  for (size_t i = 1; i < starts.size(); ++i)
    if (starts[i - 1] >= starts[i])
      throw Error(ErrorCode::Precondition, "robots must be sorted left to right by start");
  for (size_t i = 1; i < tasks.size(); ++i)
    if (tasks[i - 1].vertex >= tasks[i].vertex)
      throw Error(ErrorCode::Precondition, "tasks must be sorted by vertex");
  if (starts.empty()) throw Error(ErrorCode::Precondition, "need at least one robot");

  const int k = static_cast<int>(starts.size());
  const int m = static_cast<int>(tasks.size());
  BlockSpans block(tasks);
  DpTable table(k, m);
  for (int l = 0; l <= m; ++l) table.span(1, l) = block.span(0, static_cast<size_t>(l), starts[0]);
  for (int c = 2; c <= k; ++c) {
    const Vertex s = starts[static_cast<size_t>(c - 1)];
    for (int l = 0; l <= m; ++l) {
      long best = std::numeric_limits<long>::max();
      int arg = 0;
      for (int r = 0; r <= l; ++r) {
        long v = std::max(table.span(c - 1, r), block.span(static_cast<size_t>(r), static_cast<size_t>(l), s));
        if (v < best) {
          best = v;
          arg = r;
        }
      }
      table.span(c, l) = best;
      table.split(c, l) = arg;
    }
  }
  return table;
}

/// Contiguous blocks [lo, hi) per robot (left-to-right robot order).
inline std::vector<std::pair<int, int>> reconstruct_blocks(const DpTable& table) {
  std::vector<std::pair<int, int>> blocks(static_cast<size_t>(table.robots()));
  int l = table.tasks();
  for (int c = table.robots(); c >= 1; --c) {
    int r = c == 1 ? 0 : table.split(c, l);
    blocks[static_cast<size_t>(c - 1)] = {r, l};
    l = r;
  }
  return blocks;
}

struct KPartitionResult {
  DpTable table;
  ScheduleSet schedules;
  std::vector<std::vector<int>> assignment;  // task indices per instance robot
  long predicted = 0;                        // S[k, m]
  int makespan = 0;                          // span of the emitted set
  bool optimal_claimed = false;              // all durations equal
  std::optional<std::string> diagnostic;     // set when execution overran S[k, m]
  ExecutionStats stats;
};

/// k-robot partition DP on a path instance. Robots may be listed in any order;
/// they are ordered left to right internally.
inline KPartitionResult solve_k_partition(const Instance& inst) {
  detail::require_path_instance(inst);
  if (inst.robot_count() == 0) {
    if (!inst.tasks.empty()) throw Error(ErrorCode::Precondition, "tasks but no robots");
    return {};
  }
  const auto order = detail::robots_left_to_right(inst);
  std::vector<Vertex> starts;
  for (int r : order) starts.push_back(inst.robots[static_cast<size_t>(r)].start);
  std::span<const Task> tasks(inst.tasks);

  KPartitionResult res;
  res.table = fill_dp_table(tasks, starts);
  res.predicted = res.table.span(inst.robot_count(), inst.task_count());
  res.optimal_claimed = inst.equal_durations();

  auto idx = detail::iota_indices(inst.tasks.size());
  std::span<const int> ids(idx);
  std::vector<Plan> plans(static_cast<size_t>(inst.robot_count()));
  res.assignment.resize(plans.size());
  auto blocks = reconstruct_blocks(res.table);
  for (size_t c = 0; c < blocks.size(); ++c) {
    auto [lo, hi] = blocks[c];
    auto r = static_cast<size_t>(order[c]);
    auto count = static_cast<size_t>(hi - lo);
    plans[r] = one_robot_plan(tasks.subspan(static_cast<size_t>(lo), count),
                              ids.subspan(static_cast<size_t>(lo), count), starts[c]);
    for (int i = lo; i < hi; ++i) res.assignment[r].push_back(i);
  }
  auto ex = detail::run_or_throw(inst, std::move(plans));
  res.schedules = std::move(ex.schedules);
  res.makespan = ex.span;
  res.stats = ex.stats;
  if (res.makespan > res.predicted) {
    res.diagnostic = "repair overrun: emitted span " + std::to_string(res.makespan) +
                     " exceeds table value " + std::to_string(res.predicted);
  }
  return res;
}

/// Solver span against the exact optimum.
struct ApproximationReport {
  int solver = 0;
  int oracle = 0;
  double ratio = 1.0;  // solver / oracle; 1 when both are 0
  int bound = 1;       // k, or 2 for the two-robot partition

  bool within_bound() const { return solver <= bound * oracle; }
};

inline ApproximationReport make_report(int solver, const Instance& inst, int bound,
                                       OracleOptions opts = {}) {
  auto opt = exact_optimum(inst, opts);
  if (!opt.feasible) throw Error(ErrorCode::Resource, "oracle found nothing within its horizon");
  ApproximationReport rep{solver, opt.makespan, 1.0, bound};
  if (opt.makespan > 0) rep.ratio = static_cast<double>(solver) / opt.makespan;
  return rep;
}

/// k-partition DP (or the two-robot partition when k = 2) against the oracle.
inline ApproximationReport approximation_report(const Instance& inst, OracleOptions opts = {}) {
  if (inst.robot_count() == 2) {
    return make_report(solve_two_robot_partition(inst).makespan, inst, 2, opts);
  }
  return make_report(solve_k_partition(inst).makespan, inst, std::max(1, inst.robot_count()), opts);
}

}  // namespace rsched::path
