// cycle_solver.hpp: k robots on a cycle. Some edge is never traversed by an
// optimal set, so every edge is cut in turn and the path DP is run on the
// opened cycle.
#pragma once

#include <limits>

#include "rsched/path_solver.hpp"

namespace rsched::cycle {

struct CycleResult {
  ScheduleSet schedules;
  std::pair<Vertex, Vertex> removed_edge{0, 0};  // (v_i, v_{i+1}), v_{n+1} = v_1
  int makespan = 0;
  bool optimal_claimed = false;
};

/// Opening the cycle at edge (v_i, v_{i+1}) gives the path v_{i+1}, ..., v_n, v_1, ..., v_i.
struct Cut {
  int n = 0;
  int i = 0;

  Vertex to_path(Vertex v) const { return (v - i - 1 + n) % n + 1; }
  Vertex to_cycle(Vertex x) const { return (x + i - 1) % n + 1; }
};

inline Instance cut_instance(const Instance& inst, const Cut& cut) {
  std::vector<Task> tasks;
  for (const auto& t : inst.tasks) tasks.push_back({cut.to_path(t.vertex), t.duration});
  std::vector<Vertex> starts;
  for (const auto& r : inst.robots) starts.push_back(cut.to_path(r.start));
  return make_instance(Graph::path(cut.n), std::move(tasks), starts);
}

inline CycleResult solve_cycle(const Instance& inst) {
  require_topology(inst, TopologyKind::Cycle);
  require_valid(inst);
  const int n = inst.graph.vertex_count();
  CycleResult best;
  best.makespan = std::numeric_limits<int>::max();
  best.optimal_claimed = inst.equal_durations();
  for (int i = 1; i <= n; ++i) {
    Cut cut{n, i};
    auto res = path::solve_k_partition(cut_instance(inst, cut));
    if (res.makespan < best.makespan) {
      best.makespan = res.makespan;
      best.removed_edge = {i, i % n + 1};
      best.schedules = relabel(res.schedules, [&](Vertex x) { return cut.to_cycle(x); });
    }
  }
  return best;
}

inline path::ApproximationReport cycle_approximation_report(const Instance& inst,
                                                            OracleOptions opts = {}) {
  return path::make_report(solve_cycle(inst).makespan, inst, std::max(1, inst.robot_count()), opts);
}

}  // namespace rsched::cycle
