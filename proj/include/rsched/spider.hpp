// spider.hpp: trees with at most one vertex of degree 3 ("spiders"), single
// robot covering walks on them, and the two-robot spider solver.
#pragma once

#include <algorithm>
#include <array>
#include <limits>
#include <map>
#include <optional>
#include <vector>

#include "rsched/core.hpp"
#include "rsched/executor.hpp"
#include "rsched/schedule.hpp"

namespace rsched::spider {

/// Legs are listed outward from the centre: legs[l][d - 1] sits at depth d.
struct Spider {
  Vertex center = 0;
  std::array<std::vector<Vertex>, 3> legs;
  std::vector<int> leg;    // per vertex; -1 for the centre
  std::vector<int> depth;  // per vertex; 0 for the centre

  Vertex at(int l, int d) const { return d == 0 ? center : legs[static_cast<size_t>(l)][static_cast<size_t>(d - 1)]; }
  int leg_of(Vertex v) const { return leg[static_cast<size_t>(v)]; }
  int depth_of(Vertex v) const { return depth[static_cast<size_t>(v)]; }

  int distance(Vertex u, Vertex v) const {
    if (u == v) return 0;
    int lu = leg_of(u), lv = leg_of(v);
    if (lu >= 0 && lu == lv) return std::abs(depth_of(u) - depth_of(v));
    return depth_of(u) + depth_of(v);
  }

  /// Vertices strictly after u up to and including v.
  std::vector<Vertex> route(Vertex u, Vertex v) const {
    std::vector<Vertex> out;
    int lu = leg_of(u), lv = leg_of(v);
    if (u == v) return out;
    if (lu >= 0 && lu == lv) {
      int du = depth_of(u), dv = depth_of(v), step = dv > du ? 1 : -1;
      for (int d = du + step; d != dv + step; d += step) out.push_back(at(lu, d));
      return out;
    }
    for (int d = depth_of(u) - 1; d >= 0; --d) out.push_back(at(lu, d));
    for (int d = 1; d <= depth_of(v); ++d) out.push_back(at(lv, d));
    return out;
  }
};

/// Reads the spider structure of `g` around `center`, ignoring edge `skip`
/// (pass {0, 0} to keep every edge). Throws Topology if the remaining graph is
/// not a spider centred there.
inline Spider make_spider(const Graph& g, Vertex center, std::pair<Vertex, Vertex> skip = {0, 0}) {
  const int n = g.vertex_count();
  auto skipped = [&](Vertex a, Vertex b) {
    return (a == skip.first && b == skip.second) || (a == skip.second && b == skip.first);
  };
  Spider sp;
  sp.center = center;
  sp.leg.assign(static_cast<size_t>(n) + 1, -2);
  sp.depth.assign(static_cast<size_t>(n) + 1, -1);
  sp.leg[static_cast<size_t>(center)] = -1;
  sp.depth[static_cast<size_t>(center)] = 0;
  int legs = 0;
  for (Vertex first : g.neighbors(center)) {
    if (skipped(center, first)) continue;
    if (legs == 3) throw Error(ErrorCode::Topology, "spider centre has degree above 3");
    Vertex prev = center, cur = first;
    for (int d = 1;; ++d) {
      if (sp.leg[static_cast<size_t>(cur)] != -2) throw Error(ErrorCode::Topology, "graph has a cycle");
      sp.leg[static_cast<size_t>(cur)] = legs;
      sp.depth[static_cast<size_t>(cur)] = d;
      sp.legs[static_cast<size_t>(legs)].push_back(cur);
      std::optional<Vertex> next;
      for (Vertex w : g.neighbors(cur)) {
        if (w == prev || skipped(cur, w)) continue;
        if (next) throw Error(ErrorCode::Topology, "vertex " + std::to_string(cur) + " branches away from the centre");
        next = w;
      }
      if (!next) break;
      prev = cur;
      cur = *next;
    }
    ++legs;
  }
  for (Vertex v = 1; v <= n; ++v)
    if (sp.leg[static_cast<size_t>(v)] == -2) throw Error(ErrorCode::Topology, "graph is not connected");
  return sp;
}

/// Spider view of a general tree: centred on its degree-3 vertex, or on vertex
/// 1 when it is a path.
inline Spider spider_of_tree(const Graph& g) {
  const int n = g.vertex_count();
  if (g.edge_count() != n - 1) throw Error(ErrorCode::Topology, "graph is not a tree");
  std::optional<Vertex> center;
  for (Vertex v = 1; v <= n; ++v) {
    int d = g.degree(v);
    if (d > 3) throw Error(ErrorCode::Topology, "vertex " + std::to_string(v) + " has degree " + std::to_string(d));
    if (d == 3) {
      if (center) throw Error(ErrorCode::Topology, "more than one vertex of degree 3");
      center = v;
    }
  }
  return make_spider(g, center.value_or(1));
}

struct TaskRef {
  int index = 0;  // into Instance::tasks
  Vertex vertex = 0;
};

/// Turns a vertex walk (walk[0] is the start) into a plan that works each task
/// at its first or last visit.
inline Plan plan_from_walk(std::span<const Vertex> walk, std::span<const TaskRef> tasks, bool last_visit) {
  std::vector<std::vector<int>> work_at(walk.size());
  for (const auto& t : tasks) {
    std::optional<size_t> pick;
    for (size_t i = 0; i < walk.size(); ++i) {
      if (walk[i] != t.vertex) continue;
      pick = i;
      if (!last_visit) break;
    }
    if (!pick) throw Error(ErrorCode::Precondition, "walk misses task vertex " + std::to_string(t.vertex));
    work_at[*pick].push_back(t.index);
  }
  Plan plan;
  for (size_t i = 0; i < walk.size(); ++i) {
    if (i > 0) plan.push_back(PlanStep::move(walk[i]));
    for (int idx : work_at[i]) plan.push_back(PlanStep::work(idx, walk[i]));
  }
  return plan;
}

/// All shortest walks from `start` visiting every vertex in `targets`
/// (deduplicated, at most `limit`).
inline std::vector<std::vector<Vertex>> covering_walks(const Spider& sp, Vertex start,
                                                       std::span<const Vertex> targets, size_t limit = 4) {
  // Extreme points: the deepest target per leg, the shallowest target on the
  // start's own leg below the start, and the centre.
  std::vector<Vertex> ends;
  const int ls = sp.leg_of(start), ds = sp.depth_of(start);
  std::array<int, 3> deepest{0, 0, 0};
  int inward = std::numeric_limits<int>::max();
  bool centre = false;
  for (Vertex v : targets) {
    int l = sp.leg_of(v), d = sp.depth_of(v);
    if (l < 0) {
      centre = true;
      continue;
    }
    deepest[static_cast<size_t>(l)] = std::max(deepest[static_cast<size_t>(l)], d);
    if (l == ls && d < ds) inward = std::min(inward, d);
  }
  for (int l = 0; l < 3; ++l) {
    int d = deepest[static_cast<size_t>(l)];
    if (d == 0 || (l == ls && d <= ds)) continue;
    ends.push_back(sp.at(l, d));
  }
  if (inward != std::numeric_limits<int>::max()) ends.push_back(sp.at(ls, inward));
  if (centre) ends.push_back(sp.center);
  std::sort(ends.begin(), ends.end());

  std::vector<std::vector<Vertex>> best;
  size_t best_len = std::numeric_limits<size_t>::max();
  do {
    std::vector<Vertex> walk{start};
    for (Vertex e : ends) {
      auto r = sp.route(walk.back(), e);
      walk.insert(walk.end(), r.begin(), r.end());
    }
    bool covers = std::all_of(targets.begin(), targets.end(), [&](Vertex v) {
      return std::find(walk.begin(), walk.end(), v) != walk.end();
    });
    if (!covers) continue;
    if (walk.size() < best_len) {
      best_len = walk.size();
      best.clear();
    }
    if (walk.size() == best_len && best.size() < limit && std::find(best.begin(), best.end(), walk) == best.end())
      best.push_back(std::move(walk));
  } while (std::next_permutation(ends.begin(), ends.end()));
  return best;
}

/// One way for a group of robots to complete a group of tasks.
struct GroupOption {
  int predicted = 0;              // max single-robot span, ignoring interference
  std::vector<std::pair<int, Plan>> plans;  // (robot index, plan)
};

/// Candidate single-robot itineraries for one robot and a task set, cheapest first.
inline std::vector<std::pair<int, Plan>> single_robot_options(const Spider& sp, Vertex start,
                                                              std::span<const TaskRef> tasks,
                                                              const Instance& inst) {
  std::vector<std::pair<int, Plan>> out;
  if (tasks.empty()) {
    out.push_back({0, {}});
    return out;
  }
  std::vector<Vertex> targets;
  int work = 0;
  for (const auto& t : tasks) {
    targets.push_back(t.vertex);
    work += inst.tasks[static_cast<size_t>(t.index)].duration;
  }
  for (const auto& walk : covering_walks(sp, start, targets, 2)) {
    int cost = static_cast<int>(walk.size()) - 1 + work;
    out.push_back({cost, plan_from_walk(walk, tasks, true)});
    out.push_back({cost, plan_from_walk(walk, tasks, false)});
  }
  return out;
}

/// Partitions of `tasks` between robots a and b that respect the two-path
/// structure: P1 joins both legs other than `side`, P2 is leg `side`; each
/// robot takes one contiguous block of each.
inline std::vector<std::pair<std::vector<TaskRef>, std::vector<TaskRef>>> two_robot_partitions(
    const Spider& sp, std::span<const TaskRef> tasks) {
  std::vector<std::pair<std::vector<TaskRef>, std::vector<TaskRef>>> out;
  std::vector<std::vector<int>> seen;
  for (int side = 0; side < 3; ++side) {
    int l1 = (side + 1) % 3, l2 = (side + 2) % 3;
    // Signed coordinate along P1: leg l1 negative, leg l2 positive.
    auto p1_coord = [&](Vertex v) {
      int l = sp.leg_of(v);
      return l == l1 ? -sp.depth_of(v) : (l == l2 ? sp.depth_of(v) : 0);
    };
    std::vector<TaskRef> p1, p2;
    for (const auto& t : tasks) (sp.leg_of(t.vertex) == side ? p2 : p1).push_back(t);
    std::sort(p1.begin(), p1.end(), [&](auto& x, auto& y) { return p1_coord(x.vertex) < p1_coord(y.vertex); });
    std::sort(p2.begin(), p2.end(), [&](auto& x, auto& y) { return sp.depth_of(x.vertex) < sp.depth_of(y.vertex); });
    for (size_t q1 = 0; q1 <= p1.size(); ++q1) {
      for (size_t q2 = 0; q2 <= p2.size(); ++q2) {
        for (int orient = 0; orient < 4; ++orient) {
          std::vector<TaskRef> a, b;
          for (size_t i = 0; i < p1.size(); ++i) ((i < q1) == ((orient & 1) == 0) ? a : b).push_back(p1[i]);
          for (size_t i = 0; i < p2.size(); ++i) ((i < q2) == ((orient & 2) == 0) ? a : b).push_back(p2[i]);
          std::vector<int> key;
          for (const auto& t : a) key.push_back(t.index);
          std::sort(key.begin(), key.end());
          if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
          seen.push_back(key);
          out.push_back({std::move(a), std::move(b)});
        }
      }
    }
  }
  return out;
}

/// Options for robots `ra` (and `rb` if >= 0) to complete `tasks` on the spider,
/// sorted by predicted span.
inline std::vector<GroupOption> crossing_options(const Spider& sp, const Instance& inst, int ra, int rb,
                                                 std::span<const TaskRef> tasks) {
  std::vector<GroupOption> out;
  const Vertex sa = inst.robots[static_cast<size_t>(ra)].start;
  if (rb < 0) {
    for (auto& [cost, plan] : single_robot_options(sp, sa, tasks, inst))
      out.push_back({cost, {{ra, std::move(plan)}}});
  } else {
    const Vertex sb = inst.robots[static_cast<size_t>(rb)].start;
    for (const auto& [ta, tb] : two_robot_partitions(sp, tasks)) {
      auto oa = single_robot_options(sp, sa, ta, inst);
      auto ob = single_robot_options(sp, sb, tb, inst);
      for (const auto& [ca, pa] : oa)
        for (const auto& [cb, pb] : ob) out.push_back({std::max(ca, cb), {{ra, pa}, {rb, pb}}});
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.predicted < y.predicted; });
  return out;
}

struct SpiderResult {
  ScheduleSet schedules;
  int makespan = 0;
};

/// Fastest schedule set for two robots on a spider tree (equal durations).
inline SpiderResult solve_two_robot_spider(const Instance& inst) {
  require_valid(inst);
  if (inst.robot_count() != 2) throw Error(ErrorCode::Precondition, "expected exactly two robots");
  Spider sp = spider_of_tree(inst.graph);
  std::vector<TaskRef> tasks;
  for (int i = 0; i < inst.task_count(); ++i) tasks.push_back({i, inst.tasks[static_cast<size_t>(i)].vertex});

  std::optional<Execution> best;
  for (auto& opt : crossing_options(sp, inst, 0, 1, tasks)) {
    if (best && opt.predicted >= best->span) break;
    std::vector<Plan> plans(2);
    for (auto& [r, p] : opt.plans) plans[static_cast<size_t>(r)] = std::move(p);
    auto ex = execute_plans(inst, std::move(plans));
    if (!ex || !validate_set(ex->schedules, inst).valid()) continue;
    if (!best || ex->span < best->span) best = std::move(ex);
  }
  if (!best) throw Error(ErrorCode::Resource, "no executable two-robot candidate");
  return {std::move(best->schedules), best->span};
}

}  // namespace rsched::spider
