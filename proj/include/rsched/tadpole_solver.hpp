// tadpole_solver.hpp: k robots on a tadpole (a cycle c_1..c_m joined at c_1
// to a tail p_1..p_n).
//
// Candidates come from selections: at most two crossing robots take the tasks
// nearest the connector, the remaining tasks of each region go to the other
// robots through path DPs, and spare robots may relocate into one region via a
// virtual extension of its path (greedy slot placement). Selections are built
// on every spider obtained by removing one cycle edge, plus "ring" selections
// in which one crossing robot tours the whole cycle. Every candidate is
// replayed by the executor; the fastest valid set wins.
#pragma once

#include <algorithm>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <queue>
#include <tuple>
#include <vector>

#include "rsched/executor.hpp"
#include "rsched/path_solver.hpp"
#include "rsched/schedule.hpp"
#include "rsched/spider.hpp"

namespace rsched::tadpole {

using spider::GroupOption;
using spider::Spider;
using spider::TaskRef;

struct TadpoleResult {
  ScheduleSet schedules;
  int makespan = 0;
  bool optimal_claimed = false;
  std::optional<std::pair<Vertex, Vertex>> removed_edge;  // unset for ring candidates
  std::vector<int> crossing_robots;                        // robot ids of the chosen selection
  long candidates = 0;                                     // executed candidates
};

namespace detail {

/// Path DP over `tasks` (already in path coordinates) for robots at `starts`.
/// Returns the predicted span and per-robot plans in path coordinates, or
/// nullopt if tasks exist but no robot does.
struct PathGroup {
  int predicted = 0;
  std::vector<std::pair<int, Plan>> plans;  // robot index, plan in path coordinates
};

inline std::optional<PathGroup> path_group(std::vector<std::pair<Vertex, TaskRef>> tasks,
                                           std::vector<std::pair<Vertex, int>> robots,
                                           const Instance& inst) {
  PathGroup out;
  if (tasks.empty()) return out;
  if (robots.empty()) return std::nullopt;
  std::sort(tasks.begin(), tasks.end(), [](auto& a, auto& b) { return a.first < b.first; });
  std::sort(robots.begin(), robots.end());
  std::vector<Task> local;
  std::vector<int> ids;
  for (auto& [pos, t] : tasks) {
    local.push_back({pos, inst.tasks[static_cast<size_t>(t.index)].duration});
    ids.push_back(t.index);
  }
  std::vector<Vertex> starts;
  for (auto& r : robots) starts.push_back(r.first);
  auto table = path::fill_dp_table(local, starts);
  out.predicted = static_cast<int>(table.span(table.robots(), table.tasks()));
  auto blocks = path::reconstruct_blocks(table);
  std::span<const Task> lt(local);
  std::span<const int> li(ids);
  for (size_t c = 0; c < blocks.size(); ++c) {
    auto [lo, hi] = blocks[c];
    if (lo == hi) continue;
    auto count = static_cast<size_t>(hi - lo);
    out.plans.push_back({robots[c].second, path::one_robot_plan(lt.subspan(static_cast<size_t>(lo), count),
                                                                li.subspan(static_cast<size_t>(lo), count),
                                                                starts[c])});
  }
  return out;
}

/// Rewrites a plan through `to_real` (returning 0 for virtual positions, which
/// are dropped), after first walking `prefix`. Moves onto the current vertex
/// are dropped.
template <class F>
Plan map_plan(const Plan& plan, Vertex start, const std::vector<Vertex>& prefix, F to_real) {
  Plan out;
  Vertex at = start;
  for (Vertex v : prefix) {
    out.push_back(PlanStep::move(v));
    at = v;
  }
  for (const auto& st : plan) {
    Vertex v = to_real(st.to);
    if (v == 0) continue;
    if (st.is_work()) {
      out.push_back(PlanStep::work(st.task, v));
    } else if (v != at) {
      out.push_back(PlanStep::move(v));
      at = v;
    }
  }
  return out;
}

/// A robot entering the receiving leg from elsewhere.
struct Mover {
  int robot = 0;
  int distance = 0;            // to the connector
  std::vector<Vertex> route;   // from its start to the connector (start excluded)
};

/// Receiving-leg group: `leg` lists its vertices outward from `center`. Own
/// robots stand on the leg; movers are placed on a virtual extension beyond
/// the centre at the smallest free slot >= their distance.
inline std::optional<std::vector<std::pair<int, Plan>>> receiving_group(
    const Instance& inst, Vertex center, const std::vector<Vertex>& leg,
    const std::vector<std::pair<int, TaskRef>>& tasks,  // (depth, task); depth 0 = centre
    const std::vector<std::pair<int, int>>& own,        // (depth, robot)
    std::vector<Mover> movers, int& predicted) {
  predicted = 0;
  if (tasks.empty()) return std::vector<std::pair<int, Plan>>{};
  std::stable_sort(movers.begin(), movers.end(), [](auto& a, auto& b) {
    return std::tie(a.distance, a.robot) < std::tie(b.distance, b.robot);
  });
  std::vector<int> slot;
  int ext = 0;
  for (const auto& m : movers) {
    int s = m.distance;
    while (std::find(slot.begin(), slot.end(), s) != slot.end()) ++s;
    slot.push_back(s);
    ext = std::max(ext, s);
  }
  std::vector<std::pair<Vertex, TaskRef>> lt;
  for (auto& [d, t] : tasks) lt.push_back({ext + d + 1, t});
  std::vector<std::pair<Vertex, int>> lr;
  for (auto& [d, r] : own) lr.push_back({ext + d + 1, r});
  for (size_t i = 0; i < movers.size(); ++i) lr.push_back({ext - slot[i] + 1, movers[i].robot});
  auto grp = path_group(std::move(lt), std::move(lr), inst);
  if (!grp) return std::nullopt;
  predicted = grp->predicted;
  auto to_real = [&](Vertex x) -> Vertex {
    int d = x - 1 - ext;
    if (d < 0) return 0;
    return d == 0 ? center : leg[static_cast<size_t>(d - 1)];
  };
  std::vector<std::pair<int, Plan>> out;
  for (auto& [r, plan] : grp->plans) {
    std::vector<Vertex> prefix;
    for (const auto& m : movers)
      if (m.robot == r) prefix = m.route;
    out.push_back({r, map_plan(plan, inst.robots[static_cast<size_t>(r)].start, prefix, to_real)});
  }
  return out;
}

/// A selection with its non-crossing plans fixed and its crossing options shared.
struct Selection {
  int bound = 0;  // max of the non-crossing predictions and the best crossing option
  int others = 0;
  std::shared_ptr<const std::vector<GroupOption>> crossing;
  std::vector<std::pair<int, Plan>> plans;
  std::optional<std::pair<Vertex, Vertex>> cut;
  std::vector<int> crossing_robots;
};

inline std::vector<int> task_indices(const std::vector<TaskRef>& ts) {
  std::vector<int> out;
  for (const auto& t : ts) out.push_back(t.index);
  std::sort(out.begin(), out.end());
  return out;
}

/// Crossing-robot subsets of size 0, 1 and 2.
inline std::vector<std::pair<int, int>> crossing_choices(int k) {
  std::vector<std::pair<int, int>> out{{-1, -1}};
  for (int a = 0; a < k; ++a) out.push_back({a, -1});
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) out.push_back({a, b});
  return out;
}

/// Selections on the spider left after removing `cut`.
inline void spider_selections(const Instance& inst, const Spider& sp, std::pair<Vertex, Vertex> cut,
                              std::vector<Selection>& out) {
  const int k = inst.robot_count();
  std::array<std::vector<TaskRef>, 3> leg_tasks;
  std::optional<TaskRef> centre_task;
  for (int i = 0; i < inst.task_count(); ++i) {
    Vertex v = inst.tasks[static_cast<size_t>(i)].vertex;
    int l = sp.leg_of(v);
    if (l < 0) centre_task = TaskRef{i, v};
    else leg_tasks[static_cast<size_t>(l)].push_back({i, v});
  }
  for (auto& lt : leg_tasks)
    std::sort(lt.begin(), lt.end(), [&](auto& a, auto& b) { return sp.depth_of(a.vertex) < sp.depth_of(b.vertex); });

  std::map<std::tuple<int, int, std::vector<int>>, std::shared_ptr<const std::vector<GroupOption>>> cache;
  auto crossing_for = [&](int ra, int rb, const std::vector<TaskRef>& inner) {
    auto key = std::make_tuple(ra, rb, task_indices(inner));
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto opts = std::make_shared<const std::vector<GroupOption>>(spider::crossing_options(sp, inst, ra, rb, inner));
    cache.emplace(key, opts);
    return opts;
  };
  static const auto no_crossing = std::make_shared<const std::vector<GroupOption>>(std::vector<GroupOption>{GroupOption{}});

  const std::array<int, 3> sizes{static_cast<int>(leg_tasks[0].size()), static_cast<int>(leg_tasks[1].size()),
                                 static_cast<int>(leg_tasks[2].size())};
  for (auto [ra, rb] : crossing_choices(k)) {
    const bool any = ra >= 0;
    std::vector<int> rest;
    for (int r = 0; r < k; ++r)
      if (r != ra && r != rb) rest.push_back(r);
    std::array<std::vector<std::pair<int, int>>, 3> leg_robots;  // (depth, robot)
    std::optional<int> centre_robot;
    for (int r : rest) {
      Vertex s = inst.robots[static_cast<size_t>(r)].start;
      int l = sp.leg_of(s);
      if (l < 0) centre_robot = r;
      else leg_robots[static_cast<size_t>(l)].push_back({sp.depth_of(s), r});
    }
    for (auto& lr : leg_robots) std::sort(lr.begin(), lr.end());

    for (int b0 = 0; b0 <= (any ? sizes[0] : 0); ++b0)
      for (int b1 = 0; b1 <= (any ? sizes[1] : 0); ++b1)
        for (int b2 = 0; b2 <= (any ? sizes[2] : 0); ++b2)
          for (int cin = 0; cin <= (any && centre_task ? 1 : 0); ++cin) {
            const std::array<int, 3> b{b0, b1, b2};
            std::vector<TaskRef> inner;
            for (int l = 0; l < 3; ++l)
              for (int i = 0; i < b[static_cast<size_t>(l)]; ++i)
                inner.push_back(leg_tasks[static_cast<size_t>(l)][static_cast<size_t>(i)]);
            if (cin) inner.push_back(*centre_task);
            if (any && inner.empty()) continue;
            auto crossing = any ? crossing_for(ra, rb, inner) : no_crossing;
            if (crossing->empty()) continue;
            const int inner_best = crossing->front().predicted;

            for (int x = 0; x < 3; ++x) {
              const int y = (x + 1) % 3, z = (x + 2) % 3;
              const auto& Y = sp.legs[static_cast<size_t>(y)];
              for (int cplace = 0; cplace <= (centre_task && !cin ? 1 : 0); ++cplace) {
                const bool centre_to_x = cplace == 1;
                std::vector<std::pair<int, TaskRef>> xtasks;
                for (int i = b[static_cast<size_t>(x)]; i < sizes[static_cast<size_t>(x)]; ++i) {
                  const auto& t = leg_tasks[static_cast<size_t>(x)][static_cast<size_t>(i)];
                  xtasks.push_back({sp.depth_of(t.vertex), t});
                }
                if (centre_to_x) xtasks.push_back({0, *centre_task});
                const auto& ry = leg_robots[static_cast<size_t>(y)];
                const auto& rz = leg_robots[static_cast<size_t>(z)];
                const int max_jy = xtasks.empty() ? 0 : static_cast<int>(ry.size());
                const int max_jz = xtasks.empty() ? 0 : static_cast<int>(rz.size());
                const int max_cr = xtasks.empty() || !centre_robot ? 0 : 1;
                for (int jy = 0; jy <= max_jy; ++jy)
                  for (int jz = 0; jz <= max_jz; ++jz)
                    for (int cr = 0; cr <= max_cr; ++cr) {
                      // Through path Y (reversed) - centre - Z.
                      const int ylen = static_cast<int>(Y.size());
                      auto p1_pos = [&](Vertex v) {
                        int l = sp.leg_of(v), d = sp.depth_of(v);
                        return l == y ? ylen - d + 1 : (l == z ? ylen + 1 + d : ylen + 1);
                      };
                      std::vector<std::pair<Vertex, TaskRef>> ptasks;
                      for (int l : {y, z})
                        for (int i = b[static_cast<size_t>(l)]; i < sizes[static_cast<size_t>(l)]; ++i) {
                          const auto& t = leg_tasks[static_cast<size_t>(l)][static_cast<size_t>(i)];
                          ptasks.push_back({p1_pos(t.vertex), t});
                        }
                      if (centre_task && !cin && !centre_to_x) ptasks.push_back({p1_pos(sp.center), *centre_task});
                      std::vector<std::pair<Vertex, int>> probots;
                      std::vector<Mover> movers;
                      auto add_leg = [&](const std::vector<std::pair<int, int>>& rs, int j) {
                        for (size_t i = 0; i < rs.size(); ++i) {
                          int r = rs[i].second;
                          Vertex s = inst.robots[static_cast<size_t>(r)].start;
                          if (static_cast<int>(i) < j) movers.push_back({r, rs[i].first, sp.route(s, sp.center)});
                          else probots.push_back({p1_pos(s), r});
                        }
                      };
                      add_leg(ry, jy);
                      add_leg(rz, jz);
                      if (centre_robot) {
                        if (cr) movers.push_back({*centre_robot, 0, {}});
                        else probots.push_back({p1_pos(sp.center), *centre_robot});
                      }
                      auto pg = path_group(std::move(ptasks), std::move(probots), inst);
                      if (!pg) continue;
                      int xpred = 0;
                      auto xg = receiving_group(inst, sp.center, sp.legs[static_cast<size_t>(x)], xtasks,
                                                leg_robots[static_cast<size_t>(x)], movers, xpred);
                      if (!xg) continue;

                      Selection sel;
                      sel.others = std::max(pg->predicted, xpred);
                      sel.bound = std::max(sel.others, inner_best);
                      sel.crossing = crossing;
                      sel.cut = cut;
                      if (ra >= 0) sel.crossing_robots.push_back(ra);
                      if (rb >= 0) sel.crossing_robots.push_back(rb);
                      auto p1_real = [&](Vertex pos) -> Vertex {
                        if (pos <= ylen) return Y[static_cast<size_t>(ylen - pos)];
                        if (pos == ylen + 1) return sp.center;
                        return sp.legs[static_cast<size_t>(z)][static_cast<size_t>(pos - ylen - 2)];
                      };
                      for (auto& [r, plan] : pg->plans)
                        sel.plans.push_back({r, map_plan(plan, inst.robots[static_cast<size_t>(r)].start, {}, p1_real)});
                      for (auto& rp : *xg) sel.plans.push_back(std::move(rp));
                      out.push_back(std::move(sel));
                    }
              }
            }
          }
  }
}

/// Shortest route on `g` from u to v (u excluded); ties prefer smaller vertex ids.
inline std::vector<Vertex> shortest_route(const Graph& g, Vertex u, Vertex v) {
  std::vector<Vertex> parent(static_cast<size_t>(g.vertex_count()) + 1, 0);
  std::queue<Vertex> q;
  q.push(u);
  parent[static_cast<size_t>(u)] = u;
  while (!q.empty()) {
    Vertex x = q.front();
    q.pop();
    if (x == v) break;
    for (Vertex w : g.neighbors(x)) {
      if (parent[static_cast<size_t>(w)] != 0) continue;
      parent[static_cast<size_t>(w)] = x;
      q.push(w);
    }
  }
  std::vector<Vertex> out;
  for (Vertex x = v; x != u; x = parent[static_cast<size_t>(x)]) out.push_back(x);
  std::reverse(out.begin(), out.end());
  return out;
}

/// Walks for one robot that cover every cycle task by going once around the
/// cycle, plus the tail tasks up to depth `depth`.
inline std::vector<std::vector<Vertex>> ring_walks(const Graph& g, Vertex start,
                                                   const std::vector<Vertex>& cycle_targets, int depth) {
  const int c = g.cycle_length();
  auto step = [&](Vertex v, int dir) { return (v - 1 + dir + c) % c + 1; };
  auto tail = [&](int d) { return d == 0 ? Vertex{1} : c + d; };
  std::vector<std::vector<Vertex>> out;
  auto append = [&](std::vector<Vertex>& w, Vertex to) {
    auto r = shortest_route(g, w.back(), to);
    w.insert(w.end(), r.begin(), r.end());
  };
  for (int dir : {1, -1}) {
    for (int tail_first = 0; tail_first <= (depth > 0 ? 1 : 0); ++tail_first) {
      std::vector<Vertex> w{start};
      bool tail_done = depth == 0;
      auto excursion = [&] {
        append(w, tail(depth));
        append(w, 1);
        tail_done = true;
      };
      if (start > c) {
        if (depth > start - c && tail_first) append(w, tail(depth));
        tail_done = tail_done || depth <= start - c || tail_first;
        append(w, 1);
      }
      if (w.back() == 1 && tail_first && !tail_done) excursion();
      // Around the cycle, stopping after the last vertex still needed.
      std::vector<Vertex> loop{w.back()};
      for (int i = 1; i < c; ++i) loop.push_back(step(loop.back(), dir));
      size_t last = 0;
      for (size_t i = 1; i < loop.size(); ++i) {
        bool need = std::find(cycle_targets.begin(), cycle_targets.end(), loop[i]) != cycle_targets.end();
        if (need || (loop[i] == 1 && tail_first && !tail_done)) last = i;
      }
      for (size_t i = 1; i <= last; ++i) {
        w.push_back(loop[i]);
        if (loop[i] == 1 && tail_first && !tail_done) excursion();
      }
      if (!tail_done) append(w, tail(depth));
      if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(std::move(w));
    }
  }
  return out;
}

/// Ring selections: one crossing robot covers every cycle task (and the tail
/// tasks up to some depth) by touring the cycle.
inline void ring_selections(const Instance& inst, std::vector<Selection>& out) {
  const Graph& g = inst.graph;
  const int c = g.cycle_length();
  const int k = inst.robot_count();
  std::vector<Vertex> cycle_targets;
  std::vector<TaskRef> cycle_tasks;
  std::vector<std::pair<int, TaskRef>> tail_tasks;  // (depth, task)
  for (int i = 0; i < inst.task_count(); ++i) {
    Vertex v = inst.tasks[static_cast<size_t>(i)].vertex;
    if (v <= c) {
      cycle_targets.push_back(v);
      cycle_tasks.push_back({i, v});
    } else {
      tail_tasks.push_back({v - c, {i, v}});
    }
  }
  if (cycle_tasks.empty()) return;
  std::sort(tail_tasks.begin(), tail_tasks.end(), [](auto& a, auto& b) { return a.first < b.first; });
  std::vector<Vertex> tail_leg;
  for (int d = 1; d <= g.path_length(); ++d) tail_leg.push_back(c + d);
  auto cyc_dist = [&](Vertex v) { return std::min(v - 1, c - v + 1); };

  for (int ra = 0; ra < k; ++ra) {
    const Vertex sa = inst.robots[static_cast<size_t>(ra)].start;
    for (size_t b = 0; b <= tail_tasks.size(); ++b) {
      std::vector<TaskRef> inner = cycle_tasks;
      int depth = 0;
      for (size_t i = 0; i < b; ++i) {
        inner.push_back(tail_tasks[i].second);
        depth = tail_tasks[i].first;
      }
      int work = 0;
      for (const auto& t : inner) work += inst.tasks[static_cast<size_t>(t.index)].duration;
      auto opts = std::make_shared<std::vector<GroupOption>>();
      for (const auto& w : ring_walks(g, sa, cycle_targets, depth)) {
        int cost = static_cast<int>(w.size()) - 1 + work;
        for (bool last : {true, false})
          opts->push_back({cost, {{ra, spider::plan_from_walk(w, inner, last)}}});
      }
      std::stable_sort(opts->begin(), opts->end(), [](auto& x, auto& y) { return x.predicted < y.predicted; });
      std::vector<std::pair<int, TaskRef>> outer(tail_tasks.begin() + static_cast<long>(b), tail_tasks.end());

      std::vector<std::pair<int, int>> own;  // tail robots
      std::vector<std::pair<int, int>> cyc;  // (distance, robot) for cycle robots
      for (int r = 0; r < k; ++r) {
        if (r == ra) continue;
        Vertex s = inst.robots[static_cast<size_t>(r)].start;
        if (s > c) own.push_back({s - c, r});
        else cyc.push_back({cyc_dist(s), r});
      }
      std::sort(own.begin(), own.end());
      std::sort(cyc.begin(), cyc.end());
      for (size_t j = 0; j <= (outer.empty() ? 0 : cyc.size()); ++j) {
        std::vector<Mover> movers;
        for (size_t i = 0; i < j; ++i) {
          int r = cyc[i].second;
          movers.push_back({r, cyc[i].first, shortest_route(g, inst.robots[static_cast<size_t>(r)].start, 1)});
        }
        int xpred = 0;
        auto xg = receiving_group(inst, 1, tail_leg, outer, own, movers, xpred);
        if (!xg) continue;
        Selection sel;
        sel.others = xpred;
        sel.bound = std::max(xpred, opts->front().predicted);
        sel.crossing = opts;
        sel.plans = std::move(*xg);
        sel.crossing_robots = {ra};
        out.push_back(std::move(sel));
      }
    }
  }
}

}  // namespace detail

/// Fastest schedule set found over all selections (optimal for equal
/// durations on the tested range; see the oracle-equivalence tests).
inline TadpoleResult solve_tadpole(const Instance& inst) {
  require_topology(inst, TopologyKind::Tadpole);
  require_valid(inst);
  const Graph& g = inst.graph;
  const int c = g.cycle_length();
  const int k = inst.robot_count();

  TadpoleResult best;
  best.optimal_claimed = inst.equal_durations();
  if (inst.tasks.empty()) {
    for (const auto& r : inst.robots) best.schedules.schedules.push_back({r.id, {}});
    return best;
  }
  if (k == 0) throw Error(ErrorCode::Precondition, "tasks but no robots");

  std::vector<detail::Selection> sels;
  for (int i = 1; i <= c; ++i) {
    std::pair<Vertex, Vertex> cut{i, i % c + 1};
    Spider sp = spider::make_spider(g, 1, cut);
    detail::spider_selections(inst, sp, cut, sels);
  }
  detail::ring_selections(inst, sels);
  std::stable_sort(sels.begin(), sels.end(), [](auto& a, auto& b) { return a.bound < b.bound; });

  int best_span = std::numeric_limits<int>::max();
  for (const auto& sel : sels) {
    if (sel.bound >= best_span) break;
    for (const auto& opt : *sel.crossing) {
      if (std::max(opt.predicted, sel.others) >= best_span) break;
      std::vector<Plan> plans(static_cast<size_t>(k));
      for (const auto& [r, p] : sel.plans) plans[static_cast<size_t>(r)] = p;
      for (const auto& [r, p] : opt.plans) plans[static_cast<size_t>(r)] = p;
      ++best.candidates;
      auto ex = execute_plans(inst, std::move(plans));
      if (!ex || ex->span >= best_span) continue;
      if (!validate_set(ex->schedules, inst).valid()) continue;
      best_span = ex->span;
      best.schedules = std::move(ex->schedules);
      best.makespan = ex->span;
      best.removed_edge = sel.cut;
      best.crossing_robots.clear();
      for (int r : sel.crossing_robots) best.crossing_robots.push_back(inst.robots[static_cast<size_t>(r)].id);
    }
  }
  if (best_span == std::numeric_limits<int>::max())
    throw Error(ErrorCode::Resource, "no executable tadpole candidate");
  return best;
}

}  // namespace rsched::tadpole
