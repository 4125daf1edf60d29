// oracle.hpp: exact optimum by breadth-first search over joint robot states.
//
// A state holds robot positions, the completed-task mask and per-robot work
// progress. Each timestep a robot moves along an incident edge or stays; a
// robot staying on an incomplete task may work on it, and once started it keeps
// working until the task is complete. BFS layers are timesteps, so the
// first layer containing a state with every task done is the optimum.
//
// Desk scale only: up to 4 robots, 12 tasks, 63 vertices, durations <= 31.
#pragma once

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "rsched/core.hpp"
#include "rsched/schedule.hpp"

namespace rsched {

struct OracleOptions {
  int horizon = 0;                    // 0: default 2 * (n + sum of durations)
  std::size_t state_budget = 30'000'000;
};

struct OracleResult {
  bool feasible = false;  // false: no task-completing set within `horizon`
  int makespan = 0;
  int horizon = 0;
  ScheduleSet schedules;
  std::size_t states = 0;
};

inline int default_horizon(const Instance& inst) {
  return 2 * (inst.graph.vertex_count() + inst.total_duration());
}

/// RSCHED_HORIZON overrides the default horizon when set to a positive integer.
inline int horizon_from_env(const Instance& inst) {
  if (const char* env = std::getenv("RSCHED_HORIZON")) {
    char* end = nullptr;
    long h = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && h > 0) return static_cast<int>(h);
  }
  return default_horizon(inst);
}

namespace detail {

class StateCodec {
 public:
  static constexpr int kMaxRobots = 4;
  static constexpr int kMaxTasks = 12;

  explicit StateCodec(int robots) : k_(robots) {}

  std::uint64_t pack(const std::vector<int>& pos, std::uint32_t done,
                     const std::vector<int>& progress) const {
    std::uint64_t key = done;
    for (int r = 0; r < k_; ++r) {
      key = (key << 6) | static_cast<std::uint64_t>(pos[static_cast<size_t>(r)]);
      key = (key << 5) | static_cast<std::uint64_t>(progress[static_cast<size_t>(r)]);
    }
    return key;
  }

  void unpack(std::uint64_t key, std::vector<int>& pos, std::uint32_t& done,
              std::vector<int>& progress) const {
    for (int r = k_ - 1; r >= 0; --r) {
      progress[static_cast<size_t>(r)] = static_cast<int>(key & 31u);
      key >>= 5;
      pos[static_cast<size_t>(r)] = static_cast<int>(key & 63u);
      key >>= 6;
    }
    done = static_cast<std::uint32_t>(key);
  }

 private:
  int k_;
};

struct Parent {
  std::uint64_t prev;
  std::uint32_t action;  // per robot 8 bits: 0 = stay/work, else 1 + neighbor slot
};

}  // namespace detail

/// Minimum makespan over all task-completing collision-free schedule sets with
/// span <= horizon, plus one witness. Throws Resource when the state budget is
/// exhausted.
inline OracleResult exact_optimum(const Instance& inst, OracleOptions opts = {}) {
  require_valid(inst);
  const Graph& g = inst.graph;
  const int k = inst.robot_count();
  const int m = inst.task_count();
  const int horizon = opts.horizon > 0 ? opts.horizon : default_horizon(inst);
  if (k > detail::StateCodec::kMaxRobots || m > detail::StateCodec::kMaxTasks ||
      g.vertex_count() > 63) {
    throw Error(ErrorCode::Resource, "instance beyond oracle desk scale (k <= 4, m <= 12, n <= 63)");
  }
  for (const auto& t : inst.tasks)
    if (t.duration > 31) throw Error(ErrorCode::Resource, "oracle supports durations <= 31");

  OracleResult res;
  res.horizon = horizon;
  if (m == 0) {
    res.feasible = true;
    for (const auto& r : inst.robots) res.schedules.schedules.push_back({r.id, {}});
    return res;
  }
  if (k == 0) return res;

  const auto dist = all_pairs_distances(g);
  const std::uint32_t full = (m >= 32) ? ~0u : ((1u << m) - 1u);
  std::vector<int> task_of(static_cast<size_t>(g.vertex_count()) + 1, -1);
  for (int i = 0; i < m; ++i) task_of[static_cast<size_t>(inst.tasks[static_cast<size_t>(i)].vertex)] = i;

  detail::StateCodec codec(k);
  std::unordered_map<std::uint64_t, detail::Parent> parent;
  parent.reserve(1 << 16);

  std::vector<int> pos(static_cast<size_t>(k)), prog(static_cast<size_t>(k), 0);
  for (int r = 0; r < k; ++r) pos[static_cast<size_t>(r)] = inst.robots[static_cast<size_t>(r)].start;
  const std::uint64_t root = codec.pack(pos, 0, prog);
  parent.emplace(root, detail::Parent{root, 0});

  // Admissible bound on the remaining time of a state.
  auto lower_bound = [&](const std::vector<int>& p, std::uint32_t done, const std::vector<int>& pr) {
    int lb = 0;
    for (int i = 0; i < m; ++i) {
      if (done & (1u << i)) continue;
      const Task& t = inst.tasks[static_cast<size_t>(i)];
      int best = 1 << 29;
      for (int r = 0; r < k; ++r) {
        int d = dist[static_cast<size_t>(p[static_cast<size_t>(r)])][static_cast<size_t>(t.vertex)];
        if (d < 0) continue;
        int need = d + t.duration;
        if (d == 0 && pr[static_cast<size_t>(r)] > 0) need = t.duration - pr[static_cast<size_t>(r)];
        best = std::min(best, need);
      }
      lb = std::max(lb, best);
    }
    return lb;
  };

  std::vector<std::uint64_t> frontier{root}, next;
  std::optional<std::uint64_t> goal;
  int layer = 0;

  // Per-robot candidate moves for the current state: (action code, new pos,
  // new progress, completes task index or -1).
  struct Option {
    std::uint32_t code;
    int to;
    int progress;
    int completes;
  };
  std::vector<std::vector<Option>> options(static_cast<size_t>(k));
  std::vector<int> choice(static_cast<size_t>(k));
  std::vector<int> npos(static_cast<size_t>(k)), nprog(static_cast<size_t>(k));

  while (!frontier.empty() && !goal && layer < horizon) {
    next.clear();
    for (std::uint64_t key : frontier) {
      std::uint32_t done = 0;
      codec.unpack(key, pos, done, prog);
      for (int r = 0; r < k; ++r) {
        auto& opt = options[static_cast<size_t>(r)];
        opt.clear();
        int p = pos[static_cast<size_t>(r)];
        int ti = task_of[static_cast<size_t>(p)];
        if (prog[static_cast<size_t>(r)] > 0) {
          int d = inst.tasks[static_cast<size_t>(ti)].duration;
          int np = prog[static_cast<size_t>(r)] + 1;
          opt.push_back({0, p, np == d ? 0 : np, np == d ? ti : -1});
          continue;
        }
        opt.push_back({0, p, 0, -1});  // wait
        if (ti >= 0 && !(done & (1u << ti))) {
          int d = inst.tasks[static_cast<size_t>(ti)].duration;
          opt.push_back({0x80u, p, d == 1 ? 0 : 1, d == 1 ? ti : -1});
        }
        auto nb = g.neighbors(p);
        for (size_t j = 0; j < nb.size(); ++j)
          opt.push_back({static_cast<std::uint32_t>(j + 1), nb[j], 0, -1});
      }

      // Enumerate joint actions depth first, pruning collisions as robots are added.
      int depth = 0;
      choice[0] = -1;
      while (depth >= 0) {
        auto& c = choice[static_cast<size_t>(depth)];
        ++c;
        if (c >= static_cast<int>(options[static_cast<size_t>(depth)].size())) {
          --depth;
          continue;
        }
        const Option& o = options[static_cast<size_t>(depth)][static_cast<size_t>(c)];
        bool ok = true;
        for (int q = 0; q < depth && ok; ++q) {
          if (npos[static_cast<size_t>(q)] == o.to) ok = false;
          if (npos[static_cast<size_t>(q)] == pos[static_cast<size_t>(depth)] &&
              pos[static_cast<size_t>(q)] == o.to)
            ok = false;
        }
        if (!ok) continue;
        npos[static_cast<size_t>(depth)] = o.to;
        nprog[static_cast<size_t>(depth)] = o.progress;
        if (depth + 1 < k) {
          ++depth;
          choice[static_cast<size_t>(depth)] = -1;
          continue;
        }
        std::uint32_t ndone = done;
        std::uint32_t action = 0;
        for (int r = 0; r < k; ++r) {
          const Option& orr =
              options[static_cast<size_t>(r)][static_cast<size_t>(choice[static_cast<size_t>(r)])];
          if (orr.completes >= 0) ndone |= 1u << orr.completes;
          action |= orr.code << (8 * r);
        }
        std::uint64_t nkey = codec.pack(npos, ndone, nprog);
        if (parent.contains(nkey)) continue;
        if (ndone != full && layer + 1 + lower_bound(npos, ndone, nprog) > horizon) continue;
        parent.emplace(nkey, detail::Parent{key, action});
        if (parent.size() > opts.state_budget) {
          throw Error(ErrorCode::Resource,
                      "oracle state budget of " + std::to_string(opts.state_budget) + " exceeded");
        }
        if (ndone == full) {
          goal = nkey;
          break;
        }
        next.push_back(nkey);
      }
      if (goal) break;
    }
    ++layer;
    frontier.swap(next);
  }
  res.states = parent.size();
  if (!goal) return res;

  // Walk the parent chain back to the root.
  std::vector<std::uint64_t> chain{*goal};
  while (chain.back() != root) chain.push_back(parent.at(chain.back()).prev);
  std::reverse(chain.begin(), chain.end());
  const int span = static_cast<int>(chain.size()) - 1;

  std::vector<WalkRep> moves(static_cast<size_t>(k));
  std::vector<std::vector<bool>> work(static_cast<size_t>(k)), start(static_cast<size_t>(k));
  std::vector<int> last_active(static_cast<size_t>(k), 0);
  std::vector<int> ppos(static_cast<size_t>(k)), pprog(static_cast<size_t>(k));
  std::uint32_t pdone = 0, qdone = 0;
  for (int s = 1; s <= span; ++s) {
    codec.unpack(chain[static_cast<size_t>(s - 1)], ppos, pdone, pprog);
    codec.unpack(chain[static_cast<size_t>(s)], pos, qdone, prog);
    std::uint32_t action = parent.at(chain[static_cast<size_t>(s)]).action;
    for (int r = 0; r < k; ++r) {
      auto i = static_cast<size_t>(r);
      std::uint32_t code = (action >> (8 * r)) & 0xffu;
      bool working = pprog[i] > 0 || code == 0x80u;
      moves[i].push_back(Move{ppos[i], pos[i]});
      work[i].push_back(working);
      start[i].push_back(code == 0x80u);
      if (working || ppos[i] != pos[i]) last_active[i] = s;
    }
  }
  res.feasible = true;
  res.makespan = span;
  for (int r = 0; r < k; ++r) {
    auto i = static_cast<size_t>(r);
    auto len = static_cast<size_t>(last_active[i]);
    moves[i].resize(len);
    work[i].resize(len);
    start[i].resize(len);
    res.schedules.schedules.push_back(schedule_from_steps(inst.robots[i].id, moves[i], work[i], start[i]));
  }
  return res;
}

/// Decision version: does a task-completing collision-free set of span <= L exist?
inline bool feasible_within(const Instance& inst, int limit, OracleOptions opts = {}) {
  if (limit < 0) return false;
  if (inst.tasks.empty()) return true;
  if (limit == 0) return false;
  opts.horizon = limit;
  return exact_optimum(inst, opts).feasible;
}

}  // namespace rsched
