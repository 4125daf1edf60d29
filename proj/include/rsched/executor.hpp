// executor.hpp: turns per-robot itineraries into a collision-free schedule set.
//
// Solvers describe what each robot should do as a Plan (a list of moves and
// task visits). The executor replays all plans in lock step and resolves
// interference between them. A robot moving onto an idle robot hands its
// remaining plan to that robot, and two robots about to swap along an edge
// exchange their remaining plans. Any other conflict makes the later robot
// wait one timestep.
// Hand-offs keep the multiset of occupied vertices identical to the unresolved
// replay, so they never cost time. Robots therefore never pass each other.
#pragma once

#include <deque>
#include <optional>
#include <vector>

#include "rsched/core.hpp"
#include "rsched/schedule.hpp"

namespace rsched {

struct PlanStep {
  Vertex to = 0;
  int task = -1;  // >= 0: work the whole task (index into Instance::tasks) where the robot stands

  static PlanStep move(Vertex v) { return {v, -1}; }
  static PlanStep work(int task_index, Vertex v) { return {v, task_index}; }
  bool is_work() const { return task >= 0; }
};

using Plan = std::vector<PlanStep>;

struct ExecutionStats {
  int handoffs = 0;
  int waits = 0;
};

struct Execution {
  ScheduleSet schedules;
  int span = 0;
  ExecutionStats stats;
};

namespace detail {

struct Runner {
  Vertex pos = 0;
  std::deque<PlanStep> plan;
  int work_left = 0;
  // per-timestep record
  WalkRep moves;
  std::vector<bool> work;
  std::vector<bool> work_start;
  int last_active = 0;
};

enum class Intent { Idle, Stay, Work, StartWork, Move };

}  // namespace detail

/// Executes `plans` (one per instance robot, in instance order). Returns
/// nullopt if the replay cannot finish within `step_limit` timesteps
/// (default: generous bound derived from the plan lengths).
inline std::optional<Execution> execute_plans(const Instance& inst, std::vector<Plan> plans,
                                              int step_limit = 0) {
  using detail::Intent;
  const int k = inst.robot_count();
  if (static_cast<int>(plans.size()) != k) {
    throw Error(ErrorCode::Precondition, "need one plan per robot");
  }
  std::vector<detail::Runner> rs(static_cast<size_t>(k));
  long budget = 8;
  for (int r = 0; r < k; ++r) {
    auto& run = rs[static_cast<size_t>(r)];
    run.pos = inst.robots[static_cast<size_t>(r)].start;
    for (const auto& st : plans[static_cast<size_t>(r)]) {
      run.plan.push_back(st);
      budget += st.is_work() ? inst.tasks.at(static_cast<size_t>(st.task)).duration : 1;
    }
  }
  if (step_limit <= 0) step_limit = static_cast<int>(std::min<long>(budget * (k + 1) + 16, 1 << 24));

  ExecutionStats stats;
  std::vector<Intent> intent(static_cast<size_t>(k));
  std::vector<Vertex> target(static_cast<size_t>(k));

  auto propose = [&](int r) {
    auto& run = rs[static_cast<size_t>(r)];
    auto i = static_cast<size_t>(r);
    target[i] = run.pos;
    if (run.work_left > 0) {
      intent[i] = Intent::Work;
    } else if (run.plan.empty()) {
      intent[i] = Intent::Idle;
    } else if (run.plan.front().is_work()) {
      intent[i] = Intent::StartWork;
    } else if (run.plan.front().to == run.pos) {
      intent[i] = Intent::Stay;
    } else {
      intent[i] = Intent::Move;
      target[i] = run.plan.front().to;
    }
  };
  auto occupant = [&](Vertex v) {
    for (int r = 0; r < k; ++r)
      if (rs[static_cast<size_t>(r)].pos == v) return r;
    return -1;
  };
  auto remaining = [&](int r) {
    long s = rs[static_cast<size_t>(r)].work_left;
    for (const auto& st : rs[static_cast<size_t>(r)].plan)
      s += st.is_work() ? inst.tasks[static_cast<size_t>(st.task)].duration : 1;
    return s;
  };

  for (int t = 1;; ++t) {
    bool busy = false;
    for (const auto& run : rs) busy = busy || run.work_left > 0 || !run.plan.empty();
    if (!busy) break;
    if (t > step_limit) return std::nullopt;

    for (int r = 0; r < k; ++r) propose(r);

    // Hand-offs. Each one consumes at least one plan step, so this terminates.
    for (bool changed = true; changed;) {
      changed = false;
      for (int a = 0; a < k && !changed; ++a) {
        if (intent[static_cast<size_t>(a)] != Intent::Move) continue;
        int b = occupant(target[static_cast<size_t>(a)]);
        if (b < 0) continue;
        auto& ra = rs[static_cast<size_t>(a)];
        auto& rb = rs[static_cast<size_t>(b)];
        if (intent[static_cast<size_t>(b)] == Intent::Idle) {
          ra.plan.pop_front();
          rb.plan = std::move(ra.plan);
          ra.plan.clear();
          changed = true;
        } else if (intent[static_cast<size_t>(b)] == Intent::Move &&
                   target[static_cast<size_t>(b)] == ra.pos) {
          ra.plan.pop_front();
          rb.plan.pop_front();
          std::swap(ra.plan, rb.plan);
          changed = true;
        }
        if (changed) {
          ++stats.handoffs;
          propose(a);
          propose(b);
        }
      }
    }

    // Blocking: movers whose target stays occupied, or who lose a tie for the
    // same target, wait. Iterate because a blocked mover itself stays put.
    for (bool changed = true; changed;) {
      changed = false;
      for (int a = 0; a < k; ++a) {
        if (intent[static_cast<size_t>(a)] != Intent::Move) continue;
        Vertex x = target[static_cast<size_t>(a)];
        bool blocked = false;
        for (int b = 0; b < k && !blocked; ++b) {
          if (b == a) continue;
          auto ib = intent[static_cast<size_t>(b)];
          if (ib != Intent::Move && rs[static_cast<size_t>(b)].pos == x) blocked = true;
          if (ib == Intent::Move && target[static_cast<size_t>(b)] == x) {
            long ra = remaining(a), rb = remaining(b);
            if (rb > ra || (rb == ra && b < a)) blocked = true;
          }
          if (ib == Intent::Move && rs[static_cast<size_t>(b)].pos == x &&
              target[static_cast<size_t>(b)] == rs[static_cast<size_t>(a)].pos)
            blocked = true;
        }
        if (blocked) {
          intent[static_cast<size_t>(a)] = Intent::Stay;
          target[static_cast<size_t>(a)] = rs[static_cast<size_t>(a)].pos;
          ++stats.waits;
          changed = true;
        }
      }
    }

    for (int r = 0; r < k; ++r) {
      auto& run = rs[static_cast<size_t>(r)];
      auto i = static_cast<size_t>(r);
      Move mv{run.pos, target[i]};
      bool working = false, starting = false;
      switch (intent[i]) {
        case Intent::Work:
          working = true;
          --run.work_left;
          break;
        case Intent::StartWork: {
          const PlanStep st = run.plan.front();
          run.plan.pop_front();
          if (inst.tasks.at(static_cast<size_t>(st.task)).vertex != run.pos) {
            throw Error(ErrorCode::MalformedSchedule,
                        "plan works task " + std::to_string(st.task) + " away from its vertex");
          }
          run.work_left = inst.tasks[static_cast<size_t>(st.task)].duration - 1;
          working = starting = true;
          break;
        }
        case Intent::Move:
          run.plan.pop_front();
          break;
        case Intent::Stay:
          if (!run.plan.empty() && !run.plan.front().is_work() && run.plan.front().to == run.pos)
            run.plan.pop_front();  // explicit wait; blocked movers keep their step
          break;
        case Intent::Idle:
          break;
      }
      run.moves.push_back(mv);
      run.work.push_back(working);
      run.work_start.push_back(starting);
      run.pos = mv.to;
      if (intent[i] != Intent::Idle) run.last_active = t;
    }
  }

  Execution ex;
  ex.stats = stats;
  for (int r = 0; r < k; ++r) {
    auto& run = rs[static_cast<size_t>(r)];
    auto len = static_cast<size_t>(run.last_active);
    run.moves.resize(len);
    run.work.resize(len);
    run.work_start.resize(len);
    ex.schedules.schedules.push_back(
        schedule_from_steps(inst.robots[static_cast<size_t>(r)].id, run.moves, run.work, run.work_start));
    ex.span = std::max(ex.span, run.last_active);
  }
  return ex;
}

/// Shortest-path plan along `route` (consecutive vertices, first is excluded).
inline void append_route(Plan& plan, std::span<const Vertex> route) {
  for (Vertex v : route) plan.push_back(PlanStep::move(v));
}

}  // namespace rsched
