// acceptance: runs the ten acceptance criteria plus the k-dp smoke check and
// prints one PASS/FAIL line per criterion. Exit status is the failure count.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "rsched/io.hpp"
#include "rsched/rsched.hpp"
#include "support.hpp"

using namespace rsched;
namespace rt = rsched::testing;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

Schedule sched(int robot, std::vector<Segment> segs) { return Schedule{robot, std::move(segs)}; }

WalkSegment walk(std::initializer_list<Vertex> vs) {
  WalkSegment w;
  const Vertex* prev = nullptr;
  for (const Vertex& v : vs) {
    if (prev) w.moves.push_back({*prev, v});
    prev = &v;
  }
  return w;
}

// 1 ------------------------------------------------------------------------
Outcome dp_golden_table() {
  Outcome o;
  auto inst = rt::dp_path();
  auto t0 = Clock::now();
  auto res = path::solve_k_partition(inst);
  double ms = ms_since(t0);
  const std::vector<std::vector<long>> want{{2, 4, 6, 9, 11, 13}, {2, 2, 3, 4, 6, 7}, {2, 2, 3, 4, 4, 4}};
  for (int c = 1; c <= 3; ++c) o.require(res.table.row(c) == want[static_cast<size_t>(c - 1)], "row mismatch");
  o.require(res.table.span(3, 6) == 4, "S[3,6] != 4");
  o.require(res.makespan == 4, "executed span != 4");
  o.require(validate_set(res.schedules, inst).valid(), "invalid set");
  o.require(ms < 1.0, fmt("took %.3f ms", ms));
  if (o.pass) o.detail = fmt("rows match, S[3,6]=4, %.3f ms", ms);
  return o;
}

// 2 ------------------------------------------------------------------------
Outcome split_path_spans() {
  Outcome o;
  auto res = path::solve_two_robot_partition(rt::split_path());
  auto& c = res.candidates;
  o.require(c.size() == 5, "expected 5 candidates");
  if (c.size() == 5) {
    o.require(c[1].left_span == 5 && c[1].right_span == 7, "candidate 1 != (5,7)");
    o.require(c[2].left_span == 6 && c[2].right_span == 5, "candidate 2 != (6,5)");
    o.require(c[3].left_span == 7 && c[3].right_span == 2, "candidate 3 != (7,2)");
  }
  o.require(res.makespan == 6, "makespan != 6");
  if (o.pass) o.detail = "(5,7) (6,5) (7,2), makespan 6";
  return o;
}

// 3 ------------------------------------------------------------------------
Outcome gap_path_gap() {
  Outcome o;
  auto inst = rt::gap_path();
  int dp = path::solve_k_partition(inst).makespan;
  int two = path::solve_two_robot_partition(inst).makespan;
  auto t0 = Clock::now();
  auto opt = exact_optimum(inst);
  double ms = ms_since(t0);
  o.require(dp == 8 && two == 8, "solver span != 8");
  o.require(opt.feasible && opt.makespan == 7, "oracle != 7");
  o.require(dp <= 2 * opt.makespan, "ratio above 2");
  o.require(ms < 1000.0, fmt("oracle took %.1f ms", ms));
  if (o.pass) o.detail = fmt("solver 8, oracle 7, ratio %.3f, oracle %.2f ms", 8.0 / 7.0, ms);
  return o;
}

// 4 ------------------------------------------------------------------------
Outcome nine_vertex_sets() {
  Outcome o;
  auto inst = rt::nine_vertex();
  ScheduleSet first{{sched(1, {walk({7, 8, 5}), TaskSegment{5}}),
                     sched(2, {walk({9, 6, 3, 2}), TaskSegment{2}, walk({2, 1, 4}), TaskSegment{4}})}};
  ScheduleSet second{{sched(1, {walk({7, 4}), TaskSegment{4}, walk({4, 1, 2}), TaskSegment{2}}),
                      sched(2, {walk({9, 6, 5}), TaskSegment{5}})}};
  auto a = validate_set(first, inst), b = validate_set(second, inst);
  o.require(a.valid() && a.span == 10, "first set: " + a.summary());
  o.require(b.valid() && b.span == 8, "second set: " + b.summary());
  if (o.pass) o.detail = "spans 10 and 8, both valid";
  return o;
}

// 5 ------------------------------------------------------------------------
Outcome closed_form() {
  Outcome o;
  std::mt19937 rng(5);
  rt::RandomSpec spec{1, 10, 5, 1, false};
  auto t0 = Clock::now();
  int n = 0;
  for (; n < 1000; ++n) {
    auto inst = rt::random_path(rng, 20, spec);
    auto c = path::solve_one_robot(inst);
    int built = time_span(c, inst);
    o.require(built == path::one_robot_span(inst.tasks, inst.robots[0].start), "mismatch at instance " + std::to_string(n));
    o.require(validate_set(ScheduleSet{{c}}, inst).valid(), "invalid schedule at instance " + std::to_string(n));
  }
  double ms = ms_since(t0);
  o.require(ms < 5000.0, fmt("took %.0f ms", ms));
  if (o.pass) o.detail = fmt("%.0f instances, %.1f ms", n, ms);
  return o;
}

// 6 ------------------------------------------------------------------------
Outcome oracle_equivalence() {
  Outcome o;
  std::mt19937 rng(6);
  rt::RandomSpec spec{3, 5, 1, 2, true};
  auto t0 = Clock::now();
  const int per = 250;
  auto check = [&](const char* what, const Instance& inst, int span, const ScheduleSet& cs, int i) {
    auto v = validate_set(cs, inst);
    int opt = exact_optimum(inst).makespan;
    o.require(v.valid() && v.span == span && span == opt,
              std::string(what) + " " + std::to_string(i) + ": solver " + std::to_string(span) + ", oracle " +
                  std::to_string(opt));
  };
  for (int i = 0; i < per; ++i) {
    auto inst = rt::random_path(rng, 8, spec);
    auto r = path::solve_k_partition(inst);
    check("path", inst, r.makespan, r.schedules, i);
  }
  for (int i = 0; i < per; ++i) {
    auto inst = rt::random_cycle(rng, 8, spec);
    auto r = cycle::solve_cycle(inst);
    check("cycle", inst, r.makespan, r.schedules, i);
  }
  rt::RandomSpec tspec{3, 4, 1, 2, true};
  for (int i = 0; i < per; ++i) {
    auto inst = rt::random_tadpole(rng, 8, tspec);
    auto r = tadpole::solve_tadpole(inst);
    check("tadpole", inst, r.makespan, r.schedules, i);
  }
  double s = ms_since(t0) / 1000.0;
  o.require(s < 300.0, fmt("took %.1f s", s));
  if (o.pass) o.detail = fmt("%.0f each of path, cycle, tadpole; %.2f s", per, s);
  return o;
}

// 7 ------------------------------------------------------------------------
Outcome approximation_bounds() {
  Outcome o;
  std::mt19937 rng(7);
  rt::RandomSpec spec{3, 5, 6, 1, false};
  const int per = 250;
  double worst = 1.0;
  auto check = [&](const char* what, const Instance& inst, int span, int bound, int i) {
    int opt = exact_optimum(inst).makespan;
    if (opt > 0) worst = std::max(worst, static_cast<double>(span) / opt);
    o.require(span <= bound * opt, std::string(what) + " " + std::to_string(i) + " exceeds bound");
  };
  for (int i = 0; i < per; ++i) {
    auto inst = rt::random_path(rng, 8, spec);
    check("path", inst, path::solve_k_partition(inst).makespan, inst.robot_count(), i);
  }
  for (int i = 0; i < per; ++i) {
    auto inst = rt::random_cycle(rng, 8, spec);
    check("cycle", inst, cycle::solve_cycle(inst).makespan, inst.robot_count(), i);
  }
  rt::RandomSpec two{2, 5, 6, 1, false};
  int pairs = 0;
  while (pairs < per) {
    auto inst = rt::random_path(rng, 8, two);
    if (inst.robot_count() != 2) continue;
    check("two-robot path", inst, path::solve_two_robot_partition(inst).makespan, 2, pairs++);
  }
  if (o.pass) o.detail = fmt("%.0f each of path, cycle, two-robot path; worst ratio %.3f", per, worst);
  return o;
}

// 8 ------------------------------------------------------------------------
Outcome star_iff() {
  Outcome o;
  auto t0 = Clock::now();
  int cases = 0, yes = 0;
  std::vector<int> s;
  std::function<void(int)> grow = [&](int lo) {
    if (s.size() >= 2) {
      int sum = 0;
      for (int v : s) sum += v;
      if (sum % 2 == 0) {
        bool source = gadgets::has_perfect_partition(s, 2);
        auto v = gadgets::check_reduction(gadgets::gadget_star(s), source);
        o.require(v.match(), "mismatch on a multiset of size " + std::to_string(s.size()));
        ++cases;
        yes += source;
      }
    }
    if (s.size() == 5) return;
    for (int x = lo; x <= 6; ++x) {
      s.push_back(x);
      grow(x);
      s.pop_back();
    }
  };
  grow(2);
  double sec = ms_since(t0) / 1000.0;
  o.require(cases >= 100, "fewer than 100 cases");
  o.require(sec < 120.0, fmt("took %.1f s", sec));
  if (o.pass) o.detail = fmt("%.0f multisets (%.0f partitionable), %.2f s", cases, yes, sec);
  return o;
}

// 9 ------------------------------------------------------------------------
Outcome planar_iff() {
  Outcome o;
  std::mt19937 rng(9);
  int cases = 0, yes = 0;
  while (cases < 150) {
    int n = std::uniform_int_distribution<int>(2, 6)(rng);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 1; u <= n; ++u)
      for (Vertex v = u + 1; v <= n; ++v)
        if (std::bernoulli_distribution(0.45)(rng)) edges.push_back({u, v});
    Graph g = Graph::general(n, edges);
    if (!is_connected(g)) continue;
    Vertex start = std::uniform_int_distribution<int>(1, n)(rng);
    bool source = gadgets::has_hamiltonian_path(g, start);
    auto v = gadgets::check_reduction(gadgets::gadget_planar(g, start), source);
    o.require(v.match(), "mismatch on graph " + std::to_string(cases));
    ++cases;
    yes += source;
  }
  if (o.pass) o.detail = fmt("%.0f connected graphs (%.0f with a Hamiltonian path)", cases, yes);
  return o;
}

// 10 -----------------------------------------------------------------------
Outcome validator_properties() {
  Outcome o;
  std::mt19937 rng(10);
  rt::RandomSpec spec{4, 6, 4, 2, false};
  int cases = 0;

  // Padding: appending idle loops at the final vertex keeps the verdict.
  // Order: path outputs never let robots pass each other.
  // Round trip: serialize then parse is the identity.
  for (int i = 0; i < 1000; ++i) {
    auto inst = rt::random_path(rng, 12, spec);
    auto cs = path::solve_k_partition(inst).schedules;
    auto v = validate_set(cs, inst);
    o.require(v.valid(), "solver output invalid");
    if (!cs.schedules.empty()) {
      auto padded = cs;
      auto& c = padded.schedules[static_cast<size_t>(i) % padded.schedules.size()];
      auto rep = walk_representation(c, inst);
      Vertex last = rep.empty() ? inst.robots[static_cast<size_t>(c.robot - 1)].start : rep.back().to;
      c.segments.emplace_back(WalkSegment{{{last, last}, {last, last}}});
      o.require(validate_set(padded, inst).valid(), "padding changed the verdict");
    }
    const int k = inst.robot_count();
    std::vector<WalkRep> reps;
    for (const auto& c : cs.schedules) reps.push_back(pad_to(walk_representation(c, inst), v.span, inst.robots[static_cast<size_t>(c.robot - 1)].start));
    for (int s = 0; s < v.span; ++s)
      for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
          bool before = inst.robots[static_cast<size_t>(a)].start < inst.robots[static_cast<size_t>(b)].start;
          bool now = reps[static_cast<size_t>(a)][static_cast<size_t>(s)].to < reps[static_cast<size_t>(b)][static_cast<size_t>(s)].to;
          if (before) o.require(now, "robots passed each other");
        }
    o.require(io::parse_schedules(io::serialize_schedules(cs)) == cs, "schedule round trip");
    o.require(io::parse_instance(io::serialize_instance(inst)) == inst, "instance round trip");
    ++cases;
  }

  // Swap: two robots exchanging an edge are always reported.
  for (int i = 0; i < 1000; ++i) {
    auto inst = rt::random_cycle(rng, 10, rt::RandomSpec{1, 0, 1, 1, true});
    const int n = inst.graph.vertex_count();
    Vertex u = std::uniform_int_distribution<int>(1, n)(rng), w = u % n + 1;
    int pre = std::uniform_int_distribution<int>(0, 3)(rng);
    auto two = make_instance(inst.graph, {}, {u, w});
    std::vector<Segment> a, b;
    if (pre) {
      a.emplace_back(WalkSegment{std::vector<Move>(static_cast<size_t>(pre), Move{u, u})});
      b.emplace_back(WalkSegment{std::vector<Move>(static_cast<size_t>(pre), Move{w, w})});
    }
    a.emplace_back(WalkSegment{{{u, w}}});
    b.emplace_back(WalkSegment{{{w, u}}});
    auto verdict = validate_set(ScheduleSet{{sched(1, a), sched(2, b)}}, two);
    bool found = false;
    for (const auto& x : verdict.violations)
      found = found || (x.kind == ViolationKind::EdgeSwap && x.timestep == pre + 1);
    o.require(found, "edge swap not reported");
    ++cases;
  }
  if (o.pass) o.detail = fmt("%.0f cases", cases);
  return o;
}

// smoke --------------------------------------------------------------------
Outcome dp_smoke() {
  Outcome o;
  std::mt19937 rng(11);
  const int n = 10000, m = 1000, k = 10;
  auto tv = gen::sample_vertices(rng, n, m);
  std::vector<Task> tasks;
  for (Vertex v : tv) tasks.push_back({v, std::uniform_int_distribution<int>(1, 5)(rng)});
  auto starts = gen::sample_vertices(rng, n, k);
  auto inst = make_instance(Graph::path(n), std::move(tasks), starts);
  auto t0 = Clock::now();
  auto res = path::solve_k_partition(inst);
  double s = ms_since(t0) / 1000.0;
  o.require(validate_set(res.schedules, inst).valid(), "invalid set");
  o.require(s < 10.0, fmt("took %.2f s", s));
  if (o.pass) o.detail = fmt("n=10000 m=1000 k=10 in %.2f s, makespan %.0f", s, res.makespan);
  return o;
}

}  // namespace

int main() {
  struct Row {
    const char* id;
    const char* name;
    Outcome (*run)();
  };
  const Row rows[] = {
      {"1", "DP golden table", dp_golden_table},
      {"2", "two-robot candidate spans", split_path_spans},
      {"3", "partition vs optimum gap", gap_path_gap},
      {"4", "general-graph schedule sets", nine_vertex_sets},
      {"5", "one-robot closed form", closed_form},
      {"6", "oracle equivalence, equal durations", oracle_equivalence},
      {"7", "approximation bounds, general durations", approximation_bounds},
      {"8", "star gadget iff", star_iff},
      {"9", "planar gadget iff", planar_iff},
      {"10", "validator properties", validator_properties},
      {"smoke", "k-dp at scale", dp_smoke},
  };
  int failed = 0;
  for (const auto& r : rows) {
    Outcome o;
    try {
      o = r.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s  %-5s %-40s %s\n", o.pass ? "PASS" : "FAIL", r.id, r.name, o.detail.c_str());
    std::fflush(stdout);
  }
  return failed;
}
