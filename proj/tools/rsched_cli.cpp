// rsched_cli: solve, validate, compare and generate k-robot scheduling instances.
//
// Exit codes: 0 success, 1 usage or input error, 2 invalid schedule,
// 3 oracle found nothing within its horizon, 4 approximation bound exceeded.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rsched/io.hpp"
#include "rsched/rsched.hpp"

namespace {

using namespace rsched;
using io::Json;

constexpr int kExitUsage = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitBound = 4;

struct Infeasible : std::runtime_error {
  int horizon;
  explicit Infeasible(int h)
      : std::runtime_error("no task-completing schedule within horizon " + std::to_string(h)), horizon(h) {}
};

struct Outcome {
  std::string algorithm;
  int makespan = 0;
  bool optimal_claimed = false;
  ScheduleSet schedules;
  Json extra = Json::object();
  std::optional<path::DpTable> table;
};

std::string auto_algorithm(const Instance& inst) {
  switch (inst.graph.kind()) {
    case TopologyKind::Path: return "k-dp";
    case TopologyKind::Cycle: return "cycle";
    case TopologyKind::Tadpole: return "tadpole";
    case TopologyKind::General: return "oracle";
  }
  return "oracle";
}

Outcome run_algorithm(const Instance& inst, std::string algo) {
  if (algo == "auto") algo = auto_algorithm(inst);
  Outcome out;
  out.algorithm = algo;
  const bool equal = inst.equal_durations();
  if (algo == "one-robot") {
    auto c = path::solve_one_robot(inst);
    out.schedules.schedules.push_back(c);
    out.makespan = time_span(c, inst);
    out.optimal_claimed = true;
  } else if (algo == "two-partition") {
    auto r = path::solve_two_robot_partition(inst);
    out.schedules = std::move(r.schedules);
    out.makespan = r.makespan;
    out.optimal_claimed = equal;
    out.extra["split"] = r.split;
  } else if (algo == "k-dp") {
    auto r = path::solve_k_partition(inst);
    out.schedules = std::move(r.schedules);
    out.makespan = r.makespan;
    out.optimal_claimed = equal;
    out.extra["table_value"] = r.predicted;
    if (r.diagnostic) out.extra["diagnostic"] = *r.diagnostic;
    out.table = std::move(r.table);
  } else if (algo == "cycle") {
    auto r = cycle::solve_cycle(inst);
    out.schedules = std::move(r.schedules);
    out.makespan = r.makespan;
    out.optimal_claimed = equal;
    out.extra["removed_edge"] = {r.removed_edge.first, r.removed_edge.second};
  } else if (algo == "tadpole") {
    auto r = tadpole::solve_tadpole(inst);
    out.schedules = std::move(r.schedules);
    out.makespan = r.makespan;
    out.optimal_claimed = equal;
    if (r.removed_edge) out.extra["removed_edge"] = {r.removed_edge->first, r.removed_edge->second};
    out.extra["crossing_robots"] = r.crossing_robots;
  } else if (algo == "oracle") {
    OracleOptions opts;
    opts.horizon = horizon_from_env(inst);
    auto r = exact_optimum(inst, opts);
    if (!r.feasible) throw Infeasible(r.horizon);
    out.schedules = std::move(r.schedules);
    out.makespan = r.makespan;
    out.optimal_claimed = true;
    out.extra["states"] = r.states;
  } else {
    throw Error(ErrorCode::Precondition, "unknown algorithm " + algo);
  }
  if (!equal && algo != "oracle" && algo != "one-robot") out.extra["guarantee"] = "k-approximation";
  return out;
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

Json violations_json(const Verdict& v) {
  Json arr = Json::array();
  for (const auto& x : v.violations) arr.push_back(x.message);
  return arr;
}

// ---- solve -----------------------------------------------------------------

struct SolveArgs {
  std::string in, algo = "auto", out, dp_csv;
  bool gantt = false, no_timing = false;
};

int cmd_solve(const SolveArgs& a) {
  Instance inst = io::parse_instance(io::read_file(a.in));
  auto t0 = std::chrono::steady_clock::now();
  Outcome o = run_algorithm(inst, a.algo);
  double ms = a.no_timing ? 0.0 : elapsed_ms(t0);
  Verdict v = validate_set(o.schedules, inst);

  Json report;
  report["algorithm"] = o.algorithm;
  report["makespan"] = o.makespan;
  report["optimal_claimed"] = o.optimal_claimed;
  report["valid"] = v.valid();
  report["violations"] = violations_json(v);
  report["wall_ms"] = ms;
  for (auto& [key, val] : o.extra.items()) report[key] = val;
  std::cout << report.dump(2) << "\n";

  if (!a.out.empty()) io::write_file(a.out, io::serialize_schedules(o.schedules));
  if (!a.dp_csv.empty()) {
    if (!o.table) throw Error(ErrorCode::Precondition, "--dp-csv needs --algo k-dp");
    io::write_file(a.dp_csv, o.table->to_csv());
  }
  if (a.gantt) std::cerr << gantt(o.schedules, inst);
  return v.valid() ? 0 : kExitInvalid;
}

// ---- validate --------------------------------------------------------------

int cmd_validate(const std::string& in, const std::string& sched) {
  Instance inst = io::parse_instance(io::read_file(in));
  ScheduleSet cs = io::parse_schedules(io::read_file(sched));
  Verdict v = validate_set(cs, inst);
  if (v.valid()) {
    std::cout << "valid, span " << v.span << "\n";
    return 0;
  }
  std::cout << "invalid\n";
  for (const auto& x : v.violations) std::cout << "  " << x.message << "\n";
  return kExitInvalid;
}

// ---- compare ---------------------------------------------------------------

struct CompareArgs {
  std::string in, random, algo = "auto", topology = "path", csv;
  int max_n = 8, max_k = 3, max_m = 5, max_duration = 6;
  bool equal = false, no_timing = false;
};

std::vector<std::pair<std::string, Instance>> compare_inputs(const CompareArgs& a) {
  std::vector<std::pair<std::string, Instance>> out;
  if (!a.in.empty()) {
    out.push_back({std::filesystem::path(a.in).stem().string(), io::parse_instance(io::read_file(a.in))});
    return out;
  }
  unsigned seed = 0;
  int count = 0;
  if (std::sscanf(a.random.c_str(), "%u,%d", &seed, &count) != 2 || count < 0)
    throw Error(ErrorCode::Parse, "--random expects seed,count");
  std::mt19937 rng(seed);
  gen::RandomSpec spec{a.max_k, a.max_m, a.max_duration, a.max_duration, a.equal};
  for (int i = 0; i < count; ++i) {
    Instance inst;
    if (a.topology == "path") inst = gen::random_path(rng, a.max_n, spec);
    else if (a.topology == "cycle") inst = gen::random_cycle(rng, std::max(3, a.max_n), spec);
    else if (a.topology == "tadpole") inst = gen::random_tadpole(rng, std::max(4, a.max_n), spec);
    else throw Error(ErrorCode::Parse, "unknown topology " + a.topology);
    char id[48];
    std::snprintf(id, sizeof id, "r%u-%04d", seed, i);
    out.push_back({id, std::move(inst)});
  }
  return out;
}

int cmd_compare(const CompareArgs& a) {
  if (a.in.empty() == a.random.empty()) throw Error(ErrorCode::Parse, "give exactly one of --in and --random");
  std::vector<io::BenchRow> rows;
  bool exceeded = false;
  std::printf("%-14s %-14s %3s %3s %3s %7s %7s %7s %5s\n", "id", "algo", "n", "k", "m", "solver", "oracle",
              "ratio", "bound");
  for (auto& [id, inst] : compare_inputs(a)) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o = run_algorithm(inst, a.algo);
    double ms = a.no_timing ? 0.0 : elapsed_ms(t0);
    auto opt = exact_optimum(inst, OracleOptions{horizon_from_env(inst)});
    if (!opt.feasible) throw Infeasible(opt.horizon);
    const int bound = o.algorithm == "two-partition" ? 2 : std::max(1, inst.robot_count());
    const double ratio = opt.makespan ? static_cast<double>(o.makespan) / opt.makespan : 1.0;
    const bool over = o.makespan > bound * opt.makespan;
    exceeded = exceeded || over;
    std::printf("%-14s %-14s %3d %3d %3d %7d %7d %7.3f %5d%s\n", id.c_str(), o.algorithm.c_str(),
                inst.graph.vertex_count(), inst.robot_count(), inst.task_count(), o.makespan, opt.makespan,
                ratio, bound, over ? "  EXCEEDED" : "");
    rows.push_back({id, o.algorithm, inst.graph.vertex_count(), inst.robot_count(), inst.task_count(), o.makespan,
                    opt.makespan, ms});
  }
  if (!a.csv.empty()) io::write_file(a.csv, io::bench_csv(rows));
  return exceeded ? kExitBound : 0;
}

// ---- gadget ----------------------------------------------------------------

Graph graph_file(const std::string& file) {
  Json j = Json::parse(io::read_file(file));
  return io::graph_from_json(j.contains("graph") ? j.at("graph") : j);
}

void emit(const std::string& out, const std::string& text) {
  if (out.empty()) std::cout << text;
  else io::write_file(out, text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-robot scheduling: solvers, validator, oracle and reduction gadgets"};
  app.require_subcommand(1);

  SolveArgs sa;
  auto* solve = app.add_subcommand("solve", "Solve an instance");
  solve->add_option("--in", sa.in, "Instance JSON")->required()->check(CLI::ExistingFile);
  solve->add_option("--algo", sa.algo, "Algorithm")
      ->check(CLI::IsMember({"auto", "one-robot", "two-partition", "k-dp", "cycle", "tadpole", "oracle"}));
  solve->add_option("--out", sa.out, "Write the schedule set JSON here");
  solve->add_option("--dp-csv", sa.dp_csv, "Write the DP table CSV here (k-dp only)");
  solve->add_flag("--gantt", sa.gantt, "Print a Gantt chart to stderr");
  solve->add_flag("--no-timing", sa.no_timing, "Report wall time as 0 for byte-stable output");

  std::string vin, vsched;
  auto* validate = app.add_subcommand("validate", "Validate a schedule set against an instance");
  validate->add_option("--in", vin, "Instance JSON")->required()->check(CLI::ExistingFile);
  validate->add_option("--schedule", vsched, "Schedule set JSON")->required()->check(CLI::ExistingFile);

  CompareArgs ca;
  auto* compare = app.add_subcommand("compare", "Compare a solver against the exact oracle");
  compare->add_option("--in", ca.in, "Instance JSON")->check(CLI::ExistingFile);
  compare->add_option("--random", ca.random, "seed,count for a random batch");
  compare->add_option("--algo", ca.algo, "Algorithm")
      ->check(CLI::IsMember({"auto", "two-partition", "k-dp", "cycle", "tadpole"}));
  compare->add_option("--topology", ca.topology, "path, cycle or tadpole (random batches)");
  compare->add_option("--max-n", ca.max_n, "Largest vertex count");
  compare->add_option("--max-k", ca.max_k, "Largest robot count");
  compare->add_option("--max-m", ca.max_m, "Largest task count");
  compare->add_option("--max-duration", ca.max_duration, "Largest task duration");
  compare->add_flag("--equal", ca.equal, "All tasks of an instance share one duration");
  compare->add_option("--csv", ca.csv, "Write the bench CSV here");
  compare->add_flag("--no-timing", ca.no_timing, "Report wall time as 0 for byte-stable output");

  auto* gadget = app.add_subcommand("gadget", "Generate a reduction gadget");
  gadget->require_subcommand(1);
  std::vector<int> values;
  int k = 2;
  std::string gout, gfile;
  int gstart = 1;
  auto* star = gadget->add_subcommand("star", "Star gadget (two robots)");
  star->add_option("--set", values, "Values, comma separated")->required()->delimiter(',');
  star->add_option("--out", gout, "Output file (default stdout)");
  auto* complete = gadget->add_subcommand("complete", "Complete-graph gadget");
  complete->add_option("--set", values, "Values, comma separated")->required()->delimiter(',');
  complete->add_option("--k", k, "Number of robots");
  complete->add_option("--out", gout, "Output file (default stdout)");
  auto* planar = gadget->add_subcommand("planar", "Hamiltonian-path gadget");
  planar->add_option("--graph", gfile, "Graph JSON (a graph object or an instance)")->required()->check(CLI::ExistingFile);
  planar->add_option("--start", gstart, "Start vertex");
  planar->add_option("--out", gout, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*solve) return cmd_solve(sa);
    if (*validate) return cmd_validate(vin, vsched);
    if (*compare) return cmd_compare(ca);
    if (*star) {
      auto g = gadgets::gadget_star(values);
      emit(gout, io::serialize_gadget(g.instance, g.threshold));
    } else if (*complete) {
      auto g = gadgets::gadget_complete(values, k);
      emit(gout, io::serialize_gadget(g.instance, g.threshold));
    } else if (*planar) {
      auto g = gadgets::gadget_planar(graph_file(gfile), gstart);
      emit(gout, io::serialize_gadget(g.instance, g.threshold));
    }
    return 0;
  } catch (const Infeasible& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
