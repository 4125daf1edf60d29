// gadgets.hpp: instance generators for the hardness reductions, and checks
// that the threshold decision agrees with an exhaustive answer to the source
// problem.
//
// Vertex numbering: task vertices 1..m, then robot vertices, then (star) the
// centre.
#pragma once

#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "rsched/core.hpp"
#include "rsched/oracle.hpp"

namespace rsched::gadgets {

struct Gadget {
  Instance instance;
  int threshold = 0;
};

inline void require_at_least(std::span<const int> values, int lo) {
  for (int v : values)
    if (v < lo)
      throw Error(ErrorCode::Precondition, "partition values must be >= " + std::to_string(lo) +
                                               ", got " + std::to_string(v));
}

/// Complete graph on m + k vertices; task i has duration s_i - 1; threshold sum / k.
inline Gadget gadget_complete(std::span<const int> values, int k) {
  if (k < 1) throw Error(ErrorCode::Precondition, "need k >= 1");
  if (values.empty()) throw Error(ErrorCode::Precondition, "need at least one value");
  require_at_least(values, 2);
  const int sum = std::accumulate(values.begin(), values.end(), 0);
  if (sum % k != 0)
    throw Error(ErrorCode::Precondition, "sum " + std::to_string(sum) + " is not divisible by k = " + std::to_string(k));
  const int m = static_cast<int>(values.size());
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 1; u <= m + k; ++u)
    for (Vertex v = u + 1; v <= m + k; ++v) edges.push_back({u, v});
  std::vector<Task> tasks;
  for (int i = 0; i < m; ++i) tasks.push_back({i + 1, values[static_cast<size_t>(i)] - 1});
  std::vector<Vertex> starts;
  for (int j = 1; j <= k; ++j) starts.push_back(m + j);
  return {make_instance(Graph::general(m + k, edges), std::move(tasks), starts), sum / k};
}

/// Star with m task leaves, two robot leaves and the centre last; task i has
/// duration 2 s_i - 2; threshold 1 + sum.
inline Gadget gadget_star(std::span<const int> values) {
  if (values.empty()) throw Error(ErrorCode::Precondition, "need at least one value");
  require_at_least(values, 2);
  const int m = static_cast<int>(values.size());
  const Vertex centre = m + 3;
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 1; v < centre; ++v) edges.push_back({v, centre});
  std::vector<Task> tasks;
  for (int i = 0; i < m; ++i) tasks.push_back({i + 1, 2 * values[static_cast<size_t>(i)] - 2});
  const int sum = std::accumulate(values.begin(), values.end(), 0);
  return {make_instance(Graph::general(centre, edges), std::move(tasks), {m + 1, m + 2}), 1 + sum};
}

/// One duration-1 task per vertex of `g` and a single robot at `start`;
/// threshold 2n - 1. Planarity is not checked.
inline Gadget gadget_planar(const Graph& g, Vertex start) {
  if (!g.contains(start)) throw Error(ErrorCode::InvalidRange, "start vertex outside the graph");
  if (!is_connected(g)) throw Error(ErrorCode::Precondition, "graph must be connected");
  const int n = g.vertex_count();
  std::vector<Task> tasks;
  for (Vertex v = 1; v <= n; ++v) tasks.push_back({v, 1});
  return {make_instance(g.as_general(), std::move(tasks), {start}), 2 * n - 1};
}

/// Can `values` be split into k parts of equal sum? Exhaustive assignment.
inline bool has_perfect_partition(std::span<const int> values, int k) {
  if (k < 1) return false;
  const long sum = std::accumulate(values.begin(), values.end(), 0L);
  if (sum % k != 0) return false;
  const long target = sum / k;
  std::vector<long> load(static_cast<size_t>(k), 0);
  std::function<bool(size_t)> place = [&](size_t i) {
    if (i == values.size()) return true;
    for (size_t p = 0; p < load.size(); ++p) {
      if (load[p] + values[i] > target) continue;
      load[p] += values[i];
      if (place(i + 1)) return true;
      load[p] -= values[i];
      if (load[p] == 0) break;  // empty parts are interchangeable
    }
    return false;
  };
  return place(0);
}

/// Is there a Hamiltonian path of `g` starting at `start`? Exhaustive DFS.
inline bool has_hamiltonian_path(const Graph& g, Vertex start) {
  const int n = g.vertex_count();
  std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
  std::function<bool(Vertex, int)> dfs = [&](Vertex v, int count) {
    if (count == n) return true;
    for (Vertex w : g.neighbors(v)) {
      if (seen[static_cast<size_t>(w)]) continue;
      seen[static_cast<size_t>(w)] = true;
      if (dfs(w, count + 1)) return true;
      seen[static_cast<size_t>(w)] = false;
    }
    return false;
  };
  seen[static_cast<size_t>(start)] = true;
  return dfs(start, 1);
}

struct ReductionVerdict {
  bool gadget_feasible = false;  // feasible_within(threshold) on the gadget
  bool source_answer = false;
  bool match() const { return gadget_feasible == source_answer; }
};

/// Decides the gadget at its threshold with the oracle and compares.
inline ReductionVerdict check_reduction(const Gadget& gadget, bool source_answer, OracleOptions opts = {}) {
  return {feasible_within(gadget.instance, gadget.threshold, opts), source_answer};
}

}  // namespace rsched::gadgets
