// random.hpp: seeded random instances for property tests and batch comparisons.
#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "rsched/core.hpp"

namespace rsched::gen {

/// `count` distinct vertices out of 1..n, sorted.
inline std::vector<Vertex> sample_vertices(std::mt19937& rng, int n, int count) {
  std::vector<Vertex> all(static_cast<size_t>(n));
  std::iota(all.begin(), all.end(), 1);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(static_cast<size_t>(count));
  return all;
}

struct RandomSpec {
  int max_robots = 3;
  int max_tasks = 5;
  int max_duration = 1;  // upper bound when durations are drawn independently
  int equal_cap = 2;
  bool equal = true;     // one common duration in [1, equal_cap] per instance
};

/// Random tasks and distinct robot starts on `g`.
inline Instance random_on(std::mt19937& rng, Graph g, const RandomSpec& spec) {
  const int n = g.vertex_count();
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const int k = pick(1, std::min(spec.max_robots, n));
  const int m = pick(0, std::min(spec.max_tasks, n));
  const int common = pick(1, spec.equal_cap);
  std::vector<Task> tasks;
  for (Vertex v : sample_vertices(rng, n, m))
    tasks.push_back({v, spec.equal ? common : pick(1, spec.max_duration)});
  auto starts = sample_vertices(rng, n, k);
  std::shuffle(starts.begin(), starts.end(), rng);
  return make_instance(std::move(g), std::move(tasks), starts);
}

inline Instance random_path(std::mt19937& rng, int max_n, const RandomSpec& spec) {
  int n = std::uniform_int_distribution<int>(1, max_n)(rng);
  return random_on(rng, Graph::path(n), spec);
}

inline Instance random_cycle(std::mt19937& rng, int max_n, const RandomSpec& spec) {
  int n = std::uniform_int_distribution<int>(3, max_n)(rng);
  return random_on(rng, Graph::cycle(n), spec);
}

/// Tadpole with cycle length c >= 3, path length p >= 1 and c + p <= max_total.
inline Instance random_tadpole(std::mt19937& rng, int max_total, const RandomSpec& spec) {
  int c = std::uniform_int_distribution<int>(3, max_total - 1)(rng);
  int p = std::uniform_int_distribution<int>(1, max_total - c)(rng);
  return random_on(rng, Graph::tadpole(c, p), spec);
}

/// Spider tree: centre 1 with three legs of the given lengths (0 allowed),
/// numbered leg by leg outward.
inline Graph spider_graph(int a, int b, int c) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  Vertex next = 2;
  for (int len : {a, b, c}) {
    Vertex prev = 1;
    for (int i = 0; i < len; ++i) {
      edges.push_back({prev, next});
      prev = next++;
    }
  }
  return Graph::general(next - 1, edges);
}

/// Random spider with at most `max_vertices` vertices, exactly two robots.
inline Instance random_spider(std::mt19937& rng, int max_vertices, int max_tasks) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  int a = pick(1, max_vertices - 3);
  int b = pick(1, max_vertices - 2 - a);
  int c = pick(0, max_vertices - 1 - a - b);
  RandomSpec spec{2, max_tasks, 1, 2, true};
  for (;;) {
    auto inst = random_on(rng, spider_graph(a, b, c), spec);
    if (inst.robot_count() == 2) return inst;
  }
}

}  // namespace rsched::gen
