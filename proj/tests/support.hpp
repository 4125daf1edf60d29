// support.hpp: fixtures shared by the tests.
#pragma once

#include <vector>

#include "rsched/core.hpp"
#include "rsched/random.hpp"

namespace rsched::testing {

/// Path P_6 with tasks v1:2, v2:1, v3:1, v4:2, v5:1, v6:1 and robots at v1, v3, v6.
inline Instance dp_path() {
  return make_instance(Graph::path(6), {{1, 2}, {2, 1}, {3, 1}, {4, 2}, {5, 1}, {6, 1}}, {1, 3, 6});
}

/// Path P_6 with tasks v1:1, v3:1, v4:1, v6:2 and robots at v5, v6.
inline Instance split_path() {
  return make_instance(Graph::path(6), {{1, 1}, {3, 1}, {4, 1}, {6, 2}}, {5, 6});
}

/// Path P_6 with tasks v1:1, v2:1, v3:4, v4:1, v5:1 and robots at v3, v6.
inline Instance gap_path() {
  return make_instance(Graph::path(6), {{1, 1}, {2, 1}, {3, 4}, {4, 1}, {5, 1}}, {3, 6});
}

/// Nine-vertex general graph with tasks v2:3, v4:2, v5:5 and robots at v7, v9.
inline Instance nine_vertex() {
  std::vector<std::pair<Vertex, Vertex>> edges{{4, 1}, {4, 5}, {1, 2}, {2, 5}, {2, 3}, {6, 9},
                                               {5, 8}, {8, 9}, {6, 3}, {6, 5}, {8, 7}, {4, 7}};
  return make_instance(Graph::general(9, edges), {{2, 3}, {4, 2}, {5, 5}}, {7, 9});
}

using namespace rsched::gen;

}  // namespace rsched::testing
