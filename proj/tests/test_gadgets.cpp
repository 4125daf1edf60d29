#include <gtest/gtest.h>

#include "rsched/gadgets.hpp"

using namespace rsched;
using namespace rsched::gadgets;

TEST(Complete, ShapeAndThreshold) {
  std::vector<int> s{2, 3, 3, 4};
  auto g = gadget_complete(s, 2);
  EXPECT_EQ(g.threshold, 6);
  EXPECT_EQ(g.instance.graph.vertex_count(), 6);
  EXPECT_EQ(g.instance.graph.edge_count(), 15);
  EXPECT_EQ(g.instance.tasks[3].duration, 3);
  EXPECT_EQ(g.instance.robots[1].start, 6);
  EXPECT_TRUE(validate_instance(g.instance).empty());
  EXPECT_TRUE(check_reduction(g, has_perfect_partition(s, 2)).match());
}

TEST(Complete, FourTwos) {
  std::vector<int> s{2, 2, 2, 2};
  auto g = gadget_complete(s, 2);
  EXPECT_EQ(g.threshold, 4);
  EXPECT_TRUE(feasible_within(g.instance, 4));
  EXPECT_FALSE(feasible_within(g.instance, 3));
}

TEST(Complete, Preconditions) {
  std::vector<int> one{1, 3}, odd{2, 3};
  EXPECT_THROW(gadget_complete(one, 2), Error);
  EXPECT_THROW(gadget_complete(odd, 2), Error);
  EXPECT_THROW(gadget_complete(odd, 0), Error);
  EXPECT_THROW(gadget_complete({}, 1), Error);
}

TEST(Star, ShapeAndThreshold) {
  std::vector<int> s{2, 2};
  auto g = gadget_star(s);
  EXPECT_EQ(g.threshold, 5);
  EXPECT_EQ(g.instance.graph.vertex_count(), 5);
  EXPECT_EQ(g.instance.graph.degree(5), 4);
  EXPECT_EQ(g.instance.tasks[0].duration, 2);
  EXPECT_EQ(exact_optimum(g.instance).makespan, 5);
}

TEST(Star, NoPartitionMeansInfeasible) {
  std::vector<int> s{2, 4};
  auto g = gadget_star(s);
  EXPECT_FALSE(has_perfect_partition(s, 2));
  EXPECT_FALSE(feasible_within(g.instance, g.threshold));
}

TEST(Star, SmallMultisetsAgree) {
  for (int a = 2; a <= 4; ++a)
    for (int b = a; b <= 4; ++b)
      for (int c = b; c <= 4; ++c) {
        if ((a + b + c) % 2) continue;
        std::vector<int> s{a, b, c};
        auto v = check_reduction(gadget_star(s), has_perfect_partition(s, 2));
        EXPECT_TRUE(v.match()) << a << "," << b << "," << c;
      }
}

TEST(Planar, PathOfThree) {
  auto g = gadget_planar(Graph::path(3), 1);
  EXPECT_EQ(g.threshold, 5);
  EXPECT_EQ(g.instance.graph.kind(), TopologyKind::General);
  EXPECT_TRUE(feasible_within(g.instance, 5));
  auto mid = gadget_planar(Graph::path(3), 2);
  EXPECT_FALSE(has_hamiltonian_path(Graph::path(3), 2));
  EXPECT_FALSE(feasible_within(mid.instance, mid.threshold));
}

TEST(Planar, Preconditions) {
  std::vector<std::pair<Vertex, Vertex>> e{{1, 2}};
  EXPECT_THROW(gadget_planar(Graph::general(3, e), 1), Error);
  EXPECT_THROW(gadget_planar(Graph::path(3), 4), Error);
}

TEST(Sources, Partition) {
  std::vector<int> a{3, 1, 1, 2, 2, 1}, b{2, 2, 3};
  EXPECT_TRUE(has_perfect_partition(a, 2));
  EXPECT_FALSE(has_perfect_partition(a, 5));
  EXPECT_TRUE(has_perfect_partition(b, 1));
  EXPECT_FALSE(has_perfect_partition(b, 2));
  EXPECT_FALSE(has_perfect_partition(b, 0));
}

TEST(Sources, Hamiltonian) {
  EXPECT_TRUE(has_hamiltonian_path(Graph::cycle(5), 3));
  EXPECT_TRUE(has_hamiltonian_path(Graph::tadpole(3, 2), 2));
  EXPECT_FALSE(has_hamiltonian_path(Graph::tadpole(3, 2), 1));
  std::vector<std::pair<Vertex, Vertex>> star{{1, 2}, {1, 3}, {1, 4}};
  EXPECT_FALSE(has_hamiltonian_path(Graph::general(4, star), 2));
}
