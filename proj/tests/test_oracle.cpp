#include <gtest/gtest.h>

#include <cstdlib>
#include <random>

#include "rsched/oracle.hpp"
#include "rsched/path_solver.hpp"
#include "support.hpp"

using namespace rsched;
namespace rt = rsched::testing;

TEST(Oracle, SplitPathOptimumIsSix) {
  auto inst = rt::split_path();
  auto r = exact_optimum(inst);
  ASSERT_TRUE(r.feasible);
  EXPECT_EQ(r.makespan, 6);
  EXPECT_TRUE(validate_set(r.schedules, inst).valid());
  EXPECT_FALSE(feasible_within(inst, 5));
  EXPECT_TRUE(feasible_within(inst, 6));
}

TEST(Oracle, GapPathOptimumIsSeven) {
  auto inst = rt::gap_path();
  auto r = exact_optimum(inst);
  ASSERT_TRUE(r.feasible);
  EXPECT_EQ(r.makespan, 7);
  EXPECT_FALSE(feasible_within(inst, 6));
  auto v = validate_set(r.schedules, inst);
  EXPECT_TRUE(v.valid()) << v.summary();
  EXPECT_EQ(v.span, 7);
}

TEST(Oracle, NineVertexGraph) {
  auto inst = rt::nine_vertex();
  auto r = exact_optimum(inst);
  ASSERT_TRUE(r.feasible);
  EXPECT_LE(r.makespan, 8);
  EXPECT_TRUE(validate_set(r.schedules, inst).valid());
}

TEST(Oracle, CycleOfFour) {
  auto inst = make_instance(Graph::cycle(4), {{1, 1}, {3, 1}}, {2, 4});
  EXPECT_EQ(exact_optimum(inst).makespan, 2);
}

TEST(Oracle, EmptyAndTrivial) {
  auto none = make_instance(Graph::path(3), {}, {1});
  auto r = exact_optimum(none);
  EXPECT_TRUE(r.feasible);
  EXPECT_EQ(r.makespan, 0);
  auto here = make_instance(Graph::path(3), {{2, 3}}, {2});
  EXPECT_EQ(exact_optimum(here).makespan, 3);
}

TEST(Oracle, HorizonTooShort) {
  auto inst = rt::split_path();
  auto r = exact_optimum(inst, OracleOptions{4});
  EXPECT_FALSE(r.feasible);
  EXPECT_EQ(r.horizon, 4);
}

TEST(Oracle, HorizonFromEnvironment) {
  auto inst = rt::split_path();
  ::unsetenv("RSCHED_HORIZON");
  EXPECT_EQ(horizon_from_env(inst), default_horizon(inst));
  ::setenv("RSCHED_HORIZON", "17", 1);
  EXPECT_EQ(horizon_from_env(inst), 17);
  ::setenv("RSCHED_HORIZON", "x", 1);
  EXPECT_EQ(horizon_from_env(inst), default_horizon(inst));
  ::unsetenv("RSCHED_HORIZON");
}

TEST(Oracle, DeterministicOutput) {
  auto inst = rt::dp_path();
  EXPECT_EQ(exact_optimum(inst).schedules, exact_optimum(inst).schedules);
}

TEST(Oracle, MonotoneAndBoundedProperties) {
  // feasible_within is monotone in the limit, the optimum never beats the
  // single-robot lower bound max duration, and never exceeds a valid solver span.
  std::mt19937 rng(3);
  rt::RandomSpec spec{3, 5, 3, 2, false};
  for (int i = 0; i < 150; ++i) {
    auto inst = rt::random_path(rng, 8, spec);
    auto r = exact_optimum(inst);
    ASSERT_TRUE(r.feasible);
    int longest = 0;
    for (const auto& t : inst.tasks) longest = std::max(longest, t.duration);
    EXPECT_GE(r.makespan, longest);
    EXPECT_LE(r.makespan, path::solve_k_partition(inst).makespan);
    if (r.makespan > 0) {
      EXPECT_FALSE(feasible_within(inst, r.makespan - 1));
    }
    EXPECT_TRUE(feasible_within(inst, r.makespan + 1));
    EXPECT_TRUE(validate_set(r.schedules, inst).valid());
  }
}
