#include <gtest/gtest.h>

#include <random>

#include "rsched/io.hpp"
#include "rsched/path_solver.hpp"
#include "support.hpp"

using namespace rsched;
namespace rt = rsched::testing;

TEST(InstanceJson, RoundTripAllTopologies) {
  std::vector<Instance> insts{rt::nine_vertex(), rt::split_path(), make_instance(Graph::cycle(5), {{2, 3}}, {4}),
                              make_instance(Graph::tadpole(5, 4), {{7, 1}}, {1, 9})};
  for (const auto& inst : insts) {
    auto text = io::serialize_instance(inst);
    auto back = io::parse_instance(text);
    EXPECT_EQ(back, inst);
    EXPECT_EQ(io::serialize_instance(back), text);
  }
}

TEST(InstanceJson, ExactFormat) {
  auto inst = make_instance(Graph::tadpole(3, 1), {{2, 1}}, {1});
  auto j = io::instance_to_json(inst);
  EXPECT_EQ(j.dump(),
            R"({"graph":{"type":"tadpole","cycle":3,"path":1},"tasks":[{"vertex":2,"duration":1}],"robots":[{"start":1}]})");
}

TEST(InstanceJson, Errors) {
  EXPECT_THROW(io::parse_instance("{"), Error);
  EXPECT_THROW(io::parse_instance(R"({"tasks":[],"robots":[]})"), Error);
  EXPECT_THROW(io::parse_instance(R"({"graph":{"type":"star","n":3},"tasks":[],"robots":[]})"), Error);
  EXPECT_THROW(io::parse_instance(R"({"graph":{"type":"path","n":"3"},"tasks":[],"robots":[]})"), Error);
  EXPECT_THROW(io::parse_instance(R"({"graph":{"type":"path","n":3},"tasks":[{"vertex":5,"duration":1}],"robots":[]})"),
               Error);
  EXPECT_THROW(io::parse_instance(R"({"graph":{"type":"path","n":3},"tasks":[],"robots":[{"start":1},{"start":1}]})"),
               Error);
  try {
    io::parse_instance(R"({"graph":{"type":"general","n":3,"edges":[[1]]},"tasks":[],"robots":[]})");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Parse);
  }
}

TEST(InstanceJson, IgnoresThreshold) {
  auto text = io::serialize_gadget(rt::split_path(), 9);
  EXPECT_NE(text.find("\"threshold\": 9"), std::string::npos);
  EXPECT_EQ(io::parse_instance(text), rt::split_path());
}

TEST(ScheduleJson, RoundTripSolverOutput) {
  std::mt19937 rng(61);
  rt::RandomSpec spec{3, 5, 3, 2, false};
  for (int i = 0; i < 200; ++i) {
    auto inst = rt::random_path(rng, 10, spec);
    auto cs = path::solve_k_partition(inst).schedules;
    auto text = io::serialize_schedules(cs);
    EXPECT_EQ(io::parse_schedules(text), cs);
    EXPECT_EQ(io::serialize_schedules(io::parse_schedules(text)), text);
  }
}

TEST(ScheduleJson, ExactFormat) {
  ScheduleSet cs{{Schedule{1, {WalkSegment{{{5, 4}}}, TaskSegment{4}}}, Schedule{2, {}}}};
  EXPECT_EQ(io::serialize_schedules(cs),
            "{\n  \"schedules\": [\n    {\"robot\":1,\"segments\":[{\"walk\":[[5,4]]},{\"task\":4}]},\n"
            "    {\"robot\":2,\"segments\":[]}\n  ]\n}\n");
  EXPECT_EQ(io::serialize_schedules({}), "{\n  \"schedules\": []\n}\n");
}

TEST(ScheduleJson, Errors) {
  EXPECT_THROW(io::parse_schedules(R"({"schedules":[{"robot":1,"segments":[{"hop":1}]}]})"), Error);
  EXPECT_THROW(io::parse_schedules(R"({"schedules":[{"robot":1,"segments":[{"walk":[[1,2,3]]}]}]})"), Error);
  EXPECT_THROW(io::parse_schedules(R"({"schedules":{}})"), Error);
}

TEST(BenchCsv, Rows) {
  std::vector<io::BenchRow> rows{{"a", "k-dp", 6, 3, 6, 4, 4, 0.25}, {"b", "cycle", 5, 1, 2, 3, std::nullopt, 1.0}};
  EXPECT_EQ(io::bench_csv(rows),
            "id,algo,n,k,m,makespan,oracle_makespan,wall_ms\na,k-dp,6,3,6,4,4,0.250\nb,cycle,5,1,2,3,,1.000\n");
}

TEST(DpCsv, DpPathTable) {
  auto res = path::solve_k_partition(rt::dp_path());
  EXPECT_EQ(res.table.to_csv(), "c,1,2,3,4,5,6\n1,2,4,6,9,11,13\n2,2,2,3,4,6,7\n3,2,2,3,4,4,4\n");
}
