// rsched.hpp: everything except io.hpp (which needs nlohmann/json).
#pragma once

#include "rsched/core.hpp"
#include "rsched/cycle_solver.hpp"
#include "rsched/executor.hpp"
#include "rsched/gadgets.hpp"
#include "rsched/oracle.hpp"
#include "rsched/path_solver.hpp"
#include "rsched/random.hpp"
#include "rsched/schedule.hpp"
#include "rsched/spider.hpp"
#include "rsched/tadpole_solver.hpp"
