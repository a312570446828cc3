#pragma once

#include "romdom/baselines.hpp"
#include "romdom/bench.hpp"
#include "romdom/error.hpp"
#include "romdom/game.hpp"
#include "romdom/generators.hpp"
#include "romdom/graph.hpp"
#include "romdom/report_json.hpp"
#include "romdom/rng.hpp"
#include "romdom/solvers.hpp"
#include "romdom/verify.hpp"
