#pragma once

#include "rlsuite/env.hpp"
#include "rlsuite/errors.hpp"
#include "rlsuite/framestack.hpp"
#include "rlsuite/model.hpp"
#include "rlsuite/returns.hpp"
#include "rlsuite/rng.hpp"
#include "rlsuite/space.hpp"
#include "rlsuite/state_key.hpp"

#include "rlsuite/envs/registry.hpp"

#include "rlsuite/agents/go_explore.hpp"
#include "rlsuite/agents/learners.hpp"
#include "rlsuite/agents/planning.hpp"
#include "rlsuite/agents/policy_gradient.hpp"
#include "rlsuite/agents/tabular_model.hpp"
#include "rlsuite/agents/updates.hpp"
#include "rlsuite/agents/value_iteration.hpp"
#include "rlsuite/agents/value_table.hpp"

#include "rlsuite/experiments/aggregate.hpp"
#include "rlsuite/experiments/config.hpp"
#include "rlsuite/experiments/outputs.hpp"
#include "rlsuite/experiments/presets.hpp"
#include "rlsuite/experiments/runner.hpp"
