#pragma once

#include <algorithm>
#include <vector>

#include "rlsuite/experiments/config.hpp"

namespace rlsuite::experiments {

struct RunRow {
  int repetition = 0;
  int64_t step = 0;
  int64_t episode = 0;  // completed episodes so far
  double value = 0.0;   // logged return metric at this step
};

struct CurveRecord {
  CurveSpec spec;
  std::vector<RunRow> rows;  // sorted by (repetition, step)
};

struct RunRecord {
  ExperimentConfig config;
  std::vector<CurveRecord> curves;
};

/// Greedy rollout of one episode; returns the undiscounted episode return.
inline double greedy_episode_return(Env& env, agents::Agent& agent, RngStream& rng) {
  SpaceValue obs = env.reset();
  double total = 0.0;
  while (env.episode_active()) {
    const StepOutcome out = env.step(agent.act_greedy(obs, rng));
    total += out.reward;
    obs = out.observation;
  }
  return total;
}

namespace detail {

/// Emits one row per log_every steps; value semantics depend on eval mode.
class StepLogger {
 public:
  StepLogger(std::vector<RunRow>& rows, int repetition, int64_t log_every, int64_t total_steps)
      : rows_(rows), rep_(repetition), every_(log_every), total_(total_steps) {}

  void advance(int64_t up_to_step, int64_t episodes, double value) {
    up_to_step = std::min(up_to_step, total_);
    for (int64_t s = next_; s <= up_to_step; ++s)
      if (s % every_ == 0) rows_.push_back({rep_, s, episodes, value});
    next_ = std::max(next_, up_to_step + 1);
  }

 private:
  std::vector<RunRow>& rows_;
  int rep_;
  int64_t every_;
  int64_t total_;
  int64_t next_ = 1;
};

inline void run_one(const ExperimentConfig& cfg, const CurveSpec& spec, int rep,
                    std::vector<RunRow>& rows) {
  const uint64_t seed = cfg.base_seed + static_cast<uint64_t>(rep);
  EnvPtr env = envs::make_env(spec.env_name, spec.env_params, seed);
  agents::AgentPtr agent = agents::make_agent(spec.agent_name, spec.agent_params, *env);
  RngStream agent_rng = RngStream(seed).child("agent");
  StepLogger log(rows, rep, cfg.log_every, cfg.total_steps);

  if (agent->drives_env()) {
    int64_t step = 0;
    int64_t idle_iterations = 0;
    while (step < cfg.total_steps) {
      agent->on_progress(static_cast<double>(step) / std::max<int64_t>(cfg.total_steps, 1));
      const long consumed = agent->drive(*env, agent_rng);
      if (consumed == 0 && ++idle_iterations > 1)
        throw ContractViolationError(spec.agent_name + " consumed no steps while driving");
      step += consumed;
      log.advance(step, 0, agent->metric_override().value_or(0.0));
    }
    return;
  }

  EnvPtr eval_env;
  RngStream eval_rng = RngStream(seed).child("eval-policy");
  if (cfg.greedy_eval_every > 0) {
    eval_env = envs::make_env(spec.env_name, spec.env_params,
                              RngStream(seed).child("eval-env").seed());
  }

  int64_t step = 0, episodes = 0;
  double episode_return = 0.0, last_completed = 0.0, metric = 0.0;
  SpaceValue obs = env->reset();
  while (step < cfg.total_steps) {
    agent->on_progress(static_cast<double>(step) / cfg.total_steps);
    const SpaceValue action = agent->act(obs, agent_rng);
    const StepOutcome out = env->step(action);
    agent->observe(obs, action, out.reward, out.observation, out.terminated, out.truncated,
                   agent_rng);
    if (cfg.planning_budget_mode == "call-count") {
      const int64_t budget = spec.agent_params.value("planning_budget", int64_t{5});
      if (agent->model_calls_last_step() > budget)
        throw ContractViolationError("planning budget exceeded for " + spec.agent_name);
    }
    episode_return += out.reward;
    ++step;
    if (out.done()) {
      agent->end_episode();
      last_completed = episode_return;
      episode_return = 0.0;
      ++episodes;
      obs = env->reset();
    } else {
      obs = out.observation;
    }
    if (cfg.greedy_eval_every > 0) {
      if (step % cfg.greedy_eval_every == 0)
        metric = greedy_episode_return(*eval_env, *agent, eval_rng);
    } else {
      metric = last_completed;
    }
    log.advance(step, episodes, agent->metric_override().value_or(metric));
  }
}

}  // namespace detail

/// Runs every curve for every repetition (seed = base_seed + repetition) and
/// logs the per-step return metric. Deterministic given the config.
inline RunRecord run_experiment(const ExperimentConfig& cfg) {
  RunRecord record;
  record.config = cfg;
  for (const auto& spec : cfg.curves) {
    CurveRecord curve;
    curve.spec = spec;
    for (int rep = 0; rep < cfg.repetitions; ++rep)
      detail::run_one(cfg, spec, rep, curve.rows);
    std::sort(curve.rows.begin(), curve.rows.end(), [](const RunRow& a, const RunRow& b) {
      if (a.repetition != b.repetition) return a.repetition < b.repetition;
      return a.step < b.step;
    });
    record.curves.push_back(std::move(curve));
  }
  return record;
}

}  // namespace rlsuite::experiments
