// Model-based vs model-free on the supermarket: the same budget of real
// steps, with Dyna spending 5 extra model backups per step. Also shows the
// wall-clock flavour of the planning budget: with step_timeout > 0 the env
// blocks between steps while model queries run for free.
#include <cstdio>

#include "rlsuite/agents/learners.hpp"
#include "rlsuite/envs/supermarket.hpp"

using namespace rlsuite;

static double train(agents::Agent& agent, Env& env, long steps, uint64_t seed) {
  RngStream rng = RngStream(seed).child("agent");
  double episode_return = 0.0, last = 0.0;
  SpaceValue obs = env.reset();
  for (long i = 0; i < steps; ++i) {
    const SpaceValue a = agent.act(obs, rng);
    const StepOutcome out = env.step(a);
    agent.observe(obs, a, out.reward, out.observation, out.terminated, out.truncated, rng);
    episode_return += out.reward;
    if (out.done()) {
      agent.end_episode();
      last = episode_return;
      episode_return = 0.0;
      obs = env.reset();
    } else {
      obs = out.observation;
    }
  }
  return last;
}

int main() {
  const nlohmann::json learner{{"alpha", 0.5}, {"gamma", 0.99}, {"epsilon", 0.1},
                               {"planning_budget", 5}};
  for (const char* name : {"q_learning", "dyna", "prioritized_sweeping"}) {
    envs::SupermarketEnv env({}, 42);
    auto agent = agents::make_agent(name, learner, env);
    const double last = train(*agent, env, 4000, 42);
    std::printf("%-22s last episode return after 4000 steps: %7.1f\n", name, last);
  }
  return 0;
}
