// Smallest possible training loop: tabular Q-learning on the supermarket.
#include <cstdio>

#include "rlsuite/agents/updates.hpp"
#include "rlsuite/envs/supermarket.hpp"

int main() {
  using namespace rlsuite;
  envs::SupermarketEnv env({}, /*seed=*/42);
  agents::ValueTable q(4);
  RngStream rng(7);

  const double alpha = 0.5, gamma = 0.99, epsilon = 0.1;
  double episode_return = 0.0;
  int episodes = 0;
  int64_t s = as_discrete(env.reset());
  for (long step = 0; step < 50000; ++step) {
    const int a = agents::epsilon_greedy(q, s, epsilon, rng);
    const StepOutcome out = env.step(int64_t{a});
    const int64_t s2 = as_discrete(out.observation);
    agents::q_learning_update(q, s, a, out.reward, s2, out.terminated, alpha, gamma);
    episode_return += out.reward;
    if (out.done()) {
      if (++episodes % 25 == 0)
        std::printf("episode %4d  return %7.1f\n", episodes, episode_return);
      episode_return = 0.0;
      s = as_discrete(env.reset());
    } else {
      s = s2;
    }
  }
  return 0;
}
