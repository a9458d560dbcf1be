#pragma once

#include <cmath>
#include <span>

#include "rlsuite/agents/value_table.hpp"

namespace rlsuite::agents {

/// With probability epsilon a uniform action, otherwise the greedy action
/// (ties uniform at random).
inline int epsilon_greedy(const ValueTable& q, int64_t state, double epsilon, RngStream& rng) {
  if (epsilon < 0.0 || epsilon > 1.0) throw ConfigError("epsilon must lie in [0,1]");
  if (epsilon > 0.0 && rng.bernoulli(epsilon))
    return static_cast<int>(rng.uniform_int(q.num_actions()));
  return q.greedy_action(state, rng);
}

/// Off-policy one-step backup towards r + gamma * max_a' Q(s', a').
inline void q_learning_update(ValueTable& q, int64_t s, int a, double r, int64_t s2,
                              bool terminated, double alpha, double gamma) {
  const double target = r + gamma * q.max_value(s2) * (terminated ? 0.0 : 1.0);
  q.add(s, a, alpha * (target - q.get(s, a)));
}

/// On-policy one-step backup towards r + gamma * Q(s', a').
inline void sarsa_update(ValueTable& q, int64_t s, int a, double r, int64_t s2, int a2,
                         bool terminated, double alpha, double gamma) {
  const double target = r + gamma * q.get(s2, a2) * (terminated ? 0.0 : 1.0);
  q.add(s, a, alpha * (target - q.get(s, a)));
}

/// Q-learning with asymmetrically weighted TD errors: kappa > 0 over-weights
/// negative surprises (risk-averse), kappa < 0 the reverse.
inline void risk_sensitive_q_update(ValueTable& q, int64_t s, int a, double r, int64_t s2,
                                    bool terminated, double alpha, double gamma, double kappa) {
  if (kappa <= -1.0 || kappa >= 1.0) throw ConfigError("kappa must lie in (-1,1)");
  const double delta = r + gamma * q.max_value(s2) * (terminated ? 0.0 : 1.0) - q.get(s, a);
  const double weighted =
      (1.0 - kappa) * std::max(delta, 0.0) + (1.0 + kappa) * std::min(delta, 0.0);
  q.add(s, a, alpha * weighted);
}

/// Novelty bonus on top of the extrinsic reward; visit_count is the count of
/// the arrived-at state, incremented before the bonus is computed.
inline double count_bonus_reward(double r, long visit_count, double beta) {
  if (beta == 0.0) return r;
  return r + beta / std::sqrt(static_cast<double>(visit_count));
}

/// One logged transition of an episode trajectory.
struct Transition {
  int64_t state = 0;
  int action = 0;
  double reward = 0.0;
};

/// n-step SARSA applied at episode end, in time order. Targets use the first
/// min(n, T-t) real rewards and bootstrap from Q(s_{t+n}, a_{t+n}) only when
/// t+n lies inside the episode. n = 0 means Monte Carlo (infinite depth).
/// Updates are sequential, so later targets see earlier updates.
inline void nstep_sarsa_episode_update(ValueTable& q, std::span<const Transition> episode,
                                       int64_t n, double alpha, double gamma) {
  if (n < 0) throw ConfigError("backup depth must be >= 1 (0 = Monte Carlo)");
  const int64_t T = static_cast<int64_t>(episode.size());
  if (T == 0) return;
  const int64_t depth = (n == 0) ? T : n;
  for (int64_t t = 0; t < T; ++t) {
    const int64_t m = std::min(depth, T - t);
    double target = 0.0;
    double g = 1.0;
    for (int64_t i = 0; i < m; ++i) {
      target += g * episode[static_cast<size_t>(t + i)].reward;
      g *= gamma;
    }
    if (t + depth < T) {
      const auto& boot = episode[static_cast<size_t>(t + depth)];
      target += g * q.get(boot.state, boot.action);
    }
    const auto& cur = episode[static_cast<size_t>(t)];
    q.add(cur.state, cur.action, alpha * (target - q.get(cur.state, cur.action)));
  }
}

}  // namespace rlsuite::agents
