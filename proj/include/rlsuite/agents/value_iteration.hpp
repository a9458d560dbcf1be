#pragma once

#include <algorithm>
#include <cmath>
#include <unordered_map>
#include <vector>

#include "rlsuite/agents/value_table.hpp"
#include "rlsuite/model.hpp"

namespace rlsuite::agents {

/// Dynamic-programming solve over an exact descriptive model:
///   V(s) <- max_a sum_s' p(s'|s,a) [ r + gamma * V(s') * (1 - terminal(s')) ]
/// until the max-norm change drops below tol; returns the greedy Q table.
/// Distributions that do not sum to 1 (within 1e-9) raise an Error.
inline ValueTable value_iteration(const DescriptiveModel& model, double gamma, double tol) {
  if (tol <= 0.0) throw ConfigError("value_iteration: tol must be > 0");
  if (gamma < 0.0 || gamma > 1.0) throw ConfigError("value_iteration: gamma must lie in [0,1]");

  std::vector<int64_t> states = model.states();
  std::sort(states.begin(), states.end());
  const auto num_actions = static_cast<int>(model.num_actions());

  // Query the model once per (s,a); repeated queries may be noisy.
  std::unordered_map<int64_t, std::vector<std::vector<ModelTransition>>> cached;
  cached.reserve(states.size());
  for (int64_t s : states) {
    auto& per_action = cached[s];
    per_action.reserve(static_cast<size_t>(num_actions));
    for (int a = 0; a < num_actions; ++a) {
      auto ts = model.transitions(s, a);
      double mass = 0.0;
      for (const auto& t : ts) mass += t.probability;
      if (std::abs(mass - 1.0) > 1e-9)
        throw Error("value_iteration: model distribution does not sum to 1 for state " +
                    std::to_string(s));
      per_action.push_back(std::move(ts));
    }
  }

  std::unordered_map<int64_t, double> v;
  for (int64_t s : states) v[s] = 0.0;
  const long max_sweeps = 1000000;
  for (long sweep = 0; sweep < max_sweeps; ++sweep) {
    double change = 0.0;
    for (int64_t s : states) {
      double best = -std::numeric_limits<double>::infinity();
      for (int a = 0; a < num_actions; ++a) {
        double qsa = 0.0;
        for (const auto& t : cached[s][a]) {
          const double vn = t.terminal ? 0.0 : v[t.next_state];
          qsa += t.probability * (t.reward + gamma * vn);
        }
        best = std::max(best, qsa);
      }
      change = std::max(change, std::abs(best - v[s]));
      v[s] = best;  // in-place (Gauss-Seidel) sweep
    }
    if (change < tol) break;
    if (sweep + 1 == max_sweeps) throw Error("value_iteration failed to converge");
  }

  ValueTable q(num_actions, 0.0);
  for (int64_t s : states) {
    for (int a = 0; a < num_actions; ++a) {
      double qsa = 0.0;
      for (const auto& t : cached[s][a]) {
        const double vn = t.terminal ? 0.0 : v[t.next_state];
        qsa += t.probability * (t.reward + gamma * vn);
      }
      q.set(s, a, qsa);
    }
  }
  return q;
}

}  // namespace rlsuite::agents
