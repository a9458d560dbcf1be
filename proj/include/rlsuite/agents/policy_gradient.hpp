#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

#include "rlsuite/errors.hpp"
#include "rlsuite/rng.hpp"

namespace rlsuite::agents {

constexpr double kMinPolicyStd = 1e-6;

/// Gaussian policy with linear mean over a feature vector and state-free
/// log-std: a ~ N(W phi, diag(exp(log_std))^2), samples clipped to [-1, 1].
/// Parameters flatten to [W row-major, log_std] for gradient checks.
class LinearGaussianPolicy {
 public:
  LinearGaussianPolicy(int feature_dim, int action_dim, double learning_rate,
                       double initial_std = 0.5, double min_std = kMinPolicyStd)
      : f_(feature_dim), a_(action_dim), lr_(learning_rate),
        min_log_std_(std::log(std::max(min_std, kMinPolicyStd))),
        w_(static_cast<size_t>(feature_dim * action_dim), 0.0),
        log_std_(static_cast<size_t>(action_dim), std::log(initial_std)) {
    if (initial_std < kMinPolicyStd) throw ConfigError("initial_std too small");
    if (std::log(initial_std) < min_log_std_) throw ConfigError("initial_std below min_std");
  }

  int feature_dim() const { return f_; }
  int action_dim() const { return a_; }
  long clamp_events() const { return clamp_events_; }

  std::vector<double> mean(std::span<const double> phi) const {
    std::vector<double> mu(static_cast<size_t>(a_), 0.0);
    for (int d = 0; d < a_; ++d)
      for (int j = 0; j < f_; ++j) mu[static_cast<size_t>(d)] += w(d, j) * phi[static_cast<size_t>(j)];
    return mu;
  }

  std::vector<double> mean_clipped(std::span<const double> phi) const {
    auto mu = mean(phi);
    for (double& m : mu) m = std::clamp(m, -1.0, 1.0);
    return mu;
  }

  std::vector<double> sample(std::span<const double> phi, RngStream& rng) const {
    auto act = mean(phi);
    for (int d = 0; d < a_; ++d) {
      act[static_cast<size_t>(d)] += std::exp(log_std_[static_cast<size_t>(d)]) * rng.normal();
      act[static_cast<size_t>(d)] = std::clamp(act[static_cast<size_t>(d)], -1.0, 1.0);
    }
    return act;
  }

  double log_prob(std::span<const double> phi, std::span<const double> action) const {
    const auto mu = mean(phi);
    double lp = 0.0;
    for (int d = 0; d < a_; ++d) {
      const double sd = std::exp(log_std_[static_cast<size_t>(d)]);
      const double z = (action[static_cast<size_t>(d)] - mu[static_cast<size_t>(d)]) / sd;
      lp += -0.5 * z * z - log_std_[static_cast<size_t>(d)] - 0.91893853320467274178;  // log sqrt(2 pi)
    }
    return lp;
  }

  /// Analytic gradient of log_prob in flat parameter order.
  std::vector<double> grad_log_prob(std::span<const double> phi,
                                    std::span<const double> action) const {
    const auto mu = mean(phi);
    std::vector<double> g(parameter_count(), 0.0);
    for (int d = 0; d < a_; ++d) {
      const double sd = std::exp(log_std_[static_cast<size_t>(d)]);
      const double diff = action[static_cast<size_t>(d)] - mu[static_cast<size_t>(d)];
      for (int j = 0; j < f_; ++j)
        g[static_cast<size_t>(d * f_ + j)] = diff / (sd * sd) * phi[static_cast<size_t>(j)];
      g[static_cast<size_t>(a_ * f_ + d)] = diff * diff / (sd * sd) - 1.0;
    }
    return g;
  }

  /// One REINFORCE step: params += lr * advantage * grad log pi(a|s).
  void reinforce_step(std::span<const double> phi, std::span<const double> action,
                      double advantage) {
    const auto g = grad_log_prob(phi, action);
    for (size_t i = 0; i < w_.size(); ++i) w_[i] += lr_ * advantage * g[i];
    for (int d = 0; d < a_; ++d) {
      auto& ls = log_std_[static_cast<size_t>(d)];
      ls += lr_ * advantage * g[w_.size() + static_cast<size_t>(d)];
      if (ls < min_log_std_) {
        ls = min_log_std_;
        ++clamp_events_;
      }
    }
  }

  size_t parameter_count() const { return w_.size() + log_std_.size(); }
  std::vector<double> parameters() const {
    std::vector<double> p = w_;
    p.insert(p.end(), log_std_.begin(), log_std_.end());
    return p;
  }
  void set_parameters(std::span<const double> p) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] = p[i];
    for (size_t d = 0; d < log_std_.size(); ++d) log_std_[d] = p[w_.size() + d];
  }

 private:
  double w(int d, int j) const { return w_[static_cast<size_t>(d * f_ + j)]; }

  int f_, a_;
  double lr_;
  double min_log_std_;
  std::vector<double> w_;
  std::vector<double> log_std_;
  long clamp_events_ = 0;
};

/// Softmax policy with linear logits over a feature vector, for discrete
/// action sets. Parameters flatten to W row-major.
class LinearSoftmaxPolicy {
 public:
  LinearSoftmaxPolicy(int feature_dim, int num_actions, double learning_rate)
      : f_(feature_dim), a_(num_actions), lr_(learning_rate),
        w_(static_cast<size_t>(feature_dim * num_actions), 0.0) {}

  int feature_dim() const { return f_; }
  int num_actions() const { return a_; }

  std::vector<double> probabilities(std::span<const double> phi) const {
    std::vector<double> logits(static_cast<size_t>(a_), 0.0);
    for (int d = 0; d < a_; ++d)
      for (int j = 0; j < f_; ++j)
        logits[static_cast<size_t>(d)] += w_[static_cast<size_t>(d * f_ + j)] * phi[static_cast<size_t>(j)];
    const double m = *std::max_element(logits.begin(), logits.end());
    double z = 0.0;
    for (double& l : logits) {
      l = std::exp(l - m);
      z += l;
    }
    for (double& l : logits) l /= z;
    return logits;
  }

  int sample(std::span<const double> phi, RngStream& rng) const {
    const auto p = probabilities(phi);
    double u = rng.next_double();
    for (int d = 0; d < a_; ++d) {
      u -= p[static_cast<size_t>(d)];
      if (u < 0) return d;
    }
    return a_ - 1;
  }

  int greedy(std::span<const double> phi) const {
    const auto p = probabilities(phi);
    return static_cast<int>(std::max_element(p.begin(), p.end()) - p.begin());
  }

  double log_prob(std::span<const double> phi, int action) const {
    return std::log(probabilities(phi)[static_cast<size_t>(action)]);
  }

  std::vector<double> grad_log_prob(std::span<const double> phi, int action) const {
    const auto p = probabilities(phi);
    std::vector<double> g(w_.size(), 0.0);
    for (int d = 0; d < a_; ++d) {
      const double coef = (d == action ? 1.0 : 0.0) - p[static_cast<size_t>(d)];
      for (int j = 0; j < f_; ++j)
        g[static_cast<size_t>(d * f_ + j)] = coef * phi[static_cast<size_t>(j)];
    }
    return g;
  }

  void reinforce_step(std::span<const double> phi, int action, double advantage) {
    const auto g = grad_log_prob(phi, action);
    for (size_t i = 0; i < w_.size(); ++i) w_[i] += lr_ * advantage * g[i];
  }

  size_t parameter_count() const { return w_.size(); }
  std::vector<double> parameters() const { return w_; }
  void set_parameters(std::span<const double> p) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] = p[i];
  }

 private:
  int f_, a_;
  double lr_;
  std::vector<double> w_;
};

/// Running mean of episode returns, used as the REINFORCE advantage baseline.
struct ReinforceBaseline {
  double mean = 0.0;
  long count = 0;
  void update(double episode_return) {
    ++count;
    mean += (episode_return - mean) / static_cast<double>(count);
  }
};

struct GaussianPgStep {
  std::vector<double> features;
  std::vector<double> action;
  double reward = 0.0;
};

struct SoftmaxPgStep {
  std::vector<double> features;
  int action = 0;
  double reward = 0.0;
};

namespace detail {
inline std::vector<double> returns_to_go(size_t T, double gamma,
                                         const std::function<double(size_t)>& reward_at) {
  std::vector<double> g(T, 0.0);
  double acc = 0.0;
  for (size_t t = T; t-- > 0;) {
    acc = reward_at(t) + gamma * acc;
    g[t] = acc;
  }
  return g;
}
}  // namespace detail

/// Episode-batch REINFORCE with a running-mean baseline: for each step t in
/// time order, params += lr * (G_t - baseline) * grad log pi(a_t|s_t); the
/// baseline is then updated with the episode return G_0.
inline void reinforce_episode_update(LinearGaussianPolicy& policy,
                                     std::span<const GaussianPgStep> episode, double gamma,
                                     ReinforceBaseline& baseline) {
  if (episode.empty()) return;
  const auto g = detail::returns_to_go(episode.size(), gamma,
                                       [&](size_t t) { return episode[t].reward; });
  for (size_t t = 0; t < episode.size(); ++t)
    policy.reinforce_step(episode[t].features, episode[t].action, g[t] - baseline.mean);
  baseline.update(g[0]);
}

inline void reinforce_episode_update(LinearSoftmaxPolicy& policy,
                                     std::span<const SoftmaxPgStep> episode, double gamma,
                                     ReinforceBaseline& baseline) {
  if (episode.empty()) return;
  const auto g = detail::returns_to_go(episode.size(), gamma,
                                       [&](size_t t) { return episode[t].reward; });
  for (size_t t = 0; t < episode.size(); ++t)
    policy.reinforce_step(episode[t].features, episode[t].action, g[t] - baseline.mean);
  baseline.update(g[0]);
}

}  // namespace rlsuite::agents
