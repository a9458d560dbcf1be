#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rlsuite/agents/go_explore.hpp"
#include "rlsuite/agents/planning.hpp"
#include "rlsuite/agents/policy_gradient.hpp"
#include "rlsuite/agents/updates.hpp"
#include "rlsuite/env.hpp"
#include "rlsuite/state_key.hpp"

namespace rlsuite::agents {

/// Shared learner hyperparameters. Field coverage varies per agent; unused
/// fields are ignored by construction.
struct LearnerConfig {
  double alpha = 0.1;          // step size
  double gamma = 1.0;          // discount used by the agent
  double epsilon = 0.1;        // exploration rate
  double epsilon_final = -1.0; // >= 0: linear schedule from epsilon to this
  int64_t n = 1;               // backup depth; 0 = Monte Carlo
  double beta = 0.0;           // count-based novelty bonus scale
  double kappa = 0.0;          // risk parameter in (-1,1)
  int64_t planning_budget = 5; // model queries per real step
  double theta = 1e-4;         // prioritised sweeping priority threshold
  double q0 = 0.0;             // value-table default (optimism when > 0)
  bool alpha_count_decay = false;  // alpha = 1/N(s,a) instead of constant
  double lr = 0.01;            // policy-gradient learning rate
  double init_std = 0.5;       // initial gaussian policy stddev
  double min_std = 1e-6;       // exploration floor of the gaussian policy
  int64_t explore_steps = 20;  // go-explore random burst length
  int64_t box_bins = 2;        // discretizer bins for box observations

  static LearnerConfig from_json(const nlohmann::json& j) {
    static const char* known[] = {"alpha", "gamma", "epsilon", "epsilon_final", "n", "beta",
                                  "kappa", "planning_budget", "theta", "q0", "alpha_count_decay",
                                  "lr", "init_std", "min_std", "explore_steps", "box_bins"};
    for (const auto& [key, value] : j.items()) {
      bool ok = false;
      for (const char* k : known)
        if (key == k) ok = true;
      if (!ok) throw ConfigError("agent config: unknown parameter '" + key + "'");
    }
    LearnerConfig c;
    c.alpha = j.value("alpha", c.alpha);
    c.gamma = j.value("gamma", c.gamma);
    c.epsilon = j.value("epsilon", c.epsilon);
    c.epsilon_final = j.value("epsilon_final", c.epsilon_final);
    c.n = j.value("n", c.n);
    c.beta = j.value("beta", c.beta);
    c.kappa = j.value("kappa", c.kappa);
    c.planning_budget = j.value("planning_budget", c.planning_budget);
    c.theta = j.value("theta", c.theta);
    c.q0 = j.value("q0", c.q0);
    c.alpha_count_decay = j.value("alpha_count_decay", c.alpha_count_decay);
    c.lr = j.value("lr", c.lr);
    c.init_std = j.value("init_std", c.init_std);
    c.min_std = j.value("min_std", c.min_std);
    c.explore_steps = j.value("explore_steps", c.explore_steps);
    c.box_bins = j.value("box_bins", c.box_bins);
    if (c.alpha <= 0.0 || c.alpha > 1.0) throw ConfigError("agent config: alpha must lie in (0,1]");
    if (c.gamma < 0.0 || c.gamma > 1.0) throw ConfigError("agent config: gamma must lie in [0,1]");
    if (c.epsilon < 0.0 || c.epsilon > 1.0)
      throw ConfigError("agent config: epsilon must lie in [0,1]");
    return c;
  }

  nlohmann::json to_json() const {
    return {{"alpha", alpha}, {"gamma", gamma}, {"epsilon", epsilon},
            {"epsilon_final", epsilon_final}, {"n", n}, {"beta", beta}, {"kappa", kappa},
            {"planning_budget", planning_budget}, {"theta", theta}, {"q0", q0},
            {"alpha_count_decay", alpha_count_decay}, {"lr", lr}, {"init_std", init_std},
            {"min_std", min_std}, {"explore_steps", explore_steps}, {"box_bins", box_bins}};
  }
};

/// Enumerates a countable action space as flat indices.
class ActionCodec {
 public:
  explicit ActionCodec(const SpaceDescriptor& space) : space_(space) {
    count_ = space.cardinality();
    if (count_ < 1) throw ConfigError("action space too large to enumerate");
  }

  int64_t count() const { return count_; }

  SpaceValue decode(int64_t index) const {
    if (space_.kind() == SpaceKind::discrete) return index;
    std::vector<int64_t> v(space_.dims().size());
    for (size_t i = 0; i < v.size(); ++i) {
      v[i] = index % space_.dims()[i];
      index /= space_.dims()[i];
    }
    return v;
  }

  int64_t encode(const SpaceValue& action) const { return state_key(action, space_); }

 private:
  SpaceDescriptor space_;
  int64_t count_ = 0;
};

/// Harness-facing learner: chooses actions, consumes transitions. Agents
/// that manage their own environment interaction (Go-Explore) report
/// drives_env() and implement drive() instead of act()/observe().
class Agent {
 public:
  virtual ~Agent() = default;
  virtual SpaceValue act(const SpaceValue& obs, RngStream& rng) = 0;
  virtual SpaceValue act_greedy(const SpaceValue& obs, RngStream& rng) = 0;
  virtual void observe(const SpaceValue& obs, const SpaceValue& action, double reward,
                       const SpaceValue& next_obs, bool terminated, bool truncated,
                       RngStream& rng) = 0;
  virtual void end_episode() {}
  /// Training progress in [0,1]; drives exploration schedules.
  virtual void on_progress(double) {}
  virtual bool drives_env() const { return false; }
  /// One self-driven iteration; returns environment steps consumed.
  virtual long drive(Env&, RngStream&) { return 0; }
  /// Replaces the logged per-step metric when present (e.g. best-found
  /// return for Go-Explore).
  virtual std::optional<double> metric_override() const { return std::nullopt; }
  virtual long model_calls_last_step() const { return 0; }
  virtual const ValueTable* value_table() const { return nullptr; }
};

using AgentPtr = std::unique_ptr<Agent>;

class TabularAgent : public Agent {
 public:
  TabularAgent(const Env& env, const LearnerConfig& cfg)
      : cfg_(cfg),
        encoder_(env.observation_space(), static_cast<int>(cfg.box_bins)),
        actions_(env.action_space()),
        q_(static_cast<int>(actions_.count()), cfg.q0),
        epsilon_(cfg.epsilon) {}

  SpaceValue act(const SpaceValue& obs, RngStream& rng) override {
    return actions_.decode(select(encoder_.key(obs), epsilon_, rng));
  }

  SpaceValue act_greedy(const SpaceValue& obs, RngStream& rng) override {
    return actions_.decode(q_.greedy_action(encoder_.key(obs), rng));
  }

  void on_progress(double fraction) override {
    if (cfg_.epsilon_final >= 0.0)
      epsilon_ = cfg_.epsilon + (cfg_.epsilon_final - cfg_.epsilon) * fraction;
  }

  const ValueTable* value_table() const override { return &q_; }
  ValueTable& table() { return q_; }
  double current_epsilon() const { return epsilon_; }

 protected:
  virtual int select(int64_t key, double epsilon, RngStream& rng) {
    return epsilon_greedy(q_, key, epsilon, rng);
  }

  double step_size(int64_t key, int action) {
    if (!cfg_.alpha_count_decay) return cfg_.alpha;
    return 1.0 / static_cast<double>(++update_counts_[{key, action}]);
  }

  LearnerConfig cfg_;
  KeyEncoder encoder_;
  ActionCodec actions_;
  ValueTable q_;
  double epsilon_;
  std::unordered_map<detail::SAKey, long, detail::SAKeyHash> update_counts_;
};

/// Q-learning; with beta > 0 it adds the count-based novelty bonus
/// beta / sqrt(N(s')) to the update reward (arrival-state counts, extrinsic
/// rewards stay untouched in the logs).
class QLearningAgent : public TabularAgent {
 public:
  using TabularAgent::TabularAgent;

  void observe(const SpaceValue& obs, const SpaceValue& action, double reward,
               const SpaceValue& next_obs, bool terminated, bool, RngStream&) override {
    const int64_t s = encoder_.key(obs);
    const int64_t s2 = encoder_.key(next_obs);
    const int a = static_cast<int>(actions_.encode(action));
    double r = reward;
    if (cfg_.beta > 0.0) r = count_bonus_reward(reward, ++state_counts_[s2], cfg_.beta);
    q_learning_update(q_, s, a, r, s2, terminated, step_size(s, a), cfg_.gamma);
  }

 private:
  std::unordered_map<int64_t, long> state_counts_;
};

class RiskSensitiveQAgent : public TabularAgent {
 public:
  using TabularAgent::TabularAgent;

  void observe(const SpaceValue& obs, const SpaceValue& action, double reward,
               const SpaceValue& next_obs, bool terminated, bool, RngStream&) override {
    const int64_t s = encoder_.key(obs);
    const int a = static_cast<int>(actions_.encode(action));
    risk_sensitive_q_update(q_, s, a, reward, encoder_.key(next_obs), terminated,
                            step_size(s, a), cfg_.gamma, cfg_.kappa);
  }
};

/// On-policy SARSA: the successor action is drawn at observe() time and
/// cached so that the following act() returns exactly the action that was
/// bootstrapped on.
class SarsaAgent : public TabularAgent {
 public:
  using TabularAgent::TabularAgent;

  SpaceValue act(const SpaceValue& obs, RngStream& rng) override {
    const int64_t key = encoder_.key(obs);
    if (pending_ && pending_->first == key) {
      const int a = pending_->second;
      pending_.reset();
      return actions_.decode(a);
    }
    pending_.reset();
    return actions_.decode(select(key, epsilon_, rng));
  }

  void observe(const SpaceValue& obs, const SpaceValue& action, double reward,
               const SpaceValue& next_obs, bool terminated, bool truncated,
               RngStream& rng) override {
    const int64_t s = encoder_.key(obs);
    const int64_t s2 = encoder_.key(next_obs);
    const int a = static_cast<int>(actions_.encode(action));
    const int a2 = select(s2, epsilon_, rng);
    sarsa_update(q_, s, a, reward, s2, a2, terminated, step_size(s, a), cfg_.gamma);
    if (!terminated && !truncated) pending_ = {{s2, a2}};
  }

  void end_episode() override { pending_.reset(); }

 private:
  std::optional<std::pair<int64_t, int>> pending_;
};

class NStepSarsaAgent : public TabularAgent {
 public:
  using TabularAgent::TabularAgent;

  void observe(const SpaceValue& obs, const SpaceValue& action, double reward, const SpaceValue&,
               bool, bool, RngStream&) override {
    episode_.push_back(
        {encoder_.key(obs), static_cast<int>(actions_.encode(action)), reward});
  }

  void end_episode() override {
    nstep_sarsa_episode_update(q_, episode_, cfg_.n, cfg_.alpha, cfg_.gamma);
    episode_.clear();
  }

 private:
  std::vector<Transition> episode_;
};

class DynaAgent : public TabularAgent {
 public:
  using TabularAgent::TabularAgent;

  void observe(const SpaceValue& obs, const SpaceValue& action, double reward,
               const SpaceValue& next_obs, bool terminated, bool, RngStream& rng) override {
    const int64_t s = encoder_.key(obs);
    const int a = static_cast<int>(actions_.encode(action));
    model_calls_ = dyna_learn_step(q_, model_, s, a, reward, encoder_.key(next_obs), terminated,
                                   cfg_.alpha, cfg_.gamma, cfg_.planning_budget, rng);
  }

  long model_calls_last_step() const override { return model_calls_; }
  const TabularModel& model() const { return model_; }

 private:
  TabularModel model_;
  long model_calls_ = 0;
};

class PrioritizedSweepingAgent : public TabularAgent {
 public:
  using TabularAgent::TabularAgent;

  void observe(const SpaceValue& obs, const SpaceValue& action, double reward,
               const SpaceValue& next_obs, bool terminated, bool, RngStream&) override {
    const int64_t s = encoder_.key(obs);
    const int a = static_cast<int>(actions_.encode(action));
    model_calls_ = prioritized_sweeping_step(q_, model_, pqueue_, s, a, reward,
                                             encoder_.key(next_obs), terminated, cfg_.alpha,
                                             cfg_.gamma, cfg_.planning_budget, cfg_.theta);
  }

  long model_calls_last_step() const override { return model_calls_; }
  const TabularModel& model() const { return model_; }
  PriorityQueue& queue() { return pqueue_; }

 private:
  TabularModel model_;
  PriorityQueue pqueue_;
  long model_calls_ = 0;
};

/// Go-Explore wrapper: each drive() runs one return-then-explore iteration.
/// The logged metric is the best terminal return found so far.
class GoExploreAgent : public Agent {
 public:
  GoExploreAgent(const Env&, const LearnerConfig& cfg) : cfg_(cfg) {}

  bool drives_env() const override { return true; }

  long drive(Env& env, RngStream& rng) override {
    return go_explore_step(archive_, env, rng, static_cast<int>(cfg_.explore_steps));
  }

  std::optional<double> metric_override() const override {
    return archive_.best_terminal_return();
  }

  SpaceValue act(const SpaceValue&, RngStream&) override {
    throw UnsupportedError("go_explore drives the environment itself");
  }
  SpaceValue act_greedy(const SpaceValue&, RngStream&) override {
    throw UnsupportedError("go_explore drives the environment itself");
  }
  void observe(const SpaceValue&, const SpaceValue&, double, const SpaceValue&, bool, bool,
               RngStream&) override {
    throw UnsupportedError("go_explore drives the environment itself");
  }

  GoExploreArchive& archive() { return archive_; }

 private:
  LearnerConfig cfg_;
  GoExploreArchive archive_;
};

/// Feature map for policy-gradient agents: box observations are scaled by
/// their bounds and a bias is appended. The 7-dim arm observation
/// additionally gets sin/cos of both joint angles, recovered from the link
/// positions.
inline std::vector<double> policy_features(const SpaceValue& obs, const SpaceDescriptor& space) {
  const auto& v = as_box(obs);
  std::vector<double> phi;
  phi.reserve(v.size() + 6);
  for (size_t i = 0; i < v.size(); ++i) {
    const double lo = space.low()[i], hi = space.high()[i];
    const double span = hi - lo;
    phi.push_back(span > 0 ? (2.0 * (v[i] - lo) / span - 1.0) : 0.0);
  }
  if (v.size() == 7) {  // (p1, p2, magnet, holding): augment with joint angles
    const double c1 = v[0], s1 = v[1];
    const double c12 = v[2] - v[0], s12 = v[3] - v[1];
    phi.push_back(s1);
    phi.push_back(c1);
    phi.push_back(s12 * c1 - c12 * s1);  // sin(theta2)
    phi.push_back(c12 * c1 + s12 * s1);  // cos(theta2)
  }
  phi.push_back(1.0);
  return phi;
}

class ReinforceGaussianAgent : public Agent {
 public:
  ReinforceGaussianAgent(const Env& env, const LearnerConfig& cfg)
      : cfg_(cfg), space_(env.observation_space()),
        policy_(static_cast<int>(policy_features(probe(env), space_).size()),
                static_cast<int>(env.action_space().shape()[0]), cfg.lr, cfg.init_std,
                cfg.min_std) {
    if (env.action_space().kind() != SpaceKind::box)
      throw ConfigError("reinforce (gaussian) needs a continuous action space");
  }

  SpaceValue act(const SpaceValue& obs, RngStream& rng) override {
    return policy_.sample(policy_features(obs, space_), rng);
  }

  SpaceValue act_greedy(const SpaceValue& obs, RngStream&) override {
    return policy_.mean_clipped(policy_features(obs, space_));
  }

  void observe(const SpaceValue& obs, const SpaceValue& action, double reward, const SpaceValue&,
               bool, bool, RngStream&) override {
    episode_.push_back({policy_features(obs, space_), as_box(action), reward});
  }

  void end_episode() override {
    reinforce_episode_update(policy_, episode_, cfg_.gamma, baseline_);
    episode_.clear();
  }

  LinearGaussianPolicy& policy() { return policy_; }

 private:
  static SpaceValue probe(const Env& env) {
    RngStream r(0);
    return env.observation_space().sample(r);
  }

  LearnerConfig cfg_;
  SpaceDescriptor space_;
  LinearGaussianPolicy policy_;
  std::vector<GaussianPgStep> episode_;
  ReinforceBaseline baseline_;
};

class ReinforceSoftmaxAgent : public Agent {
 public:
  ReinforceSoftmaxAgent(const Env& env, const LearnerConfig& cfg)
      : cfg_(cfg), space_(env.observation_space()), actions_(env.action_space()),
        policy_(static_cast<int>(policy_features(probe(env), space_).size()),
                static_cast<int>(actions_.count()), cfg.lr) {}

  SpaceValue act(const SpaceValue& obs, RngStream& rng) override {
    return actions_.decode(policy_.sample(policy_features(obs, space_), rng));
  }

  SpaceValue act_greedy(const SpaceValue& obs, RngStream&) override {
    return actions_.decode(policy_.greedy(policy_features(obs, space_)));
  }

  void observe(const SpaceValue& obs, const SpaceValue& action, double reward, const SpaceValue&,
               bool, bool, RngStream&) override {
    episode_.push_back({policy_features(obs, space_),
                        static_cast<int>(actions_.encode(action)), reward});
  }

  void end_episode() override {
    reinforce_episode_update(policy_, episode_, cfg_.gamma, baseline_);
    episode_.clear();
  }

  LinearSoftmaxPolicy& policy() { return policy_; }

 private:
  static SpaceValue probe(const Env& env) {
    RngStream r(0);
    return env.observation_space().sample(r);
  }

  LearnerConfig cfg_;
  SpaceDescriptor space_;
  ActionCodec actions_;
  LinearSoftmaxPolicy policy_;
  std::vector<SoftmaxPgStep> episode_;
  ReinforceBaseline baseline_;
};

inline const std::vector<std::string>& agent_names() {
  static const std::vector<std::string> names = {
      "q_learning", "sarsa", "nstep_sarsa", "risk_q", "dyna",
      "prioritized_sweeping", "go_explore", "reinforce", "reinforce_softmax"};
  return names;
}

/// Construct a learner by name for the given environment.
inline AgentPtr make_agent(const std::string& name, const nlohmann::json& params, const Env& env) {
  const LearnerConfig cfg = LearnerConfig::from_json(params);
  if (name == "q_learning") return std::make_unique<QLearningAgent>(env, cfg);
  if (name == "sarsa") return std::make_unique<SarsaAgent>(env, cfg);
  if (name == "nstep_sarsa") return std::make_unique<NStepSarsaAgent>(env, cfg);
  if (name == "risk_q") return std::make_unique<RiskSensitiveQAgent>(env, cfg);
  if (name == "dyna") return std::make_unique<DynaAgent>(env, cfg);
  if (name == "prioritized_sweeping") return std::make_unique<PrioritizedSweepingAgent>(env, cfg);
  if (name == "go_explore") return std::make_unique<GoExploreAgent>(env, cfg);
  if (name == "reinforce") return std::make_unique<ReinforceGaussianAgent>(env, cfg);
  if (name == "reinforce_softmax") return std::make_unique<ReinforceSoftmaxAgent>(env, cfg);
  std::string known;
  for (const auto& n : agent_names()) known += (known.empty() ? "" : ", ") + n;
  throw ConfigError("unknown agent '" + name + "' (known: " + known + ")");
}

}  // namespace rlsuite::agents
