#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "rlsuite/agents/learners.hpp"
#include "rlsuite/agents/planning.hpp"
#include "rlsuite/agents/value_iteration.hpp"
#include "rlsuite/envs/boulder.hpp"
#include "rlsuite/envs/roadrunner.hpp"
#include "rlsuite/envs/supermarket.hpp"

using namespace rlsuite;
using namespace rlsuite::agents;

namespace {

/// Exact model of a deterministic N-state chain: action 1 moves forward,
/// action 0 stays. The last transition pays 1 and terminates.
class ChainModel final : public DescriptiveModel {
 public:
  explicit ChainModel(int64_t n) : n_(n) {}
  std::vector<int64_t> states() const override {
    std::vector<int64_t> s;
    for (int64_t i = 0; i < n_; ++i) s.push_back(i);
    return s;
  }
  int64_t num_actions() const override { return 2; }
  std::vector<ModelTransition> transitions(int64_t s, int64_t a) const override {
    if (a == 0) return {{s, 1.0, 0.0, false}};
    if (s + 1 == n_) return {{s, 1.0, 1.0, true}};
    return {{s + 1, 1.0, 0.0, false}};
  }
 private:
  int64_t n_;
};

}  // namespace

TEST_CASE("tabular model: per-pair counts stay consistent under random updates") {
  TabularModel model;
  RngStream rng(1);
  for (int i = 0; i < 5000; ++i) {
    model.update(rng.uniform_int(10), static_cast<int>(rng.uniform_int(3)),
                 rng.uniform_real(-1, 1), rng.uniform_int(10), rng.bernoulli(0.05));
  }
  for (const auto& [s, a] : model.visited()) {
    const auto dist = model.distribution(s, a);
    double mass = 0.0;
    long count = 0;
    for (const auto& p : dist) {
      mass += p.probability;
      count += model.transition_count(s, a, p.next_state);
    }
    REQUIRE(mass == Catch::Approx(1.0).epsilon(1e-12));
    REQUIRE(count == model.visit_count(s, a));  // sum_s' N(s,a,s') == N(s,a)
  }
}

TEST_CASE("tabular model: a single observation is a unit mass on its successor") {
  TabularModel model;
  model.update(3, 1, 0.5, 7, false);
  const auto dist = model.distribution(3, 1);
  REQUIRE(dist.size() == 1);
  REQUIRE(dist[0].next_state == 7);
  REQUIRE(dist[0].probability == 1.0);
  REQUIRE(dist[0].reward == 0.5);
  const auto& preds = model.predecessors(7);
  REQUIRE(preds.size() == 1);
  REQUIRE(preds[0] == std::pair<int64_t, int>{3, 1});
}

TEST_CASE("dyna: zero planning budget reproduces plain q-learning bit for bit") {
  RngStream transitions(2);
  ValueTable plain(2);
  ValueTable dyna_q(2);
  TabularModel model;
  RngStream unused(3);
  for (int i = 0; i < 1000; ++i) {
    const int64_t s = transitions.uniform_int(6);
    const int a = static_cast<int>(transitions.uniform_int(2));
    const double r = transitions.uniform_real(-1, 1);
    const int64_t s2 = transitions.uniform_int(6);
    const bool term = transitions.bernoulli(0.1);
    q_learning_update(plain, s, a, r, s2, term, 0.2, 0.9);
    dyna_learn_step(dyna_q, model, s, a, r, s2, term, 0.2, 0.9, 0, unused);
  }
  for (int s = 0; s < 6; ++s)
    for (int a = 0; a < 2; ++a) REQUIRE(plain.get(s, a) == dyna_q.get(s, a));
}

TEST_CASE("dyna: planning propagates a goal reward faster than plain q-learning") {
  // deterministic 5-state chain, one scripted goal-reaching episode
  const auto run_episode = [](ValueTable& q, TabularModel* model, RngStream* rng, long budget) {
    for (int64_t s = 0; s < 5; ++s) {
      const bool term = (s == 4);
      const double r = term ? 1.0 : 0.0;
      const int64_t s2 = term ? 4 : s + 1;
      if (model) dyna_learn_step(q, *model, s, 1, r, s2, term, 1.0, 0.9, budget, *rng);
      else q_learning_update(q, s, 1, r, s2, term, 1.0, 0.9);
    }
  };

  ValueTable plain(2);
  run_episode(plain, nullptr, nullptr, 0);
  run_episode(plain, nullptr, nullptr, 0);
  long plain_nonzero = 0;
  for (int64_t s = 0; s < 5; ++s)
    if (plain.get(s, 1) != 0.0) ++plain_nonzero;

  ValueTable dyna_q(2);
  TabularModel model;
  RngStream rng(11);
  run_episode(dyna_q, &model, &rng, 10);
  long dyna_nonzero = 0;
  for (int64_t s = 0; s < 5; ++s)
    if (dyna_q.get(s, 1) != 0.0) ++dyna_nonzero;

  // one dyna episode spreads the reward at least as far as two plain ones
  REQUIRE(dyna_nonzero >= plain_nonzero);
  REQUIRE(dyna_q.get(3, 1) > 0.0);
}

TEST_CASE("prioritized sweeping: empty queue makes planning a no-op") {
  PriorityQueue q;
  REQUIRE(q.empty());
  REQUIRE_THROWS(q.pop());
}

TEST_CASE("prioritized sweeping: first terminal transition owns the queue") {
  ValueTable q(2);
  TabularModel model;
  PriorityQueue pq;
  // zero budget: only the queue push happens
  prioritized_sweeping_step(q, model, pq, 3, 1, 1.0, 4, true, 0.5, 0.9, 0, 1e-4);
  REQUIRE(pq.size() == 1);
  REQUIRE(pq.priority_of(3, 1) == 1.0);  // |r - Q(s,a)| = |1 - 0|
}

TEST_CASE("prioritized sweeping: backward sweep fills a chain in one episode") {
  // 4-state chain: s0 -> s1 -> s2 -> s3(goal). After the goal transition with
  // budget >= 3 every chain Q(s, forward) is nonzero, matching the DP oracle.
  ValueTable q(2);
  TabularModel model;
  PriorityQueue pq;
  const double alpha = 1.0, gamma = 0.9;
  // walk the chain once; transitions before the goal carry no error yet
  prioritized_sweeping_step(q, model, pq, 0, 1, 0.0, 1, false, alpha, gamma, 5, 1e-4);
  prioritized_sweeping_step(q, model, pq, 1, 1, 0.0, 2, false, alpha, gamma, 5, 1e-4);
  prioritized_sweeping_step(q, model, pq, 2, 1, 1.0, 3, true, alpha, gamma, 5, 1e-4);

  const ChainModel oracle(3);  // 3 interior states; builds the expected values
  ValueTable vi = value_iteration(oracle, gamma, 1e-12);
  for (int64_t s = 0; s < 3; ++s) {
    REQUIRE(q.get(s, 1) != 0.0);
    REQUIRE(q.get(s, 1) == Catch::Approx(vi.get(s, 1)).epsilon(1e-12));
  }
}

TEST_CASE("value iteration: zero fixed point and a two-state chain") {
  class Trivial final : public DescriptiveModel {
   public:
    std::vector<int64_t> states() const override { return {0}; }
    int64_t num_actions() const override { return 1; }
    std::vector<ModelTransition> transitions(int64_t, int64_t) const override {
      return {{0, 1.0, 0.0, false}};
    }
  } trivial;
  ValueTable v0 = value_iteration(trivial, 0.9, 1e-10);
  REQUIRE(v0.get(0, 0) == 0.0);

  class TwoState final : public DescriptiveModel {
   public:
    std::vector<int64_t> states() const override { return {0, 1}; }
    int64_t num_actions() const override { return 1; }
    std::vector<ModelTransition> transitions(int64_t s, int64_t) const override {
      if (s == 0) return {{1, 1.0, 1.0, true}};
      return {{1, 1.0, 0.0, true}};
    }
  } two;
  ValueTable v = value_iteration(two, 0.9, 1e-10);
  REQUIRE(v.get(0, 0) == 1.0);
}

TEST_CASE("value iteration: rejects non-normalized model distributions") {
  class Broken final : public DescriptiveModel {
   public:
    std::vector<int64_t> states() const override { return {0}; }
    int64_t num_actions() const override { return 1; }
    std::vector<ModelTransition> transitions(int64_t, int64_t) const override {
      return {{0, 0.7, 0.0, false}};
    }
  } broken;
  REQUIRE_THROWS_AS(value_iteration(broken, 0.9, 1e-10), Error);
}

namespace {

// Test-side exact model of a boulder instance (dynamics reimplemented here,
// instance grip sequence read from the env).
class BoulderModel final : public DescriptiveModel {
 public:
  BoulderModel(std::vector<int64_t> grips, int64_t num_grips)
      : grips_(std::move(grips)), n_(num_grips) {}
  std::vector<int64_t> states() const override {
    std::vector<int64_t> s;
    for (int64_t h = 0; h < static_cast<int64_t>(grips_.size()); ++h) s.push_back(h);
    return s;
  }
  int64_t num_actions() const override { return n_; }
  std::vector<ModelTransition> transitions(int64_t h, int64_t a) const override {
    const int64_t H = static_cast<int64_t>(grips_.size());
    if (a == grips_[static_cast<size_t>(h)]) {
      if (h + 1 == H) return {{H, 1.0, 1.0, true}};
      return {{h + 1, 1.0, 0.0, false}};
    }
    return {{0, 1.0, 0.0, false}};
  }
 private:
  std::vector<int64_t> grips_;
  int64_t n_;
};

// Test-side exact model of the roadrunner dynamics; state id = x * 16 + dx.
class RoadrunnerModel final : public DescriptiveModel {
 public:
  RoadrunnerModel(int64_t width, int64_t max_speed, double penalty)
      : w_(width), ms_(max_speed), r_(penalty) {}
  std::vector<int64_t> states() const override {
    std::vector<int64_t> s;
    for (int64_t x = 0; x < w_ - 1; ++x)
      for (int64_t dx = 0; dx <= ms_; ++dx) s.push_back(x * 16 + dx);
    return s;
  }
  int64_t num_actions() const override { return 3; }
  std::vector<ModelTransition> transitions(int64_t state, int64_t a) const override {
    const int64_t x = state / 16;
    int64_t dx = state % 16 + a - 1;
    if (dx < 0) return {{state, 1.0, -1.0 + r_, true}};
    dx = std::min(dx, ms_);
    const int64_t nx = x + dx;
    if (nx == w_ - 1) return {{state, 1.0, 0.0, true}};
    if (nx > w_ - 1) return {{state, 1.0, -1.0 + r_, true}};
    return {{nx * 16 + dx, 1.0, -1.0, false}};
  }
 private:
  int64_t w_, ms_;
  double r_;
};

}  // namespace

TEST_CASE("oracle equivalence: q-learning matches value iteration on small boulder") {
  const double gamma = 0.95;
  envs::BoulderEnv env({5, 2, 100000}, 13);
  const BoulderModel model(env.correct_grips(), 2);
  const ValueTable vi = value_iteration(model, gamma, 1e-12);

  auto agent = make_agent("q_learning",
                          nlohmann::json{{"alpha", 0.1}, {"alpha_count_decay", true},
                                         {"gamma", gamma}, {"epsilon", 0.2}},
                          env);
  RngStream rng = RngStream(13).child("agent");
  SpaceValue obs = env.reset();
  for (int64_t i = 0; i < 100000; ++i) {
    if (!env.episode_active()) obs = env.reset();
    const auto a = agent->act(obs, rng);
    const auto out = env.step(a);
    agent->observe(obs, a, out.reward, out.observation, out.terminated, out.truncated, rng);
    obs = out.observation;
  }
  // discounted greedy return vs the planning value of the start state
  env.reset();
  double ret = 0.0, g = 1.0;
  SpaceValue o = env.last_observation();
  while (env.episode_active()) {
    const auto out = env.step(agent->act_greedy(o, rng));
    ret += g * out.reward;
    g *= gamma;
    o = out.observation;
  }
  REQUIRE(std::abs(ret - vi.max_value(0)) / vi.max_value(0) < 0.05);
}

TEST_CASE("oracle equivalence: q-learning matches value iteration on small roadrunner") {
  envs::RoadrunnerEnv env({10, -100.0, 3, 1000}, 29);
  const RoadrunnerModel model(10, 3, -100.0);
  const ValueTable vi = value_iteration(model, 1.0, 1e-12);
  const double optimal = vi.max_value(0);
  REQUIRE(optimal == -3.0);  // 4 steps at -1 each, +1 on the target

  auto agent = make_agent("q_learning",
                          nlohmann::json{{"alpha", 0.2}, {"gamma", 1.0}, {"epsilon", 0.2}}, env);
  RngStream rng = RngStream(29).child("agent");
  SpaceValue obs = env.reset();
  for (int64_t i = 0; i < 100000; ++i) {
    if (!env.episode_active()) obs = env.reset();
    const auto a = agent->act(obs, rng);
    const auto out = env.step(a);
    agent->observe(obs, a, out.reward, out.observation, out.terminated, out.truncated, rng);
    obs = out.observation;
  }
  env.reset();
  double ret = 0.0;
  SpaceValue o = env.last_observation();
  while (env.episode_active()) {
    const auto out = env.step(agent->act_greedy(o, rng));
    ret += out.reward;
    o = out.observation;
  }
  REQUIRE(std::abs(ret - optimal) / std::abs(optimal) <= 0.05);
}

TEST_CASE("agents: planning budget is respected exactly in call counts") {
  envs::SupermarketEnv env({}, 77);
  for (const char* name : {"dyna", "prioritized_sweeping"}) {
    auto agent = make_agent(name, nlohmann::json{{"planning_budget", 5}}, env);
    RngStream rng(5);
    SpaceValue obs = env.reset();
    for (int i = 0; i < 500; ++i) {
      if (!env.episode_active()) obs = env.reset();
      const auto a = agent->act(obs, rng);
      const auto out = env.step(a);
      agent->observe(obs, a, out.reward, out.observation, out.terminated, out.truncated, rng);
      REQUIRE(agent->model_calls_last_step() <= 5);
      obs = out.observation;
    }
  }
}
