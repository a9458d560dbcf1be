#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <set>

#include "rlsuite/envs/boulder.hpp"
#include "rlsuite/envs/memory_corridor.hpp"
#include "rlsuite/framestack.hpp"
#include "rlsuite/returns.hpp"
#include "rlsuite/rng.hpp"
#include "rlsuite/space.hpp"
#include "rlsuite/state_key.hpp"

using namespace rlsuite;

TEST_CASE("rng: identical seeds give identical sequences") {
  RngStream a(12345), b(12345);
  for (int i = 0; i < 1000; ++i) REQUIRE(a.next_u64() == b.next_u64());
}

TEST_CASE("rng: child streams are independent per label") {
  RngStream root(7);
  RngStream c1 = root.child("dynamics");
  RngStream c2 = root.child("structure");
  RngStream c1b = RngStream(7).child("dynamics");
  REQUIRE(c1.next_u64() == c1b.next_u64());
  // different labels should diverge immediately
  RngStream d1 = root.child("dynamics");
  RngStream d2 = root.child("structure");
  REQUIRE(d1.next_u64() != d2.next_u64());
}

TEST_CASE("rng: uniform_int stays in range and covers values") {
  RngStream rng(99);
  std::set<int64_t> seen;
  for (int i = 0; i < 2000; ++i) {
    const int64_t v = rng.uniform_int(7);
    REQUIRE(v >= 0);
    REQUIRE(v < 7);
    seen.insert(v);
  }
  REQUIRE(seen.size() == 7);
}

TEST_CASE("rng: normal moments roughly correct") {
  RngStream rng(5);
  double sum = 0, sq = 0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double x = rng.normal(2.0, 3.0);
    sum += x;
    sq += x * x;
  }
  const double mean = sum / n;
  const double var = sq / n - mean * mean;
  REQUIRE(std::abs(mean - 2.0) < 0.05);
  REQUIRE(std::abs(std::sqrt(var) - 3.0) < 0.05);
}

TEST_CASE("spaces: invariants and sampling consistency") {
  RngStream rng(1);
  const auto d = SpaceDescriptor::discrete(5);
  const auto m = SpaceDescriptor::multi_discrete({3, 4, 2});
  const auto b = SpaceDescriptor::box({-1.0}, {1.0}, {3});
  for (int i = 0; i < 500; ++i) {
    REQUIRE(d.contains(d.sample(rng)));
    REQUIRE(m.contains(m.sample(rng)));
    REQUIRE(b.contains(b.sample(rng)));
  }
  REQUIRE_FALSE(d.contains(SpaceValue{int64_t{5}}));
  REQUIRE_FALSE(d.contains(SpaceValue{int64_t{-1}}));
  REQUIRE_FALSE(m.contains(SpaceValue{std::vector<int64_t>{3, 0, 0}}));
  REQUIRE_FALSE(b.contains(SpaceValue{std::vector<double>{0.0, 0.0, 1.5}}));
  REQUIRE_THROWS_AS(SpaceDescriptor::discrete(0), ConfigError);
  REQUIRE_THROWS_AS(SpaceDescriptor::multi_discrete({3, 0}), ConfigError);
  REQUIRE_THROWS_AS(SpaceDescriptor::box({2.0}, {1.0}, {1}), ConfigError);
  REQUIRE(m.cardinality() == 24);
}

TEST_CASE("discounted_return: examples") {
  const double r1[] = {1.0, 1.0, 1.0};
  REQUIRE(discounted_return(r1, 0.0) == 1.0);  // gamma 0 keeps only the first reward
  const double r2[] = {0.0, 0.0, 1.0};
  REQUIRE(discounted_return(r2, 0.9) == Catch::Approx(0.81));  // hand evaluation
  const double r3[] = {-3.5};
  REQUIRE(discounted_return(r3, 0.3) == -3.5);  // single-step identity
  REQUIRE(discounted_return(std::span<const double>{}, 0.5) == 0.0);
}

TEST_CASE("discounted_return: recursive definition holds bit-exactly") {
  RngStream rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const size_t len = 1 + static_cast<size_t>(rng.uniform_int(20));
    std::vector<double> rewards(len);
    for (auto& r : rewards) r = rng.uniform_real(-5.0, 5.0);
    const double gamma = rng.next_double();
    const double whole = discounted_return(rewards, gamma);
    const double tail = discounted_return(std::span<const double>(rewards).subspan(1), gamma);
    REQUIRE(whole == rewards[0] + gamma * tail);
  }
}

TEST_CASE("state_key: examples and injectivity") {
  const auto d = SpaceDescriptor::discrete(10);
  REQUIRE(state_key(SpaceValue{int64_t{7}}, d) == 7);  // identity on discrete

  const auto m = SpaceDescriptor::multi_discrete({5, 5, 10});
  REQUIRE(state_key(SpaceValue{std::vector<int64_t>{1, 2, 3}}, m) == 86);  // 1 + 5*2 + 25*3

  // full enumeration of the 250 values is injective
  std::set<int64_t> keys;
  for (int64_t a = 0; a < 5; ++a)
    for (int64_t b = 0; b < 5; ++b)
      for (int64_t c = 0; c < 10; ++c)
        keys.insert(state_key(SpaceValue{std::vector<int64_t>{a, b, c}}, m));
  REQUIRE(keys.size() == 250);

  const auto box = SpaceDescriptor::box({0.0}, {1.0}, {2});
  REQUIRE_THROWS_AS(state_key(SpaceValue{std::vector<double>{0.5, 0.5}}, box), UnsupportedError);
}

TEST_CASE("state_key: KeyEncoder discretizes box observations") {
  const auto box = SpaceDescriptor::box({0.0}, {1.0}, {2});
  KeyEncoder enc(box, 2);
  REQUIRE(enc.key(SpaceValue{std::vector<double>{0.1, 0.9}}) ==
          enc.key(SpaceValue{std::vector<double>{0.2, 0.8}}));
  REQUIRE(enc.key(SpaceValue{std::vector<double>{0.1, 0.1}}) !=
          enc.key(SpaceValue{std::vector<double>{0.1, 0.9}}));
}

TEST_CASE("env protocol: reset before step, no stepping finished episodes") {
  envs::BoulderEnv env({3, 2, 50}, 1);
  REQUIRE_THROWS_AS(env.step(int64_t{0}), ProtocolError);
  env.reset();
  REQUIRE_THROWS_AS(env.step(int64_t{5}), InvalidActionError);
  // play the correct sequence to termination
  for (int64_t g : env.correct_grips()) {
    const auto out = env.step(g);
    if (out.terminated) break;
  }
  REQUIRE_FALSE(env.episode_active());
  REQUIRE_THROWS_AS(env.step(int64_t{0}), ProtocolError);
}

TEST_CASE("env: step limit sets truncated, never together with terminated") {
  envs::BoulderEnv env({10, 3, 25}, 3);
  env.reset();
  StepOutcome last;
  int steps = 0;
  while (env.episode_active()) {
    last = env.step(int64_t{0});
    ++steps;
    REQUIRE_FALSE((last.terminated && last.truncated));
  }
  if (last.truncated) REQUIRE(steps == 25);
}

TEST_CASE("framestack: padding at episode start, oldest first") {
  auto base = std::make_unique<envs::MemoryCorridorEnv>(envs::MemoryCorridorConfig{3, 100}, 11);
  // base observation space has size 4 -> pad symbol 4, dims
  auto env = framestack_wrap(std::move(base), 2);
  const auto& space = env->observation_space();
  REQUIRE(space.kind() == SpaceKind::multi_discrete);
  REQUIRE(space.dims() == std::vector<int64_t>{5, 5});

  // replay a fixed seed on an unwrapped twin to know the first observation
  envs::MemoryCorridorEnv twin({3, 100}, 11);
  const int64_t o0 = as_discrete(twin.reset());
  const auto wrapped = env->reset();
  REQUIRE(as_multi(wrapped) == std::vector<int64_t>{4, o0});  // (PAD, o0)
}

TEST_CASE("framestack: k=1 equals the base sequence under key encoding") {
  for (uint64_t seed : {1u, 2u, 3u}) {
    envs::MemoryCorridorEnv base({3, 200}, seed);
    auto wrapped = framestack_wrap(
        std::make_unique<envs::MemoryCorridorEnv>(envs::MemoryCorridorConfig{3, 200}, seed), 1);
    RngStream actions(seed);
    auto b = base.reset();
    auto w = wrapped->reset();
    for (int i = 0; i < 150 && base.episode_active(); ++i) {
      REQUIRE(state_key(w, wrapped->observation_space()) ==
              state_key(b, base.observation_space()));
      const int64_t a = actions.uniform_int(3);
      const auto ob = base.step(a);
      const auto ow = wrapped->step(a);
      REQUIRE(ob.reward == ow.reward);
      REQUIRE(ob.terminated == ow.terminated);
      b = ob.observation;
      w = ow.observation;
      if (ob.done()) break;
    }
  }
}

TEST_CASE("framestack: k=25 over a 4-symbol space exceeds 1e15 table entries") {
  // (4+1)^25 states with the padding design
  long double card = 1;
  for (int i = 0; i < 25; ++i) card *= 5;
  REQUIRE(card > 1e15L);
  REQUIRE(card == Catch::Approx(2.98023223876953125e17));
}

TEST_CASE("framestack: k below 1 is rejected") {
  auto base = std::make_unique<envs::MemoryCorridorEnv>(envs::MemoryCorridorConfig{3, 100}, 1);
  REQUIRE_THROWS_AS(framestack_wrap(std::move(base), 0), ConfigError);
}

TEST_CASE("env determinism: same seed and actions give bit-identical traces") {
  for (uint64_t seed : {5u, 17u}) {
    envs::MemoryCorridorEnv a({4, 300}, seed), b({4, 300}, seed);
    RngStream actions(seed + 1);
    auto oa = a.reset();
    auto ob = b.reset();
    REQUIRE(as_discrete(oa) == as_discrete(ob));
    while (a.episode_active()) {
      const int64_t act = actions.uniform_int(4);
      const auto ra = a.step(act);
      const auto rb = b.step(act);
      REQUIRE(ra.reward == rb.reward);
      REQUIRE(as_discrete(ra.observation) == as_discrete(rb.observation));
      REQUIRE(ra.terminated == rb.terminated);
      REQUIRE(ra.truncated == rb.truncated);
    }
  }
}
