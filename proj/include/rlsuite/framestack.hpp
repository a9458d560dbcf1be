#pragma once

#include <deque>
#include <memory>
#include <utility>

#include "rlsuite/env.hpp"
#include "rlsuite/state_key.hpp"

namespace rlsuite {

/// Concatenates the k most recent base observations (as canonical keys) into
/// one multi-discrete observation, oldest first. Positions with no history
/// yet hold a dedicated padding symbol equal to the base space cardinality,
/// so "no observation" is distinguishable from every real observation. The
/// wrapped space therefore has k dims of (base cardinality + 1).
class FramestackEnv final : public Env {
 public:
  FramestackEnv(EnvPtr base, int k)
      : Env(stacked_space(*base, k), base->action_space(), base->max_steps(), base->seed(),
            base->discount()),
        base_(std::move(base)),
        k_(k),
        pad_(base_->observation_space().cardinality()) {}

  std::string name() const override {
    return base_->name() + "/stack" + std::to_string(k_);
  }

  std::string render() const override { return base_->render(); }

  Env& base() { return *base_; }

 protected:
  SpaceValue do_reset() override {
    frames_.assign(static_cast<size_t>(k_), pad_);
    push(base_->reset(seed_override_));
    seed_override_.reset();
    return stacked();
  }

  StepOutcome do_step(const SpaceValue& action) override {
    StepOutcome out = base_->step(action);
    push(out.observation);
    out.observation = stacked();
    return out;
  }

  void reseed_structure() override { seed_override_ = seed(); }

 private:
  static SpaceDescriptor stacked_space(const Env& base, int k) {
    if (k < 1) throw ConfigError("framestack needs k >= 1");
    const auto& obs = base.observation_space();
    if (obs.kind() == SpaceKind::box)
      throw ConfigError("framestack requires a discrete or multi-discrete base observation");
    const int64_t card = obs.cardinality();
    if (card < 0) throw ConfigError("framestack base space is too large to enumerate");
    return SpaceDescriptor::multi_discrete(std::vector<int64_t>(static_cast<size_t>(k), card + 1));
  }

  void push(const SpaceValue& obs) {
    frames_.pop_front();
    frames_.push_back(state_key(obs, base_->observation_space()));
  }

  SpaceValue stacked() const {
    return std::vector<int64_t>(frames_.begin(), frames_.end());
  }

  EnvPtr base_;
  int k_;
  int64_t pad_;
  std::deque<int64_t> frames_;
  std::optional<uint64_t> seed_override_;
};

inline EnvPtr framestack_wrap(EnvPtr base, int k) {
  return std::make_unique<FramestackEnv>(std::move(base), k);
}

}  // namespace rlsuite
