#pragma once

#include <algorithm>
#include <sstream>

#include "rlsuite/env.hpp"

namespace rlsuite::envs {

struct RoadrunnerConfig {
  int64_t width = 20;       // cells; target T = width - 1, beyond it is the cliff
  double penalty = -100.0;  // reward for falling off or braking below speed 0
  int64_t max_speed = 5;
  int64_t max_steps = 250;
};

/// Run towards a cliff edge as fast as possible and stop exactly on it.
/// State (x, dx); actions {-1, 0, +1} change the speed. Every step costs -1;
/// landing on the target adds +1, overshooting or dropping below speed 0
/// adds the (negative) penalty. Event rewards add to the step penalty.
class RoadrunnerEnv final : public Env {
 public:
  explicit RoadrunnerEnv(RoadrunnerConfig cfg, uint64_t seed)
      : Env(SpaceDescriptor::multi_discrete({cfg.width, cfg.max_speed + 1}),
            SpaceDescriptor::discrete(3), cfg.max_steps, seed),
        cfg_(cfg) {
    if (cfg.width < 2) throw ConfigError("roadrunner: width must be >= 2");
    if (cfg.max_speed < 1) throw ConfigError("roadrunner: max_speed must be >= 1");
  }

  std::string name() const override { return "roadrunner"; }

  int64_t target() const { return cfg_.width - 1; }

  std::string render() const override {
    std::ostringstream os;
    for (int64_t i = 0; i < cfg_.width; ++i) {
      if (i == x_) os << '@';
      else if (i == target()) os << 'T';
      else os << '.';
    }
    os << "| cliff   x=" << x_ << " dx=" << dx_ << "\n";
    os << "actions: 0=slower 1=keep 2=faster\n";
    return os.str();
  }

 protected:
  SpaceValue do_reset() override {
    x_ = 0;
    dx_ = 0;
    return observation();
  }

  StepOutcome do_step(const SpaceValue& action) override {
    StepOutcome out;
    out.reward = -1.0;
    dx_ += as_discrete(action) - 1;
    if (dx_ < 0) {
      out.reward += cfg_.penalty;
      out.terminated = true;
      out.info["braked_below_zero"] = 1.0;
      dx_ = 0;  // observation stays inside the space
    } else {
      dx_ = std::min(dx_, cfg_.max_speed);
      x_ += dx_;
      if (x_ == target()) {
        out.reward += 1.0;
        out.terminated = true;
      } else if (x_ > target()) {
        out.reward += cfg_.penalty;
        out.terminated = true;
        out.info["fell_off_cliff"] = 1.0;
        x_ = target();  // clamp for the observation; the run is over
      }
    }
    out.observation = observation();
    return out;
  }

 private:
  SpaceValue observation() const { return std::vector<int64_t>{x_, dx_}; }

  RoadrunnerConfig cfg_;
  int64_t x_ = 0;
  int64_t dx_ = 0;
};

}  // namespace rlsuite::envs
