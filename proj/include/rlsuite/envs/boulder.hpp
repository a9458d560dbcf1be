#pragma once

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "rlsuite/env.hpp"

namespace rlsuite::envs {

struct BoulderConfig {
  int64_t height = 10;    // length of the correct grip sequence
  int64_t num_grips = 3;  // grips (actions) per height
  int64_t max_steps = 0;  // 0 -> 10 * num_grips^min(height,6)

  int64_t effective_max_steps() const {
    if (max_steps > 0) return max_steps;
    double cap = 10.0 * std::pow(static_cast<double>(num_grips),
                                 static_cast<double>(std::min<int64_t>(height, 6)));
    return static_cast<int64_t>(cap);
  }
};

/// Climb a wall of `height` grips; exactly one grip per height holds, any
/// other drops the climber back to the bottom. Reward 1 only at the top.
/// The correct grip sequence is drawn once per environment instance, so
/// exploration knowledge accumulates across episodes. Observation values 0
/// to height-1 are wall positions; value `height` is the terminal top.
class BoulderEnv final : public Env {
 public:
  explicit BoulderEnv(BoulderConfig cfg, uint64_t seed)
      : Env(SpaceDescriptor::discrete(cfg.height + 1), SpaceDescriptor::discrete(cfg.num_grips),
            cfg.effective_max_steps(), seed),
        cfg_(cfg) {
    if (cfg.height < 1) throw ConfigError("boulder: height must be >= 1");
    if (cfg.num_grips < 2) throw ConfigError("boulder: num_grips must be >= 2");
    reseed_structure();
  }

  std::string name() const override { return "boulder"; }

  const std::vector<int64_t>& correct_grips() const { return correct_grips_; }
  int64_t height_reached() const { return h_; }

  std::string render() const override {
    std::ostringstream os;
    for (int64_t row = cfg_.height - 1; row >= 0; --row) {
      os << (row == h_ ? " @ " : "   ") << "|";
      for (int64_t g = 0; g < cfg_.num_grips; ++g) os << " o";
      os << " |  h=" << row << "\n";
    }
    os << "grips: 0.." << (cfg_.num_grips - 1) << ", one of them holds per height\n";
    return os.str();
  }

 protected:
  void reseed_structure() override {
    correct_grips_.resize(static_cast<size_t>(cfg_.height));
    for (auto& g : correct_grips_) g = structure_rng().uniform_int(cfg_.num_grips);
  }

  SpaceValue do_reset() override {
    h_ = 0;
    return h_;
  }

  StepOutcome do_step(const SpaceValue& action) override {
    StepOutcome out;
    if (as_discrete(action) == correct_grips_[static_cast<size_t>(h_)]) {
      ++h_;
      if (h_ == cfg_.height) {
        out.reward = 1.0;
        out.terminated = true;
      }
    } else {
      h_ = 0;
    }
    out.observation = h_;
    return out;
  }

 private:
  BoulderConfig cfg_;
  std::vector<int64_t> correct_grips_;
  int64_t h_ = 0;
};

}  // namespace rlsuite::envs
