#pragma once

#include <sstream>
#include <vector>

#include "rlsuite/env.hpp"

namespace rlsuite::envs {

struct MemoryCorridorConfig {
  int64_t num_doors = 3;
  int64_t max_steps = 1000;
};

/// Navigate corridors of doors whose correct sequence must be memorized.
/// Only the final door of the current corridor is marked in the observation
/// (value = door index); everywhere else the observation is the "no door
/// marked" symbol (value = num_doors). Completing a corridor extends the
/// sequence by one uniformly drawn door and restarts it from depth 1; a
/// wrong door terminates with no reward. The door sequence is drawn afresh
/// each episode.
class MemoryCorridorEnv final : public Env {
 public:
  explicit MemoryCorridorEnv(MemoryCorridorConfig cfg, uint64_t seed)
      : Env(SpaceDescriptor::discrete(cfg.num_doors + 1), SpaceDescriptor::discrete(cfg.num_doors),
            cfg.max_steps, seed),
        cfg_(cfg) {
    if (cfg.num_doors < 2) throw ConfigError("memory_corridor: num_doors must be >= 2");
  }

  std::string name() const override { return "memory_corridor"; }

  int64_t corridor_length() const { return length_; }
  int64_t depth() const { return depth_; }
  const std::vector<int64_t>& door_sequence() const { return sequence_; }

  std::string render() const override {
    std::ostringstream os;
    os << "corridor " << length_ << ", door " << depth_ << "/" << length_ << "\n";
    const int64_t marked = (depth_ == length_) ? sequence_[static_cast<size_t>(length_ - 1)] : -1;
    for (int64_t d = 0; d < cfg_.num_doors; ++d) os << (d == marked ? " [*] " : " [ ] ");
    os << "\n";
    for (int64_t d = 0; d < cfg_.num_doors; ++d) os << "  " << d << "  ";
    os << "\nactions: door index 0.." << (cfg_.num_doors - 1) << "\n";
    return os.str();
  }

 protected:
  SpaceValue do_reset() override {
    sequence_.assign(1, dynamics_rng().uniform_int(cfg_.num_doors));
    length_ = 1;
    depth_ = 1;
    return observation();
  }

  StepOutcome do_step(const SpaceValue& action) override {
    StepOutcome out;
    if (as_discrete(action) == sequence_[static_cast<size_t>(depth_ - 1)]) {
      out.reward = 1.0;
      if (depth_ < length_) {
        ++depth_;
      } else {
        sequence_.push_back(dynamics_rng().uniform_int(cfg_.num_doors));
        ++length_;
        depth_ = 1;
      }
    } else {
      out.terminated = true;
    }
    out.observation = observation();
    out.info["corridor_length"] = static_cast<double>(length_);
    return out;
  }

 private:
  SpaceValue observation() const {
    return depth_ == length_ ? sequence_[static_cast<size_t>(length_ - 1)] : cfg_.num_doors;
  }

  MemoryCorridorConfig cfg_;
  std::vector<int64_t> sequence_;
  int64_t length_ = 1;
  int64_t depth_ = 1;
};

}  // namespace rlsuite::envs
