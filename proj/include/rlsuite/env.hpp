#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>

#include "rlsuite/errors.hpp"
#include "rlsuite/rng.hpp"
#include "rlsuite/space.hpp"

namespace rlsuite {

/// Carrier of one transition. `truncated` is set only by step-limit expiry
/// and never together with `terminated`.
struct StepOutcome {
  SpaceValue observation;
  double reward = 0.0;
  bool terminated = false;
  bool truncated = false;
  std::map<std::string, double> info;

  bool done() const { return terminated || truncated; }
};

/// Episodic environment base. Instances are single-threaded; distinct
/// instances share no state.
///
/// Randomness is split into two child streams of the construction seed:
/// "structure" (instance-level layout, redrawn only when an explicit seed is
/// supplied) and "dynamics" (per-step noise, advancing across episodes).
/// Rewards are undiscounted; `discount()` only declares the MDP's gamma.
class Env {
 public:
  virtual ~Env() = default;

  const SpaceDescriptor& observation_space() const { return observation_space_; }
  const SpaceDescriptor& action_space() const { return action_space_; }
  int64_t max_steps() const { return max_steps_; }
  double discount() const { return discount_; }
  uint64_t seed() const { return seed_; }
  int64_t steps_taken() const { return steps_; }
  bool episode_active() const { return episode_active_; }

  virtual std::string name() const = 0;

  /// Plain-text frame of the current state.
  virtual std::string render() const { return name() + " (no renderer)\n"; }

  /// Start a new episode. Supplying a seed re-derives both random streams and
  /// redraws instance-level structure, exactly as construction would.
  SpaceValue reset(std::optional<uint64_t> seed = std::nullopt) {
    if (seed) reseed(*seed);
    steps_ = 0;
    episode_active_ = true;
    last_observation_ = do_reset();
    return last_observation_;
  }

  StepOutcome step(const SpaceValue& action) {
    if (!episode_active_)
      throw ProtocolError(name() + ": step() called on an inactive episode (reset first)");
    if (!accepts(action))
      throw InvalidActionError(name() + ": action outside the action space");
    StepOutcome out = do_step(action);
    ++steps_;
    if (!out.terminated && steps_ >= max_steps_) out.truncated = true;
    if (out.done()) episode_active_ = false;
    last_observation_ = out.observation;
    return out;
  }

  const SpaceValue& last_observation() const { return last_observation_; }

 protected:
  Env(SpaceDescriptor obs, SpaceDescriptor act, int64_t max_steps, uint64_t seed,
      double discount = 1.0)
      : observation_space_(std::move(obs)),
        action_space_(std::move(act)),
        max_steps_(max_steps),
        discount_(discount),
        seed_(seed),
        structure_rng_(RngStream(seed).child("structure")),
        dynamics_rng_(RngStream(seed).child("dynamics")) {
    if (max_steps_ < 1) throw ConfigError("max_steps must be >= 1");
    if (discount_ < 0.0 || discount_ > 1.0) throw ConfigError("discount must lie in [0,1]");
  }

  virtual SpaceValue do_reset() = 0;
  virtual StepOutcome do_step(const SpaceValue& action) = 0;
  /// Action admissibility; defaults to space membership. Environments that
  /// clip out-of-range continuous actions instead of rejecting them relax it.
  virtual bool accepts(const SpaceValue& action) const {
    return action_space_.contains(action);
  }
  /// Redraw instance-level randomness from structure_rng(). Called once at
  /// construction time by subclasses and again on reset(seed).
  virtual void reseed_structure() {}

  RngStream& structure_rng() { return structure_rng_; }
  RngStream& dynamics_rng() { return dynamics_rng_; }

  /// True when the step currently being computed is the last one before the
  /// step-limit truncation fires.
  bool truncation_imminent() const { return steps_ + 1 >= max_steps_; }

  void set_observation_space(SpaceDescriptor s) { observation_space_ = std::move(s); }

 private:
  void reseed(uint64_t seed) {
    seed_ = seed;
    structure_rng_ = RngStream(seed).child("structure");
    dynamics_rng_ = RngStream(seed).child("dynamics");
    reseed_structure();
  }

  SpaceDescriptor observation_space_;
  SpaceDescriptor action_space_;
  int64_t max_steps_;
  double discount_;
  uint64_t seed_;
  RngStream structure_rng_;
  RngStream dynamics_rng_;
  int64_t steps_ = 0;
  bool episode_active_ = false;
  SpaceValue last_observation_ = int64_t{0};
};

using EnvPtr = std::unique_ptr<Env>;

}  // namespace rlsuite
