#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <vector>

#include "rlsuite/env.hpp"

namespace rlsuite::envs {

struct TamagotchiConfig {
  double tau = 1.0;            // utterance temperature; ->0 perfect signal, ->inf pure noise
  int64_t max_msg_length = 1;  // tokens per utterance
  int64_t vocab_size = 6;      // >= 4; tokens 0..3 are bound to the four actions
  int64_t steps_per_episode = 100;
};

/// Keep a virtual pet alive with four actions (play, feed, sleep, clean),
/// each bound to one hidden internal variable in [0,100]. The chosen action
/// gains +30 while the others lose 5; choosing anything but the currently
/// most deficient variable costs all four an extra 10. The observation is
/// (HP, utterance tokens): HP is the rounded mean of the hidden variables,
/// and each utterance token is drawn from a softmax whose signal-token
/// logits grow with the deficiency of the matching variable, scaled by
/// 1/tau. Reward is a deficiency-weighted happiness score in [-200, 75].
class TamagotchiEnv final : public Env {
 public:
  explicit TamagotchiEnv(TamagotchiConfig cfg, uint64_t seed)
      : Env(make_space(cfg), SpaceDescriptor::discrete(4), cfg.steps_per_episode, seed),
        cfg_(cfg) {
    if (cfg.tau <= 0.0) throw ConfigError("tamagotchi: tau must be > 0");
    if (cfg.max_msg_length < 1) throw ConfigError("tamagotchi: max_msg_length must be >= 1");
    if (cfg.vocab_size < 4) throw ConfigError("tamagotchi: vocab_size must be >= 4");
  }

  std::string name() const override { return "tamagotchi"; }

  /// Happiness reward over post-update variables: a weighted mean where low
  /// variables carry higher weight, mapped linearly onto [-200, 75].
  static double happiness_reward(const std::array<int64_t, 4>& v) {
    double weight_sum = 0.0, weighted = 0.0;
    for (int64_t x : v) weight_sum += 101.0 - static_cast<double>(x);
    for (int64_t x : v)
      weighted += (101.0 - static_cast<double>(x)) / weight_sum * static_cast<double>(x);
    return 2.75 * weighted - 200.0;
  }

  /// Token distribution of one utterance position: softmax over vocab logits
  /// where signal token j < 4 has logit (100 - v_j) / (100 * tau) and noise
  /// tokens have logit 0.
  static std::vector<double> utterance_distribution(const std::array<int64_t, 4>& v, double tau,
                                                    int64_t vocab_size) {
    std::vector<double> logits(static_cast<size_t>(vocab_size), 0.0);
    for (size_t j = 0; j < 4; ++j)
      logits[j] = (100.0 - static_cast<double>(v[j])) / (100.0 * tau);
    const double m = *std::max_element(logits.begin(), logits.end());
    double z = 0.0;
    for (double& l : logits) {
      l = std::exp(l - m);
      z += l;
    }
    for (double& l : logits) l /= z;
    return logits;
  }

  const std::array<int64_t, 4>& internal_variables() const { return v_; }
  int64_t hp() const { return hp_; }

  std::string render() const override {
    std::ostringstream os;
    os << "HP " << hp_ << "/100  [";
    for (int64_t i = 0; i < 10; ++i) os << (i < hp_ / 10 ? '#' : '.');
    os << "]\nsays: ";
    for (int64_t t : utterance_) os << "<" << t << "> ";
    os << "\nactions: 0=play 1=feed 2=sleep 3=clean\n";
    return os.str();
  }

 protected:
  SpaceValue do_reset() override {
    v_ = {100, 100, 100, 100};
    hp_ = 100;
    sample_utterance();
    return observation();
  }

  StepOutcome do_step(const SpaceValue& action) override {
    const auto a = static_cast<size_t>(as_discrete(action));
    const size_t ideal = static_cast<size_t>(
        std::min_element(v_.begin(), v_.end()) - v_.begin());  // ties -> lowest index
    for (size_t i = 0; i < 4; ++i) v_[i] += (i == a) ? 30 : -5;
    if (a != ideal)
      for (auto& x : v_) x -= 10;
    for (auto& x : v_) x = std::clamp<int64_t>(x, 0, 100);

    hp_ = std::llround((v_[0] + v_[1] + v_[2] + v_[3]) / 4.0);
    sample_utterance();

    StepOutcome out;
    out.reward = happiness_reward(v_);
    out.terminated = (hp_ == 0);
    out.observation = observation();
    out.info["hp"] = static_cast<double>(hp_);
    out.info["ideal_action"] = static_cast<double>(ideal);
    return out;
  }

 private:
  static SpaceDescriptor make_space(const TamagotchiConfig& cfg) {
    std::vector<int64_t> dims{101};
    for (int64_t i = 0; i < cfg.max_msg_length; ++i) dims.push_back(cfg.vocab_size);
    return SpaceDescriptor::multi_discrete(std::move(dims));
  }

  void sample_utterance() {
    const auto probs = utterance_distribution(v_, cfg_.tau, cfg_.vocab_size);
    utterance_.resize(static_cast<size_t>(cfg_.max_msg_length));
    for (auto& token : utterance_) {
      double u = dynamics_rng().next_double();
      int64_t pick = cfg_.vocab_size - 1;
      double cum = 0.0;
      for (size_t j = 0; j < probs.size(); ++j) {
        cum += probs[j];
        if (u < cum) {
          pick = static_cast<int64_t>(j);
          break;
        }
      }
      token = pick;
    }
  }

  SpaceValue observation() const {
    std::vector<int64_t> obs{hp_};
    obs.insert(obs.end(), utterance_.begin(), utterance_.end());
    return obs;
  }

  TamagotchiConfig cfg_;
  std::array<int64_t, 4> v_{100, 100, 100, 100};
  int64_t hp_ = 100;
  std::vector<int64_t> utterance_;
};

}  // namespace rlsuite::envs
