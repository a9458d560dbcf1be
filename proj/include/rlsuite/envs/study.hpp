#pragma once

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <vector>

#include "rlsuite/env.hpp"

namespace rlsuite::envs {

struct StudyConfig {
  int64_t other_actions = 2;       // count of no-effect filler actions
  double reward_noise_mean = 1.0;  // per-action mean drawn from U(-mean, 0)
  double reward_noise_sigma = 0.5;
  int64_t total_days = 10;      // H; the exam happens on day H
  int64_t lecture_days = 4;     // L lectures spread over days 1..H-1
  int64_t lectures_needed = 2;  // K
  int64_t energy_needed = 1;    // E; passing requires energy > E
};

/// A student schedules their days before an exam: Study (action 0) raises
/// knowledge but only on lecture days, Sleep (1) raises energy, GoOut (2)
/// drains it, the remaining actions do nothing. Studying on the exam day
/// with enough knowledge and energy earns +10. Every action additionally
/// pays a noisy reward drawn from N(r_a, sigma^2) with per-instance means
/// r_a ~ U(-reward_noise_mean, 0).
class StudyEnv final : public Env {
 public:
  static constexpr int64_t kStudy = 0;
  static constexpr int64_t kSleep = 1;
  static constexpr int64_t kGoOut = 2;

  explicit StudyEnv(StudyConfig cfg, uint64_t seed)
      : Env(SpaceDescriptor::multi_discrete({5, 5, cfg.total_days + 1}),
            SpaceDescriptor::discrete(3 + cfg.other_actions), cfg.total_days + 1, seed),
        cfg_(cfg) {
    if (cfg.total_days < 2) throw ConfigError("study: total_days must be >= 2");
    if (cfg.other_actions < 0) throw ConfigError("study: other_actions must be >= 0");
    if (cfg.lecture_days < 1 || cfg.lecture_days > cfg.total_days - 1)
      throw ConfigError("study: lecture_days must lie in [1, total_days-1]");
    if (cfg.lectures_needed > cfg.lecture_days)
      throw ConfigError("study: lectures_needed must not exceed lecture_days");
    if (cfg.energy_needed < 0 || cfg.energy_needed > 4)
      throw ConfigError("study: energy_needed must lie in [0,4]");
    if (cfg.reward_noise_mean < 0 || cfg.reward_noise_sigma < 0)
      throw ConfigError("study: noise parameters must be >= 0");
    reseed_structure();
  }

  std::string name() const override { return "study"; }

  const std::set<int64_t>& lecture_schedule() const { return lectures_; }
  const std::vector<double>& action_reward_means() const { return reward_means_; }

  std::string render() const override {
    std::ostringstream os;
    os << "day " << (t_ + 1) << "/" << cfg_.total_days << (is_lecture_day(t_ + 1) ? " (lecture)" : "")
       << (t_ + 1 == cfg_.total_days ? " (exam day)" : "") << "\n";
    os << "knowledge [" << bar(k_) << "] " << k_ << "/4   need >= " << cfg_.lectures_needed << "\n";
    os << "energy    [" << bar(e_) << "] " << e_ << "/4   need >  " << cfg_.energy_needed << "\n";
    os << "lectures on days:";
    for (int64_t d : lectures_) os << " " << d;
    os << "\nactions: 0=study 1=sleep 2=go out";
    if (cfg_.other_actions > 0) os << " 3.." << (2 + cfg_.other_actions) << "=other";
    os << "\n";
    return os.str();
  }

 protected:
  void reseed_structure() override {
    const int64_t actions = 3 + cfg_.other_actions;
    reward_means_.resize(static_cast<size_t>(actions));
    for (auto& m : reward_means_) m = -structure_rng().uniform_real(0.0, cfg_.reward_noise_mean);
    lectures_.clear();
    const int64_t span = cfg_.total_days - 1;  // lecture days live in 1..H-1
    if (cfg_.lecture_days == 1) {
      lectures_.insert(std::max<int64_t>(1, span / 2 + span % 2));
    } else {
      for (int64_t j = 0; j < cfg_.lecture_days; ++j) {
        const double pos = 1.0 + static_cast<double>(j) * (span - 1) / (cfg_.lecture_days - 1);
        lectures_.insert(static_cast<int64_t>(std::llround(pos)));
      }
    }
  }

  SpaceValue do_reset() override {
    k_ = e_ = t_ = 0;
    return observation();
  }

  StepOutcome do_step(const SpaceValue& action) override {
    const int64_t a = as_discrete(action);
    const int64_t day = t_ + 1;  // the day this action is taken on
    if (a == kStudy && is_lecture_day(day)) k_ = std::min<int64_t>(k_ + 1, 4);
    if (a == kSleep) e_ = std::min<int64_t>(e_ + 1, 4);
    if (a == kGoOut) e_ = std::max<int64_t>(e_ - 1, 0);
    ++t_;

    StepOutcome out;
    out.reward = dynamics_rng().normal(reward_means_[static_cast<size_t>(a)],
                                       cfg_.reward_noise_sigma);
    if (t_ == cfg_.total_days && a == kStudy && k_ >= cfg_.lectures_needed &&
        e_ > cfg_.energy_needed) {
      out.reward += 10.0;
      out.info["passed_exam"] = 1.0;
    }
    out.terminated = (t_ == cfg_.total_days);
    out.observation = observation();
    return out;
  }

 private:
  bool is_lecture_day(int64_t day) const { return lectures_.count(day) > 0; }

  SpaceValue observation() const { return std::vector<int64_t>{k_, e_, t_}; }

  static std::string bar(int64_t v) {
    std::string s(4, '.');
    for (int64_t i = 0; i < v; ++i) s[static_cast<size_t>(i)] = '#';
    return s;
  }

  StudyConfig cfg_;
  std::vector<double> reward_means_;
  std::set<int64_t> lectures_;
  int64_t k_ = 0, e_ = 0, t_ = 0;
};

}  // namespace rlsuite::envs
