#pragma once

#include <string>
#include <vector>

#include "rlsuite/experiments/config.hpp"

namespace rlsuite::experiments {

inline const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {
      "fig2-boulder",  "fig3-memory", "fig3-supermarket", "roadrunner-onoff", "study-nstep",
      "golf-risk",     "catch-dim",   "tamagotchi-signal", "trashbot-bins"};
  return names;
}

/// Fully specified experiment configs reproducing the suite's headline
/// comparisons at desk scale. Hyperparameters are tuned once and frozen;
/// the acceptance suite pins the resulting qualitative orderings.
inline ExperimentConfig preset(const std::string& name) {
  using json = nlohmann::json;
  ExperimentConfig c;
  c.name = name;

  if (name == "fig2-boulder") {
    c.total_steps = 20000;
    c.repetitions = 10;
    c.base_seed = 1;
    c.log_every = 100;
    c.smoothing_window = 3;
    for (int64_t height : {int64_t{10}, int64_t{30}, int64_t{100}}) {
      const std::string env_label = "boulder(H=" + std::to_string(height) + ")";
      const json env_params = {{"height", height}, {"num_grips", 3}, {"max_steps", 250}};
      c.curves.push_back({"eps-greedy H=" + std::to_string(height), "boulder", env_params,
                          "q_learning",
                          json{{"alpha", 0.3}, {"gamma", 0.95}, {"epsilon", 0.25}, {"q0", 1.0}},
                          "eps-greedy", env_label});
      c.curves.push_back({"count-bonus H=" + std::to_string(height), "boulder", env_params,
                          "q_learning",
                          json{{"alpha", 0.2}, {"gamma", 0.95}, {"epsilon", 0.02}, {"q0", 1.0},
                               {"beta", 1.0}},
                          "count-bonus", env_label});
      c.curves.push_back({"go-explore H=" + std::to_string(height), "boulder", env_params,
                          "go_explore", json{{"explore_steps", 5}}, "go-explore", env_label});
    }
  } else if (name == "fig3-memory") {
    c.total_steps = 250000;
    c.repetitions = 10;
    c.base_seed = 1;
    c.log_every = 500;
    c.smoothing_window = 5;
    for (int64_t k : {int64_t{1}, int64_t{2}, int64_t{4}, int64_t{8}}) {
      c.curves.push_back({"framestack " + std::to_string(k), "memory_corridor",
                          json{{"num_doors", 3}, {"framestack", k}}, "q_learning",
                          json{{"alpha", 0.25},
                               {"gamma", 0.95},
                               {"epsilon", 0.25},
                               {"epsilon_final", 0.0}},
                          "q-stack" + std::to_string(k), "memory_corridor"});
    }
  } else if (name == "fig3-supermarket") {
    c.total_steps = 10000;
    c.repetitions = 10;
    c.base_seed = 1;
    c.log_every = 50;
    c.smoothing_window = 5;
    const json env_params = {{"noise", 0.0}, {"step_timeout", 0.0}};
    const json base = {{"alpha", 0.5}, {"gamma", 0.99}, {"epsilon", 0.1}};
    json dyna = base;
    dyna["planning_budget"] = 5;
    json ps = base;
    ps["planning_budget"] = 5;
    ps["theta"] = 1e-4;
    c.curves.push_back({"q-learning", "supermarket", env_params, "q_learning", base,
                        "q_learning", "supermarket"});
    c.curves.push_back({"dyna", "supermarket", env_params, "dyna", dyna, "dyna", "supermarket"});
    c.curves.push_back({"prioritised sweeping", "supermarket", env_params, "prioritized_sweeping",
                        ps, "prioritized_sweeping", "supermarket"});
  } else if (name == "roadrunner-onoff") {
    c.total_steps = 60000;
    c.repetitions = 10;
    c.base_seed = 1;
    c.log_every = 200;
    c.smoothing_window = 9;
    const json env_params = {{"width", 20}, {"max_speed", 5}, {"penalty", -100.0}};
    const json learner = {{"alpha", 0.2}, {"gamma", 1.0}, {"epsilon", 0.2}};
    c.curves.push_back({"q-learning (off-policy)", "roadrunner", env_params, "q_learning", learner,
                        "q_learning", "roadrunner"});
    c.curves.push_back(
        {"sarsa (on-policy)", "roadrunner", env_params, "sarsa", learner, "sarsa", "roadrunner"});
  } else if (name == "study-nstep") {
    c.total_steps = 80000;
    c.repetitions = 10;
    c.base_seed = 1;
    c.log_every = 200;
    c.smoothing_window = 9;
    const json env_params = {{"reward_noise_sigma", 2.0}, {"other_actions", 5},
                             {"reward_noise_mean", 1.0}, {"total_days", 10},
                             {"lecture_days", 4}, {"lectures_needed", 2}, {"energy_needed", 1}};
    for (int64_t n : {int64_t{1}, int64_t{3}, int64_t{0}}) {
      const std::string lbl = n == 0 ? "monte-carlo" : ("n=" + std::to_string(n));
      c.curves.push_back({lbl, "study", env_params, "nstep_sarsa",
                          json{{"alpha", 0.05}, {"gamma", 1.0}, {"epsilon", 0.15}, {"n", n}},
                          "nstep_sarsa(" + lbl + ")", "study"});
    }
  } else if (name == "golf-risk") {
    c.total_steps = 60000;
    c.repetitions = 10;
    c.base_seed = 1;
    c.log_every = 200;
    c.smoothing_window = 9;
    const json env_params = {{"stochasticity_level", 0.15}};
    c.curves.push_back({"q-learning", "golf", env_params, "q_learning",
                        json{{"alpha", 0.2}, {"gamma", 1.0}, {"epsilon", 0.1}}, "q_learning",
                        "golf"});
    c.curves.push_back({"risk-averse q (kappa=0.5)", "golf", env_params, "risk_q",
                        json{{"alpha", 0.2}, {"gamma", 1.0}, {"epsilon", 0.1}, {"kappa", 0.5}},
                        "risk_q", "golf"});
  } else if (name == "catch-dim") {
    c.total_steps = 40000;
    c.repetitions = 10;
    c.base_seed = 1;
    c.log_every = 200;
    c.smoothing_window = 9;
    for (const std::string type : {"vectorised", "grid", "rgb"}) {
      c.curves.push_back({type, "catch",
                          json{{"rows", 5}, {"columns", 5}, {"observation_type", type}},
                          "q_learning",
                          json{{"alpha", 0.2}, {"gamma", 1.0}, {"epsilon", 0.1}, {"box_bins", 2}},
                          "q_learning", "catch(" + type + ")"});
    }
  } else if (name == "tamagotchi-signal") {
    c.total_steps = 40000;
    c.repetitions = 10;
    c.base_seed = 1;
    c.log_every = 200;
    c.smoothing_window = 5;
    for (double tau : {0.05, 50.0}) {
      std::ostringstream lbl;
      lbl << "tau=" << tau;
      c.curves.push_back({lbl.str(), "tamagotchi",
                          json{{"tau", tau}, {"max_msg_length", 1}, {"vocab_size", 6}},
                          "q_learning",
                          json{{"alpha", 0.2}, {"gamma", 0.95}, {"epsilon", 0.2},
                               {"epsilon_final", 0.01}},
                          "q_learning", lbl.str()});
    }
  } else if (name == "trashbot-bins") {
    c.total_steps = 400000;
    c.repetitions = 10;
    c.base_seed = 1;
    c.log_every = 2000;
    c.smoothing_window = 9;
    c.curves.push_back({"continuous (gaussian)", "trashbot",
                        json{{"action_mode", "continuous"}}, "reinforce",
                        json{{"gamma", 0.95}, {"lr", 0.005}, {"init_std", 0.8},
                             {"min_std", 0.05}},
                        "reinforce", "trashbot(continuous)"});
    for (int64_t bins : {int64_t{3}, int64_t{7}}) {
      c.curves.push_back({"discrete bins=" + std::to_string(bins), "trashbot",
                          json{{"action_mode", "discrete"}, {"num_bins", bins}},
                          "reinforce_softmax", json{{"gamma", 0.95}, {"lr", 0.01}},
                          "reinforce_softmax",
                          "trashbot(bins=" + std::to_string(bins) + ")"});
    }
  } else {
    std::string known;
    for (const auto& n : preset_names()) known += (known.empty() ? "" : ", ") + n;
    throw ConfigError("unknown preset '" + name + "' (available: " + known + ")");
  }
  return c;
}

}  // namespace rlsuite::experiments
