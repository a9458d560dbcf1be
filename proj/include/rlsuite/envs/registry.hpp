#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "rlsuite/envs/boulder.hpp"
#include "rlsuite/envs/catch_env.hpp"
#include "rlsuite/envs/golf.hpp"
#include "rlsuite/envs/memory_corridor.hpp"
#include "rlsuite/envs/roadrunner.hpp"
#include "rlsuite/envs/study.hpp"
#include "rlsuite/envs/supermarket.hpp"
#include "rlsuite/envs/tamagotchi.hpp"
#include "rlsuite/envs/trashbot.hpp"
#include "rlsuite/framestack.hpp"

namespace rlsuite::envs {

struct EnvInfo {
  std::string name;
  std::string challenge;
  std::string parameters;  // human-readable list of the tunable knobs
};

/// The nine environments in their canonical a..i order.
inline const std::vector<EnvInfo>& env_table() {
  static const std::vector<EnvInfo> table = {
      {"boulder", "Exploration", "height, num_grips, max_steps"},
      {"roadrunner", "Credit assignment: on/off-policy", "width, penalty, max_speed, max_steps"},
      {"study", "Credit assignment: depth",
       "other_actions, reward_noise_mean, reward_noise_sigma, total_days, lecture_days, "
       "lectures_needed, energy_needed"},
      {"catch", "State: dimensionality", "rows, columns, observation_type"},
      {"memory_corridor", "State: partial observability", "num_doors, max_steps"},
      {"tamagotchi", "State: amount of signal", "tau, max_msg_length, vocab_size"},
      {"trashbot", "State/action: discrete vs continuous",
       "action_mode, num_bins, container_width, max_steps"},
      {"golf", "Dynamics: stochasticity",
       "width, length, stochasticity_level, max_hits, green_radius"},
      {"supermarket", "Model-based reinforcement learning",
       "step_timeout, noise, map_file, max_steps"},
  };
  return table;
}

namespace detail {

template <typename T>
T get_or(const nlohmann::json& params, const char* key, T fallback) {
  if (!params.contains(key)) return fallback;
  return params.at(key).get<T>();
}

inline void check_keys(const nlohmann::json& params, const std::string& env,
                       std::initializer_list<const char*> known) {
  for (const auto& [key, value] : params.items()) {
    bool ok = false;
    for (const char* k : known)
      if (key == k) ok = true;
    if (!ok) throw ConfigError(env + ": unknown parameter '" + key + "'");
  }
}

}  // namespace detail

/// Construct an environment by name from a JSON parameter map. Unknown
/// environment names and unknown parameter keys are rejected. A positive
/// "framestack" parameter wraps any discrete-observation environment.
inline EnvPtr make_env(const std::string& name, const nlohmann::json& params, uint64_t seed) {
  using detail::check_keys;
  using detail::get_or;
  EnvPtr env;
  if (name == "boulder") {
    check_keys(params, name, {"height", "num_grips", "max_steps", "framestack"});
    BoulderConfig cfg;
    cfg.height = get_or<int64_t>(params, "height", cfg.height);
    cfg.num_grips = get_or<int64_t>(params, "num_grips", cfg.num_grips);
    cfg.max_steps = get_or<int64_t>(params, "max_steps", cfg.max_steps);
    env = std::make_unique<BoulderEnv>(cfg, seed);
  } else if (name == "roadrunner") {
    check_keys(params, name, {"width", "penalty", "max_speed", "max_steps", "framestack"});
    RoadrunnerConfig cfg;
    cfg.width = get_or<int64_t>(params, "width", cfg.width);
    cfg.penalty = get_or<double>(params, "penalty", cfg.penalty);
    cfg.max_speed = get_or<int64_t>(params, "max_speed", cfg.max_speed);
    cfg.max_steps = get_or<int64_t>(params, "max_steps", cfg.max_steps);
    env = std::make_unique<RoadrunnerEnv>(cfg, seed);
  } else if (name == "study") {
    check_keys(params, name,
               {"other_actions", "reward_noise_mean", "reward_noise_sigma", "total_days",
                "lecture_days", "lectures_needed", "energy_needed", "framestack"});
    StudyConfig cfg;
    cfg.other_actions = get_or<int64_t>(params, "other_actions", cfg.other_actions);
    cfg.reward_noise_mean = get_or<double>(params, "reward_noise_mean", cfg.reward_noise_mean);
    cfg.reward_noise_sigma = get_or<double>(params, "reward_noise_sigma", cfg.reward_noise_sigma);
    cfg.total_days = get_or<int64_t>(params, "total_days", cfg.total_days);
    cfg.lecture_days = get_or<int64_t>(params, "lecture_days", cfg.lecture_days);
    cfg.lectures_needed = get_or<int64_t>(params, "lectures_needed", cfg.lectures_needed);
    cfg.energy_needed = get_or<int64_t>(params, "energy_needed", cfg.energy_needed);
    env = std::make_unique<StudyEnv>(cfg, seed);
  } else if (name == "catch") {
    check_keys(params, name, {"rows", "columns", "observation_type", "framestack"});
    CatchConfig cfg;
    cfg.rows = get_or<int64_t>(params, "rows", cfg.rows);
    cfg.columns = get_or<int64_t>(params, "columns", cfg.columns);
    const auto type = get_or<std::string>(params, "observation_type", "vectorised");
    if (type == "vectorised") cfg.observation_type = CatchObservation::vectorised;
    else if (type == "grid") cfg.observation_type = CatchObservation::grid;
    else if (type == "rgb") cfg.observation_type = CatchObservation::rgb;
    else throw ConfigError("catch: observation_type must be vectorised|grid|rgb");
    env = std::make_unique<CatchEnv>(cfg, seed);
  } else if (name == "memory_corridor") {
    check_keys(params, name, {"num_doors", "max_steps", "framestack"});
    MemoryCorridorConfig cfg;
    cfg.num_doors = get_or<int64_t>(params, "num_doors", cfg.num_doors);
    cfg.max_steps = get_or<int64_t>(params, "max_steps", cfg.max_steps);
    env = std::make_unique<MemoryCorridorEnv>(cfg, seed);
  } else if (name == "tamagotchi") {
    check_keys(params, name, {"tau", "max_msg_length", "vocab_size", "framestack"});
    TamagotchiConfig cfg;
    cfg.tau = get_or<double>(params, "tau", cfg.tau);
    cfg.max_msg_length = get_or<int64_t>(params, "max_msg_length", cfg.max_msg_length);
    cfg.vocab_size = get_or<int64_t>(params, "vocab_size", cfg.vocab_size);
    env = std::make_unique<TamagotchiEnv>(cfg, seed);
  } else if (name == "trashbot") {
    check_keys(params, name, {"action_mode", "num_bins", "container_width", "max_steps"});
    TrashbotConfig cfg;
    const auto mode = get_or<std::string>(params, "action_mode", "continuous");
    if (mode == "continuous") cfg.action_mode = TrashbotActions::continuous;
    else if (mode == "discrete") cfg.action_mode = TrashbotActions::discrete;
    else throw ConfigError("trashbot: action_mode must be continuous|discrete");
    cfg.num_bins = get_or<int64_t>(params, "num_bins", cfg.num_bins);
    cfg.container_width = get_or<double>(params, "container_width", cfg.container_width);
    cfg.max_steps = get_or<int64_t>(params, "max_steps", cfg.max_steps);
    env = std::make_unique<TrashbotEnv>(cfg, seed);
  } else if (name == "golf") {
    check_keys(params, name,
               {"width", "length", "stochasticity_level", "max_hits", "green_radius", "framestack"});
    GolfConfig cfg;
    cfg.width = get_or<int64_t>(params, "width", cfg.width);
    cfg.length = get_or<int64_t>(params, "length", cfg.length);
    cfg.stochasticity_level = get_or<double>(params, "stochasticity_level", cfg.stochasticity_level);
    cfg.max_hits = get_or<int64_t>(params, "max_hits", cfg.max_hits);
    cfg.green_radius = get_or<double>(params, "green_radius", cfg.green_radius);
    env = std::make_unique<GolfEnv>(cfg, seed);
  } else if (name == "supermarket") {
    check_keys(params, name, {"step_timeout", "noise", "map_file", "max_steps", "framestack"});
    SupermarketConfig cfg;
    cfg.step_timeout = get_or<double>(params, "step_timeout", cfg.step_timeout);
    cfg.noise = get_or<double>(params, "noise", cfg.noise);
    cfg.map_file = get_or<std::string>(params, "map_file", cfg.map_file);
    cfg.max_steps = get_or<int64_t>(params, "max_steps", cfg.max_steps);
    env = std::make_unique<SupermarketEnv>(cfg, seed);
  } else {
    std::string known;
    for (const auto& e : env_table()) known += (known.empty() ? "" : ", ") + e.name;
    throw ConfigError("unknown environment '" + name + "' (known: " + known + ")");
  }

  const auto k = detail::get_or<int64_t>(params, "framestack", 0);
  if (k > 0) env = framestack_wrap(std::move(env), static_cast<int>(k));
  return env;
}

}  // namespace rlsuite::envs
