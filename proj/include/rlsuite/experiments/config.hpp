#pragma once

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "rlsuite/agents/learners.hpp"
#include "rlsuite/envs/registry.hpp"
#include "rlsuite/errors.hpp"

namespace rlsuite::experiments {

/// One learning curve: an environment build paired with an agent build.
struct CurveSpec {
  std::string label;  // legend label
  std::string env_name;
  nlohmann::json env_params = nlohmann::json::object();
  std::string agent_name;
  nlohmann::json agent_params = nlohmann::json::object();
  std::string agent_label;  // CSV "agent" column; defaults to agent_name
  std::string env_label;    // CSV "env" column; defaults to env_name

  nlohmann::json to_json() const {
    return {{"label", label},
            {"environment", {{"name", env_name}, {"params", env_params}}},
            {"agent", {{"name", agent_name}, {"params", agent_params}}},
            {"agent_label", agent_label},
            {"env_label", env_label}};
  }
};

/// Declarative seeded experiment: curves, step budget, repetitions and the
/// evaluation/aggregation knobs. Round-trips losslessly through JSON.
struct ExperimentConfig {
  std::string name = "experiment";
  std::vector<CurveSpec> curves;
  int64_t total_steps = 10000;
  int repetitions = 1;
  uint64_t base_seed = 1;
  int64_t greedy_eval_every = 0;  // 0: online returns; k>0: greedy eval every k steps
  int smoothing_window = 1;       // centered moving average over logged points
  int64_t log_every = 1;          // record a row every this many steps
  std::string planning_budget_mode = "call-count";  // or "wall-clock"

  nlohmann::json to_json() const {
    nlohmann::json j{{"name", name},
                     {"total_steps", total_steps},
                     {"repetitions", repetitions},
                     {"base_seed", base_seed},
                     {"smoothing_window", smoothing_window},
                     {"log_every", log_every},
                     {"planning_budget_mode", planning_budget_mode}};
    if (greedy_eval_every > 0)
      j["eval"] = nlohmann::json{{"greedy_every", greedy_eval_every}};
    else
      j["eval"] = "online";
    j["curves"] = nlohmann::json::array();
    for (const auto& c : curves) j["curves"].push_back(c.to_json());
    return j;
  }

  static ExperimentConfig from_json(const nlohmann::json& j) {
    check_keys(j, {"name", "total_steps", "repetitions", "base_seed", "eval", "smoothing_window",
                   "log_every", "planning_budget_mode", "curves"});
    ExperimentConfig c;
    c.name = j.value("name", c.name);
    c.total_steps = j.value("total_steps", c.total_steps);
    c.repetitions = j.value("repetitions", c.repetitions);
    c.base_seed = j.value("base_seed", c.base_seed);
    c.smoothing_window = j.value("smoothing_window", c.smoothing_window);
    c.log_every = j.value("log_every", c.log_every);
    c.planning_budget_mode = j.value("planning_budget_mode", c.planning_budget_mode);
    if (j.contains("eval")) {
      const auto& e = j.at("eval");
      if (e.is_string() && e.get<std::string>() == "online") {
        c.greedy_eval_every = 0;
      } else if (e.is_object() && e.contains("greedy_every")) {
        check_keys(e, {"greedy_every"});
        c.greedy_eval_every = e.at("greedy_every").get<int64_t>();
        if (c.greedy_eval_every < 1) throw ConfigError("eval.greedy_every must be >= 1");
      } else {
        throw ConfigError("eval must be \"online\" or {\"greedy_every\": k}");
      }
    }
    if (c.repetitions < 1) throw ConfigError("repetitions must be >= 1");
    if (c.total_steps < 0) throw ConfigError("total_steps must be >= 0");
    if (c.smoothing_window < 1) throw ConfigError("smoothing_window must be >= 1");
    if (c.log_every < 1) throw ConfigError("log_every must be >= 1");
    if (c.planning_budget_mode != "call-count" && c.planning_budget_mode != "wall-clock")
      throw ConfigError("planning_budget_mode must be call-count or wall-clock");
    if (!j.contains("curves") || !j.at("curves").is_array() || j.at("curves").empty())
      throw ConfigError("config needs a non-empty curves array");
    for (const auto& cj : j.at("curves")) {
      check_keys(cj, {"label", "environment", "agent", "agent_label", "env_label"});
      CurveSpec s;
      const auto& ej = cj.at("environment");
      check_keys(ej, {"name", "params"});
      s.env_name = ej.at("name").get<std::string>();
      s.env_params = ej.value("params", nlohmann::json::object());
      const auto& aj = cj.at("agent");
      check_keys(aj, {"name", "params"});
      s.agent_name = aj.at("name").get<std::string>();
      s.agent_params = aj.value("params", nlohmann::json::object());
      s.label = cj.value("label", s.agent_name + " @ " + s.env_name);
      s.agent_label = cj.value("agent_label", s.agent_name);
      s.env_label = cj.value("env_label", s.env_name);
      validate_names(s);
      c.curves.push_back(std::move(s));
    }
    return c;
  }

  static ExperimentConfig load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file " + path);
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError("config parse error in " + path + ": " + e.what());
    }
    return from_json(j);
  }

  void save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw Error("cannot write config file " + path);
    out << to_json().dump(2) << "\n";
  }

  bool operator==(const ExperimentConfig& o) const { return to_json() == o.to_json(); }

 private:
  static void check_keys(const nlohmann::json& j, std::initializer_list<const char*> known) {
    for (const auto& [key, value] : j.items()) {
      bool ok = false;
      for (const char* k : known)
        if (key == k) ok = true;
      if (!ok) throw ConfigError("config: unknown key '" + key + "'");
    }
  }

  // Names must resolve and parameters must construct; validation happens at
  // load time, before any experiment work starts.
  static void validate_names(const CurveSpec& s) {
    bool env_ok = false;
    for (const auto& e : envs::env_table())
      if (e.name == s.env_name) env_ok = true;
    if (!env_ok) throw ConfigError("config references unknown environment '" + s.env_name + "'");
    bool agent_ok = false;
    for (const auto& a : agents::agent_names())
      if (a == s.agent_name) agent_ok = true;
    if (!agent_ok) throw ConfigError("config references unknown agent '" + s.agent_name + "'");
    const EnvPtr probe = envs::make_env(s.env_name, s.env_params, 0);
    agents::make_agent(s.agent_name, s.agent_params, *probe);
  }
};

}  // namespace rlsuite::experiments
