#include <unistd.h>

#include <termios.h>

#include <csignal>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "rlsuite/rlsuite.hpp"

namespace {

using namespace rlsuite;

std::string describe_space(const SpaceDescriptor& s) {
  std::ostringstream os;
  switch (s.kind()) {
    case SpaceKind::discrete:
      os << "discrete(" << s.n() << ")";
      break;
    case SpaceKind::multi_discrete: {
      os << "multi_discrete(";
      for (size_t i = 0; i < s.dims().size(); ++i) os << (i ? "," : "") << s.dims()[i];
      os << ")";
      break;
    }
    case SpaceKind::box: {
      os << "box(shape=";
      for (size_t i = 0; i < s.shape().size(); ++i) os << (i ? "x" : "") << s.shape()[i];
      os << ", low=" << s.low()[0] << ", high=" << s.high()[0] << ")";
      break;
    }
  }
  return os.str();
}

int cmd_list() {
  std::printf("%-2s %-16s %-38s %s\n", "#", "environment", "challenge", "variable parameters");
  char row = 'a';
  for (const auto& e : envs::env_table()) {
    std::printf("%c  %-16s %-38s %s\n", row++, e.name.c_str(), e.challenge.c_str(),
                e.parameters.c_str());
  }
  return 0;
}

nlohmann::json parse_param_overrides(const std::vector<std::string>& kvs) {
  nlohmann::json params = nlohmann::json::object();
  for (const auto& kv : kvs) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos)
      throw ConfigError("parameter override must look like key=value: " + kv);
    const std::string key = kv.substr(0, eq);
    const std::string val = kv.substr(eq + 1);
    try {
      params[key] = nlohmann::json::parse(val);  // numbers, booleans
    } catch (const nlohmann::json::exception&) {
      params[key] = val;  // plain string (e.g. observation_type=grid)
    }
  }
  return params;
}

int cmd_inspect(const std::string& name, const std::vector<std::string>& overrides,
                uint64_t seed) {
  const auto params = parse_param_overrides(overrides);
  auto env = envs::make_env(name, params, seed);
  const envs::EnvInfo* info = nullptr;
  for (const auto& e : envs::env_table())
    if (e.name == name) info = &e;
  std::cout << "environment:       " << name << "\n";
  if (info) {
    std::cout << "challenge:         " << info->challenge << "\n";
    std::cout << "parameters:        " << info->parameters << "\n";
  }
  std::cout << "observation space: " << describe_space(env->observation_space()) << "\n";
  std::cout << "action space:      " << describe_space(env->action_space()) << "\n";
  std::cout << "max steps:         " << env->max_steps() << "\n";
  env->reset();
  std::cout << "\ninitial frame (seed " << seed << "):\n" << env->render();
  return 0;
}

// ---------------------------------------------------------------------------
// play

struct RawTerminal {
  termios saved{};
  bool active = false;
  RawTerminal() {
    if (tcgetattr(STDIN_FILENO, &saved) == 0) {
      termios raw = saved;
      raw.c_lflag &= ~(ICANON | ECHO);
      raw.c_cc[VMIN] = 1;
      raw.c_cc[VTIME] = 0;
      tcsetattr(STDIN_FILENO, TCSAFLUSH, &raw);
      active = true;
    }
  }
  ~RawTerminal() {
    if (active) tcsetattr(STDIN_FILENO, TCSAFLUSH, &saved);
  }
};

enum class Key { up, down, left, right, quit, other };

struct KeyPress {
  Key special = Key::other;
  char ch = 0;
};

KeyPress read_key() {
  char c = 0;
  if (read(STDIN_FILENO, &c, 1) != 1) return {Key::quit, 0};
  if (c == 'q' || c == 3) return {Key::quit, 0};
  if (c == '\033') {
    char seq[2] = {0, 0};
    if (read(STDIN_FILENO, &seq[0], 1) != 1) return {Key::quit, 0};
    if (read(STDIN_FILENO, &seq[1], 1) != 1) return {Key::quit, 0};
    if (seq[0] == '[') {
      switch (seq[1]) {
        case 'A': return {Key::up, 0};
        case 'B': return {Key::down, 0};
        case 'C': return {Key::right, 0};
        case 'D': return {Key::left, 0};
      }
    }
    return {Key::other, 0};
  }
  return {Key::other, c};
}

std::string key_help(const std::string& env_name, const Env& env) {
  if (env_name == "supermarket") return "arrows = move";
  if (env_name == "catch") return "left/right arrows = move, space = stay";
  if (env_name == "roadrunner") return "up = faster, down = slower, space = keep speed";
  if (env_name == "boulder" || env_name == "memory_corridor")
    return "digits 0.." + std::to_string(env.action_space().n() - 1);
  if (env_name == "study") return "s = study, e = sleep, g = go out, digits 1.. = other actions";
  if (env_name == "tamagotchi") return "p = play, f = feed, s = sleep, c = clean";
  if (env_name == "golf") return "p = putt, c = chip, d = drive";
  if (env_name == "trashbot") return "q/a = joint1 +/-, w/s = joint2 +/- (0.25 rad)";
  return "digits = actions";
}

std::optional<SpaceValue> decode_key(const std::string& env_name, const Env& env, KeyPress k) {
  const auto& space = env.action_space();
  if (env_name == "supermarket") {
    switch (k.special) {
      case Key::up: return SpaceValue{int64_t{0}};
      case Key::down: return SpaceValue{int64_t{1}};
      case Key::left: return SpaceValue{int64_t{2}};
      case Key::right: return SpaceValue{int64_t{3}};
      default: return std::nullopt;
    }
  }
  if (env_name == "catch") {
    if (k.special == Key::left) return SpaceValue{int64_t{0}};
    if (k.special == Key::right) return SpaceValue{int64_t{2}};
    if (k.ch == ' ') return SpaceValue{int64_t{1}};
    return std::nullopt;
  }
  if (env_name == "roadrunner") {
    if (k.special == Key::down) return SpaceValue{int64_t{0}};
    if (k.ch == ' ') return SpaceValue{int64_t{1}};
    if (k.special == Key::up) return SpaceValue{int64_t{2}};
    return std::nullopt;
  }
  if (env_name == "study") {
    if (k.ch == 's') return SpaceValue{int64_t{0}};
    if (k.ch == 'e') return SpaceValue{int64_t{1}};
    if (k.ch == 'g') return SpaceValue{int64_t{2}};
    if (k.ch >= '1' && k.ch <= '9') {
      const int64_t a = 2 + (k.ch - '0');
      if (a < space.n()) return SpaceValue{a};
    }
    return std::nullopt;
  }
  if (env_name == "tamagotchi") {
    if (k.ch == 'p') return SpaceValue{int64_t{0}};
    if (k.ch == 'f') return SpaceValue{int64_t{1}};
    if (k.ch == 's') return SpaceValue{int64_t{2}};
    if (k.ch == 'c') return SpaceValue{int64_t{3}};
    return std::nullopt;
  }
  if (env_name == "golf") {
    if (k.ch == 'p') return SpaceValue{int64_t{0}};
    if (k.ch == 'c') return SpaceValue{int64_t{1}};
    if (k.ch == 'd') return SpaceValue{int64_t{2}};
    return std::nullopt;
  }
  if (env_name == "trashbot") {
    double d1 = 0, d2 = 0;
    if (k.ch == 'q') d1 = 0.25;
    else if (k.ch == 'a') d1 = -0.25;
    else if (k.ch == 'w') d2 = 0.25;
    else if (k.ch == 's') d2 = -0.25;
    else return std::nullopt;
    if (space.kind() != SpaceKind::box) return std::nullopt;
    return SpaceValue{std::vector<double>{d1, d2}};
  }
  // digit-indexed discrete actions (boulder, memory_corridor, fallback)
  if (space.kind() == SpaceKind::discrete && k.ch >= '0' && k.ch <= '9') {
    const int64_t a = k.ch - '0';
    if (a < space.n()) return SpaceValue{a};
  }
  return std::nullopt;
}

int cmd_play(const std::string& name, const std::vector<std::string>& overrides, uint64_t seed,
             bool no_color) {
  if (!isatty(STDIN_FILENO) || !isatty(STDOUT_FILENO)) {
    std::cerr << "play needs an interactive terminal (stdin/stdout are not a TTY)\n";
    return 1;
  }
  auto env = envs::make_env(name, parse_param_overrides(overrides), seed);
  RawTerminal raw;
  double episode_return = 0.0;
  int64_t steps = 0;
  std::string status = "new episode";
  env->reset();

  const std::string help = key_help(name, *env);
  while (true) {
    if (!no_color) std::cout << "\033[2J\033[H";
    std::cout << "== " << name << " ==  keys: " << help << ", q = quit\n\n";
    std::cout << env->render();
    std::cout << "\nstep " << steps << "  return " << episode_return << "  [" << status << "]\n";
    std::cout.flush();

    const KeyPress k = read_key();
    if (k.special == Key::quit) {
      std::cout << "\nquit after " << steps << " steps, return " << episode_return << "\n";
      return 0;
    }
    if (!env->episode_active()) {
      episode_return = 0.0;
      steps = 0;
      status = "new episode";
      env->reset();
      continue;
    }
    const auto action = decode_key(name, *env, k);
    if (!action) {
      status = "unknown key (" + help + ")";
      continue;  // no env step consumed
    }
    const StepOutcome out = env->step(*action);
    episode_return += out.reward;
    ++steps;
    std::ostringstream st;
    st << "reward " << out.reward;
    if (out.terminated) st << ", terminated - any key starts a new episode";
    if (out.truncated) st << ", truncated - any key starts a new episode";
    status = st.str();
  }
}

int cmd_run(const std::string& preset_name, const std::string& config_path,
            const std::string& out_dir, std::optional<uint64_t> seed) {
  experiments::ExperimentConfig cfg;
  if (!preset_name.empty()) {
    cfg = experiments::preset(preset_name);
  } else {
    cfg = experiments::ExperimentConfig::load(config_path);
  }
  if (seed) cfg.base_seed = *seed;
  std::filesystem::create_directories(out_dir);
  const auto record = experiments::run_experiment(cfg);
  const auto curves = experiments::aggregate(record, cfg.smoothing_window);
  const auto [csv, svg] = experiments::write_outputs(curves, out_dir, cfg.name);
  std::cout << "wrote " << csv << "\nwrote " << svg << "\n\n";
  std::printf("%-28s %-22s %14s\n", "agent", "env", "final mean ret");
  for (const auto& c : curves) {
    const double final_mean = c.points.empty() ? 0.0 : c.points.back().mean;
    std::printf("%-28s %-22s %14.4f\n", c.spec.agent_label.c_str(), c.spec.env_label.c_str(),
                final_mean);
  }
  return 0;
}

int cmd_preset(const std::string& name) {
  if (name.empty()) {
    for (const auto& n : experiments::preset_names()) std::cout << n << "\n";
    return 0;
  }
  std::cout << experiments::preset(name).to_json().dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rlsuite - challenge-isolating reinforcement learning environments, classic "
               "solution methods and a seeded experiment harness"};
  app.require_subcommand(1);

  auto* list = app.add_subcommand("list", "List the nine environments and their challenges");

  std::string env_name;
  std::vector<std::string> overrides;
  uint64_t seed = 0;
  auto* inspect = app.add_subcommand("inspect", "Show spaces, parameters and an initial frame");
  inspect->add_option("env", env_name, "environment name")->required();
  inspect->add_option("-p,--param", overrides, "parameter override key=value (repeatable)");
  inspect->add_option("-s,--seed", seed, "environment seed");

  std::string play_env;
  std::vector<std::string> play_overrides;
  uint64_t play_seed = 0;
  bool no_color = false;
  auto* play = app.add_subcommand("play", "Play an environment interactively in the terminal");
  play->add_option("env", play_env, "environment name")->required();
  play->add_option("-p,--param", play_overrides, "parameter override key=value (repeatable)");
  play->add_option("-s,--seed", play_seed, "environment seed");
  play->add_flag("--no-color", no_color, "plain output without ANSI escapes");

  std::string run_preset, run_config, out_dir = ".";
  std::optional<uint64_t> run_seed;
  auto* run = app.add_subcommand("run", "Run an experiment from a preset or a config file");
  auto* preset_opt = run->add_option("--preset", run_preset, "preset name");
  auto* config_opt = run->add_option("--config", run_config, "experiment config JSON file");
  preset_opt->excludes(config_opt);
  run->add_option("-o,--out", out_dir, "output directory (default .)");
  uint64_t seed_value = 0;
  auto* seed_opt = run->add_option("--seed", seed_value, "override the config base seed");

  std::string preset_name;
  auto* preset_cmd =
      app.add_subcommand("preset", "List presets, or print one preset's config as JSON");
  preset_cmd->add_option("name", preset_name, "preset name");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;  // user error
  }

  try {
    if (list->parsed()) return cmd_list();
    if (inspect->parsed()) return cmd_inspect(env_name, overrides, seed);
    if (play->parsed()) return cmd_play(play_env, play_overrides, play_seed, no_color);
    if (run->parsed()) {
      if (run_preset.empty() && run_config.empty()) {
        std::cerr << "run: either --preset or --config is required\n";
        return 1;
      }
      if (seed_opt->count() > 0) run_seed = seed_value;
      return cmd_run(run_preset, run_config, out_dir, run_seed);
    }
    if (preset_cmd->parsed()) return cmd_preset(preset_name);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;  // user error
  } catch (const std::exception& e) {
    std::cerr << "runtime error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
