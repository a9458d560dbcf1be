#pragma once

#include <array>
#include <chrono>
#include <fstream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "rlsuite/env.hpp"
#include "rlsuite/model.hpp"

namespace rlsuite::envs {

/// Fixed 10x10 store layout: '#' wall, '.' floor, '1'/'2'/'3' items,
/// 'S' entrance, 'E' exit. Row-major, newline-separated.
inline constexpr const char* kDefaultSupermarketMap =
    "S.........\n"
    "...#...#..\n"
    "..1#...#..\n"
    "...#...2..\n"
    "...#...#..\n"
    ".......#..\n"
    "...#...#..\n"
    "...#...#..\n"
    "...#3..#..\n"
    ".........E\n";

struct SupermarketMap {
  std::array<std::string, 10> rows;
  int64_t start_pos = 0;
  int64_t exit_pos = 99;
  std::array<int64_t, 3> item_pos{};

  static SupermarketMap parse(const std::string& text) {
    SupermarketMap m;
    std::istringstream in(text);
    std::string line;
    size_t y = 0;
    bool seen_start = false, seen_exit = false;
    std::array<bool, 3> seen_item{};
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      if (y >= 10 || line.size() != 10) throw ConfigError("supermarket map must be 10x10");
      for (size_t x = 0; x < 10; ++x) {
        const char c = line[x];
        const int64_t pos = static_cast<int64_t>(y) * 10 + static_cast<int64_t>(x);
        switch (c) {
          case 'S': m.start_pos = pos; seen_start = true; break;
          case 'E': m.exit_pos = pos; seen_exit = true; break;
          case '1': case '2': case '3': {
            const size_t i = static_cast<size_t>(c - '1');
            m.item_pos[i] = pos;
            seen_item[i] = true;
            break;
          }
          case '.': case '#': break;
          default: throw ConfigError(std::string("supermarket map: bad cell '") + c + "'");
        }
      }
      m.rows[y] = line;
      ++y;
    }
    if (y != 10) throw ConfigError("supermarket map must have 10 rows");
    if (!seen_start || !seen_exit || !seen_item[0] || !seen_item[1] || !seen_item[2])
      throw ConfigError("supermarket map must contain S, E and items 1,2,3");
    return m;
  }

  static SupermarketMap load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("supermarket: cannot read map file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
  }

  char cell(int64_t pos) const {
    return rows[static_cast<size_t>(pos / 10)][static_cast<size_t>(pos % 10)];
  }
  bool walkable(int64_t pos) const {
    return pos >= 0 && pos < 100 && cell(pos) != '#';
  }
  /// Index of the item on this cell, or -1.
  int item_at(int64_t pos) const {
    for (int i = 0; i < 3; ++i)
      if (item_pos[static_cast<size_t>(i)] == pos) return i;
    return -1;
  }
};

struct SupermarketConfig {
  double step_timeout = 0.0;  // seconds the env blocks per step() call
  double noise = 0.0;         // stddev of the reward noise of model queries
  std::string map_file;       // empty -> built-in layout
  int64_t max_steps = 500;
};

namespace detail {

struct SupermarketStep {
  int64_t next_pos = 0;
  int64_t next_flags = 0;
  double reward = 0.0;
  bool terminal = false;
};

/// Shared deterministic dynamics: move unless wall/out-of-bounds, -1 per
/// step, +25 for an uncollected item, +50 and terminal on the exit.
inline SupermarketStep supermarket_step(const SupermarketMap& map, int64_t pos, int64_t flags,
                                        int64_t action) {
  static constexpr int64_t kDx[4] = {0, 0, -1, 1};  // up, down, left, right
  static constexpr int64_t kDy[4] = {-1, 1, 0, 0};
  const int64_t x = pos % 10 + kDx[action];
  const int64_t y = pos / 10 + kDy[action];
  SupermarketStep r;
  r.next_pos = pos;
  if (x >= 0 && x < 10 && y >= 0 && y < 10 && map.walkable(y * 10 + x)) r.next_pos = y * 10 + x;
  r.next_flags = flags;
  r.reward = -1.0;
  const int item = map.item_at(r.next_pos);
  if (item >= 0 && ((flags >> item) & 1) == 0) {
    r.next_flags = flags | (1 << item);
    r.reward += 25.0;
  }
  if (r.next_pos == map.exit_pos) {
    r.reward += 50.0;
    r.terminal = true;
  }
  return r;
}

}  // namespace detail

/// Grid-store shopping trip: collect the three listed items and leave by
/// the exit. Observation = Discrete(800) state id encoding position and
/// collection flags. step() can be configured to block wall-clock time to a
/// mimic costly real-world actions; the model function never blocks.
class SupermarketEnv final : public Env {
 public:
  explicit SupermarketEnv(SupermarketConfig cfg, uint64_t seed)
      : Env(SpaceDescriptor::discrete(800), SpaceDescriptor::discrete(4), cfg.max_steps, seed),
        cfg_(cfg),
        map_(cfg.map_file.empty() ? SupermarketMap::parse(kDefaultSupermarketMap)
                                  : SupermarketMap::load(cfg.map_file)) {
    if (cfg.step_timeout < 0 || cfg.noise < 0)
      throw ConfigError("supermarket: step_timeout and noise must be >= 0");
  }

  std::string name() const override { return "supermarket"; }

  static int64_t encode(int64_t pos, int64_t flags) { return pos + 100 * flags; }
  static std::pair<int64_t, int64_t> decode(int64_t state) {
    return {state % 100, state / 100};
  }

  const SupermarketMap& map() const { return map_; }
  const SupermarketConfig& config() const { return cfg_; }

  std::string render() const override {
    std::ostringstream os;
    for (int64_t y = 0; y < 10; ++y) {
      for (int64_t x = 0; x < 10; ++x) {
        const int64_t pos = y * 10 + x;
        char c = map_.cell(pos);
        const int item = map_.item_at(pos);
        if (item >= 0 && ((flags_ >> item) & 1)) c = '.';  // collected
        if (pos == pos_) c = '@';
        os << c;
      }
      os << "\n";
    }
    os << "items " << ((flags_ >> 0) & 1) << ((flags_ >> 1) & 1) << ((flags_ >> 2) & 1)
       << "  actions: 0=up 1=down 2=left 3=right\n";
    return os.str();
  }

 protected:
  SpaceValue do_reset() override {
    pos_ = map_.start_pos;
    flags_ = 0;
    last_step_end_ = {};
    return encode(pos_, flags_);
  }

  StepOutcome do_step(const SpaceValue& action) override {
    if (cfg_.step_timeout > 0.0) {
      if (last_step_end_.time_since_epoch().count() != 0) {
        std::this_thread::sleep_until(
            last_step_end_ + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                 std::chrono::duration<double>(cfg_.step_timeout)));
      }
      last_step_end_ = std::chrono::steady_clock::now();
    }
    const auto r = detail::supermarket_step(map_, pos_, flags_, as_discrete(action));
    pos_ = r.next_pos;
    flags_ = r.next_flags;
    StepOutcome out;
    out.observation = encode(pos_, flags_);
    out.reward = r.reward;
    out.terminated = r.terminal;
    return out;
  }

 private:
  SupermarketConfig cfg_;
  SupermarketMap map_;
  int64_t pos_ = 0;
  int64_t flags_ = 0;
  std::chrono::steady_clock::time_point last_step_end_{};
};

enum class ModelMode { descriptive, generative };

/// The store's exact transition/reward model. Queries never block on the
/// step timeout. Reward outputs are perturbed by N(0, noise^2) per call;
/// exit states are absorbing. Wall or out-of-range state ids raise
/// InvalidStateError.
class SupermarketModel final : public DescriptiveModel {
 public:
  explicit SupermarketModel(const SupermarketEnv& env)
      : map_(env.map()), noise_(env.config().noise),
        rng_(RngStream(env.seed()).child("model")) {}

  SupermarketModel(SupermarketMap map, double noise, uint64_t seed)
      : map_(std::move(map)), noise_(noise), rng_(RngStream(seed).child("model")) {}

  /// Full next-state distribution and reward for (s, a); deterministic
  /// dynamics make it a unit mass.
  std::vector<ModelTransition> descriptive(int64_t state, int64_t action, RngStream& rng) const {
    validate(state, action);
    const auto [pos, flags] = SupermarketEnv::decode(state);
    if (pos == map_.exit_pos) return {{state, 1.0, perturb(0.0, rng), true}};
    const auto r = detail::supermarket_step(map_, pos, flags, action);
    return {{SupermarketEnv::encode(r.next_pos, r.next_flags), 1.0, perturb(r.reward, rng),
             r.terminal}};
  }

  /// One sampled (next_state, reward) pair.
  std::pair<int64_t, double> generative(int64_t state, int64_t action, RngStream& rng) const {
    const auto dist = descriptive(state, action, rng);
    double u = rng.next_double();
    for (const auto& t : dist) {
      u -= t.probability;
      if (u < 0) return {t.next_state, t.reward};
    }
    return {dist.back().next_state, dist.back().reward};
  }

  // DescriptiveModel interface (uses the model's own stream for noise).
  std::vector<int64_t> states() const override {
    std::vector<int64_t> out;
    for (int64_t flags = 0; flags < 8; ++flags)
      for (int64_t pos = 0; pos < 100; ++pos)
        if (map_.walkable(pos)) out.push_back(SupermarketEnv::encode(pos, flags));
    return out;
  }
  int64_t num_actions() const override { return 4; }
  std::vector<ModelTransition> transitions(int64_t state, int64_t action) const override {
    return descriptive(state, action, rng_);
  }

  bool valid_state(int64_t state) const {
    if (state < 0 || state >= 800) return false;
    return map_.walkable(state % 100);
  }

 private:
  void validate(int64_t state, int64_t action) const {
    if (!valid_state(state))
      throw InvalidStateError("supermarket model: invalid state id " + std::to_string(state));
    if (action < 0 || action >= 4)
      throw InvalidActionError("supermarket model: invalid action " + std::to_string(action));
  }

  double perturb(double reward, RngStream& rng) const {
    return noise_ > 0.0 ? reward + rng.normal(0.0, noise_) : reward;
  }

  SupermarketMap map_;
  double noise_;
  mutable RngStream rng_;
};

}  // namespace rlsuite::envs
