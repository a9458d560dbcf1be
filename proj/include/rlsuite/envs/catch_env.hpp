#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "rlsuite/env.hpp"

namespace rlsuite::envs {

enum class CatchObservation { vectorised, grid, rgb };

struct CatchConfig {
  int64_t rows = 7;
  int64_t columns = 7;
  CatchObservation observation_type = CatchObservation::vectorised;
};

/// Catch a ball falling one row per step with a paddle on the bottom row.
/// +1 when caught, -1 when missed, 0 otherwise. The observation is either
/// the compact (ball_x, ball_y, paddle_x) vector, a 0/1 grid, or an RGB
/// image with a red ball and a blue paddle.
class CatchEnv final : public Env {
 public:
  explicit CatchEnv(CatchConfig cfg, uint64_t seed)
      : Env(make_space(cfg), SpaceDescriptor::discrete(3), cfg.rows, seed), cfg_(cfg) {
    if (cfg.rows < 3 || cfg.columns < 3) throw ConfigError("catch: rows and columns must be >= 3");
  }

  std::string name() const override { return "catch"; }

  int64_t ball_x() const { return bx_; }
  int64_t ball_y() const { return by_; }
  int64_t paddle_x() const { return px_; }

  std::string render() const override {
    std::ostringstream os;
    for (int64_t r = 0; r < cfg_.rows; ++r) {
      for (int64_t c = 0; c < cfg_.columns; ++c) {
        char ch = '.';
        if (r == cfg_.rows - 1 && c == px_) ch = '=';
        if (r == by_ && c == bx_) ch = 'o';
        os << ch;
      }
      os << "\n";
    }
    os << "actions: 0=left 1=stay 2=right\n";
    return os.str();
  }

 protected:
  SpaceValue do_reset() override {
    bx_ = dynamics_rng().uniform_int(cfg_.columns);
    by_ = 0;
    px_ = cfg_.columns / 2;  // always starts in the middle column
    return observation();
  }

  StepOutcome do_step(const SpaceValue& action) override {
    px_ = std::clamp<int64_t>(px_ + as_discrete(action) - 1, 0, cfg_.columns - 1);
    ++by_;
    StepOutcome out;
    if (by_ == cfg_.rows - 1) {
      out.terminated = true;
      out.reward = (bx_ == px_) ? 1.0 : -1.0;
    }
    out.observation = observation();
    return out;
  }

 private:
  static SpaceDescriptor make_space(const CatchConfig& cfg) {
    switch (cfg.observation_type) {
      case CatchObservation::vectorised:
        return SpaceDescriptor::multi_discrete({cfg.columns, cfg.rows, cfg.columns});
      case CatchObservation::grid:
        return SpaceDescriptor::box({0.0}, {1.0}, {cfg.rows, cfg.columns});
      case CatchObservation::rgb:
        return SpaceDescriptor::box({0.0}, {255.0}, {cfg.rows, cfg.columns, 3});
    }
    throw ConfigError("catch: unknown observation type");
  }

  SpaceValue observation() const {
    switch (cfg_.observation_type) {
      case CatchObservation::vectorised:
        return std::vector<int64_t>{bx_, by_, px_};
      case CatchObservation::grid: {
        std::vector<double> g(static_cast<size_t>(cfg_.rows * cfg_.columns), 0.0);
        g[static_cast<size_t>(by_ * cfg_.columns + bx_)] = 1.0;
        g[static_cast<size_t>((cfg_.rows - 1) * cfg_.columns + px_)] = 1.0;
        return g;
      }
      case CatchObservation::rgb: {
        std::vector<double> img(static_cast<size_t>(cfg_.rows * cfg_.columns * 3), 0.0);
        img[static_cast<size_t>((by_ * cfg_.columns + bx_) * 3)] = 255.0;          // red ball
        img[static_cast<size_t>(((cfg_.rows - 1) * cfg_.columns + px_) * 3 + 2)] = 255.0;  // blue paddle
        return img;
      }
    }
    throw ConfigError("catch: unknown observation type");
  }

  CatchConfig cfg_;
  int64_t bx_ = 0, by_ = 0, px_ = 0;
};

}  // namespace rlsuite::envs
