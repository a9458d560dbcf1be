#pragma once

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "rlsuite/env.hpp"

namespace rlsuite::envs {

struct GolfConfig {
  int64_t width = 20;
  int64_t length = 40;
  double stochasticity_level = 0.25;  // c; transverse noise sigma = c * d^2
  int64_t max_hits = 10;
  double green_radius = 1.0;
};

/// Hit a ball across a grid course towards the flag with three swings:
/// putt (1 cell), chip (3) and drive (8). Each hit moves the ball towards
/// the flag plus a transverse Gaussian deflection with sigma = c * d^2, so
/// harder swings are noisier. Reaching the green pays (max_hits - hits + 1)
/// / max_hits; leaving the course or running out of hits pays -1.
class GolfEnv final : public Env {
 public:
  static constexpr int64_t kSwingDistance[3] = {1, 3, 8};  // putt, chip, drive

  explicit GolfEnv(GolfConfig cfg, uint64_t seed)
      : Env(SpaceDescriptor::multi_discrete({cfg.width, cfg.length}), SpaceDescriptor::discrete(3),
            cfg.max_hits + 1, seed),
        cfg_(cfg) {
    if (cfg.width < 3 || cfg.length < 3) throw ConfigError("golf: course must be at least 3x3");
    if (cfg.stochasticity_level < 0) throw ConfigError("golf: stochasticity_level must be >= 0");
    if (cfg.max_hits < 1) throw ConfigError("golf: max_hits must be >= 1");
  }

  std::string name() const override { return "golf"; }

  int64_t flag_x() const { return cfg_.width / 2; }
  int64_t flag_y() const { return cfg_.length - 1; }

  std::string render() const override {
    std::ostringstream os;
    os << "hits " << hits_ << "/" << cfg_.max_hits << "\n";
    for (int64_t y = cfg_.length - 1; y >= 0; --y) {
      for (int64_t x = 0; x < cfg_.width; ++x) {
        char c = '.';
        const double fd = std::hypot(static_cast<double>(x - flag_x()),
                                     static_cast<double>(y - flag_y()));
        if (fd <= cfg_.green_radius) c = '"';
        if (x == flag_x() && y == flag_y()) c = 'F';
        if (x == x_ && y == y_) c = 'o';
        os << c;
      }
      os << "\n";
    }
    os << "actions: 0=putt(1) 1=chip(3) 2=drive(8)\n";
    return os.str();
  }

 protected:
  SpaceValue do_reset() override {
    x_ = cfg_.width / 2;
    y_ = 0;
    hits_ = 0;
    return observation();
  }

  StepOutcome do_step(const SpaceValue& action) override {
    const auto d = static_cast<double>(kSwingDistance[as_discrete(action)]);
    const double tx = static_cast<double>(flag_x() - x_);
    const double ty = static_cast<double>(flag_y() - y_);
    const double norm = std::hypot(tx, ty);
    const double ux = tx / norm, uy = ty / norm;
    const double sigma = cfg_.stochasticity_level * d * d;
    const double deflection = dynamics_rng().normal(0.0, sigma);
    const double lx = static_cast<double>(x_) + d * ux - deflection * uy;
    const double ly = static_cast<double>(y_) + d * uy + deflection * ux;
    ++hits_;

    StepOutcome out;
    out.info["deflection"] = deflection;
    const int64_t cx = std::llround(lx), cy = std::llround(ly);
    if (cx < 0 || cx >= cfg_.width || cy < 0 || cy >= cfg_.length) {
      out.reward = -1.0;
      out.terminated = true;
      out.info["off_course"] = 1.0;
      x_ = std::clamp<int64_t>(cx, 0, cfg_.width - 1);
      y_ = std::clamp<int64_t>(cy, 0, cfg_.length - 1);
    } else {
      x_ = cx;
      y_ = cy;
      const double flag_dist = std::hypot(static_cast<double>(x_ - flag_x()),
                                          static_cast<double>(y_ - flag_y()));
      if (flag_dist <= cfg_.green_radius) {
        out.reward = static_cast<double>(cfg_.max_hits - hits_ + 1) / static_cast<double>(cfg_.max_hits);
        out.terminated = true;
        out.info["on_green"] = 1.0;
      } else if (hits_ == cfg_.max_hits) {
        out.reward = -1.0;
        out.terminated = true;
      }
    }
    out.observation = observation();
    return out;
  }

 private:
  SpaceValue observation() const { return std::vector<int64_t>{x_, y_}; }

  GolfConfig cfg_;
  int64_t x_ = 0, y_ = 0, hits_ = 0;
};

}  // namespace rlsuite::envs
