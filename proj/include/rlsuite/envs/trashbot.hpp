#pragma once

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "rlsuite/env.hpp"

namespace rlsuite::envs {

enum class TrashbotActions { continuous, discrete };

struct TrashbotConfig {
  TrashbotActions action_mode = TrashbotActions::continuous;
  int64_t num_bins = 5;          // discrete mode: grid size over [-1,1] per joint
  double container_width = 0.5;  // aperture width w
  int64_t max_steps = 150;
};

/// Planar 2-link arm (link length 1, base at the origin) that must pick up a
/// box with its magnet tip and drop it into a container. Actions are joint
/// angle deltas in [-1, 1] rad, either continuous or discretised into
/// num_bins values per joint. Rewards: +1 pickup, drop = +2 plus up to +2
/// for centering, -2 for touching the floor or container walls, -1 when the
/// step limit expires. Observation: (p1x, p1y, p2x, p2y, magnet_x, magnet_y,
/// holding) with the magnet at the arm tip p2.
class TrashbotEnv final : public Env {
 public:
  static constexpr double kFloorY = -0.1;
  static constexpr double kRimY = 0.6;
  static constexpr double kContainerX = -1.0;
  static constexpr double kBoxX = 1.6;
  static constexpr double kBoxY = 0.2;
  static constexpr double kPickupRadius = 0.3;

  explicit TrashbotEnv(TrashbotConfig cfg, uint64_t seed)
      : Env(SpaceDescriptor::box({-2, -2, -2, -2, -2, -2, 0}, {2, 2, 2, 2, 2, 2, 1}, {7}),
            make_action_space(cfg), cfg.max_steps, seed),
        cfg_(cfg) {
    if (cfg.container_width <= 0) throw ConfigError("trashbot: container_width must be > 0");
    if (cfg.action_mode == TrashbotActions::discrete &&
        (cfg.num_bins < 2 || cfg.num_bins % 2 == 0))
      throw ConfigError("trashbot: num_bins must be an odd integer >= 3");
  }

  std::string name() const override { return "trashbot"; }

  /// Joint delta encoded by one discrete bin index.
  double bin_value(int64_t bin) const {
    return -1.0 + 2.0 * static_cast<double>(bin) / static_cast<double>(cfg_.num_bins - 1);
  }

  double theta1() const { return theta1_; }
  double theta2() const { return theta2_; }
  bool holding() const { return holding_; }

  std::string render() const override {
    // 61x17 canvas over x in [-2.4, 2.4], y in [-0.4, 2.2]
    const int W = 61, H = 17;
    std::vector<std::string> canvas(H, std::string(W, ' '));
    auto plot = [&](double x, double y, char c) {
      int cx = static_cast<int>(std::lround((x + 2.4) / 4.8 * (W - 1)));
      int cy = static_cast<int>(std::lround((2.2 - y) / 2.6 * (H - 1)));
      if (cx >= 0 && cx < W && cy >= 0 && cy < H) canvas[cy][cx] = c;
    };
    for (double x = -2.4; x <= 2.4; x += 0.05) plot(x, kFloorY, '_');
    const double hw = cfg_.container_width / 2.0;
    for (double y = kFloorY; y <= kRimY; y += 0.05) {
      plot(kContainerX - hw, y, '|');
      plot(kContainerX + hw, y, '|');
    }
    auto [p1, p2] = kinematics();
    for (double t = 0; t <= 1.0; t += 0.05) {
      plot(p1.first * t, p1.second * t, '#');
      plot(p1.first + (p2.first - p1.first) * t, p1.second + (p2.second - p1.second) * t, '#');
    }
    plot(box_x_, box_y_, 'B');
    plot(p2.first, p2.second, holding_ ? 'G' : 'm');
    std::ostringstream os;
    for (const auto& row : canvas) os << row << "\n";
    os << "theta=(" << theta1_ << ", " << theta2_ << ") holding=" << holding_ << "\n";
    return os.str();
  }

 protected:
  // Continuous deltas outside [-1,1] are clipped (and flagged), not rejected.
  bool accepts(const SpaceValue& action) const override {
    if (cfg_.action_mode == TrashbotActions::discrete) return action_space().contains(action);
    const auto* v = std::get_if<std::vector<double>>(&action);
    return v && v->size() == 2;
  }

  SpaceValue do_reset() override {
    theta1_ = 1.5707963267948966;  // straight up
    theta2_ = 0.0;
    holding_ = false;
    box_x_ = kBoxX;
    box_y_ = kBoxY;
    return observation();
  }

  StepOutcome do_step(const SpaceValue& action) override {
    StepOutcome out;
    auto [d1, d2] = decode(action, out);
    theta1_ = wrap_angle(theta1_ + d1);
    theta2_ = wrap_angle(theta2_ + d2);
    auto [p1, p2] = kinematics();
    if (holding_) {
      box_x_ = p2.first;
      box_y_ = p2.second;
    }

    if (collides(p1, p2)) {
      out.reward = -2.0;
      out.terminated = true;
    } else if (holding_ && inside_aperture(p2.first, p2.second)) {
      const double hw = cfg_.container_width / 2.0;
      const double drop = 2.0 + 2.0 * (1.0 - std::abs(p2.first - kContainerX) / hw);
      out.reward = drop;
      out.terminated = true;
      out.info["drop_reward"] = drop;
    } else if (!holding_ && std::hypot(p2.first - box_x_, p2.second - box_y_) <= kPickupRadius) {
      holding_ = true;
      box_x_ = p2.first;
      box_y_ = p2.second;
      out.reward = 1.0;
      out.info["picked_up"] = 1.0;
    }
    if (!out.terminated && truncation_imminent()) out.reward += -1.0;
    out.observation = observation();
    return out;
  }

 private:
  static SpaceDescriptor make_action_space(const TrashbotConfig& cfg) {
    if (cfg.action_mode == TrashbotActions::continuous)
      return SpaceDescriptor::box({-1.0}, {1.0}, {2});
    return SpaceDescriptor::multi_discrete({cfg.num_bins, cfg.num_bins});
  }

  std::pair<double, double> decode(const SpaceValue& action, StepOutcome& out) const {
    if (cfg_.action_mode == TrashbotActions::discrete) {
      const auto& a = as_multi(action);
      return {bin_value(a[0]), bin_value(a[1])};
    }
    const auto& a = as_box(action);
    double d1 = a[0], d2 = a[1];
    if (d1 < -1 || d1 > 1 || d2 < -1 || d2 > 1) out.info["clipped"] = 1.0;
    return {std::clamp(d1, -1.0, 1.0), std::clamp(d2, -1.0, 1.0)};
  }

  static double wrap_angle(double a) {
    constexpr double kTwoPi = 6.283185307179586476925286766559;
    a = std::fmod(a + 3.141592653589793238462643383279, kTwoPi);
    if (a < 0) a += kTwoPi;
    return a - 3.141592653589793238462643383279;
  }

  std::pair<std::pair<double, double>, std::pair<double, double>> kinematics() const {
    const std::pair<double, double> p1{std::cos(theta1_), std::sin(theta1_)};
    const std::pair<double, double> p2{p1.first + std::cos(theta1_ + theta2_),
                                       p1.second + std::sin(theta1_ + theta2_)};
    return {p1, p2};
  }

  static double cross(double ox, double oy, double ax, double ay, double bx, double by) {
    return (ax - ox) * (by - oy) - (ay - oy) * (bx - ox);
  }

  /// Proper segment-segment intersection including touching endpoints.
  static bool segments_intersect(double ax, double ay, double bx, double by, double cx, double cy,
                                 double dx, double dy) {
    const double d1 = cross(cx, cy, dx, dy, ax, ay);
    const double d2 = cross(cx, cy, dx, dy, bx, by);
    const double d3 = cross(ax, ay, bx, by, cx, cy);
    const double d4 = cross(ax, ay, bx, by, dx, dy);
    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
      return true;
    auto on = [](double px, double py, double qx, double qy, double rx, double ry) {
      return cross(px, py, qx, qy, rx, ry) == 0 && std::min(px, qx) <= rx && rx <= std::max(px, qx) &&
             std::min(py, qy) <= ry && ry <= std::max(py, qy);
    };
    return on(cx, cy, dx, dy, ax, ay) || on(cx, cy, dx, dy, bx, by) ||
           on(ax, ay, bx, by, cx, cy) || on(ax, ay, bx, by, dx, dy);
  }

  bool collides(std::pair<double, double> p1, std::pair<double, double> p2) const {
    const double hw = cfg_.container_width / 2.0;
    struct Seg {
      double ax, ay, bx, by;
    };
    const Seg obstacles[] = {
        {-3.0, kFloorY, 3.0, kFloorY},                                      // floor
        {kContainerX - hw, kFloorY, kContainerX - hw, kRimY},               // left wall
        {kContainerX + hw, kFloorY, kContainerX + hw, kRimY},               // right wall
    };
    const Seg links[] = {{0.0, 0.0, p1.first, p1.second},
                         {p1.first, p1.second, p2.first, p2.second}};
    for (const auto& o : obstacles)
      for (const auto& l : links)
        if (segments_intersect(l.ax, l.ay, l.bx, l.by, o.ax, o.ay, o.bx, o.by)) return true;
    return false;
  }

  bool inside_aperture(double x, double y) const {
    const double hw = cfg_.container_width / 2.0;
    return x > kContainerX - hw && x < kContainerX + hw && y > kFloorY && y < kRimY;
  }

  SpaceValue observation() const {
    auto [p1, p2] = kinematics();
    return std::vector<double>{p1.first,  p1.second, p2.first, p2.second,
                               p2.first,  p2.second, holding_ ? 1.0 : 0.0};
  }

  TrashbotConfig cfg_;
  double theta1_ = 1.5707963267948966;
  double theta2_ = 0.0;
  bool holding_ = false;
  double box_x_ = kBoxX;
  double box_y_ = kBoxY;
};

}  // namespace rlsuite::envs
