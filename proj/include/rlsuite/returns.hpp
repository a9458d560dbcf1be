#pragma once

#include <span>

#include "rlsuite/errors.hpp"

namespace rlsuite {

/// Discounted return sum_i gamma^i * r_i. Evaluated backwards (Horner), so
/// the recursion G(r) = r[0] + gamma * G(r[1:]) holds bit-exactly.
inline double discounted_return(std::span<const double> rewards, double gamma) {
  if (gamma < 0.0 || gamma > 1.0) throw ConfigError("gamma must lie in [0,1]");
  double acc = 0.0;
  for (size_t i = rewards.size(); i-- > 0;) acc = rewards[i] + gamma * acc;
  return acc;
}

}  // namespace rlsuite
