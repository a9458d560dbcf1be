#pragma once

#include <cstdint>
#include <vector>

namespace rlsuite {

/// One entry of a next-state distribution.
struct ModelTransition {
  int64_t next_state = 0;
  double probability = 0.0;
  double reward = 0.0;
  bool terminal = false;
};

/// Full (descriptive) MDP model over integer state ids: enumerable states
/// and, per (state, action), the complete next-state distribution.
class DescriptiveModel {
 public:
  virtual ~DescriptiveModel() = default;
  virtual std::vector<int64_t> states() const = 0;
  virtual int64_t num_actions() const = 0;
  virtual std::vector<ModelTransition> transitions(int64_t state, int64_t action) const = 0;
};

}  // namespace rlsuite
