#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <vector>

#include "rlsuite/env.hpp"
#include "rlsuite/errors.hpp"
#include "rlsuite/state_key.hpp"

namespace rlsuite::agents {

/// Archive of reached states for deterministic environments with discrete
/// actions: per state key the best (shortest) action sequence reaching it
/// from reset, its visit count and the best cumulative reward seen there.
class GoExploreArchive {
 public:
  struct Entry {
    std::vector<int64_t> actions;  // replayed from reset reaches this state
    long visits = 0;
    double best_return = 0.0;  // best cumulative reward observed at arrival
    bool terminal = false;
  };

  std::map<int64_t, Entry>& cells() { return cells_; }
  const std::map<int64_t, Entry>& cells() const { return cells_; }
  bool empty() const { return cells_.empty(); }
  size_t size() const { return cells_.size(); }

  /// Best episode return that ended in a terminal state; 0 until any
  /// terminal state has been reached.
  double best_terminal_return() const { return best_terminal_return_; }
  const std::vector<int64_t>& best_terminal_sequence() const { return best_terminal_sequence_; }

  void note_terminal(double episode_return, const std::vector<int64_t>& seq) {
    if (!has_terminal_ || episode_return > best_terminal_return_) {
      has_terminal_ = true;
      best_terminal_return_ = episode_return;
      best_terminal_sequence_ = seq;
    }
  }
  bool has_terminal() const { return has_terminal_; }

 private:
  std::map<int64_t, Entry> cells_;
  double best_terminal_return_ = 0.0;
  std::vector<int64_t> best_terminal_sequence_;
  bool has_terminal_ = false;
};

/// One return-then-explore iteration. Selects an archived non-terminal state
/// with probability proportional to (visits+1)^-selection_power, replays its
/// stored action sequence from reset (verifying the archive invariant), then
/// takes `explore_steps` uniform random actions, archiving every newly
/// reached state and shortening stored sequences when a shorter route is
/// found. Visit counts grow on every touch, including replay pass-throughs,
/// so heavily revisited shallow states lose selection weight over time; the
/// default power of 4 keeps selection strongly concentrated on the rarely
/// visited frontier. Returns the number of environment steps consumed.
/// Requires deterministic dynamics; replay divergence raises
/// ContractViolationError.
inline long go_explore_step(GoExploreArchive& archive, Env& env, RngStream& rng,
                            int explore_steps, double selection_power = 4.0) {
  const auto& space = env.observation_space();
  const int64_t num_actions = env.action_space().n();

  if (archive.empty()) {
    const SpaceValue obs = env.reset();
    archive.cells()[state_key(obs, space)] = {{}, 1, 0.0, false};
    return 0;
  }

  // Selection.
  const auto weight = [selection_power](long visits) {
    return std::pow(static_cast<double>(visits) + 1.0, -selection_power);
  };
  double total = 0.0;
  for (const auto& [key, cell] : archive.cells())
    if (!cell.terminal) total += weight(cell.visits);
  if (total <= 0.0) throw ContractViolationError("go-explore: no selectable archive cell");
  double u = rng.next_double() * total;
  int64_t selected = archive.cells().begin()->first;
  for (const auto& [key, cell] : archive.cells()) {
    if (cell.terminal) continue;
    u -= weight(cell.visits);
    selected = key;
    if (u < 0) break;
  }

  // Return: replay the stored sequence from reset.
  long steps = 0;
  std::vector<int64_t> seq = archive.cells()[selected].actions;
  SpaceValue obs = env.reset();
  double cum = 0.0;
  auto touch = [&](int64_t key) {
    auto it = archive.cells().find(key);
    if (it != archive.cells().end()) ++it->second.visits;
  };
  touch(state_key(obs, space));
  for (int64_t a : seq) {
    if (!env.episode_active())
      throw ContractViolationError("go-explore: replay ended prematurely");
    const StepOutcome out = env.step(a);
    cum += out.reward;
    ++steps;
    touch(state_key(out.observation, space));
    obs = out.observation;
  }
  if (state_key(obs, space) != selected || !env.episode_active())
    throw ContractViolationError("go-explore: replay did not reproduce the archived state");

  // Explore.
  for (int i = 0; i < explore_steps && env.episode_active(); ++i) {
    const int64_t a = rng.uniform_int(num_actions);
    const StepOutcome out = env.step(a);
    seq.push_back(a);
    cum += out.reward;
    ++steps;
    const int64_t key = state_key(out.observation, space);
    auto it = archive.cells().find(key);
    if (it == archive.cells().end()) {
      archive.cells()[key] = {seq, 1, cum, out.terminated};
    } else {
      ++it->second.visits;
      if (seq.size() < it->second.actions.size()) it->second.actions = seq;
      if (cum > it->second.best_return) it->second.best_return = cum;
      it->second.terminal = it->second.terminal || out.terminated;
    }
    if (out.terminated) archive.note_terminal(cum, seq);
  }
  return steps;
}

}  // namespace rlsuite::agents
