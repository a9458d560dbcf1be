#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "rlsuite/errors.hpp"
#include "rlsuite/rng.hpp"

namespace rlsuite::agents {

/// Tabular action-value estimates Q(s, a) keyed by canonical state key.
/// Absent entries read as the default value q0 (optimistic when q0 > 0).
class ValueTable {
 public:
  explicit ValueTable(int num_actions, double q0 = 0.0) : num_actions_(num_actions), q0_(q0) {
    if (num_actions < 1) throw ConfigError("value table needs num_actions >= 1");
  }

  int num_actions() const { return num_actions_; }
  double default_value() const { return q0_; }
  size_t num_states() const { return rows_.size(); }

  double get(int64_t state, int action) const {
    const auto it = rows_.find(state);
    return it == rows_.end() ? q0_ : it->second[static_cast<size_t>(action)];
  }

  void set(int64_t state, int action, double value) {
    row(state)[static_cast<size_t>(action)] = value;
  }

  void add(int64_t state, int action, double delta) {
    row(state)[static_cast<size_t>(action)] += delta;
  }

  double max_value(int64_t state) const {
    const auto it = rows_.find(state);
    if (it == rows_.end()) return q0_;
    return *std::max_element(it->second.begin(), it->second.end());
  }

  /// Greedy action with ties broken uniformly at random.
  int greedy_action(int64_t state, RngStream& rng) const {
    const auto it = rows_.find(state);
    if (it == rows_.end()) return static_cast<int>(rng.uniform_int(num_actions_));
    const auto& q = it->second;
    const double best = *std::max_element(q.begin(), q.end());
    int ties = 0;
    for (double v : q)
      if (v == best) ++ties;
    int64_t pick = rng.uniform_int(ties);
    for (size_t a = 0; a < q.size(); ++a) {
      if (q[a] == best && pick-- == 0) return static_cast<int>(a);
    }
    return 0;  // unreachable
  }

  /// Flat CSV dump (state_key, action, value), sorted for reproducibility.
  void save_csv(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw Error("cannot write value table to " + path);
    out << "state_key,action,value\n";
    std::map<int64_t, const std::vector<double>*> sorted;
    for (const auto& [s, q] : rows_) sorted[s] = &q;
    char buf[64];
    for (const auto& [s, q] : sorted) {
      for (size_t a = 0; a < q->size(); ++a) {
        std::snprintf(buf, sizeof(buf), "%.17g", (*q)[a]);
        out << s << "," << a << "," << buf << "\n";
      }
    }
  }

 private:
  std::vector<double>& row(int64_t state) {
    auto it = rows_.find(state);
    if (it == rows_.end())
      it = rows_.emplace(state, std::vector<double>(static_cast<size_t>(num_actions_), q0_)).first;
    return it->second;
  }

  int num_actions_;
  double q0_;
  std::unordered_map<int64_t, std::vector<double>> rows_;
};

}  // namespace rlsuite::agents
