#pragma once

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "rlsuite/errors.hpp"
#include "rlsuite/rng.hpp"

namespace rlsuite::agents {

namespace detail {
struct SAKey {
  int64_t s;
  int a;
  bool operator==(const SAKey& o) const { return s == o.s && a == o.a; }
};
struct SAKeyHash {
  size_t operator()(const SAKey& k) const {
    uint64_t x = static_cast<uint64_t>(k.s) * 0x9e3779b97f4a7c15ULL + static_cast<uint64_t>(k.a);
    x ^= x >> 29;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 32;
    return static_cast<size_t>(x);
  }
};
}  // namespace detail

/// Learned maximum-likelihood tabular model: visit counts, next-state counts,
/// per-transition reward means and terminal flags, plus a predecessor index
/// for backward sweeps. sum_s' N(s,a,s') == N(s,a) holds by construction.
class TabularModel {
 public:
  struct Prediction {
    int64_t next_state = 0;
    double probability = 0.0;
    double reward = 0.0;  // mean of observed rewards on this transition
    bool terminal = false;
  };

  void update(int64_t s, int a, double r, int64_t s2, bool terminated) {
    auto& sa = data_[{s, a}];
    if (sa.count == 0) visited_.emplace_back(s, a);
    ++sa.count;
    auto& next = sa.next[s2];
    ++next.count;
    next.reward_sum += r;
    next.terminal = terminated;
    if (pred_seen_[s2].insert({s, a}).second) predecessors_[s2].emplace_back(s, a);
  }

  long visit_count(int64_t s, int a) const {
    const auto it = data_.find({s, a});
    return it == data_.end() ? 0 : it->second.count;
  }

  long transition_count(int64_t s, int a, int64_t s2) const {
    const auto it = data_.find({s, a});
    if (it == data_.end()) return 0;
    const auto jt = it->second.next.find(s2);
    return jt == it->second.next.end() ? 0 : jt->second.count;
  }

  /// All (s,a) pairs seen at least once, in first-visit order.
  const std::vector<std::pair<int64_t, int>>& visited() const { return visited_; }

  /// (s,a) pairs with at least one observed transition into s2.
  const std::vector<std::pair<int64_t, int>>& predecessors(int64_t s2) const {
    static const std::vector<std::pair<int64_t, int>> empty;
    const auto it = predecessors_.find(s2);
    return it == predecessors_.end() ? empty : it->second;
  }

  /// Maximum-likelihood next-state distribution, sorted by state id.
  std::vector<Prediction> distribution(int64_t s, int a) const {
    const auto it = data_.find({s, a});
    if (it == data_.end()) throw InvalidStateError("tabular model: unvisited (s,a) queried");
    std::vector<Prediction> out;
    out.reserve(it->second.next.size());
    for (const auto& [s2, stats] : it->second.next) {
      out.push_back({s2, static_cast<double>(stats.count) / it->second.count,
                     stats.reward_sum / stats.count, stats.terminal});
    }
    std::sort(out.begin(), out.end(),
              [](const Prediction& x, const Prediction& y) { return x.next_state < y.next_state; });
    return out;
  }

  /// One sample from the ML distribution.
  Prediction sample(int64_t s, int a, RngStream& rng) const {
    auto dist = distribution(s, a);
    double u = rng.next_double();
    for (const auto& p : dist) {
      u -= p.probability;
      if (u < 0) return p;
    }
    return dist.back();
  }

  /// Mean reward and terminal flag of the specific transition s,a -> s2.
  Prediction transition(int64_t s, int a, int64_t s2) const {
    const auto it = data_.find({s, a});
    if (it == data_.end()) throw InvalidStateError("tabular model: unvisited (s,a) queried");
    const auto jt = it->second.next.find(s2);
    if (jt == it->second.next.end())
      throw InvalidStateError("tabular model: unobserved transition queried");
    return {s2, static_cast<double>(jt->second.count) / it->second.count,
            jt->second.reward_sum / jt->second.count, jt->second.terminal};
  }

 private:
  struct NextStats {
    long count = 0;
    double reward_sum = 0.0;
    bool terminal = false;
  };
  struct SAStats {
    long count = 0;
    std::unordered_map<int64_t, NextStats> next;
  };

  std::unordered_map<detail::SAKey, SAStats, detail::SAKeyHash> data_;
  std::vector<std::pair<int64_t, int>> visited_;
  std::unordered_map<int64_t, std::vector<std::pair<int64_t, int>>> predecessors_;
  std::unordered_map<int64_t, std::unordered_set<detail::SAKey, detail::SAKeyHash>> pred_seen_;
};

}  // namespace rlsuite::agents
