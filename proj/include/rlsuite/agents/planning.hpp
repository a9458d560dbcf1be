#pragma once

#include <cmath>
#include <queue>
#include <tuple>
#include <unordered_map>

#include "rlsuite/agents/tabular_model.hpp"
#include "rlsuite/agents/updates.hpp"

namespace rlsuite::agents {

/// One Dyna step: learn from the real transition, update the model, then run
/// planning_budget simulated one-step backups on uniformly chosen previously
/// visited (s,a) pairs. Returns the number of model queries made.
inline long dyna_learn_step(ValueTable& q, TabularModel& model, int64_t s, int a, double r,
                            int64_t s2, bool terminated, double alpha, double gamma,
                            long planning_budget, RngStream& rng) {
  q_learning_update(q, s, a, r, s2, terminated, alpha, gamma);
  model.update(s, a, r, s2, terminated);
  long calls = 0;
  for (long i = 0; i < planning_budget; ++i) {
    const auto& [ps, pa] =
        model.visited()[static_cast<size_t>(rng.uniform_int(static_cast<int64_t>(model.visited().size())))];
    const auto pred = model.sample(ps, pa, rng);
    ++calls;
    q_learning_update(q, ps, pa, pred.reward, pred.next_state, pred.terminal, alpha, gamma);
  }
  return calls;
}

/// Max-priority queue over (s,a) pairs keyed by |expected TD error|, with
/// entry replacement on higher priority and deterministic tie-breaking.
class PriorityQueue {
 public:
  void push(int64_t s, int a, double priority) {
    const detail::SAKey key{s, a};
    auto it = current_.find(key);
    if (it != current_.end() && it->second >= priority) return;
    current_[key] = priority;
    heap_.push({priority, s, a});
  }

  bool empty() {
    skim();
    return heap_.empty();
  }

  size_t size() const { return current_.size(); }

  std::pair<int64_t, int> pop() {
    skim();
    if (heap_.empty()) throw Error("priority queue is empty");
    const Entry e = heap_.top();
    heap_.pop();
    current_.erase({e.s, e.a});
    return {e.s, e.a};
  }

  double priority_of(int64_t s, int a) const {
    const auto it = current_.find({s, a});
    return it == current_.end() ? 0.0 : it->second;
  }

 private:
  struct Entry {
    double priority;
    int64_t s;
    int a;
    bool operator<(const Entry& o) const {
      if (priority != o.priority) return priority < o.priority;
      if (s != o.s) return s > o.s;  // deterministic tie-break
      return a > o.a;
    }
  };

  // Drop stale heap entries whose priority was superseded or consumed.
  void skim() {
    while (!heap_.empty()) {
      const Entry& e = heap_.top();
      const auto it = current_.find({e.s, e.a});
      if (it != current_.end() && it->second == e.priority) return;
      heap_.pop();
    }
  }

  std::priority_queue<Entry> heap_;
  std::unordered_map<detail::SAKey, double, detail::SAKeyHash> current_;
};

/// One Prioritised Sweeping step: update the model, queue the real (s,a) by
/// its TD-error magnitude, then pop up to planning_budget pairs, apply a
/// full-expectation model backup to each, and re-queue their predecessors
/// whose predicted errors exceed theta. Returns the number of model queries.
inline long prioritized_sweeping_step(ValueTable& q, TabularModel& model, PriorityQueue& pqueue,
                                      int64_t s, int a, double r, int64_t s2, bool terminated,
                                      double alpha, double gamma, long planning_budget,
                                      double theta) {
  model.update(s, a, r, s2, terminated);
  const double delta =
      r + gamma * q.max_value(s2) * (terminated ? 0.0 : 1.0) - q.get(s, a);
  if (std::abs(delta) > theta) pqueue.push(s, a, std::abs(delta));

  long calls = 0;
  for (long i = 0; i < planning_budget && !pqueue.empty(); ++i) {
    const auto [ps, pa] = pqueue.pop();
    double target = 0.0;
    for (const auto& pred : model.distribution(ps, pa)) {
      target += pred.probability *
                (pred.reward + gamma * q.max_value(pred.next_state) * (pred.terminal ? 0.0 : 1.0));
    }
    ++calls;
    q.add(ps, pa, alpha * (target - q.get(ps, pa)));

    for (const auto& [bs, ba] : model.predecessors(ps)) {
      const auto t = model.transition(bs, ba, ps);
      const double pd =
          t.reward + gamma * q.max_value(ps) * (t.terminal ? 0.0 : 1.0) - q.get(bs, ba);
      if (std::abs(pd) > theta) pqueue.push(bs, ba, std::abs(pd));
    }
  }
  return calls;
}

}  // namespace rlsuite::agents
