#include "wdba/conflict.hpp"

#include <deque>
#include <limits>
#include <stdexcept>

#include "wdba/trace.hpp"

namespace wdba {
namespace {

constexpr StateId kNone = std::numeric_limits<StateId>::max();

// BFS from `from` until an edge enters `to`; the first such edge found while
// dequeuing in order closes the lexicographically least shortest path.
Word bfs_word(const TransitionSystem& ts, StateId from, StateId to) {
  std::vector<StateId> parent(ts.state_count(), kNone);
  std::vector<Letter> via(ts.state_count(), 0);
  std::vector<bool> visited(ts.state_count(), false);
  std::deque<StateId> queue{from};
  visited[from] = true;
  while (!queue.empty()) {
    const StateId q = queue.front();
    queue.pop_front();
    for (Letter a = 0; a < ts.alphabet_size(); ++a) {
      const StateId r = ts.successor(q, a);
      if (r == to) {
        Word path{a};
        for (StateId x = q; x != from; x = parent[x]) {
          path.push_back(via[x]);
        }
        return Word(path.rbegin(), path.rend());
      }
      if (!visited[r]) {
        visited[r] = true;
        parent[r] = q;
        via[r] = a;
        queue.push_back(r);
      }
    }
  }
  return {};
}

void require(bool condition, const char* what) {
  if (!condition) {
    throw std::logic_error(what);
  }
}

}  // namespace

Word shortest_loop(const TransitionSystem& ts, StateId q) { return bfs_word(ts, q, q); }

Word shortest_path(const TransitionSystem& ts, StateId from, StateId to) {
  return bfs_word(ts, from, to);
}

ValidCex ConflictResolver::resolve_conflict(const Hypothesis& hyp, StateId u, const Word& x,
                                            const Word& y) {
  const TransitionSystem& ts = hyp.ts;
  require(!x.empty() && !y.empty(), "resolve_conflict: loop words must be non-empty");
  require(ts.run(u, x) == u && ts.run(u, y) == u, "resolve_conflict: x and y must loop on u");
  const Word& rep = hyp.representatives[u];
  if (verify_) {
    require(oracle_->mq(rep, x) && !oracle_->mq(rep, y),
            "resolve_conflict: expected u·x^ω in L and u·y^ω not in L");
  }
  if (trace_ != nullptr) {
    trace_->conflict_c2(rep, x, y);
  }
  while (true) {
    const Word yk = power(y, k_);
    const Word z = concat(yk, power(x, k_));
    Word base = rep;  // u·z^(h-1)
    for (std::size_t h = 1; h <= k_; ++h) {
      Word probe = concat(base, yk);
      if (!oracle_->mq(probe, x)) {
        if (trace_ != nullptr) {
          trace_->resolve(rep, x, y, k_, h);
        }
        const std::size_t bound = probe.size();
        return ValidCex{std::move(probe), x, false, bound};
      }
      append(base, z);
      if (oracle_->mq(base, y)) {
        if (trace_ != nullptr) {
          trace_->resolve(rep, x, y, k_, h);
        }
        const std::size_t bound = base.size();
        return ValidCex{std::move(base), y, true, bound};
      }
    }
    ++k_;
  }
}

ValidCex ConflictResolver::resolve_conflict_state(const Hypothesis& hyp, StateId u1, StateId u2,
                                                  const Word& x, const Word& y) {
  const TransitionSystem& ts = hyp.ts;
  require(ts.run(u1, x) == u1 && ts.run(u2, y) == u2,
          "resolve_conflict_state: x must loop on u1 and y on u2");
  const Word z = shortest_path(ts, u1, u2);
  const Word w = shortest_path(ts, u2, u1);
  require(!z.empty() && !w.empty(), "resolve_conflict_state: states are not in one SCC");
  const Word& rep1 = hyp.representatives[u1];
  const Word& rep2 = hyp.representatives[u2];
  if (verify_) {
    require(oracle_->mq(rep1, x) && !oracle_->mq(rep2, y),
            "resolve_conflict_state: expected u1·x^ω in L and u2·y^ω not in L");
  }
  if (trace_ != nullptr) {
    trace_->resolve_state(rep1, rep2, z, w);
  }
  const Word zw = concat(z, w);
  if (!oracle_->mq(rep1, zw)) {
    return resolve_conflict(hyp, u1, x, zw);
  }
  const Word wz = concat(w, z);
  if (oracle_->mq(rep2, wz)) {
    return resolve_conflict(hyp, u2, wz, y);
  }
  // u1·(zw)^ω = u1·z·(wz)^ω is in L while u2 = T(u1·z) rejects (wz)^ω.
  Word prefix = concat(rep1, z);
  const std::size_t bound = prefix.size();
  return ValidCex{std::move(prefix), wz, true, bound};
}

}  // namespace wdba
