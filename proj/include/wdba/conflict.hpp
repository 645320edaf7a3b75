#pragma once

#include <cstddef>

#include "wdba/discrimination.hpp"
#include "wdba/scc.hpp"
#include "wdba/teacher.hpp"

namespace wdba {

class Trace;

// Shortest non-empty word v with run(q, v) = q, lexicographically least
// among the shortest. Empty if q is transient.
Word shortest_loop(const TransitionSystem& ts, StateId q);

// Shortest non-empty word leading from `from` to `to`, lexicographically
// least among the shortest. Empty if `to` is unreachable.
Word shortest_path(const TransitionSystem& ts, StateId from, StateId to);

// Turns marking conflicts into valid counterexamples. Holds the counter k
// that persists across calls within one learning session.
class ConflictResolver {
 public:
  ConflictResolver(Oracle& oracle, Trace* trace, bool verify = false)
      : oracle_(&oracle), trace_(trace), verify_(verify) {}

  // C2: u has two loop words x and y with u·x^ω in L and u·y^ω not in L.
  // Probes u·(y^k x^k)^(h-1)·y^k against x and u·(y^k x^k)^h against y.
  ValidCex resolve_conflict(const Hypothesis& hyp, StateId u, const Word& x, const Word& y);

  // C1: u1 and u2 share an SCC, u1·x^ω in L, u2·y^ω not in L.
  ValidCex resolve_conflict_state(const Hypothesis& hyp, StateId u1, StateId u2, const Word& x,
                                  const Word& y);

  std::size_t global_k() const noexcept { return k_; }

 private:
  Oracle* oracle_;
  Trace* trace_;
  bool verify_;
  std::size_t k_ = 1;
};

}  // namespace wdba
