#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "wdba/teacher.hpp"

namespace wdba {

class Trace;

// Canonical forms of (u[i..], v) for 0 <= i <= |u| and of (ε, v') for every
// rotation v' of v, without duplicates, in that order.
std::vector<Decomposition> suffixes(const Decomposition& d);

struct MpOptions {
  Trace* trace = nullptr;
  std::function<void(const Wdba&)> on_conjecture;
};

struct MpStats {
  std::size_t equivalence_rounds = 0;
  // Counterexamples produced from marking conflicts.
  std::size_t conflict_counterexamples = 0;
};

// Maler-Pnueli style learner: an observation table whose columns are the
// suffixes of every counterexample seen, with acceptance read off the table
// entries. Used as the comparison baseline.
Wdba mp_learn(Oracle& oracle, MpOptions options = {}, MpStats* stats = nullptr);

}  // namespace wdba
