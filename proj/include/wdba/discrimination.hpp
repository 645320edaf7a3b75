#pragma once

#include <optional>
#include <span>
#include <vector>

#include "wdba/automaton.hpp"

namespace wdba {

// An ω-experiment (x, y): a word u is probed with MQ(u·x, y).
using Experiment = Decomposition;

// Transition system read off a discrimination structure. State i is the
// class of representatives[i]; state 0 is the class of ε.
struct Hypothesis {
  TransitionSystem ts;
  std::vector<Word> representatives;
};

// A decomposition whose prefix and the representative of the state reached
// after prefix[0..split_bound) disagree on the remaining ω-word.
//
// For a counterexample in the usual sense split_bound == prefix.size(), so
// MQ(prefix, period) != MQ(representative of T(prefix), period). The tree
// self-consistency fix produces pairs with a shorter bound.
// prefix_member caches the teacher's answer for MQ(prefix, period); the
// answer at the bound is its negation.
struct ValidCex {
  Word prefix;
  Word period;
  bool prefix_member = false;
  std::size_t split_bound = 0;
};

// Outcome of the split search over a ValidCex: new_state = rep(source)·letter
// is currently classified as old_state, and experiment separates the two.
// new_outcome is MQ(new_state·x, y); old_state answers the opposite.
struct Split {
  StateId source = 0;
  Letter letter = 0;
  StateId old_state = 0;
  Word new_state;
  Experiment experiment;
  bool new_outcome = false;
  std::size_t index = 0;
};

// Storage for representatives S, experiments E and the classification
// function f(u, (x, y)) = MQ(u·x, y). Implemented by ObservationTable and
// ClassificationTree.
class DiscriminationStructure {
 public:
  virtual ~DiscriminationStructure() = default;

  // Representatives in insertion order; states()[0] is ε.
  virtual std::span<const Word> states() const = 0;
  // Representative equivalent to `word` under the current experiments, if
  // one exists. May ask membership queries.
  virtual std::optional<StateId> classify(WordView word) = 0;
  // Asks the queries needed for successor() to be defined everywhere.
  virtual void ensure_closed() = 0;
  // Class of states()[state]·letter. Requires ensure_closed().
  virtual StateId successor(StateId state, Letter letter) const = 0;
  // Adds split.new_state to S and split.experiment to E.
  virtual void split(const Split& split) = 0;
  // A pair that refines the structure when some representative u does not
  // satisfy T(u) = u in `hyp`; empty otherwise.
  virtual std::optional<ValidCex> self_consistency_cex(const Hypothesis& hyp) const = 0;

  virtual std::size_t experiment_count() const = 0;
};

}  // namespace wdba
