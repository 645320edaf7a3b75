#pragma once

#include <cstddef>
#include <vector>

#include "wdba/alphabet.hpp"
#include "wdba/word.hpp"

namespace wdba {

// Complete deterministic transition system over dense state ids.
class TransitionSystem {
 public:
  TransitionSystem() = default;
  // Every transition initially points back to its source state.
  TransitionSystem(std::size_t state_count, std::size_t alphabet_size, StateId initial = 0);

  std::size_t state_count() const noexcept { return state_count_; }
  std::size_t alphabet_size() const noexcept { return alphabet_size_; }
  StateId initial() const noexcept { return initial_; }

  StateId successor(StateId q, Letter a) const { return delta_[q * alphabet_size_ + a]; }
  void set_successor(StateId q, Letter a, StateId target);
  void set_initial(StateId q);

  StateId run(StateId from, WordView w) const;
  StateId run(WordView w) const { return run(initial_, w); }

  friend bool operator==(const TransitionSystem&, const TransitionSystem&) = default;

 private:
  std::size_t state_count_ = 0;
  std::size_t alphabet_size_ = 0;
  StateId initial_ = 0;
  std::vector<StateId> delta_;
};

// Weak deterministic Büchi automaton. Weakness is not enforced on
// construction; check with is_weak().
class Wdba {
 public:
  Wdba() = default;
  Wdba(Alphabet alphabet, TransitionSystem ts, std::vector<bool> accepting);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const TransitionSystem& ts() const noexcept { return ts_; }
  std::size_t state_count() const noexcept { return ts_.state_count(); }
  bool is_accepting(StateId q) const { return accepting_[q]; }
  const std::vector<bool>& accepting() const noexcept { return accepting_; }

  // Same automaton with `q` as its initial state.
  Wdba rerooted(StateId q) const;

 private:
  Alphabet alphabet_;
  TransitionSystem ts_;
  std::vector<bool> accepting_;
};

bool is_weak(const Wdba& a);

// Whether prefix·period^ω is accepted. Throws std::invalid_argument on an
// empty period.
bool member(const Wdba& a, const Decomposition& d);

// (u·v^i, v^(j-i)) for the first repeat i < j among the states reached after
// u·v^0, u·v^1, ...; the result loops on its own target state.
Decomposition normalize(const TransitionSystem& ts, const Decomposition& d);

}  // namespace wdba
