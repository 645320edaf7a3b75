#include "wdba/automaton.hpp"

#include <stdexcept>

#include "wdba/errors.hpp"
#include "wdba/scc.hpp"

namespace wdba {

TransitionSystem::TransitionSystem(std::size_t state_count, std::size_t alphabet_size,
                                   StateId initial)
    : state_count_(state_count), alphabet_size_(alphabet_size), initial_(initial) {
  if (state_count == 0 || alphabet_size == 0) {
    throw std::invalid_argument("transition system needs at least one state and one letter");
  }
  if (initial >= state_count) {
    throw std::out_of_range("initial state out of range");
  }
  delta_.resize(state_count * alphabet_size);
  for (std::size_t q = 0; q < state_count; ++q) {
    for (std::size_t a = 0; a < alphabet_size; ++a) {
      delta_[q * alphabet_size + a] = static_cast<StateId>(q);
    }
  }
}

void TransitionSystem::set_successor(StateId q, Letter a, StateId target) {
  if (q >= state_count_ || target >= state_count_ || a >= alphabet_size_) {
    throw std::out_of_range("transition out of range");
  }
  delta_[q * alphabet_size_ + a] = target;
}

void TransitionSystem::set_initial(StateId q) {
  if (q >= state_count_) {
    throw std::out_of_range("initial state out of range");
  }
  initial_ = q;
}

StateId TransitionSystem::run(StateId from, WordView w) const {
  StateId q = from;
  for (Letter a : w) {
    q = delta_[q * alphabet_size_ + a];
  }
  return q;
}

Wdba::Wdba(Alphabet alphabet, TransitionSystem ts, std::vector<bool> accepting)
    : alphabet_(std::move(alphabet)), ts_(std::move(ts)), accepting_(std::move(accepting)) {
  if (alphabet_.size() != ts_.alphabet_size()) {
    throw Error("alphabet size does not match the transition system");
  }
  if (accepting_.size() != ts_.state_count()) {
    throw Error("accepting vector does not match the state count");
  }
}

Wdba Wdba::rerooted(StateId q) const {
  TransitionSystem ts = ts_;
  ts.set_initial(q);
  return Wdba(alphabet_, std::move(ts), accepting_);
}

bool is_weak(const Wdba& a) {
  try {
    scc_decompose(a.ts(), a.accepting());
  } catch (const WeaknessError&) {
    return false;
  }
  return true;
}

bool member(const Wdba& a, const Decomposition& d) {
  if (d.period.empty()) {
    throw std::invalid_argument("membership needs a non-empty period");
  }
  const TransitionSystem& ts = a.ts();
  std::vector<bool> seen(ts.state_count(), false);
  StateId q = ts.run(d.prefix);
  // Any cycle of a weak automaton stays inside one SCC, so the first state
  // that repeats after whole periods decides acceptance.
  while (!seen[q]) {
    seen[q] = true;
    q = ts.run(q, d.period);
  }
  return a.is_accepting(q);
}

Decomposition normalize(const TransitionSystem& ts, const Decomposition& d) {
  if (d.period.empty()) {
    throw std::invalid_argument("normalize needs a non-empty period");
  }
  constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> first_seen(ts.state_count(), kUnseen);
  StateId q = ts.run(d.prefix);
  std::size_t i = 0;
  while (first_seen[q] == kUnseen) {
    first_seen[q] = i++;
    q = ts.run(q, d.period);
  }
  const std::size_t start = first_seen[q];
  Decomposition out;
  out.prefix = d.prefix;
  for (std::size_t r = 0; r < start; ++r) {
    append(out.prefix, d.period);
  }
  out.period = power(d.period, i - start);
  return out;
}

}  // namespace wdba
