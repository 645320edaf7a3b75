// Shared fixtures and independent reference implementations for the tests.
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "wdba/alphabet.hpp"
#include "wdba/automaton.hpp"
#include "wdba/discrimination.hpp"
#include "wdba/io.hpp"
#include "wdba/scc.hpp"
#include "wdba/teacher.hpp"

namespace fixtures {

using namespace wdba;

// Regression bound for mq / (n^2 |Σ|) of the table and tree learners,
// measured on the benchmark sweep and on the unit-test targets.
inline constexpr double kMqBudget = 1.5;

// Reconstructed automaton D over {a, b}: states ε, b, bb, bbb and the
// rejecting sink ba.
inline Wdba language_d() {
  static const Wdba d = load_automaton(WDBA_TEST_DATA "/language_d.wdba");
  return d;
}

inline const Alphabet& ab() {
  static const Alphabet alphabet({"a", "b"});
  return alphabet;
}

inline Word w(const char* text) { return ab().parse_word(text); }
inline Decomposition up(const char* prefix, const char* period) {
  return Decomposition{w(prefix), w(period)};
}
inline std::string str(WordView word) { return ab().format(word); }

// Conflict-free hypothesis whose counterexample adds state bbb.
// Representatives ε, b, ba, bb.
inline Hypothesis hypothesis_missing_bbb() {
  TransitionSystem ts(4, 2, 0);
  const Letter a = 0;
  const Letter b = 1;
  ts.set_successor(0, a, 0);
  ts.set_successor(0, b, 1);
  ts.set_successor(1, a, 2);
  ts.set_successor(1, b, 3);
  ts.set_successor(2, a, 2);
  ts.set_successor(2, b, 2);
  ts.set_successor(3, a, 2);
  ts.set_successor(3, b, 0);
  return Hypothesis{ts, {w(""), w("b"), w("ba"), w("bb")}};
}

// Hypothesis that folds the sink into b; marking it yields a state conflict
// between ε and b. Representatives ε, b, bb, bbb.
inline Hypothesis hypothesis_sink_folded() {
  TransitionSystem ts(4, 2, 0);
  const Letter a = 0;
  const Letter b = 1;
  ts.set_successor(0, a, 0);
  ts.set_successor(0, b, 1);
  ts.set_successor(1, a, 1);
  ts.set_successor(1, b, 2);
  ts.set_successor(2, a, 1);
  ts.set_successor(2, b, 3);
  ts.set_successor(3, a, 0);
  ts.set_successor(3, b, 0);
  return Hypothesis{ts, {w(""), w("b"), w("bb"), w("bbb")}};
}

// Büchi acceptance read directly off the letter-level run: after
// u·v^n the run is periodic, so some accepting state occurs infinitely often
// iff one occurs in the following n·|v| letters.
inline bool brute_member(const Wdba& a, const Decomposition& d) {
  const std::size_t n = a.state_count();
  StateId q = a.ts().initial();
  for (const Letter l : d.prefix) {
    q = a.ts().successor(q, l);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (const Letter l : d.period) {
      q = a.ts().successor(q, l);
    }
  }
  bool seen = false;
  for (std::size_t i = 0; i < n; ++i) {
    for (const Letter l : d.period) {
      q = a.ts().successor(q, l);
      seen = seen || a.is_accepting(q);
    }
  }
  return seen;
}

// Every word over the alphabet of length lo..hi, shortest first.
inline std::vector<Word> words_up_to(std::size_t letters, std::size_t hi, std::size_t lo = 0) {
  std::vector<Word> out;
  std::vector<Word> layer{Word{}};
  for (std::size_t len = 0; len <= hi; ++len) {
    if (len >= lo) {
      out.insert(out.end(), layer.begin(), layer.end());
    }
    std::vector<Word> next;
    for (const auto& word : layer) {
      for (Letter l = 0; l < letters; ++l) {
        Word longer = word;
        longer.push_back(l);
        next.push_back(std::move(longer));
      }
    }
    layer = std::move(next);
  }
  return out;
}

// Random automaton with weak acceptance: every SCC gets one random flag.
inline Wdba random_weak(std::mt19937_64& rng, std::size_t n, std::size_t letters) {
  TransitionSystem ts(n, letters, 0);
  for (StateId q = 0; q < n; ++q) {
    for (Letter l = 0; l < letters; ++l) {
      ts.set_successor(q, l, static_cast<StateId>(rng() % n));
    }
  }
  const SccDecomposition scc = scc_decompose(ts);
  std::vector<bool> component_flag(scc.components.size());
  for (auto&& flag : component_flag) {
    flag = rng() % 2 == 0;
  }
  std::vector<bool> accepting(n);
  for (StateId q = 0; q < n; ++q) {
    accepting[q] = component_flag[scc.component_of[q]];
  }
  return Wdba(Alphabet::letters(letters), std::move(ts), std::move(accepting));
}

inline Word random_word(std::mt19937_64& rng, std::size_t letters, std::size_t lo,
                        std::size_t hi) {
  Word out(lo + rng() % (hi - lo + 1));
  for (auto& l : out) {
    l = static_cast<Letter>(rng() % letters);
  }
  return out;
}

// Same language, one more state: a copy of a random state q takes over a
// random subset of q's incoming transitions.
inline Wdba duplicate_state(std::mt19937_64& rng, const Wdba& a) {
  const std::size_t n = a.state_count();
  const std::size_t letters = a.alphabet().size();
  const auto q = static_cast<StateId>(rng() % n);
  const auto copy = static_cast<StateId>(n);
  TransitionSystem ts(n + 1, letters, a.ts().initial());
  for (StateId p = 0; p < n; ++p) {
    for (Letter l = 0; l < letters; ++l) {
      StateId target = a.ts().successor(p, l);
      if (target == q && rng() % 2 == 0) {
        target = copy;
      }
      ts.set_successor(p, l, target);
    }
  }
  for (Letter l = 0; l < letters; ++l) {
    ts.set_successor(copy, l, a.ts().successor(q, l));
  }
  if (a.ts().initial() == q && rng() % 2 == 0) {
    ts.set_initial(copy);
  }
  std::vector<bool> accepting = a.accepting();
  accepting.push_back(a.is_accepting(q));
  return Wdba(a.alphabet(), std::move(ts), std::move(accepting));
}

// Definition of a valid counterexample, checked with member() on the target
// rather than through an oracle: the prefix and the representative of the
// state reached after prefix[0..split_bound) disagree on the rest.
inline bool is_valid_cex(const Wdba& target, const Hypothesis& hyp, const ValidCex& cex) {
  if (cex.period.empty() || cex.split_bound > cex.prefix.size()) {
    return false;
  }
  const WordView u(cex.prefix);
  const StateId q = hyp.ts.run(u.first(cex.split_bound));
  const Word rewritten = concat(hyp.representatives[q], u.subspan(cex.split_bound));
  const bool here = member(target, Decomposition{cex.prefix, cex.period});
  const bool there = member(target, Decomposition{rewritten, cex.period});
  return here == cex.prefix_member && here != there;
}

// Discrimination structure that replays a fixed transition system and
// records the splits it is asked to perform.
class ScriptedStructure final : public DiscriminationStructure {
 public:
  explicit ScriptedStructure(Hypothesis hyp) : hyp_(std::move(hyp)) {}
  std::span<const Word> states() const override { return hyp_.representatives; }
  std::optional<StateId> classify(WordView) override { return std::nullopt; }
  void ensure_closed() override {}
  StateId successor(StateId state, Letter letter) const override {
    return hyp_.ts.successor(state, letter);
  }
  void split(const Split& split) override {
    splits.push_back(split);
    hyp_.representatives.push_back(split.new_state);
  }
  std::optional<ValidCex> self_consistency_cex(const Hypothesis&) const override {
    return std::nullopt;
  }
  std::size_t experiment_count() const override { return splits.size(); }

  std::vector<Split> splits;

 private:
  Hypothesis hyp_;
};

}  // namespace fixtures
