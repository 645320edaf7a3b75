#pragma once

#include <cstdint>
#include <unordered_map>

#include "wdba/automaton.hpp"
#include "wdba/equivalence.hpp"

namespace wdba {

class Trace;

struct QueryCounters {
  std::uint64_t membership = 0;
  std::uint64_t equivalence = 0;

  std::uint64_t total() const noexcept { return membership + equivalence; }
  friend bool operator==(const QueryCounters&, const QueryCounters&) = default;
};

// Minimally adequate teacher for an ω-language. Learners talk to this
// interface only, so a remote or black-box teacher can stand in for the
// automaton-backed one.
class Oracle {
 public:
  virtual ~Oracle() = default;

  virtual const Alphabet& alphabet() const = 0;
  // Is prefix·period^ω in the target language?
  virtual bool mq(WordView prefix, WordView period) = 0;
  // Empty when the conjecture recognises the target language.
  virtual Witness eq(const Wdba& conjecture) = 0;
  virtual QueryCounters snapshot() const = 0;
};

struct TeacherOptions {
  // Answer repeated queries (up to UP-word equality) from a cache without
  // counting them. Off for every reported measurement.
  bool cache = false;
  Trace* trace = nullptr;
  // Shape of equivalence counterexamples; depth-first mimics the lassos
  // reported by on-the-fly emptiness checks.
  WitnessSearch witnesses = WitnessSearch::depth_first;
};

// Teacher backed by a concrete wDBA.
class Teacher final : public Oracle {
 public:
  explicit Teacher(Wdba target, TeacherOptions options = {});

  const Alphabet& alphabet() const override { return target_.alphabet(); }
  bool mq(WordView prefix, WordView period) override;
  Witness eq(const Wdba& conjecture) override;
  QueryCounters snapshot() const override { return counters_; }

  const Wdba& target() const noexcept { return target_; }
  void set_trace(Trace* trace) noexcept { options_.trace = trace; }

 private:
  Wdba target_;
  TeacherOptions options_;
  QueryCounters counters_;
  std::unordered_map<Decomposition, bool, DecompositionHash> cache_;
};

}  // namespace wdba
