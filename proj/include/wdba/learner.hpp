#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "wdba/conflict.hpp"
#include "wdba/discrimination.hpp"
#include "wdba/teacher.hpp"

namespace wdba {

class Trace;

enum class BackendKind { table, tree };
enum class SearchMode { linear, binary };

struct LearnerOptions {
  BackendKind backend = BackendKind::tree;
  SearchMode search = SearchMode::binary;
  Trace* trace = nullptr;
  // Re-check validity of every counterexample and the preconditions of the
  // conflict procedures with extra membership queries. Those queries are
  // counted by the teacher, so leave this off for measurements.
  bool verify = false;
  // Observers, mostly for tests and the benchmark harness.
  std::function<void(const ValidCex&)> on_cex;
  std::function<void(const Hypothesis&, const Wdba&)> on_conjecture;
};

// Two states of one SCC whose loop words disagree.
struct StateConflict {
  StateId u1 = 0;  // accepting, loop word x
  StateId u2 = 0;  // rejecting, loop word y
  Word x;
  Word y;
};

struct Marking {
  std::vector<bool> accepting;
  // Loop word per state; empty for transient states.
  std::vector<Word> loops;
  std::optional<StateConflict> conflict;
};

struct LearnStats {
  std::size_t equivalence_rounds = 0;
  std::size_t state_conflicts = 0;
  std::size_t consistency_fixes = 0;
  // |S| when each equivalence query was asked.
  std::vector<std::size_t> states_at_eq;
};

std::unique_ptr<DiscriminationStructure> make_backend(BackendKind kind, Oracle& oracle,
                                                      Trace* trace = nullptr);

// One run of the wDBA learner against an oracle. The individual steps are
// public so tests can drive a session by hand.
class LearnerSession {
 public:
  explicit LearnerSession(Oracle& oracle, LearnerOptions options = {});
  LearnerSession(Oracle& oracle, std::unique_ptr<DiscriminationStructure> backend,
                 LearnerOptions options = {});

  DiscriminationStructure& backend() noexcept { return *backend_; }
  ConflictResolver& resolver() noexcept { return resolver_; }
  std::size_t global_k() const noexcept { return resolver_.global_k(); }
  const LearnStats& stats() const noexcept { return stats_; }

  // Closes the backend and reads off its transition system, repairing
  // representatives that do not reach their own state.
  Hypothesis build_ts();
  // One membership query per SCC state; reports the first mixed SCC in
  // topological order.
  Marking mark_acceptance(const Hypothesis& hyp);
  Wdba conjecture(const Hypothesis& hyp, const Marking& marking) const;
  // Valid counterexample from a teacher counterexample w.
  ValidCex analyze_cex(const Hypothesis& hyp, const Marking& marking, const Decomposition& w);
  Split find_split(const Hypothesis& hyp, const ValidCex& cex);
  void refine(const Hypothesis& hyp, const ValidCex& cex);

  Wdba run();

 private:
  bool probe(const Hypothesis& hyp, const ValidCex& cex, std::size_t i);

  Oracle* oracle_;
  LearnerOptions options_;
  std::unique_ptr<DiscriminationStructure> backend_;
  ConflictResolver resolver_;
  LearnStats stats_;
};

Wdba learn(Oracle& oracle, LearnerOptions options = {});

}  // namespace wdba
